#include "pfcone/classes.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "pfcone/error.hpp"

namespace pfcone {

namespace {

// Tarjan's algorithm, iterative to keep the stack depth independent of n.
std::vector<int> tarjan(const std::vector<std::vector<int>>& adj, int& count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < adj[v].size()) {
        int w = adj[v][edge++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }
  return comp;
}

}  // namespace

ClassAnalysis condense(const NonnegMatrix& p) {
  const int n = p.n();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !p(i, j).is_zero()) adj[i].push_back(j);

  int count = 0;
  std::vector<int> comp = tarjan(adj, count);
  std::vector<IndexSet> members(count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  // Kahn's algorithm on the condensation, smallest leading vertex first.
  std::vector<std::vector<bool>> edge(count, std::vector<bool>(count, false));
  std::vector<int> indegree(count, 0);
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (comp[i] != comp[j] && !edge[comp[i]][comp[j]]) {
        edge[comp[i]][comp[j]] = true;
        ++indegree[comp[j]];
      }
  auto later = [&](int a, int b) { return members[a].front() > members[b].front(); };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int c = 0; c < count; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<int> order, position(count);
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    position[c] = static_cast<int>(order.size());
    order.push_back(c);
    for (int d = 0; d < count; ++d)
      if (edge[c][d] && --indegree[d] == 0) ready.push(d);
  }

  ClassAnalysis a;
  a.n = n;
  a.classes.resize(count);
  a.vertex_class.assign(n, -1);
  for (int c = 0; c < count; ++c) a.classes[position[c]] = members[c];
  for (int k = 0; k < count; ++k)
    for (int v : a.classes[k]) a.vertex_class[v] = k;

  // Access only goes forward in the order, so a backward sweep closes it.
  a.access.assign(count, std::vector<bool>(count, false));
  for (int k = count - 1; k >= 0; --k) {
    a.access[k][k] = true;
    for (int l = k + 1; l < count; ++l)
      if (edge[order[k]][order[l]])
        for (int m = l; m < count; ++m)
          if (a.access[l][m]) a.access[k][m] = true;
  }
  return a;
}

IndexSet vertices_of(const ClassAnalysis& a, const std::vector<int>& class_ids) {
  IndexSet out;
  for (int c : class_ids) out.insert(out.end(), a.classes.at(c).begin(), a.classes.at(c).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> classes_meeting(const ClassAnalysis& a, const IndexSet& s) {
  std::vector<bool> hit(a.size(), false);
  for (int v : s) {
    if (v < 0 || v >= a.n) throw InputError("vertex index out of range");
    hit[a.vertex_class[v]] = true;
  }
  std::vector<int> out;
  for (int c = 0; c < a.size(); ++c)
    if (hit[c]) out.push_back(c);
  return out;
}

std::vector<int> classes_accessing(const ClassAnalysis& a, const IndexSet& s) {
  std::vector<int> targets = classes_meeting(a, s);
  std::vector<int> out;
  for (int c = 0; c < a.size(); ++c)
    if (std::any_of(targets.begin(), targets.end(), [&](int t) { return a.access[c][t]; })) out.push_back(c);
  return out;
}

IndexSet smallest_initial_superset(const ClassAnalysis& a, const IndexSet& s) {
  return vertices_of(a, classes_accessing(a, s));
}

bool is_initial(const ClassAnalysis& a, const IndexSet& s) {
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return smallest_initial_superset(a, sorted) == sorted;
}

IndexSet dual_face(const IndexSet& s, int n) { return complement(s, n); }

bool ClassTaxonomy::semi_distinguished(const ClassAnalysis& a, int cls, const Scalar& lambda) const {
  if (compare_values(flags.at(cls).radius, lambda, eig_tol) != 0) return false;
  for (int b = 0; b < a.size(); ++b)
    if (a.access[b][cls] && compare_values(flags[b].radius, flags[cls].radius, eig_tol) > 0) return false;
  return true;
}

ClassTaxonomy classify(const ClassAnalysis& a, const std::vector<Scalar>& radii, const Scalar& rho, double eig_tol) {
  if (static_cast<int>(radii.size()) != a.size()) throw InputError("one radius per class is required");
  ClassTaxonomy t;
  t.rho = rho;
  t.eig_tol = eig_tol;
  t.flags.resize(a.size());
  for (int c = 0; c < a.size(); ++c) {
    ClassFlags& f = t.flags[c];
    f.radius = radii[c];
    f.basic = compare_values(radii[c], rho, eig_tol) == 0;
    f.final = f.initial = f.distinguished = f.distinguished_for_transpose = true;
    for (int d = 0; d < a.size(); ++d) {
      if (d == c) continue;
      if (a.access[c][d]) {
        f.final = false;
        if (compare_values(radii[c], radii[d], eig_tol) <= 0) f.distinguished_for_transpose = false;
      }
      if (a.access[d][c]) {
        f.initial = false;
        if (compare_values(radii[c], radii[d], eig_tol) <= 0) f.distinguished = false;
      }
    }
  }
  return t;
}

}  // namespace pfcone
