#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "pfcone/classes.hpp"
#include "pfcone/spectral.hpp"

using namespace pfcone;
using namespace pfcone::test;

namespace {

std::vector<int> flagged(const Analysis& a, bool ClassFlags::*flag) {
  std::vector<int> out;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.flags[c].*flag) out.push_back(c);
  return out;
}

// Class ids carrying a flag, reported as the sorted union of their vertices.
IndexSet flagged_vertices(const Analysis& a, bool ClassFlags::*flag) { return vertices_of(a.classes, flagged(a, flag)); }

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet random_subset(std::mt19937_64& g, int n) {
  IndexSet s;
  for (int i = 0; i < n; ++i)
    if (g() % 3 == 0) s.push_back(i);
  return s;
}

}  // namespace

TEST_CASE("condense") {
  ClassAnalysis a = condense(mat("[[2,1,0],[0,1,0],[0,0,1]]"));
  REQUIRE(a.size() == 3);
  int c0 = a.vertex_class[0], c1 = a.vertex_class[1], c2 = a.vertex_class[2];
  CHECK(a.has_access(c0, c1));
  CHECK_FALSE(a.has_access(c1, c0));
  CHECK_FALSE(a.has_access(c0, c2));
  CHECK_FALSE(a.has_access(c2, c1));
  CHECK(a.has_access(c2, c2));

  CHECK(condense(mat("[[0,1],[1,0]]")).size() == 1);

  ClassAnalysis z = condense(mat("[[0,0],[0,0]]"));
  REQUIRE(z.size() == 2);
  CHECK_FALSE(z.strictly_accesses(0, 1));
  CHECK_FALSE(z.strictly_accesses(1, 0));
}

TEST_CASE("classes follow a topological order") {
  auto g = rng(10);
  for (int t = 0; t < 200; ++t) {
    ClassAnalysis a = condense(fuzz::random_matrix(g));
    std::vector<int> seen(a.n, 0);
    for (const auto& cls : a.classes)
      for (int v : cls) ++seen[v];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < i; ++j) CHECK_FALSE(a.has_access(i, j));
  }
}

TEST_CASE("smallest_initial_superset") {
  ClassAnalysis a = condense(mat("[[2,1,0],[0,1,0],[0,0,1]]"));
  CHECK(smallest_initial_superset(a, ids({1})) == ids({0, 1}));
  CHECK(smallest_initial_superset(a, {}).empty());
  CHECK(smallest_initial_superset(condense(mat("[[1,0],[1,2]]")), ids({0})) == ids({0, 1}));
}

TEST_CASE("is_initial and dual_face") {
  ClassAnalysis a = condense(mat("[[1,1],[0,1]]"));
  CHECK(is_initial(a, ids({0})));
  CHECK_FALSE(is_initial(a, ids({1})));
  CHECK(is_initial(a, ids({0, 1})));
  CHECK(is_initial(a, {}));
  CHECK(dual_face(ids({0}), 3) == ids({1, 2}));
  CHECK(dual_face({}, 2) == ids({0, 1}));
  CHECK(dual_face(ids({0, 1}), 2).empty());
}

TEST_CASE("classify") {
  Analysis a = analyze(mat("[[2,1,0],[0,1,0],[0,0,1]]"));
  CHECK(flagged_vertices(a, &ClassFlags::basic) == ids({0}));
  CHECK(flagged_vertices(a, &ClassFlags::distinguished) == ids({0, 2}));
  CHECK(flagged_vertices(a, &ClassFlags::final) == ids({1, 2}));
  CHECK(flagged_vertices(a, &ClassFlags::initial) == ids({0, 2}));

  Analysis j = analyze(mat("[[1,1],[0,1]]"));
  CHECK(flagged_vertices(j, &ClassFlags::basic) == ids({0, 1}));
  CHECK(flagged_vertices(j, &ClassFlags::final) == ids({1}));

  Analysis id = analyze(mat("[[1,0],[0,1]]"));
  for (const auto& f : id.taxonomy.flags) {
    CHECK(f.basic);
    CHECK(f.final);
    CHECK(f.initial);
    CHECK(f.distinguished);
    CHECK(f.distinguished_for_transpose);
  }
}

TEST_CASE("semi-distinguished classes") {
  // Class {0} (radius 1) is accessed by {1} (radius 1): semi-distinguished but not distinguished.
  Analysis a = analyze(mat("[[1,0],[1,1]]"));
  int c0 = a.classes.vertex_class[0];
  CHECK_FALSE(a.taxonomy.flags[c0].distinguished);
  CHECK(a.taxonomy.semi_distinguished(a.classes, c0, num("1")));
  CHECK_FALSE(a.taxonomy.semi_distinguished(a.classes, c0, num("2")));
}

TEST_CASE("taxonomy flags permute with the vertices") {
  auto g = rng(11);
  for (int t = 0; t < 200; ++t) {
    NonnegMatrix p = fuzz::random_matrix(g);
    int n = p.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g);
    Matrix q(n, n, Mode::Rational);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q(perm[i], perm[j]) = p(i, j);
    Analysis a = analyze(p), b = analyze(NonnegMatrix(q));
    REQUIRE(a.num_classes() == b.num_classes());
    for (int v = 0; v < n; ++v) {
      const ClassFlags& fa = a.taxonomy.flags[a.classes.vertex_class[v]];
      const ClassFlags& fb = b.taxonomy.flags[b.classes.vertex_class[perm[v]]];
      CHECK(fa.radius == fb.radius);
      CHECK(fa.basic == fb.basic);
      CHECK(fa.final == fb.final);
      CHECK(fa.initial == fb.initial);
      CHECK(fa.distinguished == fb.distinguished);
      CHECK(fa.distinguished_for_transpose == fb.distinguished_for_transpose);
    }
  }
}

TEST_CASE("initial subsets form a lattice and the closure is idempotent and monotone") {
  auto g = rng(12);
  for (int t = 0; t < 500; ++t) {
    NonnegMatrix p = fuzz::random_matrix(g);
    ClassAnalysis a = condense(p);
    IndexSet s = random_subset(g, p.n());
    IndexSet s2 = set_union(s, random_subset(g, p.n()));
    IndexSet cs = smallest_initial_superset(a, s);
    IndexSet cs2 = smallest_initial_superset(a, s2);
    CHECK(is_initial(a, cs));
    CHECK(is_subset(s, cs));
    CHECK(smallest_initial_superset(a, cs) == cs);
    CHECK(is_subset(cs, cs2));
    CHECK(cs == fuzz::reach_into(p, s));
    CHECK(is_initial(a, set_union(cs, cs2)));
    IndexSet other = smallest_initial_superset(a, random_subset(g, p.n()));
    CHECK(is_initial(a, set_intersection(cs, other)));
    CHECK(is_initial(a, set_union(cs, other)));
  }
}
