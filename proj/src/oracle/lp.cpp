#include "pfcone/oracle/lp.hpp"

#include "pfcone/error.hpp"

namespace pfcone::oracle {

void LPProblem::add(std::vector<mpq_class> coeffs, Sense sense, mpq_class rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) throw InputError("constraint width differs from variable count");
  constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
}

void LPProblem::add_rows(const Matrix& m, Sense sense, const Vector& rhs) {
  if (m.cols() != num_vars || static_cast<int>(rhs.size()) != m.rows()) throw InputError("constraint block shape mismatch");
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<mpq_class> row(num_vars);
    for (int j = 0; j < num_vars; ++j) row[j] = to_rational(m(i, j));
    add(std::move(row), sense, to_rational(rhs[i]));
  }
}

void LPProblem::add_lower_bound(int i, const mpq_class& value) {
  std::vector<mpq_class> row(num_vars);
  row.at(i) = 1;
  add(std::move(row), Sense::Ge, value);
}

mpq_class to_rational(const Scalar& s) { return s.to_mode(Mode::Rational).q(); }

Vector to_vector(const std::vector<mpq_class>& x, Mode mode) {
  Vector v;
  for (const auto& q : x) v.push_back(Scalar(q).to_mode(mode));
  return v;
}

bool satisfies(const LPProblem& p, const std::vector<mpq_class>& x) {
  if (static_cast<int>(x.size()) != p.num_vars) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& c : p.constraints) {
    mpq_class lhs = 0;
    for (int j = 0; j < p.num_vars; ++j)
      if (sgn(c.coeffs[j]) != 0) lhs += c.coeffs[j] * x[j];
    int d = cmp(lhs, c.rhs);
    if ((c.sense == Sense::Eq && d != 0) || (c.sense == Sense::Ge && d < 0) || (c.sense == Sense::Le && d > 0))
      return false;
  }
  return true;
}

LPResult lp_feasible(const LPProblem& p) {
  const int m = static_cast<int>(p.constraints.size());
  int slacks = 0;
  for (const auto& c : p.constraints)
    if (c.sense != Sense::Eq) ++slacks;
  // Columns: structural | slack | artificial | rhs.
  const int n_struct = p.num_vars, n_real = n_struct + slacks, n_total = n_real + m;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(n_total + 1));
  std::vector<int> basis(m);
  int slack_col = n_struct;
  for (int i = 0; i < m; ++i) {
    const Constraint& c = p.constraints[i];
    for (int j = 0; j < n_struct; ++j) t[i][j] = c.coeffs[j];
    if (c.sense == Sense::Ge) t[i][slack_col++] = -1;
    if (c.sense == Sense::Le) t[i][slack_col++] = 1;
    t[i][n_total] = c.rhs;
    if (sgn(c.rhs) < 0)
      for (auto& v : t[i]) v = -v;
    t[i][n_real + i] = 1;
    basis[i] = n_real + i;
  }
  // Phase-one objective: minimize the sum of artificials. Reduced cost of a
  // non-artificial column j is -sum_i t[i][j].
  std::vector<mpq_class> cost(n_total + 1);
  for (int j = 0; j < n_real; ++j)
    for (int i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (int i = 0; i < m; ++i) cost[n_total] -= t[i][n_total];

  LPResult result;
  const long pivot_cap = 200000;
  while (true) {
    int enter = -1;
    for (int j = 0; j < n_total; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][n_total] / t[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave < 0) throw InternalInconsistency("phase-one simplex found an unbounded direction");
    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave])
      if (sgn(v) != 0) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      mpq_class f = t[i][enter];
      for (int j = 0; j <= n_total; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      mpq_class f = cost[enter];
      for (int j = 0; j <= n_total; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    if (++result.pivots > pivot_cap) throw InternalInconsistency("simplex pivot limit exceeded");
  }
  // Optimal value is -cost[n_total].
  result.feasible = sgn(cost[n_total]) == 0;
  if (result.feasible) {
    result.witness.assign(n_struct, 0);
    for (int i = 0; i < m; ++i)
      if (basis[i] < n_struct) result.witness[basis[i]] = t[i][n_total];
    if (!satisfies(p, result.witness)) throw InternalInconsistency("simplex witness fails exact verification");
  }
  return result;
}

}  // namespace pfcone::oracle
