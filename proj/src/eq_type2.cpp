#include "pfcone/eq_type2.hpp"

#include <algorithm>
#include <cmath>

#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"
#include "pfcone/oracle/eigen.hpp"
#include "pfcone/oracle/lp.hpp"

namespace pfcone {

namespace {

void require_lambda(const Analysis& a, const Scalar& lambda, bool positive) {
  if (lambda.mode() != a.mode()) throw ModeMismatch("lambda has a different numeric mode than P");
  if (positive && lambda.sign() <= 0) throw PreconditionError("lambda must be positive");
}

void require_distinguished(const Analysis& a, const Scalar& lambda) {
  if (!is_distinguished_eigenvalue(a, lambda)) throw PreconditionError("lambda is not a distinguished eigenvalue");
}

Matrix shifted(const Analysis& a, const Scalar& lambda) { return shift_diagonal(a.p.mat(), -lambda); }

std::vector<int> semi_distinguished_classes(const Analysis& a, const Scalar& lambda) {
  std::vector<int> out;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.semi_distinguished(a.classes, c, lambda)) out.push_back(c);
  return out;
}

// Float iterates at the cone boundary are snapped to exact zero.
void snap_small(Vector& v, const Analysis& a) {
  if (a.mode() != Mode::Float) return;
  double top = 0;
  for (const auto& e : v) top = std::max(top, std::fabs(e.d()));
  for (auto& e : v)
    if (std::fabs(e.d()) <= a.tol.eq_tol * std::max(1.0, top)) e = Scalar(0.0);
}

bool lp_probe(const Analysis& a, const Matrix& m, int i) {
  oracle::LPProblem lp(a.n());
  lp.add_rows(m, oracle::Sense::Ge, zero_vector(a.n(), a.mode()));
  std::vector<mpq_class> row(a.n());
  for (int j = 0; j < a.n(); ++j) row[j] = oracle::to_rational(m(i, j));
  lp.add(row, oracle::Sense::Ge, 1);
  return oracle::lp_feasible(lp).feasible;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Above: return "above";
    case Regime::At: return "at";
    default: return "below";
  }
}

bool above_test(const Analysis& a, const Scalar& lambda, const Vector& b) {
  std::vector<int> targets = distinguished_classes_for(a, lambda);
  if (targets.empty()) return false;
  for (int c : classes_meeting(a.classes, support(b)))
    if (std::none_of(targets.begin(), targets.end(), [&](int t) { return a.classes.has_access(c, t); })) return false;
  return true;
}

bool lp_solvable2(const Analysis& a, const Scalar& lambda, const Vector& b, const IndexSet* allowed,
                  Vector* witness) {
  oracle::LPProblem lp(a.n());
  lp.add_rows(shifted(a, lambda), oracle::Sense::Eq, b);
  if (allowed) {
    for (int i : complement(*allowed, a.n())) {
      std::vector<mpq_class> row(a.n());
      row[i] = 1;
      lp.add(row, oracle::Sense::Eq, 0);
    }
  }
  oracle::LPResult res = oracle::lp_feasible(lp);
  if (res.feasible && witness) *witness = oracle::to_vector(res.witness, a.mode());
  return res.feasible;
}

Vector solve2_above(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_lambda(a, lambda, true);
  check_vector(b, a.n(), a.mode(), true, "b");
  if (is_zero(b)) return zero_vector(a.n(), a.mode());
  if (a.compare_radius(local_rho(a, b), lambda) >= 0) throw PreconditionError("solve2_above needs lambda > rho_b");
  if (!above_test(a, lambda, b)) throw PreconditionError("no lambda-distinguished class is reachable from supp(b)");
  Vector x0 = restricted_solve(a, lambda, b);
  IndexSet face = smallest_initial_superset(a.classes, support(b));
  std::vector<int> face_classes = classes_meeting(a.classes, face);
  Vector u = zero_vector(a.n(), a.mode());
  for (int t : distinguished_classes_for(a, lambda)) {
    bool reached = std::any_of(face_classes.begin(), face_classes.end(),
                               [&](int c) { return a.classes.has_access(c, t); });
    if (reached) u = u + fv_eigenvector(a, t);
  }
  Scalar alpha = Scalar::zero(a.mode());
  for (int i : support(x0)) {
    if (u[i].sign() <= 0) throw InternalInconsistency("eigenvector sum vanishes on the support of x0");
    alpha = max(alpha, x0[i] / u[i]);
  }
  Vector x = scaled(u, alpha) - x0;
  snap_small(x, a);
  if (!is_nonneg(x)) throw InternalInconsistency("constructed solution has a negative entry");
  return x;
}

SolveReport2 solvable2(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_lambda(a, lambda, true);
  check_vector(b, a.n(), a.mode(), true, "b");
  SolveReport2 r;
  r.rho_b = local_rho(a, b);
  int cmp = a.compare_radius(lambda, r.rho_b);
  r.regime = cmp > 0 ? Regime::Above : cmp == 0 ? Regime::At : Regime::Below;
  if (is_zero(b)) {
    r.solvable = true;
    r.certificate = "zero_rhs";
    r.x = zero_vector(a.n(), a.mode());
    r.spectral_pair_of_x = ord_and_pair(a, *r.x);
    return r;
  }
  if (r.regime == Regime::Above) {
    r.certificate = "cor4_2";
    r.solvable = above_test(a, lambda, b);
    if (r.solvable) r.x = solve2_above(a, lambda, b);
  } else {
    Vector w;
    r.solvable = lp_solvable2(a, lambda, b, nullptr, &w);
    // Necessary conditions: at lambda = rho_b the support of b lies in
    // necessary_face for a distinguished lambda; inside the subcritical
    // window every class meeting supp(b) reaches a basic class.
    bool necessary = true;
    if (r.regime == Regime::At) {
      necessary = is_distinguished_eigenvalue(a, lambda) && is_subset(support(b), necessary_face(a, lambda));
    } else {
      SubcriticalWindow win = subcritical_window(a);
      bool inside = win.exact && lambda.is_rational() ? Scalar(*win.exact) < lambda : win.r < lambda.to_double();
      if (inside) necessary = reaches_basic(a, b);
    }
    if (r.solvable && !necessary) throw InternalInconsistency("LP solution violates a necessary condition");
    r.certificate = !r.solvable && !necessary ? "necessary_violated" : "lp";
    if (r.solvable) r.x = std::move(w);
  }
  if (r.x) {
    r.spectral_pair_of_x = ord_and_pair(a, *r.x);
    if (a.compare_radius(lambda, a.rho) > 0) throw InternalInconsistency("solvable with lambda above rho(P)");
  }
  return r;
}

IndexSet necessary_face(const Analysis& a, const Scalar& lambda) {
  require_distinguished(a, lambda);
  std::vector<int> semi = semi_distinguished_classes(a, lambda);
  std::vector<int> keep;
  for (int c = 0; c < a.num_classes(); ++c)
    if (std::any_of(semi.begin(), semi.end(), [&](int s) { return a.classes.strictly_accesses(c, s); }))
      keep.push_back(c);
  return vertices_of(a.classes, keep);
}

IndexSet eigencone_support(const Analysis& a, const Scalar& lambda) {
  std::vector<int> semi = semi_distinguished_classes(a, lambda);
  std::vector<int> keep;
  for (int c = 0; c < a.num_classes(); ++c)
    if (std::any_of(semi.begin(), semi.end(), [&](int s) { return a.classes.has_access(c, s); })) keep.push_back(c);
  return vertices_of(a.classes, keep);
}

IndexSet solvable_face_probe(const Analysis& a, const Scalar& lambda) {
  require_lambda(a, lambda, false);
  Matrix m = shifted(a, lambda);
  IndexSet out;
  for (int i = 0; i < a.n(); ++i)
    if (lp_probe(a, m, i)) out.push_back(i);
  return out;
}

Tracedown tracedown_witness(const Analysis& a, int alpha) {
  if (alpha < 0 || alpha >= a.num_classes()) throw PreconditionError("class index out of range");
  const ClassFlags& f = a.taxonomy.flags[alpha];
  if (!f.basic || !f.distinguished_for_transpose)
    throw PreconditionError("tracedown needs a basic class distinguished for the transpose");
  const Matrix& p = a.p.mat();
  Tracedown t{zero_vector(a.n(), a.mode()), zero_vector(a.n(), a.mode())};
  const IndexSet& own = a.classes.classes[alpha];
  for (std::size_t k = 0; k < own.size(); ++k) t.x[own[k]] = a.perron[alpha][k];
  Scalar half = Scalar::one(a.mode()) / a.scalar(2);
  for (int beta = alpha - 1; beta >= 0; --beta) {
    if (!a.classes.has_access(beta, alpha)) continue;
    const IndexSet& rows = a.classes.classes[beta];
    Vector inflow = zero_vector(static_cast<int>(rows.size()), a.mode());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < a.n(); ++j)
        if (a.classes.vertex_class[j] != beta && !t.x[j].is_zero()) inflow[i] += p(rows[i], j) * t.x[j];
    if (a.taxonomy.flags[beta].basic) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        t.x[rows[i]] = a.perron[beta][i];
        t.b[rows[i]] = inflow[i];
      }
    } else {
      Vector rhs = scaled(inflow, half);
      Matrix m = shift_diagonal(scaled(submatrix(p, rows, rows), a.scalar(-1)), a.rho);
      auto sol = solve_square(m, rhs);
      if (!sol) throw InternalInconsistency("singular nonbasic block in trace-down");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        t.x[rows[i]] = (*sol)[i];
        t.b[rows[i]] = rhs[i];
      }
    }
  }
  if (a.mode() == Mode::Rational && shifted(a, a.rho) * t.x != t.b)
    throw InternalInconsistency("trace-down witness does not satisfy (P - rho I) x = b");
  return t;
}

ResolventSign resolvent_sign(const Analysis& a, const Scalar& lambda) {
  require_lambda(a, lambda, false);
  if (a.num_classes() != 1) throw PreconditionError("resolvent_sign needs an irreducible matrix");
  auto positive = [&](const Matrix& m) {
    double top = 0;
    if (a.mode() == Mode::Float)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) top = std::max(top, std::fabs(m(i, j).d()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        if (a.mode() == Mode::Rational ? m(i, j).sign() <= 0 : m(i, j).d() <= 1e-7 * top) return false;
      }
    return true;
  };
  ResolventSign r;
  auto inv = inverse(shifted(a, lambda));
  if (inv) r.inverse_positive = positive(*inv) ? Verdict::True : Verdict::False;
  r.adjugate_positive = positive(adjugate(shift_diagonal(scaled(a.p.mat(), a.scalar(-1)), lambda)));
  return r;
}

SubcriticalWindow subcritical_window(const Analysis& a) {
  SubcriticalWindow w;
  const double rho = a.rho.to_double();
  for (const oracle::Root& root : oracle::spectrum_roots(a.p)) {
    double re = root.value.real();
    if (std::fabs(root.value.imag()) > 1e-9 * std::max(1.0, std::fabs(re))) continue;
    bool below = root.exact && a.rho.is_rational() ? Scalar(*root.exact) < a.rho
                                                   : re < rho - a.tol.eig_tol * std::max(1.0, rho);
    if (!below || re <= w.r) continue;
    w.r = re;
    w.exact = root.exact;
  }
  return w;
}

bool reaches_basic(const Analysis& a, const Vector& b) {
  for (int c : classes_meeting(a.classes, support(b))) {
    bool ok = false;
    for (int d = c; d < a.num_classes() && !ok; ++d) ok = a.taxonomy.flags[d].basic && a.classes.has_access(c, d);
    if (!ok) return false;
  }
  return true;
}

MembershipS membership_S(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_lambda(a, lambda, true);
  require_distinguished(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  MembershipS s;
  IndexSet j = eigencone_support(a, lambda);
  SpectralPair sp = ord_and_pair(a, b);
  s.in_s1 = a.compare_radius(sp.rho, lambda) <= 0 && lp_solvable2(a, lambda, b);
  s.in_s2 = lp_solvable2(a, lambda, b, &j);
  s.in_s3 = is_subset(support(b), j) && lex_leq(sp, SpectralPair{lambda, m_lambda(a, lambda) - 1}, a.tol.eig_tol);
  return s;
}

}  // namespace pfcone
