#include "pfcone/collatz_wielandt.hpp"

#include <algorithm>
#include <cmath>

#include "pfcone/eq_type1.hpp"
#include "pfcone/eq_type2.hpp"
#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"
#include "pfcone/oracle/eigen.hpp"
#include "pfcone/oracle/lp.hpp"

namespace pfcone {

namespace {

// Nonnegativity with the float snap used throughout: entries within eq_tol
// of zero count as zero.
bool nonneg_tol(const Vector& v, const Analysis& a) {
  if (a.mode() == Mode::Rational) return is_nonneg(v);
  double top = 0;
  for (const auto& e : v) top = std::max(top, std::fabs(e.d()));
  return std::all_of(v.begin(), v.end(), [&](const Scalar& e) { return e.d() >= -a.tol.eq_tol * std::max(1.0, top); });
}

void snap(Vector& v, const Analysis& a) {
  if (a.mode() != Mode::Float) return;
  double top = 0;
  for (const auto& e : v) top = std::max(top, std::fabs(e.d()));
  for (auto& e : v)
    if (std::fabs(e.d()) <= a.tol.eq_tol * std::max(1.0, top)) e = Scalar(0.0);
}

void require_eigenvector(const Analysis& a, const Vector& v, const Scalar& rho, const char* what) {
  Vector r = a.p.mat() * v - scaled(v, rho);
  double top = std::max(1.0, norm_inf(v, a.mode()).to_double());
  bool ok = a.mode() == Mode::Rational ? is_zero(r) : norm_inf(r, a.mode()).to_double() <= a.tol.eq_tol * top * 10;
  if (!ok) throw InternalInconsistency(what);
}

}  // namespace

CWReport cw_numbers(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  if (is_zero(x)) throw PreconditionError("Collatz-Wielandt numbers need x != 0");
  CWReport r;
  r.rho_x = local_rho(a, x);
  Vector px = a.p.mat() * x;
  IndexSet sx = support(x);
  bool invariant = is_subset(support(px), sx);
  std::optional<Scalar> lo, hi;
  for (int i : sx) {
    Scalar ratio = px[i] / x[i];
    lo = lo ? min(*lo, ratio) : ratio;
    hi = hi ? max(*hi, ratio) : ratio;
  }
  r.r_lower = *lo;
  if (invariant) r.r_upper = *hi;
  return r;
}

bool rho_in_sigma1(const Analysis& a) {
  for (const auto& f : a.taxonomy.flags)
    if (f.basic && !f.final) return false;
  return true;
}

bool eigen_face_covers(const Analysis& a) {
  const int k = a.num_classes();
  for (int c = 0; c < k; ++c) {
    bool in_i1 = false, accessed_by_basic = false;
    for (int d = 0; d < k; ++d) {
      const ClassFlags& f = a.taxonomy.flags[d];
      if (f.basic && f.distinguished && a.classes.has_access(c, d)) in_i1 = true;
      if (f.basic && a.classes.has_access(d, c)) accessed_by_basic = true;
    }
    if (!in_i1 && accessed_by_basic) return false;
  }
  return true;
}

bool lp_rho_in_sigma1(const Analysis& a) {
  if (a.mode() != Mode::Rational) throw ModeMismatch("the Sigma1 LP needs rational mode");
  oracle::LPProblem lp(a.n());
  lp.add_rows(shift_diagonal(a.p.mat(), -a.rho), oracle::Sense::Le, zero_vector(a.n(), a.mode()));
  for (int i = 0; i < a.n(); ++i) lp.add_lower_bound(i, 1);
  return oracle::lp_feasible(lp).feasible;
}

CWSets cw_sets(const Analysis& a) {
  CWSets s;
  s.sup_omega = a.rho;
  s.inf_sigma1 = a.rho;
  std::vector<Scalar> dist = distinguished_eigenvalues(a);
  s.inf_sigma = dist.empty() ? Scalar::zero(a.mode()) : dist.front();
  std::optional<Scalar> low;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.flags[c].distinguished_for_transpose) low = low ? min(*low, a.radii[c]) : a.radii[c];
  s.sup_omega1 = low ? *low : Scalar::zero(a.mode());
  s.inf_sigma1_attained = rho_in_sigma1(a);

  oracle::LPProblem lp(a.n());
  lp.add_rows(shift_diagonal(a.p.mat(), -s.sup_omega1), oracle::Sense::Ge, zero_vector(a.n(), a.mode()));
  for (int i = 0; i < a.n(); ++i) lp.add_lower_bound(i, 1);
  oracle::LPResult res = oracle::lp_feasible(lp);
  if (res.feasible) s.sup_omega1_witness = oracle::to_vector(res.witness, a.mode());
  return s;
}

std::pair<Vector, Vector> decompose_5_4(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  if (is_zero(x)) return {x, x};
  Scalar rho = local_rho(a, x);
  Vector b = scaled(x, rho) - a.p.mat() * x;
  snap(b, a);
  if (!nonneg_tol(b, a)) throw PreconditionError("R(x) > rho_x: (rho_x I - P) x is not nonnegative");
  for (auto& e : b)
    if (e.sign() < 0) e = Scalar::zero(a.mode());
  if (is_zero(b)) return {x, zero_vector(a.n(), a.mode())};
  if (!solvable1(a, rho, b)) throw InternalInconsistency("residual of x is reached by a class of radius rho_x");
  Vector x2 = restricted_solve(a, rho, b);
  Vector x1 = x - x2;
  snap(x1, a);
  if (!nonneg_tol(x1, a)) throw InternalInconsistency("eigen part of the decomposition is not nonnegative");
  require_eigenvector(a, x1, rho, "eigen part of the decomposition is not an eigenvector");
  return {x1, x2};
}

std::pair<Vector, Vector> decompose_5_13(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  if (is_zero(x)) return {x, x};
  SpectralPair sp = ord_and_pair(a, x);
  if (sp.ord != 1) throw PreconditionError("decompose_5_13 needs ord(x) = 1");
  Vector b = a.p.mat() * x - scaled(x, sp.rho);
  snap(b, a);
  if (!nonneg_tol(b, a)) throw PreconditionError("(P - rho_x I) x is not nonnegative");
  for (auto& e : b)
    if (e.sign() < 0) e = Scalar::zero(a.mode());
  if (is_zero(b)) return {x, zero_vector(a.n(), a.mode())};
  if (!solvable1(a, sp.rho, b)) throw InternalInconsistency("image of x is reached by a class of radius rho_x");
  Vector x2 = restricted_solve(a, sp.rho, b);
  Vector x1 = x + x2;
  require_eigenvector(a, x1, sp.rho, "x + x2 is not an eigenvector");
  return {x1, x2};
}

Check511 check_5_11(const Analysis& a) {
  if (a.mode() != Mode::Rational) throw ModeMismatch("the eigencone LPs need rational mode");
  Check511 r;
  r.a = rho_in_sigma1(analyze(a.p.transpose(), a.tol));

  const int n = a.n();
  Matrix m = shift_diagonal(scaled(a.p.mat(), a.scalar(-1)), a.rho);  // rho I - P
  Matrix mn = matrix_power(m, n);
  bool only_eigen = true;
  for (int i = 0; i < n && only_eigen; ++i)
    for (int sgn : {1, -1}) {
      oracle::LPProblem lp(n);
      lp.add_rows(mn, oracle::Sense::Eq, zero_vector(n, a.mode()));
      std::vector<mpq_class> row(n);
      for (int j = 0; j < n; ++j) row[j] = sgn * m(i, j).q();
      lp.add(row, oracle::Sense::Ge, 1);
      if (oracle::lp_feasible(lp).feasible) {
        only_eigen = false;
        break;
      }
    }
  bool no_lower = true;
  for (int c = 0; c < a.num_classes(); ++c) {
    bool in_j = false;
    for (int d = c; d < a.num_classes() && !in_j; ++d)
      in_j = a.taxonomy.flags[d].basic && a.classes.has_access(c, d);
    if (in_j && a.taxonomy.flags[c].distinguished && a.compare_radius(a.radii[c], a.rho) < 0) no_lower = false;
  }
  r.b = only_eigen && no_lower;
  r.c = solvable_face_probe(a, a.rho).empty();
  return r;
}

Boundary52 boundary_5_2(const Analysis& a, const Vector& x) {
  CWReport cw = cw_numbers(a, x);
  if (!cw.r_upper) throw PreconditionError("R(x) is infinite");
  Boundary52 r;
  r.b = scaled(x, *cw.r_upper) - a.p.mat() * x;
  snap(r.b, a);
  IndexSet sb = support(r.b), sx = support(x);
  r.on_boundary = is_subset(sb, sx) && sb.size() < sx.size();
  r.rho_below_r_upper = a.compare_radius(cw.rho_x, *cw.r_upper) < 0;
  r.generates_support = smallest_initial_superset(a.classes, sb) == sx;
  r.strict_iff = r.rho_below_r_upper == r.generates_support;
  return r;
}

PowerLimit power_limit_5_6(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  Scalar rho = local_rho(a, x);
  if (rho.sign() <= 0) throw PreconditionError("power_limit_5_6 needs rho_x > 0");
  PowerLimit r;
  oracle::LocalSpectrum ls = oracle::local_spectrum(a.p, x);
  const double rd = rho.to_double();
  int peripheral = 0;
  bool simple_at_rho = false;
  for (const oracle::Root& root : ls.roots) {
    bool on_circle, at_rho;
    if (root.exact && rho.is_rational()) {
      on_circle = abs(Scalar(*root.exact)) == rho;
      at_rho = Scalar(*root.exact) == rho;
    } else {
      double tol = 1e3 * a.tol.eig_tol * std::max(1.0, rd);
      on_circle = std::fabs(std::abs(root.value) - rd) <= tol;
      at_rho = std::abs(root.value - oracle::Complex(rd, 0)) <= tol;
    }
    if (!on_circle) continue;
    ++peripheral;
    if (at_rho && root.multiplicity == 1) simple_at_rho = true;
  }
  r.exists = peripheral == 1 && simple_at_rho;

  std::vector<double> v(a.n()), w(a.n());
  for (int i = 0; i < a.n(); ++i) v[i] = x[i].to_double();
  for (int k = 1; k <= a.tol.power_iters; ++k) {
    double diff = 0, top = 0;
    for (int i = 0; i < a.n(); ++i) {
      double s = 0;
      for (int j = 0; j < a.n(); ++j) s += a.p(i, j).to_double() * v[j];
      w[i] = s / rd;
      diff = std::max(diff, std::fabs(w[i] - v[i]));
      top = std::max(top, std::fabs(w[i]));
    }
    v.swap(w);
    r.orbit_steps = k;
    if (diff <= 1e-12 * std::max(1.0, top)) {
      r.orbit_settled = true;
      break;
    }
    if (!std::isfinite(top)) break;
  }
  return r;
}

}  // namespace pfcone
