#include "pfcone/eq_type1.hpp"

#include <algorithm>
#include <cmath>

#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"
#include "pfcone/oracle/lp.hpp"
#include "pfcone/oracle/polynomial.hpp"

namespace pfcone {

namespace {

void require_positive(const Analysis& a, const Scalar& lambda) {
  if (lambda.mode() != a.mode()) throw ModeMismatch("lambda has a different numeric mode than P");
  if (lambda.sign() <= 0) throw PreconditionError("lambda must be positive");
}

// Classes of radius >= lambda having access to supp(b), in class order.
std::vector<int> heavy_accessors(const Analysis& a, const Scalar& lambda, const IndexSet& supp) {
  std::vector<int> out;
  for (int c : classes_accessing(a.classes, supp))
    if (a.compare_radius(a.radii[c], lambda) >= 0) out.push_back(c);
  return out;
}

constexpr double kNumericZero = 1e-7;

bool orthogonal(const TransposeEigenspace& sp, const Vector& b) {
  if (sp.exact_mu && b[0].is_rational()) {
    for (const Vector& z : sp.exact_basis)
      if (!dot(z, b).is_zero()) return false;
    return true;
  }
  double bnorm = 0;
  for (const auto& e : b) bnorm += std::fabs(e.to_double());
  for (const Vector& z : sp.exact_basis) {
    double s = 0, top = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      s += z[i].to_double() * b[i].to_double();
      top = std::max(top, std::fabs(z[i].to_double()));
    }
    if (std::fabs(s) > kNumericZero * top * bnorm) return false;
  }
  for (const auto& z : sp.numeric_basis) {
    oracle::Complex s = 0;
    double top = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      s += z[i] * b[i].to_double();
      top = std::max(top, std::abs(z[i]));
    }
    if (std::abs(s) > kNumericZero * top * bnorm) return false;
  }
  return true;
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
  IndexSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

// |mu| >= lambda; exact when mu is rational and lambda is rational.
bool modulus_at_least(const TransposeEigenspace& sp, const Scalar& lambda, double tol) {
  if (sp.exact_mu && lambda.is_rational()) return abs(Scalar(*sp.exact_mu)) >= lambda;
  double l = lambda.to_double();
  return std::abs(sp.mu) >= l - tol * std::max(1.0, l);
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "indeterminate";
  }
}

bool solvable1(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_positive(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  return heavy_accessors(a, lambda, support(b)).empty();
}

Vector restricted_solve(const Analysis& a, const Scalar& lambda, const Vector& b) {
  IndexSet face = smallest_initial_superset(a.classes, support(b));
  if (face.empty()) return zero_vector(a.n(), a.mode());
  Matrix m = shift_diagonal(scaled(submatrix(a.p.mat(), face, face), a.scalar(-1)), lambda);
  auto y = solve_square(m, gather(b, face));
  if (!y) throw InternalInconsistency("restricted system is singular although every radius is below lambda");
  return scatter(*y, face, a.n(), a.mode());
}

SolveReport1 solve1(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_positive(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  SolveReport1 r;
  r.rho_b = local_rho(a, b);
  r.residual_norm = Scalar::zero(a.mode());
  IndexSet supp = support(b);
  std::vector<int> heavy = heavy_accessors(a, lambda, supp);
  r.solvable = heavy.empty();
  if (!r.solvable) {
    r.fired_condition = "h";
    // The first heavy class in class order that no other heavy class reaches
    // is initial among the heavy classes, hence distinguished.
    std::vector<int> all_heavy;
    for (int c = 0; c < a.num_classes(); ++c)
      if (a.compare_radius(a.radii[c], lambda) >= 0) all_heavy.push_back(c);
    for (int c : all_heavy) {
      bool reaches = std::any_of(heavy.begin(), heavy.end(), [&](int h) { return a.classes.has_access(c, h); });
      bool top = std::none_of(all_heavy.begin(), all_heavy.end(),
                              [&](int d) { return a.classes.strictly_accesses(d, c); });
      if (reaches && top) {
        r.witness_class = c;
        break;
      }
    }
    return r;
  }
  r.fired_condition = "g";
  Vector x0 = restricted_solve(a, lambda, b);
  Vector residual = shift_diagonal(scaled(a.p.mat(), a.scalar(-1)), lambda) * x0 - b;
  r.residual_norm = norm_inf(residual, a.mode());
  if (!is_nonneg(x0)) throw InternalInconsistency("minimal solution has a negative entry");
  r.x0 = std::move(x0);
  r.eigen_freedom = distinguished_classes_for(a, lambda);
  r.unique = r.eigen_freedom.empty();
  return r;
}

Vector neumann_partial(const NonnegMatrix& p, const Scalar& lambda, const Vector& b, int m) {
  if (lambda.sign() <= 0) throw PreconditionError("lambda must be positive");
  if (m < 0) throw PreconditionError("m must be nonnegative");
  check_vector(b, p.n(), p.mode(), true, "b");
  Scalar inv = Scalar::one(p.mode()) / lambda;
  Vector term = scaled(b, inv);
  Vector sum = term;
  for (int j = 1; j <= m; ++j) {
    term = scaled(p.mat() * term, inv);
    sum = sum + term;
  }
  if (p.mode() == Mode::Float)
    for (const auto& e : sum)
      if (!std::isfinite(e.d())) throw NumericFailure("Neumann partial sum overflowed");
  return sum;
}

std::vector<TransposeEigenspace> transpose_eigenspaces(const Analysis& a, bool distinguished_only) {
  std::vector<TransposeEigenspace> out;
  Matrix pt = a.p.mat().transpose();
  std::vector<Scalar> dist = distinguished_eigenvalues(a);
  for (const oracle::Root& root : oracle::spectrum_roots(a.p)) {
    TransposeEigenspace sp;
    sp.mu = root.value;
    sp.exact_mu = root.exact;
    for (const Scalar& d : dist) {
      bool match = root.exact && d.is_rational() ? Scalar(*root.exact) == d
                   : root.value.imag() == 0.0 &&
                         std::fabs(root.value.real() - d.to_double()) <= 1e3 * a.tol.eig_tol * std::max(1.0, d.to_double());
      if (match) sp.distinguished = true;
    }
    if (distinguished_only && !sp.distinguished) continue;
    std::vector<bool> hit(a.n(), false);
    if (root.exact) {
      sp.exact_basis = oracle::generalized_eigenspace(pt, *root.exact);
      for (const Vector& z : sp.exact_basis)
        for (int i : support(z)) hit[i] = true;
    } else {
      sp.numeric_basis = oracle::numeric_generalized_eigenspace(pt, root.value, root.multiplicity);
      for (const auto& z : sp.numeric_basis) {
        double top = 0;
        for (const auto& e : z) top = std::max(top, std::abs(e));
        for (int i = 0; i < a.n(); ++i)
          if (std::abs(z[i]) > kNumericZero * top) hit[i] = true;
      }
    }
    for (int i = 0; i < a.n(); ++i)
      if (hit[i]) sp.support.push_back(i);
    out.push_back(std::move(sp));
  }
  return out;
}

bool condition_g(const Analysis& a, const Scalar& lambda, const Vector& b) { return solvable1(a, lambda, b); }

bool condition_h(const Analysis& a, const Scalar& lambda, const Vector& b, std::optional<int>* witness) {
  require_positive(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  std::vector<int> touched = classes_meeting(a.classes, support(b));
  for (int c = 0; c < a.num_classes(); ++c) {
    if (!a.taxonomy.flags[c].distinguished || a.compare_radius(a.radii[c], lambda) < 0) continue;
    for (int t : touched)
      if (a.classes.has_access(c, t)) {
        if (witness) *witness = c;
        return false;
      }
  }
  return true;
}

bool condition_j(const Analysis& a, const std::vector<TransposeEigenspace>& spaces, const Scalar& lambda,
                 const Vector& b) {
  require_positive(a, lambda);
  IndexSet supp = support(b);
  for (const auto& sp : spaces)
    if (sp.distinguished && modulus_at_least(sp, lambda, a.tol.eig_tol) && !disjoint(sp.support, supp)) return false;
  return true;
}

bool lp_solvable1(const Analysis& a, const Scalar& lambda, const Vector& b, Vector* witness) {
  require_positive(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  oracle::LPProblem lp(a.n());
  Matrix m = shift_diagonal(scaled(a.p.mat(), a.scalar(-1)), lambda);
  lp.add_rows(m, oracle::Sense::Eq, b);
  oracle::LPResult res = oracle::lp_feasible(lp);
  if (res.feasible && witness) *witness = oracle::to_vector(res.witness, a.mode());
  return res.feasible;
}

Conditions31 conditions_report_3_1(const Analysis& a, const Scalar& lambda, const Vector& b) {
  require_positive(a, lambda);
  check_vector(b, a.n(), a.mode(), true, "b");
  if (is_zero(b)) throw PreconditionError("conditions (b)-(j) are stated for b != 0");
  Conditions31 r;
  r.b = local_rho(a, b) < lambda;
  if (a.mode() == Mode::Float) r.b = a.compare_radius(local_rho(a, b), lambda) < 0;
  r.g = condition_g(a, lambda, b);
  r.h = condition_h(a, lambda, b);

  // (c) partial sums converge, (d) (P/lambda)^m b -> 0, both in binary64.
  {
    const int n = a.n();
    const double l = lambda.to_double();
    std::vector<double> term(n), next(n);
    double bnorm = 0;
    for (int i = 0; i < n; ++i) bnorm = std::max(bnorm, term[i] = b[i].to_double());
    double sum_norm = bnorm / l;
    for (int it = 0; it < a.tol.power_iters; ++it) {
      double top = 0;
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += a.p(i, j).to_double() * term[j];
        next[i] = s / l;
        top = std::max(top, next[i]);
      }
      term.swap(next);
      sum_norm += top / l;
      if (!(top <= 1e12 * bnorm)) {
        r.c = r.d = Verdict::False;
        break;
      }
      if (top <= 1e-15 * bnorm || top / l <= 1e-16 * sum_norm) {
        r.c = r.d = Verdict::True;
        break;
      }
    }
  }

  auto spaces = transpose_eigenspaces(a, false);
  IndexSet supp = support(b);
  r.e = r.f = r.i = r.j = true;
  for (const auto& sp : spaces) {
    if (!modulus_at_least(sp, lambda, a.tol.eig_tol)) continue;
    bool real_ge = sp.mu.imag() == 0.0;  // distinguished eigenvalues are real, so |mu| >= lambda means mu >= lambda
    bool orth = orthogonal(sp, b);
    bool vanish = disjoint(sp.support, supp);
    if (!orth) r.e = false;
    if (!vanish) r.i = false;
    if (sp.distinguished && real_ge) {
      if (!orth) r.f = false;
      if (!vanish) r.j = false;
    }
  }

  std::vector<bool> decided{r.b, r.e, r.f, r.g, r.h, r.i, r.j};
  if (r.c != Verdict::Indeterminate) decided.push_back(r.c == Verdict::True);
  if (r.d != Verdict::Indeterminate) decided.push_back(r.d == Verdict::True);
  r.consistent = std::all_of(decided.begin(), decided.end(), [&](bool v) { return v == decided.front(); });
  return r;
}

IndexSet solvable_set1(const Analysis& a, const Scalar& lambda) {
  require_positive(a, lambda);
  std::vector<int> keep;
  for (int c = 0; c < a.num_classes(); ++c) {
    bool ok = true;
    for (int d = 0; d <= c && ok; ++d)
      if (a.classes.has_access(d, c) && a.compare_radius(a.radii[d], lambda) >= 0) ok = false;
    if (ok) keep.push_back(c);
  }
  return vertices_of(a.classes, keep);
}

}  // namespace pfcone
