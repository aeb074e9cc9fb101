#include "pfcone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"

namespace pfcone {

namespace {

bool constant_row_sums(const Matrix& b, Scalar& sum) {
  sum = Scalar::zero(b.mode());
  for (int j = 0; j < b.cols(); ++j) sum += b(0, j);
  for (int i = 1; i < b.rows(); ++i) {
    Scalar s = Scalar::zero(b.mode());
    for (int j = 0; j < b.cols(); ++j) s += b(i, j);
    if (s != sum) return false;
  }
  return true;
}

// An exactly positive null vector of (r I - B) certifies r = rho(B) for
// irreducible B.
bool certify_rational_root(const Matrix& b, const mpq_class& r, Vector& vec) {
  Matrix m = shift_diagonal(scaled(b, Scalar::from_int(-1, Mode::Rational)), Scalar(r));
  auto basis = nullspace(m);
  if (basis.size() != 1) return false;
  Vector v = basis[0];
  int s = v[0].sign();
  if (s == 0) return false;
  for (const auto& e : v)
    if (e.sign() != s) return false;
  Scalar top = norm_inf(v, Mode::Rational);
  if (s < 0) top = -top;
  vec = scaled(v, Scalar::one(Mode::Rational) / top);
  return true;
}

}  // namespace

PerronRoot perron_root(const Matrix& block, const Tolerance& tol) {
  tol.validate();
  const int k = block.rows();
  const Mode mode = block.mode();
  PerronRoot out;
  if (k == 1) {
    out.root = block(0, 0);
    out.vector = {Scalar::one(mode)};
    return out;
  }
  Scalar sum;
  if (constant_row_sums(block, sum)) {
    out.root = sum;
    out.vector.assign(k, Scalar::one(mode));
    return out;
  }

  std::vector<double> b(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b[i * k + j] = block(i, j).to_double() + (i == j ? 1.0 : 0.0);
  std::vector<double> v(k, 1.0), w(k);
  double lo = 0, hi = std::numeric_limits<double>::infinity();
  bool converged = false;
  int it = 0;
  for (; it < tol.power_iters; ++it) {
    for (int i = 0; i < k; ++i) {
      double s = 0;
      for (int j = 0; j < k; ++j) s += b[i * k + j] * v[j];
      w[i] = s;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0;
    double top = 0;
    for (int i = 0; i < k; ++i) {
      double ratio = w[i] / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      top = std::max(top, w[i]);
    }
    if (!std::isfinite(top) || top <= 0) throw NumericFailure("power iteration broke down");
    for (int i = 0; i < k; ++i) v[i] = w[i] / top;
    double rho = 0.5 * (lo + hi) - 1.0;
    double width = hi - lo;
    if (width <= 1e-3 * tol.eig_tol * std::max(1.0, rho)) {
      converged = true;
      break;
    }
    if (it + 1 == tol.power_iters && width <= tol.eig_tol * std::max(1.0, rho)) converged = true;
  }
  if (!converged) throw NumericFailure("power iteration did not converge within power_iters steps");
  double estimate = 0.5 * (lo + hi) - 1.0;
  out.iterations = it + 1;

  if (mode == Mode::Float) {
    out.root = Scalar(estimate);
    for (double x : v) out.vector.emplace_back(x);
    return out;
  }
  double slack = std::max(hi - lo, 1e-12) * 16 + 1e-9 * std::max(1.0, estimate);
  for (const mpq_class& c : rational_convergents(estimate)) {
    if (std::fabs(c.get_d() - estimate) > slack) continue;
    if (certify_rational_root(block, c, out.vector)) {
      out.root = Scalar(c);
      return out;
    }
  }
  throw ModeMismatch("class radius is irrational; rerun in float mode");
}

std::vector<Scalar> class_radii(const NonnegMatrix& p, const ClassAnalysis& a, const Tolerance& tol) {
  std::vector<Scalar> radii;
  for (const auto& cls : a.classes) radii.push_back(perron_root(submatrix(p.mat(), cls, cls), tol).root);
  return radii;
}

Analysis analyze(const NonnegMatrix& p, const Tolerance& tol) {
  tol.validate();
  Analysis a{p, condense(p), {}, {}, Scalar::zero(p.mode()), {}, tol};
  for (const auto& cls : a.classes.classes) {
    PerronRoot pr = perron_root(submatrix(p.mat(), cls, cls), tol);
    a.radii.push_back(pr.root);
    a.perron.push_back(pr.vector);
  }
  for (const auto& r : a.radii)
    if (r > a.rho) a.rho = r;
  a.taxonomy = classify(a.classes, a.radii, a.rho, tol.eig_tol);
  return a;
}

Scalar local_rho(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  Scalar r = Scalar::zero(a.mode());
  for (int c : classes_accessing(a.classes, support(x)))
    if (a.radii[c] > r) r = a.radii[c];
  return r;
}

double local_rho_estimate(const NonnegMatrix& p, const Vector& x, int m) {
  check_vector(x, p.n(), p.mode(), true, "x");
  if (is_zero(x)) throw PreconditionError("local_rho_estimate needs x != 0");
  if (m <= 0) throw PreconditionError("local_rho_estimate needs m >= 1");
  const int n = p.n();
  std::vector<double> mat(static_cast<std::size_t>(n) * n), v(n), w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat[i * n + j] = p(i, j).to_double();
  double top = 0;
  for (int i = 0; i < n; ++i) top = std::max(top, v[i] = x[i].to_double());
  double log_norm = std::log(top);
  for (int i = 0; i < n; ++i) v[i] /= top;
  for (int step = 0; step < m; ++step) {
    top = 0;
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += mat[i * n + j] * v[j];
      w[i] = s;
      top = std::max(top, s);
    }
    if (top == 0) return 0.0;
    if (!std::isfinite(top)) throw NumericFailure("overflow in local_rho_estimate");
    log_norm += std::log(top);
    for (int i = 0; i < n; ++i) v[i] = w[i] / top;
  }
  double est = std::exp(log_norm / m);
  if (!std::isfinite(est)) throw NumericFailure("overflow in local_rho_estimate");
  return est;
}

std::vector<Scalar> distinguished_eigenvalues(const Analysis& a) {
  std::vector<Scalar> out;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.flags[c].distinguished) out.push_back(a.radii[c]);
  std::sort(out.begin(), out.end());
  std::vector<Scalar> dedup;
  for (const auto& r : out)
    if (dedup.empty() || a.compare_radius(dedup.back(), r) != 0) dedup.push_back(r);
  return dedup;
}

bool is_distinguished_eigenvalue(const Analysis& a, const Scalar& lambda) {
  return !distinguished_classes_for(a, lambda).empty();
}

std::vector<int> distinguished_classes_for(const Analysis& a, const Scalar& lambda) {
  std::vector<int> out;
  for (int c = 0; c < a.num_classes(); ++c)
    if (a.taxonomy.flags[c].distinguished && a.radius_equals(c, lambda)) out.push_back(c);
  return out;
}

Vector fv_eigenvector(const Analysis& a, int cls) {
  if (cls < 0 || cls >= a.num_classes() || !a.taxonomy.flags[cls].distinguished)
    throw PreconditionError("fv_eigenvector needs a distinguished class");
  const Matrix& p = a.p.mat();
  const Scalar& rho = a.radii[cls];
  Vector x = zero_vector(a.n(), a.mode());
  const IndexSet& own = a.classes.classes[cls];
  for (std::size_t k = 0; k < own.size(); ++k) x[own[k]] = a.perron[cls][k];
  // Accessors precede cls in the class order; walk back towards the front.
  for (int b = cls - 1; b >= 0; --b) {
    if (!a.classes.has_access(b, cls)) continue;
    const IndexSet& rows = a.classes.classes[b];
    Vector rhs = zero_vector(static_cast<int>(rows.size()), a.mode());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < a.n(); ++j)
        if (a.classes.vertex_class[j] != b && !p(rows[i], j).is_zero() && !x[j].is_zero())
          rhs[i] += p(rows[i], j) * x[j];
    Matrix m = shift_diagonal(scaled(submatrix(p, rows, rows), a.scalar(-1)), rho);
    auto sol = solve_square(m, rhs);
    if (!sol) throw InternalInconsistency("singular block in Frobenius-Victory construction");
    for (std::size_t i = 0; i < rows.size(); ++i) x[rows[i]] = (*sol)[i];
  }
  return x;
}

int longest_chain(const Analysis& a, const std::function<bool(int)>& pick) {
  const int k = a.num_classes();
  std::vector<int> best(k, 0);
  int overall = 0;
  for (int c = k - 1; c >= 0; --c) {
    if (!pick(c)) continue;
    int tail = 0;
    for (int d = c + 1; d < k; ++d)
      if (a.classes.access[c][d]) tail = std::max(tail, best[d]);
    best[c] = tail + 1;
    overall = std::max(overall, best[c]);
  }
  return overall;
}

SpectralPair ord_and_pair(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  if (is_zero(x)) return {Scalar::zero(a.mode()), 0};
  std::vector<int> inside = classes_accessing(a.classes, support(x));
  std::vector<bool> in_face(a.num_classes(), false);
  Scalar rho = Scalar::zero(a.mode());
  for (int c : inside) {
    in_face[c] = true;
    if (a.radii[c] > rho) rho = a.radii[c];
  }
  int ord = longest_chain(a, [&](int c) { return in_face[c] && a.radius_equals(c, rho); });
  return {rho, ord};
}

int index_nu(const Analysis& a, const Scalar& lambda) {
  return longest_chain(a, [&](int c) { return a.radius_equals(c, lambda); });
}

IndexSet bounded_access_set(const Analysis& a, const Scalar& lambda) {
  std::vector<int> keep;
  for (int c = 0; c < a.num_classes(); ++c) {
    bool ok = true;
    for (int d = 0; d <= c && ok; ++d)
      if (a.classes.access[d][c] && a.compare_radius(a.radii[d], lambda) > 0) ok = false;
    if (ok) keep.push_back(c);
  }
  return vertices_of(a.classes, keep);
}

int m_lambda(const Analysis& a, const Scalar& lambda) {
  if (!is_distinguished_eigenvalue(a, lambda)) throw PreconditionError("m_lambda needs a distinguished eigenvalue");
  IndexSet j = bounded_access_set(a, lambda);
  std::vector<bool> in_j(a.num_classes(), false);
  for (int c : classes_meeting(a.classes, j)) in_j[c] = true;
  return longest_chain(a, [&](int c) { return in_j[c] && a.radius_equals(c, lambda); });
}

}  // namespace pfcone
