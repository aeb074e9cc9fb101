#include "pfcone/oracle/polynomial.hpp"

#include "pfcone/error.hpp"
#include "pfcone/linalg.hpp"

namespace pfcone::oracle {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly trimmed(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly monic(const Poly& p) {
  Poly q = trimmed(p);
  if (q.empty()) return q;
  mpq_class lead = q.back();
  for (auto& c : q) c /= lead;
  return q;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  return trimmed(d);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(c);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return trimmed(c);
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  Poly bb = trimmed(b);
  if (bb.empty()) throw InternalInconsistency("polynomial division by zero");
  r = trimmed(a);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, mpq_class(0));
  while (!r.empty() && r.size() >= bb.size()) {
    std::size_t shift = r.size() - bb.size();
    mpq_class f = r.back() / bb.back();
    q[shift] = f;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
    r = trimmed(r);
  }
  q = trimmed(q);
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  if (!r.empty()) throw InternalInconsistency("inexact polynomial division");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  a = trimmed(a);
  b = trimmed(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

mpq_class evaluate(const Poly& p, const mpq_class& t) {
  mpq_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

QMatrix to_qmatrix(const Matrix& m) {
  QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q[i][j] = m(i, j).to_mode(Mode::Rational).q();
  return q;
}

Poly charpoly(const QMatrix& a) {
  const int n = static_cast<int>(a.size());
  QMatrix h = a;
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && sgn(h[i][m - 1]) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    for (int j = m + 1; j < n; ++j) {
      if (sgn(h[j][m - 1]) == 0) continue;
      mpq_class u = h[j][m - 1] / h[m][m - 1];
      for (int c = 0; c < n; ++c)
        if (sgn(h[m][c]) != 0) h[j][c] -= u * h[m][c];
      for (int r = 0; r < n; ++r)
        if (sgn(h[r][j]) != 0) h[r][m] += u * h[r][j];
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}, 1-based.
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Poly shifted(p[k - 1].size() + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      shifted[d + 1] += p[k - 1][d];
      shifted[d] -= h[k - 1][k - 1] * p[k - 1][d];
    }
    mpq_class t = 1;
    for (int i = 1; i < k; ++i) {
      t *= h[k - i][k - i - 1];
      if (sgn(t) == 0) break;
      mpq_class f = h[k - i - 1][k - 1] * t;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) shifted[d] -= f * p[k - i - 1][d];
    }
    p[k] = trimmed(shifted);
  }
  return p[n];
}

Poly local_minpoly(const QMatrix& a, const std::vector<mpq_class>& x) {
  const int n = static_cast<int>(a.size());
  struct Reduced {
    std::vector<mpq_class> v;
    Poly c;
    int pivot;
  };
  std::vector<Reduced> basis;
  std::vector<mpq_class> power = x;
  for (int k = 0; k <= n; ++k) {
    std::vector<mpq_class> v = power;
    Poly c(k + 1);
    c[k] = 1;
    for (const auto& b : basis) {
      if (sgn(v[b.pivot]) == 0) continue;
      mpq_class f = v[b.pivot];
      for (int i = 0; i < n; ++i)
        if (sgn(b.v[i]) != 0) v[i] -= f * b.v[i];
      for (std::size_t d = 0; d < b.c.size(); ++d) c[d] -= f * b.c[d];
    }
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
      if (sgn(v[i]) != 0) pivot = i;
    if (pivot < 0) return trimmed(c);
    mpq_class inv = 1 / v[pivot];
    for (auto& e : v) e *= inv;
    for (auto& e : c) e *= inv;
    basis.push_back({std::move(v), trimmed(c), pivot});
    std::vector<mpq_class> next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sgn(a[i][j]) != 0 && sgn(power[j]) != 0) next[i] += a[i][j] * power[j];
    power = std::move(next);
  }
  throw InternalInconsistency("Krylov sequence did not become dependent");
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (degree(p) < 1) return out;
  Poly dp = derivative(p);
  Poly a0 = poly_gcd(p, dp);
  Poly b = poly_div_exact(p, a0);
  Poly c = poly_div_exact(dp, a0);
  Poly d = poly_sub(c, derivative(b));
  for (int i = 1; degree(b) >= 1; ++i) {
    Poly a = poly_gcd(b, d);
    b = poly_div_exact(b, a);
    c = poly_div_exact(d, a);
    d = poly_sub(c, derivative(b));
    if (degree(a) >= 1) out.emplace_back(monic(a), i);
  }
  return out;
}

namespace {

Matrix shifted_rational(const Matrix& m, const mpq_class& mu) {
  return shift_diagonal(m.to_mode(Mode::Rational), Scalar(mpq_class(-mu)));
}

}  // namespace

std::vector<Vector> generalized_eigenspace(const Matrix& m, const mpq_class& mu) {
  return nullspace(matrix_power(shifted_rational(m, mu), m.rows()));
}

int eigen_index(const Matrix& m, const mpq_class& mu) {
  Matrix b = shifted_rational(m, mu);
  Matrix power = Matrix::identity(m.rows(), Mode::Rational);
  int prev = m.rows();
  for (int k = 0; k <= m.rows(); ++k) {
    power = power * b;
    int r = rank(power);
    if (r == prev) return k;
    prev = r;
  }
  return m.rows();
}

int component_order(const Matrix& m, const Vector& x, const mpq_class& mu) {
  Matrix b = shifted_rational(m, mu);
  Matrix range = matrix_power(b, m.rows());
  Vector w = vector_to_mode(x, Mode::Rational);
  for (int k = 0; k <= m.rows(); ++k) {
    if (solve_consistent(range, w)) return k;
    w = b * w;
  }
  throw InternalInconsistency("component order exceeds the dimension");
}

}  // namespace pfcone::oracle
