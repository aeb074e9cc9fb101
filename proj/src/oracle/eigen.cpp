#include "pfcone/oracle/eigen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "pfcone/error.hpp"

namespace pfcone::oracle {

namespace {

using CMatrix = Eigen::MatrixXcd;

bool root_order(const Root& a, const Root& b) {
  if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
  return a.value.imag() > b.value.imag();
}

std::vector<Complex> companion_eigenvalues(const Poly& monic_p) {
  const int d = degree(monic_p);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -monic_p[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  if (es.info() != Eigen::Success) throw NumericFailure("eigensolver failed on a companion matrix");
  std::vector<Complex> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

Complex newton_polish(const Poly& p, Complex z) {
  std::vector<double> c;
  for (const auto& q : p) c.push_back(q.get_d());
  for (int it = 0; it < 4; ++it) {
    Complex f = 0, df = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
      df = df * z + f;
      f = f * z + c[k];
    }
    if (std::abs(df) == 0) break;
    Complex step = f / df;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

void roots_of_squarefree(Poly f, int mult, std::vector<Root>& out) {
  // Exact rational roots first, deflating f as they are found.
  while (degree(f) >= 1) {
    if (degree(f) == 1) {
      mpq_class r = -f[0] / f[1];
      out.push_back({Complex(r.get_d(), 0.0), mult, r});
      return;
    }
    bool deflated = false;
    for (Complex z : companion_eigenvalues(f)) {
      if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
      for (const mpq_class& c : rational_convergents(z.real())) {
        if (std::fabs(c.get_d() - z.real()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
        if (sgn(evaluate(f, c)) != 0) continue;
        out.push_back({Complex(c.get_d(), 0.0), mult, c});
        f = poly_div_exact(f, Poly{mpq_class(-c), mpq_class(1)});
        deflated = true;
        break;
      }
      if (deflated) break;
    }
    if (!deflated) break;
  }
  if (degree(f) < 1) return;
  for (Complex z : companion_eigenvalues(f)) {
    bool real = z.imag() == 0.0;
    z = newton_polish(f, z);
    if (real) z = Complex(z.real(), 0.0);
    out.push_back({z, mult, std::nullopt});
  }
}

CMatrix to_complex(const Matrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).to_double();
  return c;
}

}  // namespace

std::vector<Root> polynomial_roots(const Poly& p) {
  Poly q = monic(p);
  if (q.empty()) throw PreconditionError("roots of the zero polynomial");
  std::vector<Root> out;
  for (const auto& [factor, mult] : squarefree(q)) roots_of_squarefree(factor, mult, out);
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

std::vector<Root> spectrum_roots(const NonnegMatrix& p) {
  if (p.n() == 0) return {};
  return polynomial_roots(charpoly(to_qmatrix(p.mat())));
}

std::vector<Complex> eig_all(const NonnegMatrix& p, double eig_tol) {
  std::vector<Complex> out;
  if (p.mode() == Mode::Rational) {
    for (const Root& r : spectrum_roots(p))
      for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  } else if (p.n() > 0) {
    Eigen::MatrixXd a(p.n(), p.n());
    for (int i = 0; i < p.n(); ++i)
      for (int j = 0; j < p.n(); ++j) a(i, j) = p(i, j).d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    if (es.info() != Eigen::Success) throw NumericFailure("dense eigensolver failed");
    for (int i = 0; i < p.n(); ++i) out.push_back(es.eigenvalues()(i));
  }
  for (auto& z : out)
    if (std::fabs(z.imag()) < eig_tol * std::max(1.0, std::abs(z))) z = Complex(z.real(), 0.0);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  return out;
}

LocalSpectrum local_spectrum(const NonnegMatrix& p, const Vector& x) {
  check_vector(x, p.n(), p.mode(), false, "x");
  LocalSpectrum s;
  std::vector<mpq_class> xq;
  for (const auto& e : x) xq.push_back(e.to_mode(Mode::Rational).q());
  s.minpoly = local_minpoly(to_qmatrix(p.mat()), xq);
  if (degree(s.minpoly) >= 1) s.roots = polynomial_roots(s.minpoly);
  for (const Root& r : s.roots) s.rho = std::max(s.rho, std::abs(r.value));
  return s;
}

std::vector<Component> decompose_generalized(const NonnegMatrix& p, const Vector& x, double rank_tol) {
  LocalSpectrum s = local_spectrum(p, x);
  const int d = degree(s.minpoly);
  if (d < 1) return {};
  const int n = p.n();

  // Krylov basis K = [x, Px, ..., P^{d-1}x]; on it P acts as the companion
  // matrix of the minimal polynomial and x is the first unit vector.
  QMatrix a = to_qmatrix(p.mat());
  std::vector<mpq_class> power;
  for (const auto& e : x) power.push_back(e.to_mode(Mode::Rational).q());
  CMatrix krylov(n, d);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < n; ++i) krylov(i, k) = power[i].get_d();
    std::vector<mpq_class> next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sgn(a[i][j]) != 0 && sgn(power[j]) != 0) next[i] += a[i][j] * power[j];
    power = std::move(next);
  }
  CMatrix comp = CMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -s.minpoly[i].get_d();

  // Group roots closer than rank_tol.
  std::vector<std::vector<int>> groups;
  for (int r = 0; r < static_cast<int>(s.roots.size()); ++r) {
    bool placed = false;
    for (auto& g : groups) {
      Complex z = s.roots[g.front()].value;
      if (std::abs(z - s.roots[r].value) <= rank_tol * std::max(1.0, std::abs(z))) {
        g.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({r});
  }

  CMatrix basis(d, d);
  std::vector<int> offset, width;
  int col = 0;
  for (const auto& g : groups) {
    offset.push_back(col);
    int w = 0;
    for (int r : g) {
      const Root& root = s.roots[r];
      CMatrix shifted = comp - root.value * CMatrix::Identity(d, d);
      CMatrix m = CMatrix::Identity(d, d);
      for (int k = 0; k < root.multiplicity; ++k) m = m * shifted;
      Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
      basis.middleCols(col, root.multiplicity) = svd.matrixV().rightCols(root.multiplicity);
      col += root.multiplicity;
      w += root.multiplicity;
    }
    width.push_back(w);
  }
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(d);
  e0(0) = 1.0;
  Eigen::VectorXcd coeff = basis.colPivHouseholderQr().solve(e0);

  std::vector<Component> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Component c;
    const Root& lead = s.roots[groups[g].front()];
    c.lambda = lead.value;
    c.exact_lambda = groups[g].size() == 1 ? lead.exact : std::nullopt;
    c.merged = groups[g].size() > 1;
    for (int r : groups[g]) c.order = std::max(c.order, s.roots[r].multiplicity);
    Eigen::VectorXcd y = basis.middleCols(offset[g], width[g]) * coeff.segment(offset[g], width[g]);
    Eigen::VectorXcd v = krylov * y;
    for (int i = 0; i < n; ++i) c.vector.push_back(v(i));
    out.push_back(std::move(c));
  }
  return out;
}

KrylovRho krylov_local_rho(const NonnegMatrix& p, const Vector& x, double rank_tol) {
  check_vector(x, p.n(), p.mode(), true, "x");
  if (is_zero(x)) throw PreconditionError("krylov_local_rho needs x != 0");
  KrylovRho out;
  if (p.mode() == Mode::Rational) {
    LocalSpectrum s = local_spectrum(p, x);
    out.rho = s.rho;
    out.dimension = degree(s.minpoly);
    return out;
  }
  const int n = p.n();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = p(i, j).d();
  const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  Eigen::MatrixXd q(n, n + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = x[i].d();
  q.col(0) = v / v.norm();
  int k = 0;
  for (; k < n; ++k) {
    Eigen::VectorXd w = a * q.col(k);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j <= k; ++j) {
        double c = q.col(j).dot(w);
        h(j, k) += c;
        w -= c * q.col(j);
      }
    double beta = w.norm();
    if (beta > rank_tol * scale && beta <= 10 * rank_tol * scale) out.ambiguous = true;
    if (beta <= rank_tol * scale) {
      if (beta > 0.1 * rank_tol * scale) out.ambiguous = true;
      ++k;
      break;
    }
    if (k + 1 < n + 1) {
      h(k + 1, k) = beta;
      q.col(k + 1) = w / beta;
    }
  }
  out.dimension = std::min(k, n);
  Eigen::MatrixXd hk = h.topLeftCorner(out.dimension, out.dimension);
  Eigen::EigenSolver<Eigen::MatrixXd> es(hk, false);
  if (es.info() != Eigen::Success) throw NumericFailure("eigensolver failed on the Krylov restriction");
  for (int i = 0; i < out.dimension; ++i) out.rho = std::max(out.rho, std::abs(es.eigenvalues()(i)));
  return out;
}

std::vector<ComplexVector> numeric_generalized_eigenspace(const Matrix& m, Complex mu, int dim) {
  const int n = m.rows();
  if (dim <= 0) return {};
  if (dim > n) throw PreconditionError("eigenspace dimension exceeds matrix size");
  CMatrix shifted = to_complex(m) - mu * CMatrix::Identity(n, n);
  CMatrix power = CMatrix::Identity(n, n);
  for (int k = 0; k < dim; ++k) power = power * shifted;
  Eigen::JacobiSVD<CMatrix> svd(power, Eigen::ComputeFullV);
  std::vector<ComplexVector> out;
  for (int c = n - dim; c < n; ++c) {
    ComplexVector v(n);
    for (int i = 0; i < n; ++i) v[i] = svd.matrixV()(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pfcone::oracle
