#include "pfcone/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfcone/error.hpp"

namespace pfcone {

Matrix::Matrix(int rows, int cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(mode)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

Matrix Matrix::identity(int n, Mode mode) {
  Matrix m(n, n, mode);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Mode mode) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, mode);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].mode() != mode) throw ModeMismatch("matrix entry has the wrong numeric mode");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::to_mode(Mode m) const {
  Matrix t(rows_, cols_, m);
  for (std::size_t k = 0; k < a_.size(); ++k) t.a_[k] = a_[k].to_mode(m);
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && mode_ == o.mode_ && a_ == o.a_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols(), a.mode());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + scaled(b, Scalar::from_int(-1, b.mode())); }

Vector operator*(const Matrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols()) throw InputError("matrix-vector dimension mismatch");
  Vector y(a.rows(), Scalar::zero(a.mode()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

Matrix scaled(const Matrix& a, const Scalar& s) {
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Matrix shift_diagonal(const Matrix& a, const Scalar& s) {
  Matrix c = a;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) c(i, i) += s;
  return c;
}

Matrix matrix_power(const Matrix& a, int k) {
  Matrix result = Matrix::identity(a.rows(), a.mode());
  Matrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), a.mode());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

NonnegMatrix::NonnegMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InputError("matrix must be square");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      const Scalar& v = m_(i, j);
      if (!v.is_rational() && !std::isfinite(v.d()))
        throw InputError("non-finite entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (v.sign() < 0) throw InputError("negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

bool NonnegMatrix::is_zero() const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (!m_(i, j).is_zero()) return false;
  return true;
}

Vector zero_vector(int n, Mode mode) { return Vector(n, Scalar::zero(mode)); }

Vector unit_vector(int n, int i, Mode mode) {
  Vector v = zero_vector(n, mode);
  v.at(i) = Scalar::one(mode);
  return v;
}

Vector vector_to_mode(const Vector& v, Mode mode) {
  Vector w;
  w.reserve(v.size());
  for (const auto& s : v) w.push_back(s.to_mode(mode));
  return w;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector w = v;
  for (auto& e : w) e *= s;
  return w;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw InputError("dot product needs equal nonzero lengths");
  Scalar s = Scalar::zero(a[0].mode());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Scalar norm_inf(const Vector& v, Mode mode) {
  Scalar m = Scalar::zero(mode);
  for (const auto& e : v) {
    Scalar a = abs(e);
    if (a > m) m = a;
  }
  return m;
}

bool is_nonneg(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.sign() >= 0; });
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector gather(const Vector& v, const IndexSet& idx) {
  Vector w;
  w.reserve(idx.size());
  for (int i : idx) w.push_back(v.at(i));
  return w;
}

Vector scatter(const Vector& part, const IndexSet& idx, int n, Mode mode) {
  Vector v = zero_vector(n, mode);
  for (std::size_t k = 0; k < idx.size(); ++k) v.at(idx[k]) = part.at(k);
  return v;
}

IndexSet support(const Vector& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet c;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    while (k < s.size() && s[k] < i) ++k;
    if (k < s.size() && s[k] == i) continue;
    c.push_back(i);
  }
  return c;
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void check_vector(const Vector& v, int n, Mode mode, bool cone, const char* what) {
  if (static_cast<int>(v.size()) != n)
    throw InputError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].mode() != mode) throw ModeMismatch(std::string(what) + " has the wrong numeric mode");
    if (!v[i].is_rational() && !std::isfinite(v[i].d())) throw InputError(std::string(what) + " has a non-finite entry");
    if (cone && v[i].sign() < 0)
      throw InputError(std::string(what) + " has a negative entry at index " + std::to_string(i));
  }
}

bool lex_leq(const SpectralPair& a, const SpectralPair& b, double tol) {
  int c = compare_values(a.rho, b.rho, tol);
  if (c != 0) return c < 0;
  return a.ord <= b.ord;
}

Vector hat_vector(const NonnegMatrix& p, const Vector& x) {
  check_vector(x, p.n(), p.mode(), true, "x");
  Matrix step = shift_diagonal(p.mat(), Scalar::one(p.mode()));
  Vector v = x;
  for (int k = 0; k + 1 < p.n(); ++k) v = step * v;
  return v;
}

}  // namespace pfcone
