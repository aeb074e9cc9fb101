#pragma once

#include <vector>

#include "pfcone/scalar.hpp"

namespace pfcone {

using Vector = std::vector<Scalar>;
// Sorted, duplicate-free, 0-based vertex indices.
using IndexSet = std::vector<int>;

// Dense row-major matrix whose entries all share one mode.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Mode mode);
  static Matrix identity(int n, Mode mode);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Mode mode);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Mode mode() const { return mode_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix to_mode(Mode m) const;
  bool operator==(const Matrix& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Mode mode_ = Mode::Rational;
  std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix scaled(const Matrix& a, const Scalar& s);
// a + s*I.
Matrix shift_diagonal(const Matrix& a, const Scalar& s);
Matrix matrix_power(const Matrix& a, int k);
Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

// Square matrix with every entry >= 0. Negative entries are input errors,
// never clamped; float entries must also be finite.
class NonnegMatrix {
 public:
  explicit NonnegMatrix(Matrix m);
  static NonnegMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, Mode mode) {
    return NonnegMatrix(Matrix::from_rows(rows, mode));
  }

  int n() const { return m_.rows(); }
  Mode mode() const { return m_.mode(); }
  const Matrix& mat() const { return m_; }
  const Scalar& operator()(int i, int j) const { return m_(i, j); }

  NonnegMatrix transpose() const { return NonnegMatrix(m_.transpose()); }
  NonnegMatrix to_mode(Mode m) const { return NonnegMatrix(m_.to_mode(m)); }
  bool is_zero() const;

 private:
  Matrix m_;
};

Vector zero_vector(int n, Mode mode);
Vector unit_vector(int n, int i, Mode mode);
Vector vector_to_mode(const Vector& v, Mode mode);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
Scalar dot(const Vector& a, const Vector& b);
Scalar norm_inf(const Vector& v, Mode mode);
bool is_nonneg(const Vector& v);
bool is_zero(const Vector& v);

// Entries of v at the given indices, and the inverse scatter into length n.
Vector gather(const Vector& v, const IndexSet& idx);
Vector scatter(const Vector& part, const IndexSet& idx, int n, Mode mode);

// {i : v_i != 0}; in float mode only an exact zero is outside the support.
IndexSet support(const Vector& v);
IndexSet complement(const IndexSet& s, int n);
bool is_subset(const IndexSet& a, const IndexSet& b);

// Throws InputError unless v has length n, the given mode, and (for cone
// vectors) no negative entry.
void check_vector(const Vector& v, int n, Mode mode, bool cone, const char* what);

// (rho, ord) ordered lexicographically. ord = 0 exactly for the zero vector.
struct SpectralPair {
  Scalar rho;
  int ord = 0;
};

// a precedes-or-equals b: a.rho < b.rho, or equal rho and a.ord <= b.ord.
// Radii are compared with compare_values(tol).
bool lex_leq(const SpectralPair& a, const SpectralPair& b, double tol = 0.0);

// (I+P)^{n-1} x, computed densely. Its support is the smallest initial subset
// containing supp(x); see smallest_initial_superset for the cheap form.
Vector hat_vector(const NonnegMatrix& p, const Vector& x);

}  // namespace pfcone
