#include "pfcone/linalg.hpp"

#include <cmath>

#include "pfcone/error.hpp"

namespace pfcone {

namespace {

double max_abs(const Matrix& a) {
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j).to_double()));
  return m;
}

// Reduces the first `limit` columns of a in place; returns pivot columns.
std::vector<int> reduce_in_place(Matrix& a, int limit, double pivot_tol) {
  const bool exact = a.mode() == Mode::Rational;
  const double threshold = exact ? 0.0 : pivot_tol * std::max(1.0, max_abs(a));
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < limit && row < a.rows(); ++col) {
    int best = -1;
    double best_mag = threshold;
    for (int i = row; i < a.rows(); ++i) {
      if (exact) {
        if (!a(i, col).is_zero()) {
          best = i;
          break;
        }
      } else {
        double mag = std::fabs(a(i, col).d());
        if (mag > best_mag) {
          best = i;
          best_mag = mag;
        }
      }
    }
    if (best < 0) {
      if (!exact)
        for (int i = row; i < a.rows(); ++i) a(i, col) = Scalar(0.0);
      continue;
    }
    if (best != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(best, j));
    Scalar inv = Scalar::one(a.mode()) / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      if (!exact) a(i, col) = Scalar(0.0);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix augment(const Matrix& a, const Vector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InputError("right-hand side length mismatch");
  Matrix m(a.rows(), a.cols() + 1, a.mode());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  return m;
}

}  // namespace

RowEchelon row_reduce(const Matrix& a, double pivot_tol) {
  RowEchelon e{a, {}};
  e.pivots = reduce_in_place(e.reduced, a.cols(), pivot_tol);
  return e;
}

int rank(const Matrix& a, double pivot_tol) { return static_cast<int>(row_reduce(a, pivot_tol).pivots.size()); }

std::vector<Vector> nullspace(const Matrix& a, double pivot_tol) {
  RowEchelon e = row_reduce(a, pivot_tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.cols(), a.mode());
    v[free] = Scalar::one(a.mode());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b, double pivot_tol) {
  Matrix m = augment(a, b);
  std::vector<int> pivots = reduce_in_place(m, a.cols(), pivot_tol);
  const int r = static_cast<int>(pivots.size());
  const double scale = std::max(1.0, max_abs(m));
  for (int i = r; i < m.rows(); ++i) {
    const Scalar& rhs = m(i, a.cols());
    if (m.mode() == Mode::Rational ? !rhs.is_zero() : std::fabs(rhs.d()) > pivot_tol * scale * 1e3) return std::nullopt;
  }
  Vector x = zero_vector(a.cols(), a.mode());
  for (int i = 0; i < r; ++i) x[pivots[i]] = m(i, a.cols());
  return x;
}

std::optional<Vector> solve_square(const Matrix& a, const Vector& b, double pivot_tol) {
  if (a.rows() != a.cols()) throw InputError("solve_square needs a square matrix");
  Matrix m = augment(a, b);
  std::vector<int> pivots = reduce_in_place(m, a.cols(), pivot_tol);
  if (static_cast<int>(pivots.size()) < a.cols()) return std::nullopt;
  Vector x(a.cols(), Scalar::zero(a.mode()));
  for (int i = 0; i < a.cols(); ++i) x[i] = m(i, a.cols());
  return x;
}

Scalar determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant needs a square matrix");
  Matrix m = a;
  const int n = a.rows();
  Scalar det = Scalar::one(a.mode());
  for (int col = 0; col < n; ++col) {
    int best = -1;
    double best_mag = -1;
    for (int i = col; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      if (a.mode() == Mode::Rational) {
        best = i;
        break;
      }
      double mag = std::fabs(m(i, col).d());
      if (mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best < 0) return Scalar::zero(a.mode());
    if (best != col) {
      for (int j = 0; j < n; ++j) std::swap(m(col, j), m(best, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Scalar f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a, double pivot_tol) {
  if (a.rows() != a.cols()) throw InputError("inverse needs a square matrix");
  const int n = a.rows();
  Matrix m(n, 2 * n, a.mode());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Scalar::one(a.mode());
  }
  if (static_cast<int>(reduce_in_place(m, n, pivot_tol).size()) < n) return std::nullopt;
  Matrix inv(n, n, a.mode());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

Matrix adjugate(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("adjugate needs a square matrix");
  const int n = a.rows();
  if (n == 1) return Matrix::identity(1, a.mode());
  Scalar det = determinant(a);
  if (!det.is_zero()) {
    if (auto inv = inverse(a)) return scaled(*inv, det);
  }
  Matrix adj(n, n, a.mode());
  IndexSet all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IndexSet rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Scalar minor = determinant(submatrix(a, rows, cols));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  return adj;
}

}  // namespace pfcone
