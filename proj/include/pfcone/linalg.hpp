#pragma once

#include <optional>

#include "pfcone/matrix.hpp"

namespace pfcone {

// Dense elimination on Scalar matrices. Rational inputs are handled exactly;
// float inputs use partial pivoting and treat a pivot as zero when it is at
// most pivot_tol times the largest entry magnitude.
inline constexpr double kDefaultPivotTol = 1e-12;

struct RowEchelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(const Matrix& a, double pivot_tol = kDefaultPivotTol);
int rank(const Matrix& a, double pivot_tol = kDefaultPivotTol);
// Basis of {x : a x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a, double pivot_tol = kDefaultPivotTol);

// Unique solution of a square system, or nullopt when a is singular.
std::optional<Vector> solve_square(const Matrix& a, const Vector& b, double pivot_tol = kDefaultPivotTol);
// Some solution of a (possibly rectangular) system, or nullopt when inconsistent.
std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b, double pivot_tol = kDefaultPivotTol);

Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a, double pivot_tol = kDefaultPivotTol);
// Classical adjoint; cofactor expansion when a is singular, det * inverse otherwise.
Matrix adjugate(const Matrix& a);

}  // namespace pfcone
