#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfcone/oracle/eigen.hpp"
#include "pfcone/spectral.hpp"

namespace pfcone {

// Result of (lambda I - P) x = b, x >= 0.
struct SolveReport1 {
  bool solvable = false;
  std::optional<Vector> x0;  // the minimal solution, support = least initial superset of supp(b)
  bool unique = false;
  std::vector<int> eigen_freedom;  // distinguished classes of radius lambda (solvable case)
  std::string fired_condition;     // "g" when solvable, "h" otherwise
  std::optional<int> witness_class;  // distinguished class of radius >= lambda reaching supp(b)
  Scalar rho_b;
  Scalar residual_norm;
};

// Every class with access to supp(b) has radius < lambda. Pre: lambda > 0.
bool solvable1(const Analysis& a, const Scalar& lambda, const Vector& b);

SolveReport1 solve1(const Analysis& a, const Scalar& lambda, const Vector& b);

// Solution of (lambda I - P_II) y = b_I on the least initial superset I of
// supp(b), scattered back with zeros. Pre: every class in I has radius < lambda.
Vector restricted_solve(const Analysis& a, const Scalar& lambda, const Vector& b);

// y_m = sum_{j=0..m} lambda^{-j-1} P^j b.
Vector neumann_partial(const NonnegMatrix& p, const Scalar& lambda, const Vector& b, int m);

enum class Verdict { True, False, Indeterminate };
const char* verdict_name(Verdict v);

// Generalized eigenspace of P^T at one eigenvalue mu of P. Bases are exact
// for rational mu and numeric (dimension = algebraic multiplicity) otherwise.
struct TransposeEigenspace {
  oracle::Complex mu;
  std::optional<mpq_class> exact_mu;
  bool distinguished = false;  // mu is a distinguished eigenvalue of P
  std::vector<Vector> exact_basis;
  std::vector<oracle::ComplexVector> numeric_basis;
  IndexSet support;  // union of supports over the whole eigenspace
};

// Depends only on P, so it is computed once per matrix. With
// distinguished_only the other eigenvalues are skipped.
std::vector<TransposeEigenspace> transpose_eigenspaces(const Analysis& a, bool distinguished_only);

bool condition_g(const Analysis& a, const Scalar& lambda, const Vector& b);
// Returns the witness distinguished class when (h) fails.
bool condition_h(const Analysis& a, const Scalar& lambda, const Vector& b, std::optional<int>* witness = nullptr);
bool condition_j(const Analysis& a, const std::vector<TransposeEigenspace>& spaces, const Scalar& lambda, const Vector& b);
// Exact feasibility of {x >= 0 : (lambda I - P) x = b}. Rational mode only.
bool lp_solvable1(const Analysis& a, const Scalar& lambda, const Vector& b, Vector* witness = nullptr);

struct Conditions31 {
  bool b = false, e = false, f = false, g = false, h = false, i = false, j = false;
  Verdict c = Verdict::Indeterminate, d = Verdict::Indeterminate;
  // All decided conditions agree; indeterminate verdicts are excluded.
  // false signals an internal inconsistency between independent routes.
  bool consistent = false;
};

// Evaluates every condition independently: (b) by local_rho, (g)/(h)
// combinatorially, (c)/(d) by iterating the series in floating point, and
// (e)/(f)/(i)/(j) from generalized eigenvectors of the transpose.
// Pre: lambda > 0, b != 0.
Conditions31 conditions_report_3_1(const Analysis& a, const Scalar& lambda, const Vector& b);

// {i : every class with access to i has radius < lambda}.
IndexSet solvable_set1(const Analysis& a, const Scalar& lambda);

}  // namespace pfcone
