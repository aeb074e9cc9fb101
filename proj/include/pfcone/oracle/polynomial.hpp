#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "pfcone/matrix.hpp"

namespace pfcone::oracle {

// Exact univariate polynomial, coefficients in ascending degree, no trailing
// zeros. The zero polynomial is empty.
using Poly = std::vector<mpq_class>;
using QMatrix = std::vector<std::vector<mpq_class>>;

int degree(const Poly& p);
Poly trimmed(Poly p);
Poly monic(const Poly& p);
Poly derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// a = q b + r with deg r < deg b. Pre: b != 0.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_div_exact(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
mpq_class evaluate(const Poly& p, const mpq_class& t);

// Float entries convert to their exact dyadic values.
QMatrix to_qmatrix(const Matrix& m);

// det(tI - A), via reduction to Hessenberg form by exact similarity.
Poly charpoly(const QMatrix& a);

// Monic polynomial q of least degree with q(A) x = 0; {1} when x = 0.
Poly local_minpoly(const QMatrix& a, const std::vector<mpq_class>& x);

// Yun's algorithm: p = prod f_i^{mult_i} with each f_i squarefree, monic and
// pairwise coprime. Pre: p monic.
std::vector<std::pair<Poly, int>> squarefree(const Poly& p);

// Exact structure at a rational eigenvalue mu. m is converted to rational.
// Basis of N((m - mu I)^n).
std::vector<Vector> generalized_eigenspace(const Matrix& m, const mpq_class& mu);
// Smallest k with N((m - mu I)^k) = N((m - mu I)^{k+1}); 0 when mu is no eigenvalue.
int eigen_index(const Matrix& m, const mpq_class& mu);
// Order of the mu-component of x: least k with (m - mu I)^k x in R((m - mu I)^n).
int component_order(const Matrix& m, const Vector& x, const mpq_class& mu);

}  // namespace pfcone::oracle
