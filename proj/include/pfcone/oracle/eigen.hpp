#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "pfcone/matrix.hpp"
#include "pfcone/oracle/polynomial.hpp"

namespace pfcone::oracle {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct Root {
  Complex value;
  int multiplicity = 1;
  std::optional<mpq_class> exact;  // set for rational roots, decided exactly
};

// Roots of a nonzero polynomial with multiplicities. Multiplicities come
// from the exact squarefree decomposition; rational roots are found exactly
// and deflated, the rest are companion-matrix eigenvalues polished by Newton
// steps on their squarefree factor. Sorted by decreasing real part, then
// decreasing imaginary part.
std::vector<Root> polynomial_roots(const Poly& p);

// Spectrum of P with multiplicities, from its exact characteristic polynomial.
std::vector<Root> spectrum_roots(const NonnegMatrix& p);

// Full spectrum, one entry per multiplicity. Rational mode uses the exact
// characteristic polynomial; float mode a dense backward-stable eigensolver.
// Imaginary parts below eig_tol * max(1, |lambda|) are snapped to zero.
std::vector<Complex> eig_all(const NonnegMatrix& p, double eig_tol = 1e-8);

// The minimal polynomial of x relative to P and its roots; the roots are
// exactly the eigenvalues whose generalized eigencomponent of x is nonzero,
// and each multiplicity is the order of that component.
struct LocalSpectrum {
  Poly minpoly;
  std::vector<Root> roots;
  double rho = 0;  // max |root|; 0 for x = 0
};
LocalSpectrum local_spectrum(const NonnegMatrix& p, const Vector& x);

struct Component {
  Complex lambda;
  std::optional<mpq_class> exact_lambda;
  int order = 0;
  ComplexVector vector;
  bool merged = false;  // several eigenvalues closer than rank_tol were combined
};

// x = sum of generalized eigenvectors for distinct eigenvalues. Orders are
// exact (minimal-polynomial multiplicities); vectors are computed in floating
// point on the Krylov space of x.
std::vector<Component> decompose_generalized(const NonnegMatrix& p, const Vector& x, double rank_tol = 1e-8);

struct KrylovRho {
  double rho = 0;
  int dimension = 0;
  bool ambiguous = false;  // a rank decision fell within 10x of rank_tol
};

// Spectral radius of P restricted to span{x, Px, P^2 x, ...}. Rational mode
// finds the Krylov dimension exactly; float mode runs Arnoldi with
// reorthogonalization and stops at numerical rank.
KrylovRho krylov_local_rho(const NonnegMatrix& p, const Vector& x, double rank_tol = 1e-8);

// Basis of N((m - mu I)^dim) taken from the dim smallest singular vectors.
// Use when dim (the algebraic multiplicity of mu) is known exactly.
std::vector<ComplexVector> numeric_generalized_eigenspace(const Matrix& m, Complex mu, int dim);

}  // namespace pfcone::oracle
