#pragma once

#include <functional>
#include <vector>

#include "pfcone/classes.hpp"
#include "pfcone/matrix.hpp"

namespace pfcone {

// Perron root and positive eigenvector of an irreducible nonnegative block.
struct PerronRoot {
  Scalar root;
  Vector vector;  // strictly positive, max entry 1
  int iterations = 0;
};

// 1x1 blocks and constant row sums are read off exactly. Otherwise power
// iteration on B + I runs until the Collatz-Wielandt bracket
// min_i (Bv)_i/v_i <= rho <= max_i (Bv)_i/v_i is narrower than eig_tol. In
// rational mode the float estimate must then be recovered as an exact root
// with an exactly positive null vector of (rI - B); otherwise ModeMismatch
// is thrown (the radius is irrational and float mode is required).
PerronRoot perron_root(const Matrix& block, const Tolerance& tol);

// Everything downstream modules need about P: classes, per-class radii and
// Perron vectors, rho(P) and the taxonomy flags.
struct Analysis {
  NonnegMatrix p;
  ClassAnalysis classes;
  std::vector<Scalar> radii;
  std::vector<Vector> perron;  // per class, indexed like classes.classes[c]
  Scalar rho;
  ClassTaxonomy taxonomy;
  Tolerance tol;

  int n() const { return p.n(); }
  Mode mode() const { return p.mode(); }
  int num_classes() const { return classes.size(); }
  // compare_values with eig_tol: exact for rational radii.
  int compare_radius(const Scalar& a, const Scalar& b) const { return compare_values(a, b, tol.eig_tol); }
  bool radius_equals(int cls, const Scalar& lambda) const { return compare_radius(radii[cls], lambda) == 0; }
  Scalar scalar(long k) const { return Scalar::from_int(k, mode()); }
};

Analysis analyze(const NonnegMatrix& p, const Tolerance& tol = {});

std::vector<Scalar> class_radii(const NonnegMatrix& p, const ClassAnalysis& a, const Tolerance& tol = {});

// max radius over classes with access to supp(x); 0 for x = 0.
Scalar local_rho(const Analysis& a, const Vector& x);

// ||P^m x||_inf^{1/m}, accumulated through per-step log-norms. Pre: x != 0.
double local_rho_estimate(const NonnegMatrix& p, const Vector& x, int m);

// Radii of distinguished classes, ascending, duplicates removed.
std::vector<Scalar> distinguished_eigenvalues(const Analysis& a);
bool is_distinguished_eigenvalue(const Analysis& a, const Scalar& lambda);
// Distinguished classes whose radius equals lambda.
std::vector<int> distinguished_classes_for(const Analysis& a, const Scalar& lambda);

// Frobenius-Victory eigenvector of a distinguished class: P x = radius x and
// supp(x) is the set of vertices with access to the class.
Vector fv_eigenvector(const Analysis& a, int cls);

// Length of the longest access chain made of classes satisfying `pick`.
int longest_chain(const Analysis& a, const std::function<bool(int)>& pick);

// (rho_x, ord_x). ord_x is the longest chain of radius-rho_x classes inside
// the least initial subset containing supp(x).
SpectralPair ord_and_pair(const Analysis& a, const Vector& x);

// Longest chain of classes of radius lambda (0 when lambda is no class
// radius). This is the index nu_lambda(P) at lambda = rho(P); for smaller
// lambda it is the generic value and an upper bound.
int index_nu(const Analysis& a, const Scalar& lambda);

// Vertices i such that every class with access to i has radius <= lambda.
IndexSet bounded_access_set(const Analysis& a, const Scalar& lambda);

// nu_lambda(P_JJ) with J = bounded_access_set(lambda). Pre: lambda distinguished.
int m_lambda(const Analysis& a, const Scalar& lambda);

}  // namespace pfcone
