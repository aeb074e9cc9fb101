#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfcone/spectral.hpp"

namespace pfcone {

// r(x) <= rho_x <= R(x). R is absent when it is infinite, which happens
// exactly when supp(Px) is not inside supp(x).
struct CWReport {
  Scalar r_lower;
  std::optional<Scalar> r_upper;
  Scalar rho_x;
};

// Pre: x != 0.
CWReport cw_numbers(const Analysis& a, const Vector& x);

// Extrema of the four Collatz-Wielandt sets. The first three are always
// attained on the orthant; sup_omega1_witness is the LP search for a
// positive x with P x >= sup_omega1 x.
struct CWSets {
  Scalar sup_omega;
  Scalar inf_sigma;
  Scalar sup_omega1;
  Scalar inf_sigma1;
  bool inf_sigma1_attained = false;
  std::optional<Vector> sup_omega1_witness;
};

CWSets cw_sets(const Analysis& a);

// Every basic class is final.
bool rho_in_sigma1(const Analysis& a);

// I1 = classes with access to a distinguished basic class, I2 = classes not
// accessed by any basic class. rho lies in Sigma1 iff their union is all of
// {0..n-1}.
bool eigen_face_covers(const Analysis& a);

// Exact LP: exists x >= 1 with P x <= rho x. Pre: rational mode.
bool lp_rho_in_sigma1(const Analysis& a);

// x = x1 + x2 with P x1 = rho_x x1, rho_{x2} < rho_x and R(x2) <= rho_x.
// Pre: (rho_x I - P) x >= 0.
std::pair<Vector, Vector> decompose_5_4(const Analysis& a, const Vector& x);

// x = x1 - x2 with x1, x2 >= 0, P x1 = rho_x x1, rho_{x2} < rho_x.
// Pre: ord(x) = 1 and (P - rho_x I) x >= 0.
std::pair<Vector, Vector> decompose_5_13(const Analysis& a, const Vector& x);

// (a) rho(P^T) lies in Sigma1(P^T); (b) every nonnegative generalized
// rho-eigenvector is an eigenvector and no distinguished eigenvalue of P_JJ
// lies below rho, J = classes with access to a basic class; (c) K and
// (P - rho I)K meet only at 0. Pre: rational mode.
struct Check511 {
  bool a = false, b = false, c = false;
};
Check511 check_5_11(const Analysis& a);

struct Boundary52 {
  Vector b;  // (R(x) I - P) x
  bool on_boundary = false;
  bool rho_below_r_upper = false;
  bool generates_support = false;  // least initial superset of supp(b) equals supp(x)
  bool strict_iff = false;         // the two flags above agree
};
// Pre: R(x) finite.
Boundary52 boundary_5_2(const Analysis& a, const Vector& x);

// lim (P / rho_x)^k x exists. Decided from the exact local minimal
// polynomial: rho_x must be a simple root and the only root of modulus
// rho_x. The binary64 orbit is iterated alongside as evidence only.
struct PowerLimit {
  bool exists = false;
  bool orbit_settled = false;
  int orbit_steps = 0;
};
// Pre: rho_x > 0.
PowerLimit power_limit_5_6(const Analysis& a, const Vector& x);

}  // namespace pfcone
