#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pfcone/eq_type1.hpp"
#include "pfcone/spectral.hpp"

namespace pfcone {

// Position of lambda relative to rho_b.
enum class Regime { Above, At, Below };
const char* regime_name(Regime r);

// Result of (P - lambda I) x = b, x >= 0.
struct SolveReport2 {
  Regime regime = Regime::Above;
  bool solvable = false;
  std::optional<Vector> x;
  // "cor4_2" (combinatorial, lambda > rho_b), "lp" (exact LP decided),
  // "necessary_violated" (LP infeasible and a necessary condition fails),
  // "zero_rhs" (b = 0, solved by x = 0).
  std::string certificate;
  std::optional<SpectralPair> spectral_pair_of_x;
  Scalar rho_b;
};

// lambda is a distinguished eigenvalue and every class meeting supp(b) has
// access to a lambda-distinguished class. Decides solvability when
// lambda > rho_b.
bool above_test(const Analysis& a, const Scalar& lambda, const Vector& b);

SolveReport2 solvable2(const Analysis& a, const Scalar& lambda, const Vector& b);

// x = alpha u - x0 with u the sum of Frobenius-Victory eigenvectors of the
// lambda-distinguished classes and x0 the minimal solution of
// (lambda I - P) x0 = b. Pre: above_test holds and lambda > rho_b.
Vector solve2_above(const Analysis& a, const Scalar& lambda, const Vector& b);

// Union of classes strictly accessing a semi-distinguished lambda-class.
// Pre: lambda distinguished.
IndexSet necessary_face(const Analysis& a, const Scalar& lambda);

// Union of classes having access to a semi-distinguished lambda-class: the
// support of the cone of nonnegative generalized lambda-eigenvectors.
IndexSet eigencone_support(const Analysis& a, const Scalar& lambda);

// {i : exists x >= 0 with (P - lambda I) x >= 0 and [(P - lambda I) x]_i > 0},
// one exact LP per index. The strict inequality is homogenized to >= 1.
IndexSet solvable_face_probe(const Analysis& a, const Scalar& lambda);

struct Tracedown {
  Vector x;
  Vector b;
};

// Trace-down construction of x >= 0 with (P - rho I) x = b, where b is
// nonzero exactly on the classes strictly accessing alpha.
// Pre: alpha basic and distinguished for the transpose.
Tracedown tracedown_witness(const Analysis& a, int alpha);

struct ResolventSign {
  Verdict inverse_positive = Verdict::Indeterminate;  // (P - lambda I)^{-1} > 0
  bool adjugate_positive = false;                     // adj(lambda I - P) > 0
};

// Exact in rational mode; float mode requires entries above 1e-7 times the
// largest magnitude. Pre: P irreducible.
ResolventSign resolvent_sign(const Analysis& a, const Scalar& lambda);

// Largest real eigenvalue strictly below rho(P); -inf when there is none.
struct SubcriticalWindow {
  double r = -std::numeric_limits<double>::infinity();
  std::optional<mpq_class> exact;
  bool exists() const { return r != -std::numeric_limits<double>::infinity(); }
};
SubcriticalWindow subcritical_window(const Analysis& a);

// Every class meeting supp(b) has access to a basic class.
bool reaches_basic(const Analysis& a, const Vector& b);

struct MembershipS {
  bool in_s1 = false, in_s2 = false, in_s3 = false;
};

// S1: b in (P - lambda I)K and rho_b <= lambda. S2: b = (P - lambda I)x with
// x >= 0 supported on eigencone_support. S3: supp(b) inside that support and
// sp(b) <= (lambda, m_lambda - 1). Pre: lambda distinguished.
MembershipS membership_S(const Analysis& a, const Scalar& lambda, const Vector& b);

// Exact LP: exists x >= 0, (P - lambda I) x = b, x_i = 0 outside `allowed`
// (only when allowed is given).
bool lp_solvable2(const Analysis& a, const Scalar& lambda, const Vector& b, const IndexSet* allowed = nullptr,
                  Vector* witness = nullptr);

}  // namespace pfcone
