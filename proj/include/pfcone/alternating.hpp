#pragma once

#include <optional>
#include <string>

#include "pfcone/spectral.hpp"

namespace pfcone {

// A = shift I - P.
struct ZMatrix {
  Scalar shift;
  NonnegMatrix p;
};

enum class AltKind { Finite, AtLeast, InfiniteCertified };
const char* alt_kind_name(AltKind k);

// Finite: length k, i.e. w_1..w_{k-1} are nonzero and nonnegative, w_k is
// nonnegative and w_{k+1} is not (or w_k = 0). AtLeast: max_steps iterates
// passed without failure. InfiniteCertified: x is a nonnegative eigenvector
// of P with eigenvalue above the shift.
struct AltResult {
  AltKind kind = AltKind::Finite;
  int length = 0;
  int iterates_checked = 0;
};

// Iterates w_r = (P - shift I)^r x. Pre: x != 0.
AltResult alt_length(const ZMatrix& z, const Vector& x, int max_steps, const Tolerance& tol = {});

// shift < rho(P); the witness is a nonnegative rho(P)-eigenvector.
struct InfiniteWitness {
  bool exists = false;
  std::optional<Vector> witness;
};
InfiniteWitness exists_infinite(const ZMatrix& z, const Tolerance& tol = {});

// shift >= rho(P), i.e. every alternating sequence is finite.
bool is_m_matrix(const ZMatrix& z, const Tolerance& tol = {});

struct BoundCheck {
  int m_observed = 0;
  int ord = 0;
  int nu = 0;
  // ord minus the largest order among peripheral components other than
  // rho_x; absent when there are none or the decomposition is ambiguous.
  std::optional<int> gamma_bound;
  bool holds = false;  // m <= ord <= nu and m <= gamma_bound when present
};

// Pre: x != 0.
BoundCheck bound_check_6_1(const Analysis& a, const Vector& x);

}  // namespace pfcone
