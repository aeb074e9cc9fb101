#include "pfcone/alternating.hpp"

#include <algorithm>
#include <cmath>

#include "pfcone/error.hpp"
#include "pfcone/oracle/eigen.hpp"

namespace pfcone {

namespace {

enum class Step { Positive, Zero, Fails };

// Classifies an iterate; float entries within eq_tol of zero are snapped.
Step classify_iterate(Vector& w, double eq_tol) {
  bool any = false;
  for (auto& e : w) {
    if (!e.is_rational()) {
      if (std::fabs(e.d()) < eq_tol) e = Scalar(0.0);
      if (e.d() < -eq_tol) return Step::Fails;
    } else if (e.sign() < 0) {
      return Step::Fails;
    }
    if (!e.is_zero()) any = true;
  }
  return any ? Step::Positive : Step::Zero;
}

bool is_eigenvector_above(const ZMatrix& z, const Vector& x, const Tolerance& tol) {
  Vector px = z.p.mat() * x;
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) {
      if (!px[i].is_zero()) return false;
      continue;
    }
    Scalar r = px[i] / x[i];
    if (!ratio) {
      ratio = r;
    } else if (x[i].is_rational() ? r != *ratio : compare_values(r, *ratio, tol.eq_tol) != 0) {
      return false;
    }
  }
  return ratio && *ratio > z.shift;
}

void require_shift(const ZMatrix& z) {
  if (z.shift.mode() != z.p.mode()) throw ModeMismatch("shift has a different numeric mode than P");
}

}  // namespace

const char* alt_kind_name(AltKind k) {
  switch (k) {
    case AltKind::Finite: return "finite";
    case AltKind::AtLeast: return "at_least";
    default: return "infinite_certified";
  }
}

AltResult alt_length(const ZMatrix& z, const Vector& x, int max_steps, const Tolerance& tol) {
  require_shift(z);
  check_vector(x, z.p.n(), z.p.mode(), true, "x");
  if (is_zero(x)) throw PreconditionError("alternating sequences need x != 0");
  if (max_steps < 0) throw PreconditionError("max_steps must be nonnegative");
  AltResult r;
  // Only exact eigenvectors certify an infinite sequence.
  if (z.p.mode() == Mode::Rational && is_eigenvector_above(z, x, tol)) {
    r.kind = AltKind::InfiniteCertified;
    return r;
  }
  Matrix step = shift_diagonal(z.p.mat(), -z.shift);
  Vector w = x;
  for (int k = 1; k <= max_steps; ++k) {
    w = step * w;
    r.iterates_checked = k;
    Step s = classify_iterate(w, tol.eq_tol);
    if (s == Step::Fails) {
      r.length = k - 1;
      return r;
    }
    if (s == Step::Zero) {
      r.length = k;
      return r;
    }
  }
  r.kind = AltKind::AtLeast;
  r.length = max_steps;
  return r;
}

InfiniteWitness exists_infinite(const ZMatrix& z, const Tolerance& tol) {
  require_shift(z);
  Analysis a = analyze(z.p, tol);
  InfiniteWitness w;
  w.exists = a.compare_radius(z.shift, a.rho) < 0;
  if (w.exists) {
    for (int c = 0; c < a.num_classes(); ++c)
      if (a.taxonomy.flags[c].basic && a.taxonomy.flags[c].distinguished) {
        w.witness = fv_eigenvector(a, c);
        break;
      }
    if (!w.witness) throw InternalInconsistency("no distinguished basic class");
  }
  return w;
}

bool is_m_matrix(const ZMatrix& z, const Tolerance& tol) { return !exists_infinite(z, tol).exists; }

BoundCheck bound_check_6_1(const Analysis& a, const Vector& x) {
  check_vector(x, a.n(), a.mode(), true, "x");
  if (is_zero(x)) throw PreconditionError("bound_check_6_1 needs x != 0");
  BoundCheck r;
  SpectralPair sp = ord_and_pair(a, x);
  r.ord = sp.ord;
  r.nu = m_lambda(a, sp.rho);

  const int cap = a.n() + 2;
  Matrix step = shift_diagonal(a.p.mat(), -sp.rho);
  Vector w = x;
  for (int k = 1; k <= cap; ++k) {
    w = step * w;
    Step s = classify_iterate(w, a.tol.eq_tol);
    if (s == Step::Fails) break;
    r.m_observed = k;
    if (s == Step::Zero) break;
  }

  auto comps = oracle::decompose_generalized(a.p, x, a.tol.eig_tol);
  const double rho = sp.rho.to_double();
  const double tol = 1e3 * a.tol.eig_tol * std::max(1.0, rho);
  bool ambiguous = false;
  std::optional<int> worst;
  for (const auto& c : comps) {
    if (c.merged) ambiguous = true;
    bool at_rho = c.exact_lambda && sp.rho.is_rational() ? Scalar(*c.exact_lambda) == sp.rho
                                                         : std::abs(c.lambda - oracle::Complex(rho, 0)) <= tol;
    if (at_rho || std::fabs(std::abs(c.lambda) - rho) > tol) continue;
    worst = std::max(worst.value_or(0), c.order);
  }
  if (worst && !ambiguous) r.gamma_bound = r.ord - *worst;
  r.holds = r.m_observed <= r.ord && r.ord <= r.nu && (!r.gamma_bound || r.m_observed <= *r.gamma_bound);
  return r;
}

}  // namespace pfcone
