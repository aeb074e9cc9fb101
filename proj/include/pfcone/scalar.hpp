#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

namespace pfcone {

enum class Mode { Rational, Float };

const char* mode_name(Mode m);

// A real number that is either an exact rational or a binary64 float.
// Arithmetic between the two kinds throws ModeMismatch.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Scalar(double d) : v_(d) {}

  static Scalar from_int(long k, Mode m);
  static Scalar zero(Mode m) { return from_int(0, m); }
  static Scalar one(Mode m) { return from_int(1, m); }
  // Parses "p/q", integers and decimals ("1.25e-3"). Decimals are exact in
  // rational mode.
  static Scalar parse(const std::string& text, Mode m);

  Mode mode() const { return v_.index() == 0 ? Mode::Rational : Mode::Float; }
  bool is_rational() const { return v_.index() == 0; }
  const mpq_class& q() const;
  double d() const;
  double to_double() const;
  // Float to rational is exact (dyadic); rational to float rounds.
  Scalar to_mode(Mode m) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact comparison of values of the same mode.
  friend int cmp(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

  // "p/q" (or "p" when q = 1) for rationals; shortest round-trip form for floats.
  std::string str() const;

 private:
  std::variant<mpq_class, double> v_;
};

Scalar abs(const Scalar& s);
const Scalar& max(const Scalar& a, const Scalar& b);
const Scalar& min(const Scalar& a, const Scalar& b);

// Three-way comparison: exact when both are rational, otherwise a and b are
// equal when |a-b| <= tol * max(1, |a|, |b|).
int compare_values(const Scalar& a, const Scalar& b, double tol);

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<mpq_class> rational_convergents(double x, int max_terms = 40, long max_den = 1000000000L);

struct Tolerance {
  double eq_tol = 1e-9;
  double eig_tol = 1e-8;
  int power_iters = 10000;

  void validate() const;
};

}  // namespace pfcone
