#include "pfcone/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "pfcone/error.hpp"

namespace pfcone {

const char* mode_name(Mode m) { return m == Mode::Rational ? "rational" : "float"; }

namespace {

[[noreturn]] void mismatch() { throw ModeMismatch("rational and float scalars mixed in one operation"); }

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Exact value of a decimal literal: [sign] digits [. digits] [e [sign] digits].
mpq_class parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string int_part, frac_part;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_part += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_part += text[i++];
  }
  if (int_part.empty() && frac_part.empty()) throw InputError("not a number: '" + text + "'");
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    std::string digits = text.substr(i);
    if (!is_digits(digits) || digits.size() > 6) throw InputError("bad exponent in '" + text + "'");
    exponent = std::stol(digits);
    if (exp_negative) exponent = -exponent;
    i = text.size();
  }
  if (i != text.size()) throw InputError("not a number: '" + text + "'");
  mpz_class mant(int_part + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class r = exponent >= 0 ? mpq_class(mant * scale) : mpq_class(mant, scale);
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

mpq_class parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  std::string num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
  if (!is_digits(num_digits) || !is_digits(den)) throw InputError("bad rational literal '" + text + "'");
  mpz_class p(num_digits, 10), q(den, 10);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  if (!num.empty() && num[0] == '-') p = -p;
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar Scalar::from_int(long k, Mode m) {
  return m == Mode::Rational ? Scalar(mpq_class(k)) : Scalar(static_cast<double>(k));
}

Scalar Scalar::parse(const std::string& text, Mode m) {
  mpq_class r = parse_rational(text);
  if (m == Mode::Rational) return Scalar(r);
  if (text.find('/') != std::string::npos) return Scalar(r.get_d());
  // Decimal text goes through the correctly rounded library conversion.
  double d = 0;
  auto [ptr, ec] = std::from_chars(text.data() + (text[0] == '+' ? 1 : 0), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InputError("not a float: '" + text + "'");
  return Scalar(d);
}

const mpq_class& Scalar::q() const {
  if (!is_rational()) throw ModeMismatch("rational value requested from a float scalar");
  return std::get<mpq_class>(v_);
}

double Scalar::d() const {
  if (is_rational()) throw ModeMismatch("float value requested from a rational scalar");
  return std::get<double>(v_);
}

double Scalar::to_double() const { return is_rational() ? std::get<mpq_class>(v_).get_d() : std::get<double>(v_); }

Scalar Scalar::to_mode(Mode m) const {
  if (m == mode()) return *this;
  if (m == Mode::Float) return Scalar(to_double());
  double d = std::get<double>(v_);
  if (!std::isfinite(d)) throw InputError("non-finite float has no rational value");
  return Scalar(mpq_class(d));
}

int Scalar::sign() const {
  if (is_rational()) return sgn(std::get<mpq_class>(v_));
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(-std::get<double>(v_));
}

#define PFCONE_SCALAR_OP(OP)                                                     \
  Scalar& Scalar::operator OP(const Scalar& o) {                                 \
    if (v_.index() != o.v_.index()) mismatch();                                  \
    if (is_rational())                                                           \
      std::get<mpq_class>(v_) OP std::get<mpq_class>(o.v_);                     \
    else                                                                         \
      std::get<double>(v_) OP std::get<double>(o.v_);                            \
    return *this;                                                                \
  }
PFCONE_SCALAR_OP(+=)
PFCONE_SCALAR_OP(-=)
PFCONE_SCALAR_OP(*=)
#undef PFCONE_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch();
  if (is_rational()) {
    if (sgn(std::get<mpq_class>(o.v_)) == 0) throw NumericFailure("division by exact zero");
    std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
  } else {
    std::get<double>(v_) /= std::get<double>(o.v_);
  }
  return *this;
}

int cmp(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch();
  if (a.is_rational()) {
    int c = mpq_cmp(std::get<mpq_class>(a.v_).get_mpq_t(), std::get<mpq_class>(b.v_).get_mpq_t());
    return (c > 0) - (c < 0);
  }
  double x = std::get<double>(a.v_), y = std::get<double>(b.v_);
  return (x > y) - (x < y);
}

std::string Scalar::str() const {
  if (is_rational()) return std::get<mpq_class>(v_).get_str();
  double d = std::get<double>(v_);
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

int compare_values(const Scalar& a, const Scalar& b, double tol) {
  if (a.mode() != b.mode()) mismatch();
  if (a.is_rational()) return cmp(a, b);
  double x = a.d(), y = b.d();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= tol * scale) return 0;
  return x < y ? -1 : 1;
}

std::vector<mpq_class> rational_convergents(double x, int max_terms, long max_den) {
  std::vector<mpq_class> out;
  if (!std::isfinite(x)) return out;
  double fl = std::floor(x);
  mpz_class h_prev = 1, h = mpz_class(fl), k_prev = 0, k = 1;
  double frac = x - fl;
  out.emplace_back(h, k);
  for (int t = 1; t < max_terms && frac > 1e-15; ++t) {
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    mpz_class az(a);
    mpz_class h_next = az * h + h_prev, k_next = az * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (k > max_den) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
  }
  return out;
}

void Tolerance::validate() const {
  if (!(eq_tol > 0) || !(eig_tol > 0) || power_iters <= 0)
    throw PreconditionError("tolerances and iteration limits must be strictly positive");
}

}  // namespace pfcone
