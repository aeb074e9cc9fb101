#pragma once

#include <doctest.h>

#include <ostream>
#include <random>
#include <string>

#include "fuzz.hpp"
#include "pfcone/io.hpp"
#include "pfcone/matrix.hpp"
#include "pfcone/scalar.hpp"

namespace pfcone {

// Lets doctest print scalars and vectors in failed assertions.
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }
inline std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << dump(vector_to_json(v)); }

}  // namespace pfcone

namespace pfcone::test {

// Square matrix from a JSON row list, e.g. mat("[[1,1],[0,1]]").
inline NonnegMatrix mat(const std::string& rows, Mode mode = Mode::Rational) {
  Json r = parse_json_exact(rows);
  return matrix_from_json(Json{{"n", static_cast<int>(r.size())}, {"entries", r}}, mode);
}

inline Vector vec(const std::string& entries, Mode mode = Mode::Rational) {
  return vector_from_json(Json{{"entries", parse_json_exact(entries)}}, mode);
}

inline Scalar num(const std::string& text, Mode mode = Mode::Rational) { return Scalar::parse(text, mode); }

inline IndexSet ids(std::initializer_list<int> v) { return IndexSet(v); }

// Fixed seeds keep every property test reproducible.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

}  // namespace pfcone::test
