#pragma once

#include <gmpxx.h>

#include <vector>

#include "pfcone/matrix.hpp"

namespace pfcone::oracle {

enum class Sense { Eq, Ge, Le };

struct Constraint {
  std::vector<mpq_class> coeffs;
  Sense sense = Sense::Eq;
  mpq_class rhs;
};

// Feasibility of {x >= 0 : every constraint holds}. Strict conditions are
// expressed by the caller through homogeneity, e.g. "some x > 0" as x >= 1.
struct LPProblem {
  int num_vars = 0;
  std::vector<Constraint> constraints;

  explicit LPProblem(int vars = 0) : num_vars(vars) {}
  void add(std::vector<mpq_class> coeffs, Sense sense, mpq_class rhs);
  // Rows of m (rational or float, converted exactly) as constraints m x (sense) rhs.
  void add_rows(const Matrix& m, Sense sense, const Vector& rhs);
  // x_i >= value
  void add_lower_bound(int i, const mpq_class& value);
};

struct LPResult {
  bool feasible = false;
  std::vector<mpq_class> witness;  // set when feasible
  long pivots = 0;
};

// Exact phase-one simplex over GMP rationals with Bland's rule. A returned
// witness has been re-checked against every constraint.
LPResult lp_feasible(const LPProblem& p);

bool satisfies(const LPProblem& p, const std::vector<mpq_class>& x);

mpq_class to_rational(const Scalar& s);
Vector to_vector(const std::vector<mpq_class>& x, Mode mode);

}  // namespace pfcone::oracle
