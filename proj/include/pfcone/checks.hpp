#pragma once

#include <string>
#include <vector>

#include "pfcone/io.hpp"

namespace pfcone {

// Outcome of a property suite on one matrix. The payload always carries
// "pass" and "cases", plus "counterexamples" (at most ten) when it fails.
struct PropertyResult {
  bool pass = true;
  int cases = 0;
  Json payload;
};

// Probe right-hand sides: every unit vector and the all-ones vector.
std::vector<Vector> probe_vectors(int n, Mode mode);

// Type-one solvability: combinatorial verdicts (accessor radii, the
// distinguished-class test, the transpose-eigenvector supports) against the
// exact LP, for lambda at every class radius and one third either side.
PropertyResult check_type1_equivalence(const Analysis& a);
// Type-two solvability with lambda above rho_b: the combinatorial test
// against the exact LP, and the constructed solution.
PropertyResult check_type2_above(const Analysis& a);
// The face generated by K and (P - rho I)K is spanned by classes strictly
// accessing a basic class; trace-down witnesses verify. Rational mode.
PropertyResult check_critical_face(const Analysis& a);
// For rational lambda strictly between the subcritical eigenvalue and rho,
// the face probe equals the classes with access to a basic class.
PropertyResult check_subcritical_face(const Analysis& a);
// rho in Sigma1: basic classes final == LP == eigen-face cover. Rational mode.
PropertyResult check_sigma1_attainment(const Analysis& a);
// The three eigencone conditions agree. Rational mode.
PropertyResult check_eigencone_equivalence(const Analysis& a);
// m_observed <= ord <= index for every probe vector.
PropertyResult check_alternating_bounds(const Analysis& a);
// Inclusion chain probe set <= J \ T <= {i in J : sp(e_i) <= (rho, nu - 1)}
// where J is the access set of the basic classes and T the vertices reached
// from basic classes distinguished for the transpose. Reports the gap.
PropertyResult check_critical_face_gap(const Analysis& a);

// Dispatch by property id: thm3.1, cor4.2, thm4.13, cor4.20, thm5.10,
// thm5.11, cor6.4, cor4.8-gap. Throws InputError for other ids.
PropertyResult check_property(const std::string& id, const Analysis& a);
const std::vector<std::string>& property_ids();

}  // namespace pfcone
