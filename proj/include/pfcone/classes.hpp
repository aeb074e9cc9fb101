#pragma once

#include <vector>

#include "pfcone/matrix.hpp"

namespace pfcone {

// Strongly connected components of the digraph of P (edge i -> j iff
// P_ij != 0), listed in a topological order where every class precedes the
// classes it has access to. Ties are broken by the smallest vertex, so the
// order is a deterministic Frobenius normal form.
struct ClassAnalysis {
  int n = 0;
  std::vector<IndexSet> classes;
  std::vector<int> vertex_class;
  // access[a][b]: class a has access to class b. Reflexive and transitive.
  std::vector<std::vector<bool>> access;

  int size() const { return static_cast<int>(classes.size()); }
  bool has_access(int a, int b) const { return access[a][b]; }
  bool strictly_accesses(int a, int b) const { return a != b && access[a][b]; }
};

ClassAnalysis condense(const NonnegMatrix& p);

// Union of the vertices of the given classes, sorted.
IndexSet vertices_of(const ClassAnalysis& a, const std::vector<int>& class_ids);
// Classes that contain at least one vertex of s.
std::vector<int> classes_meeting(const ClassAnalysis& a, const IndexSet& s);
// Classes having access to at least one vertex of s.
std::vector<int> classes_accessing(const ClassAnalysis& a, const IndexSet& s);

// Union of all classes having access to s: the least initial subset
// containing s.
IndexSet smallest_initial_superset(const ClassAnalysis& a, const IndexSet& s);
// I is a union of classes and contains every vertex with access to I.
bool is_initial(const ClassAnalysis& a, const IndexSet& s);
// The orthant is self-dual: the dual face of F_I is F of the complement.
IndexSet dual_face(const IndexSet& s, int n);

struct ClassFlags {
  Scalar radius;
  bool basic = false;
  bool final = false;    // no access to another class
  bool initial = false;  // no access from another class
  bool distinguished = false;
  bool distinguished_for_transpose = false;
};

struct ClassTaxonomy {
  Scalar rho;
  double eig_tol = 1e-8;
  std::vector<ClassFlags> flags;

  // radius(cls) = lambda and no class with access to cls has a larger radius.
  bool semi_distinguished(const ClassAnalysis& a, int cls, const Scalar& lambda) const;
};

// Radius equalities use compare_values(eig_tol), so they are exact for
// rational radii.
ClassTaxonomy classify(const ClassAnalysis& a, const std::vector<Scalar>& radii, const Scalar& rho,
                       double eig_tol = 1e-8);

}  // namespace pfcone
