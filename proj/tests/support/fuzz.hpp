#pragma once

#include <random>
#include <vector>

#include "pfcone/matrix.hpp"

namespace pfcone::fuzz {

// Block upper-triangular nonnegative matrices under a random vertex
// permutation. Irreducible diagonal blocks have constant row sums, so every
// class radius is an exact rational; singleton blocks draw their diagonal
// from {0, 1/2, 1, 2, 3}.
struct Options {
  int n_min = 2;
  int n_max = 6;
  double forward_density = 0.35;  // chance of a nonzero entry above the diagonal blocks
  double singleton_weight = 0.4;  // chance that a new block is a single vertex
  bool irreducible = false;       // one block covering all vertices
};

NonnegMatrix random_matrix(std::mt19937_64& rng, const Options& opt = {}, Mode mode = Mode::Rational);

// Nonzero vector with entries in {0, 1, 2, 3}; each entry is zero with
// probability zero_prob (at least one entry is kept positive).
Vector random_vector(std::mt19937_64& rng, int n, double zero_prob = 0.5, Mode mode = Mode::Rational);

// Vertices with a directed path to some vertex of s, found by breadth-first
// search on the digraph of P. Independent of the class machinery.
IndexSet reach_into(const NonnegMatrix& p, const IndexSet& s);

// True when x0 is the only nonnegative solution of m x = m x0. Decided by 2n
// exact LPs, one per coordinate and sign, each looking for a kernel direction
// d with d_j = +-1 that stays nonnegative off supp(x0).
bool unique_nonneg_solution(const Matrix& m, const Vector& x0);

}  // namespace pfcone::fuzz
