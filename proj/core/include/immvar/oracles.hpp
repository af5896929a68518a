#pragma once

#include "immvar/matrix.hpp"
#include "immvar/rational.hpp"

#include <vector>

namespace immvar {

// Independent reference implementations used only to cross-check the main
// code paths in tests and verification suites.

// Cofactor expansion along the first row; square matrices.
Rat determinant_cofactor(const Matrix<Rat>& m);

// Ryser's inclusion-exclusion formula; square matrices.
Rat permanent_ryser(const Matrix<Rat>& m);

// Basis axioms for a family of equal-size subsets of a finite ground set:
// nonempty family and pairwise basis exchange. Bases are sorted vectors of
// distinct positive integers.
bool matroid_basis_exchange(const std::vector<std::vector<int>>& bases);

} // namespace immvar
