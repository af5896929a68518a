#pragma once

#include "immvar/bounds.hpp"
#include "immvar/bposet.hpp"
#include "immvar/chimatroid.hpp"
#include "immvar/immanant.hpp"
#include "immvar/matrix.hpp"
#include "immvar/mvpoly.hpp"
#include "immvar/qpoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace immvar {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline CycloNum zero_like(const CycloNum&) { return CycloNum(); }
inline MVPoly zero_like(const MVPoly& p) { return MVPoly::zero(p.vars_ptr()); }

// The truncated matrix A^x: entry (i,j) survives iff i <= x_j.
template <typename R> Matrix<R> truncate(const Matrix<R>& a, const MultiIndex& x) {
  if (x.k() != a.cols())
    throw InvalidArgumentError("truncate: x needs one entry per column");
  validate_multi_index(x, a.rows());
  Matrix<R> out = a;
  const R zero = zero_like(a.at(1, 1));
  for (int j = 1; j <= a.cols(); ++j)
    for (int i = x[j - 1] + 1; i <= a.rows(); ++i) out.at(i, j) = zero;
  return out;
}

// A closed incidence stratum of the trivial-character variety: indexed by the
// principal ideal of its top element, with dimension rho(top).
struct Stratum {
  PosetPtr base;
  MultiIndex top;
  std::vector<std::size_t> ideal;
  int dimension = 0;
};

// Requires a trivial-character poset.
Stratum make_stratum(PosetPtr base, const MultiIndex& x);

inline int stratum_dimension(const MultiIndex& x) { return x.rho(); }

// The parametric system of the stratum below x: for y <= x the coordinate
// z_y equals |G_y|^{-1} times the trivial immanant of the truncated generic
// matrix A^x; for every other y in B the coordinate vanishes.
std::map<MultiIndex, MVPoly> stratum_equations(const BPoset& p, const MultiIndex& x);

// Every element of B with its rank: the strata classes generate the Chow
// vector space, possibly with redundancy.
std::vector<std::pair<MultiIndex, int>> chow_generators(const BPoset& p);

// The Pólya polynomial, read as a coefficient-wise upper bound on the
// Hilbert-Poincaré polynomial of the Chow vector space.
QPoly hp_upper_bound(const PermGroup& g, int n);

} // namespace immvar
