#pragma once

#include "immvar/bounds.hpp"
#include "immvar/bposet.hpp"
#include "immvar/rational.hpp"

#include <memory>
#include <vector>

namespace immvar {

using PosetPtr = std::shared_ptr<const BPoset>;

// A subset of the elements of a BPoset, held as sorted indices.
struct SubsetB {
  PosetPtr base;
  std::vector<std::size_t> members;

  static SubsetB from_members(PosetPtr base, const std::vector<MultiIndex>& members);
  std::vector<MultiIndex> member_elements() const;
};

// Value relabeling sigma*(x) = (sigma(x_1),...,sigma(x_k)) followed by
// canonicalization. The result stays inside B: value relabeling commutes with
// the place action, so stabilizers are unchanged.
SubsetB relabel(const Perm& sigma, const SubsetB& x);

struct MaximaReport {
  bool unique = false;
  std::vector<MultiIndex> maxima;
};

// Maximal elements of the induced subposet. Throws on an empty subset.
MaximaReport has_unique_max(const SubsetB& x);

struct MatroidVerdict {
  bool is_chi_matroid = true;
  Perm witness;                   // lex-first sigma in S_n whose relabeling fails
  std::vector<MultiIndex> maxima; // maxima of that relabeled set
};

// Brute force over all sigma in S_n in lexicographic order; the subset is a
// chi-matroid when every relabeled image has a unique maximum.
MatroidVerdict is_chi_matroid(const SubsetB& x, const Bounds& bounds = {});

// Projects the decomposable tensor of the factors, takes its support in B,
// and runs the sigma sweep. Throws when the projection is zero (the point
// falls outside the chart).
MatroidVerdict support_is_matroid(const Character& chi,
                                  const std::vector<std::vector<Rat>>& factors,
                                  const Bounds& bounds = {});

// The box factors v_j = e_{x_j} + ... + e_{y_j} whose projected support is
// the interval [x,y] of the full-symmetric-group poset. Both endpoints must
// be weakly increasing with x <= y componentwise.
std::vector<std::vector<Rat>> interval_representing_tensor(const MultiIndex& x,
                                                           const MultiIndex& y, int n);

} // namespace immvar
