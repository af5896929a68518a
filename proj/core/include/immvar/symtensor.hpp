#pragma once

#include "immvar/bounds.hpp"
#include "immvar/character.hpp"
#include "immvar/cyclotomic.hpp"
#include "immvar/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace immvar {

// A sparse exact vector of V^{otimes k} over Q(zeta), V = Q^n, written in the
// basis {e_x : x in [n]^k}. No zero coefficient is ever stored, so structural
// equality is equality of vectors.
class SymTensor {
public:
  SymTensor() = default;
  SymTensor(int k, int n); // zero tensor

  static SymTensor basis(int n, const MultiIndex& x);
  // Tensor product of k vectors of length n: the coefficient of e_x is the
  // product of the chosen entries. Every factor must be nonzero.
  static SymTensor decomposable(const std::vector<std::vector<Rat>>& factors);

  int k() const { return k_; }
  int n() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  const std::map<MultiIndex, CycloNum>& coeffs() const { return coeffs_; }
  CycloNum coeff(const MultiIndex& x) const;
  void add_term(const MultiIndex& x, const CycloNum& c);

  SymTensor operator-() const;
  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const SymTensor& v, const CycloNum& c);
  friend SymTensor operator*(const CycloNum& c, const SymTensor& v) { return v * c; }

  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  // "2/3*e(1,1,2) - 1/3*e(1,2,1)"; zero prints as "0".
  std::string to_string() const;

private:
  void require_compatible(const SymTensor& o) const;

  int k_ = 0;
  int n_ = 0;
  std::map<MultiIndex, CycloNum> coeffs_;
};

// The place-permuting action extended linearly: e_x -> e_{w(x)}.
SymTensor apply_perm(const Perm& w, const SymTensor& v);

// P_chi(v) = (chi(e)/|G|) sum_g chi(g^-1) g(v).
SymTensor apply_idempotent(const Character& chi, const SymTensor& v);

// True when every stabilizer element of x has character value 1.
// One-dimensional characters only.
bool stabilizer_in_kernel(const Character& chi, const MultiIndex& x);

// All lex-minimal orbit representatives x with G_x inside ker(chi), in
// lexicographic order. One-dimensional characters only.
std::vector<MultiIndex> canonical_index_set(const Character& chi, int n,
                                            const Bounds& bounds = {});

// (chi(e)/|G|) sum_g chi(g) n^{c(g)}; throws CheckError unless the sum
// reduces to a non-negative rational integer.
Int dim_formula(const Character& chi, int n);

// Coordinates of v in the basis {P(e_xbar)} of the symmetry class:
// a_x = coeff(e_x in v) * |G| / (|G_x| * chi(e)) over canonical x. Requires a
// one-dimensional character and a tensor fixed by the idempotent.
std::map<MultiIndex, CycloNum> coords_in_basis(const Character& chi, const SymTensor& v);

// Keys of coords_in_basis with nonzero coordinate, in lexicographic order.
std::vector<MultiIndex> support(const Character& chi, const SymTensor& v);

// Rank over Q(zeta_m) of the span of {P(e_x) : x in [n]^k}, by sparse
// incremental Gaussian elimination. Independent of dim_formula.
Int rank_of_image(const Character& chi, int n, const Bounds& bounds = {});

} // namespace immvar
