#pragma once

#include "immvar/bounds.hpp"
#include "immvar/character.hpp"
#include "immvar/perm.hpp"
#include "immvar/permgroup.hpp"
#include "immvar/qpoly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace immvar {

// Outcome of the meet/join existence scan. Pairs are scanned in index order,
// all meets before all joins, so the witness is deterministic.
struct LatticeReport {
  bool is_lattice = true;
  std::string failing; // "meet" or "join" when not a lattice
  MultiIndex witness_a, witness_b;
  std::vector<MultiIndex> maximal_lower_bounds; // of the witness pair
  std::vector<MultiIndex> minimal_upper_bounds;
};

// The poset of canonical orbit representatives with stabilizer inside
// ker(chi), ordered by x <= g(y) componentwise for some g. Elements are kept
// in lexicographic order; indices into that list name elements everywhere.
class BPoset {
public:
  static BPoset build(const Character& chi, int n, const Bounds& bounds = {});

  const Character& character() const { return chi_; }
  int n() const { return n_; }
  int k() const { return chi_.group().k(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<MultiIndex>& elements() const { return elems_; }
  const MultiIndex& element(std::size_t i) const { return elems_[i]; }
  bool contains(const MultiIndex& x) const { return index_.count(x) != 0; }
  std::size_t index_of(const MultiIndex& x) const; // throws InvalidArgumentError

  bool leq(std::size_t i, std::size_t j) const;
  bool leq(const MultiIndex& x, const MultiIndex& y) const;
  int rho_of(std::size_t i) const { return rho_[i]; }

  // covers_of(i) lists the j with i covered by j, ascending.
  const std::vector<std::size_t>& covers_of(std::size_t i) const { return covers_up_[i]; }
  // All (lower, upper) cover edges sorted by index pair.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  // Graded means: every cover edge raises rho by exactly one, and all minimal
  // (resp. maximal) elements share one rho value.
  bool graded() const { return graded_; }
  int rank_of(std::size_t i) const;  // rho; graded posets only
  QPoly rank_generating() const;     // sum of q^rho; graded posets only
  bool rank_symmetric() const;       // palindromic rank polynomial

  LatticeReport lattice_report() const;
  bool is_lattice() const { return lattice_report().is_lattice; }
  // Empty when not a lattice; otherwise the verdict of the triple scan.
  std::optional<bool> is_distributive() const;

  // mu(x,x) = 1, mu(x,y) = -sum over x <= z < y. Throws on incomparable input.
  Int mobius(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> principal_ideal(std::size_t i) const;
  std::vector<std::size_t> interval(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> open_interval(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  // Members of the subset dominated by no other member.
  std::vector<std::size_t> maximal_of(const std::vector<std::size_t>& subset) const;
  std::vector<std::vector<std::size_t>> order_ideals(const Bounds& bounds = {}) const;

private:
  BPoset(Character chi, int n) : chi_(std::move(chi)), n_(n) {}

  bool bit(const std::vector<std::uint64_t>& row, std::size_t i) const {
    return (row[i >> 6] >> (i & 63)) & 1u;
  }
  std::vector<std::size_t> row_indices(const std::vector<std::uint64_t>& row) const;
  void verify_axioms() const;

  Character chi_;
  int n_;
  std::vector<MultiIndex> elems_;
  std::vector<int> rho_;
  std::map<MultiIndex, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> up_, down_;
  std::vector<std::vector<std::size_t>> covers_up_;
  bool graded_ = false;
};

// (1/|G|) sum_g prod_i ([n]_{q^i})^{c_i(g)}: the rank enumerator of the
// trivial-character poset, and the Hilbert-Poincare upper bound.
QPoly polya_rank_generating(const PermGroup& g, int n);

// (1/k) sum_{d|k} mu(d) n^{k/d}: the Lyndon-word count.
Int witt_count(int k, int n);

// Checks that x -> canonical_rep(x) is order preserving and rho preserving,
// exhaustively over componentwise-comparable pairs of [n]^k for the trivial
// character of g.
bool projection_check(GroupPtr g, int n, const Bounds& bounds = {});

// All order ideals of an arbitrary finite poset given by a leq callable over
// indices 0..count-1. Each ideal is a sorted index list; the list of ideals
// is sorted lexicographically. Throws BoundError past the cap.
std::vector<std::vector<std::size_t>>
enumerate_order_ideals(std::size_t count,
                       const std::function<bool(std::size_t, std::size_t)>& leq,
                       std::uint64_t cap);

} // namespace immvar
