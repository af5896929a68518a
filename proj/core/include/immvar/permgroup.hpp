#pragma once

#include "immvar/bounds.hpp"
#include "immvar/perm.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace immvar {

// A finite subgroup of S_k held as a lex-sorted element list. Construction
// verifies the group axioms; composition goes through an eagerly built table
// when the group is small enough, and through the element index otherwise.
class PermGroup {
public:
  // Breadth-first closure of the generators (the identity is always included).
  static PermGroup closure(int k, const std::vector<Perm>& generators,
                           const Bounds& bounds = {});
  // Verifies that the given elements already form a group.
  static PermGroup from_elements(int k, std::vector<Perm> elements,
                                 const Bounds& bounds = {});

  static PermGroup trivial(int k);
  static PermGroup symmetric(int k);
  static PermGroup cyclic(int k);     // generated by (k,1,2,...,k-1)
  static PermGroup alternating(int k);
  // Young subgroup of the composition (a_1,...,a_r) of k: the permutations
  // preserving each consecutive block.
  static PermGroup young(int k, const std::vector<int>& composition);

  int k() const { return k_; }
  std::size_t size() const { return elems_.size(); }
  const Perm& element(std::size_t i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t identity_index() const { return identity_; }

  bool contains(const Perm& p) const;
  std::size_t index_of(const Perm& p) const; // throws InvalidArgumentError

  std::size_t compose_index(std::size_t i, std::size_t j) const; // element(i) o element(j)
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

  std::vector<MultiIndex> orbit_sorted(const MultiIndex& x) const;
  std::vector<std::size_t> stabilizer_indices(const MultiIndex& x) const;
  // Lexicographically smallest point of the orbit of x.
  MultiIndex canonical_rep(const MultiIndex& x) const;

  PermGroup subgroup_from_indices(const std::vector<std::size_t>& indices,
                                  const Bounds& bounds = {}) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.k_ == b.k_ && a.elems_ == b.elems_;
  }

private:
  PermGroup() = default;
  void finalize(const Bounds& bounds); // sort, index, verify, build tables

  int k_ = 0;
  std::vector<Perm> elems_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::uint16_t> table_; // |G|^2 when |G| <= bounds.group_table, else empty
};

using GroupPtr = std::shared_ptr<const PermGroup>;

// The c_i(w) vector (counts of cycles of each length), 1-indexed by length.
inline std::vector<int> cycle_counts(const Perm& w) { return w.cycle_length_counts(); }

} // namespace immvar
