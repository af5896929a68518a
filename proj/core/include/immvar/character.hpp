#pragma once

#include "immvar/cyclotomic.hpp"
#include "immvar/permgroup.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace immvar {

// A character of a PermGroup with values in Q(zeta_m), stored per group
// element. One-dimensional characters (the multiplicative ones) unlock the
// basis/support machinery; class-function tables of any degree support the
// dimension and vanishing computations.
class Character {
public:
  static Character trivial(GroupPtr g);
  static Character sign(GroupPtr g);

  // Eigenvalue-exponent presentation: each generator is assigned an exponent
  // e, meaning the character sends it to zeta_m^e. The assignment is spread
  // over the group by breadth-first multiplication; two factorizations that
  // disagree, or generators that fail to generate, raise errors, and the
  // result is verified to be multiplicative on all pairs.
  static Character from_generator_exponents(GroupPtr g, unsigned m,
                                            const std::vector<std::pair<Perm, long>>& exponents);

  // Explicit value table indexed like g->elements(). Must be constant on
  // conjugacy classes with a positive integer value at the identity.
  static Character table(GroupPtr g, unsigned m, std::vector<CycloNum> values);

  const PermGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  unsigned conductor() const { return m_; }
  long degree() const { return degree_; }
  bool one_dimensional() const { return one_dimensional_; }

  const CycloNum& value(std::size_t element_index) const { return values_[element_index]; }
  const std::vector<CycloNum>& values() const { return values_; }
  CycloNum value_of(const Perm& p) const { return values_[group_->index_of(p)]; }

  // Elements with value 1; for one-dimensional characters this is the kernel
  // subgroup. Throws InvalidArgumentError on higher-degree characters.
  std::vector<std::size_t> kernel_indices() const;
  PermGroup kernel_subgroup() const;

  // Unnormalized pairing sum_g chi1(g) chi2(g^-1); divide by |G| for the
  // orthonormal form.
  CycloNum inner_product(const Character& other) const;

  // Coefficient of each group element in the idempotent
  // (chi(e)/|G|) sum_g chi(g^-1) g, indexed like group().elements().
  std::vector<CycloNum> idempotent_coefficients() const;

  // Restriction to the subgroup formed by the given element indices
  // (verified); the result lives on a fresh PermGroup.
  Character restricted(const std::vector<std::size_t>& subgroup_indices) const;

  std::string describe() const;

private:
  Character(GroupPtr g, unsigned m, std::vector<CycloNum> values, long degree,
            bool one_dimensional)
      : group_(std::move(g)), m_(m), values_(std::move(values)), degree_(degree),
        one_dimensional_(one_dimensional) {}

  static bool multiplicative(const PermGroup& g, const std::vector<CycloNum>& values);

  GroupPtr group_;
  unsigned m_;
  std::vector<CycloNum> values_;
  long degree_;
  bool one_dimensional_;
};

} // namespace immvar
