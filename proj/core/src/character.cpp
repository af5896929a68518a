#include "immvar/character.hpp"

#include "immvar/errors.hpp"

#include <deque>
#include <optional>
#include <sstream>

namespace immvar {

Character Character::trivial(GroupPtr g) {
  std::vector<CycloNum> values(g->size(), CycloNum::one());
  return Character(std::move(g), 1, std::move(values), 1, true);
}

Character Character::sign(GroupPtr g) {
  std::vector<CycloNum> values;
  values.reserve(g->size());
  for (const Perm& p : g->elements()) values.push_back(CycloNum(Rat(p.parity())));
  return Character(std::move(g), 2, std::move(values), 1, true);
}

Character Character::from_generator_exponents(GroupPtr g, unsigned m,
                                              const std::vector<std::pair<Perm, long>>& exponents) {
  if (m == 0) throw InvalidArgumentError("character: conductor must be positive");
  const PermGroup& grp = *g;
  std::vector<std::size_t> gen_idx;
  std::vector<long> gen_exp;
  for (const auto& [perm, e] : exponents) {
    gen_idx.push_back(grp.index_of(perm)); // throws when outside the group
    long r = e % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    gen_exp.push_back(r);
  }

  // Spread exponents over the Cayley graph from the identity.
  std::vector<std::optional<long>> exp(grp.size());
  std::deque<std::size_t> queue;
  exp[grp.identity_index()] = 0;
  queue.push_back(grp.identity_index());
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
      std::size_t j = grp.compose_index(i, gen_idx[gi]);
      long want = (*exp[i] + gen_exp[gi]) % static_cast<long>(m);
      if (!exp[j]) {
        exp[j] = want;
        queue.push_back(j);
      } else if (*exp[j] != want) {
        throw InvalidArgumentError(
            "character: exponent assignment is not a homomorphism (element " +
            grp.element(j).to_string() + " received exponents " + std::to_string(*exp[j]) +
            " and " + std::to_string(want) + " mod " + std::to_string(m) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < grp.size(); ++i)
    if (!exp[i])
      throw InvalidArgumentError("character: the given permutations do not generate the group");

  std::vector<CycloNum> values;
  values.reserve(grp.size());
  for (std::size_t i = 0; i < grp.size(); ++i)
    values.push_back(CycloNum::root_of_unity(m, *exp[i]));
  if (!multiplicative(grp, values))
    throw InvalidArgumentError("character: exponent assignment is not a homomorphism");
  return Character(std::move(g), m, std::move(values), 1, true);
}

Character Character::table(GroupPtr g, unsigned m, std::vector<CycloNum> values) {
  const PermGroup& grp = *g;
  if (values.size() != grp.size())
    throw InvalidArgumentError("character: table must list one value per group element");

  // Class function: conjugation never changes the value.
  for (std::size_t i = 0; i < grp.size(); ++i) {
    for (std::size_t h = 0; h < grp.size(); ++h) {
      std::size_t conj = grp.compose_index(grp.compose_index(i, h), grp.inverse_index(i));
      if (values[conj] != values[h])
        throw InvalidArgumentError("character: table is not constant on conjugacy classes");
    }
  }

  const CycloNum& at_identity = values[grp.identity_index()];
  if (!at_identity.is_rational())
    throw InvalidArgumentError("character: degree must be a positive integer");
  Rat deg = at_identity.to_rational();
  if (!is_integer(deg) || deg <= 0)
    throw InvalidArgumentError("character: degree must be a positive integer");
  long degree = static_cast<long>(to_integer(deg));

  bool one_dim = degree == 1 && multiplicative(grp, values);
  return Character(std::move(g), m, std::move(values), degree, one_dim);
}

bool Character::multiplicative(const PermGroup& g, const std::vector<CycloNum>& values) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (values[g.compose_index(i, j)] != values[i] * values[j]) return false;
  return true;
}

std::vector<std::size_t> Character::kernel_indices() const {
  if (!one_dimensional_)
    throw InvalidArgumentError("character: kernel is defined here for one-dimensional characters");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].is_one()) out.push_back(i);
  return out;
}

PermGroup Character::kernel_subgroup() const {
  return group_->subgroup_from_indices(kernel_indices());
}

CycloNum Character::inner_product(const Character& other) const {
  if (!(group() == other.group()))
    throw InvalidArgumentError("character: inner product needs characters of the same group");
  CycloNum sum;
  for (std::size_t i = 0; i < values_.size(); ++i)
    sum += values_[i] * other.values_[group_->inverse_index(i)];
  return sum;
}

std::vector<CycloNum> Character::idempotent_coefficients() const {
  const Rat scale(Int(degree_), Int(group_->size()));
  std::vector<CycloNum> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back(scale * values_[group_->inverse_index(i)]);
  return out;
}

Character Character::restricted(const std::vector<std::size_t>& subgroup_indices) const {
  PermGroup sub = group_->subgroup_from_indices(subgroup_indices); // verifies the axioms
  std::vector<CycloNum> values;
  values.reserve(sub.size());
  for (const Perm& p : sub.elements()) values.push_back(values_[group_->index_of(p)]);
  auto sub_ptr = std::make_shared<const PermGroup>(std::move(sub));
  bool one_dim = degree_ == 1 || multiplicative(*sub_ptr, values);
  return Character(std::move(sub_ptr), m_, std::move(values), degree_, one_dim);
}

std::string Character::describe() const {
  std::ostringstream out;
  out << "character of degree " << degree_ << " on a group of order " << group_->size()
      << " (conductor " << m_ << (one_dimensional_ ? ", one-dimensional)" : ")");
  return out.str();
}

} // namespace immvar
