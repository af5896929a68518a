#include "immvar/permgroup.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace immvar {

PermGroup PermGroup::closure(int k, const std::vector<Perm>& generators, const Bounds& bounds) {
  if (k <= 0) throw InvalidArgumentError("closure: k must be positive");
  for (const Perm& g : generators)
    if (g.k() != k) throw InvalidArgumentError("closure: generator degree mismatch");

  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm e(k);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    for (const Perm& h : generators) {
      Perm p = g.compose(h);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  PermGroup out;
  out.k_ = k;
  out.elems_.assign(seen.begin(), seen.end());
  out.finalize(bounds);
  return out;
}

PermGroup PermGroup::from_elements(int k, std::vector<Perm> elements, const Bounds& bounds) {
  PermGroup out;
  out.k_ = k;
  out.elems_ = std::move(elements);
  std::sort(out.elems_.begin(), out.elems_.end());
  out.elems_.erase(std::unique(out.elems_.begin(), out.elems_.end()), out.elems_.end());
  out.finalize(bounds);
  return out;
}

PermGroup PermGroup::trivial(int k) { return closure(k, {}); }

PermGroup PermGroup::symmetric(int k) {
  std::vector<Perm> gens;
  for (int i = 1; i < k; ++i) {
    std::vector<int> one_line(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) one_line[static_cast<std::size_t>(j)] = j + 1;
    std::swap(one_line[static_cast<std::size_t>(i - 1)], one_line[static_cast<std::size_t>(i)]);
    gens.push_back(Perm::from_one_line(one_line));
  }
  return closure(k, gens);
}

PermGroup PermGroup::cyclic(int k) {
  std::vector<int> one_line(static_cast<std::size_t>(k));
  one_line[0] = k;
  for (int i = 1; i < k; ++i) one_line[static_cast<std::size_t>(i)] = i;
  return closure(k, {Perm::from_one_line(one_line)});
}

PermGroup PermGroup::alternating(int k) {
  if (k < 3) return trivial(k);
  std::vector<Perm> gens;
  for (int i = 3; i <= k; ++i) {
    // The 3-cycle 1 -> 2 -> i -> 1.
    std::vector<int> one_line(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) one_line[static_cast<std::size_t>(j)] = j + 1;
    one_line[0] = 2;
    one_line[1] = i;
    one_line[static_cast<std::size_t>(i - 1)] = 1;
    gens.push_back(Perm::from_one_line(one_line));
  }
  return closure(k, gens);
}

PermGroup PermGroup::young(int k, const std::vector<int>& composition) {
  int total = 0;
  for (int part : composition) {
    if (part <= 0) throw InvalidArgumentError("young: composition parts must be positive");
    total += part;
  }
  if (total != k) throw InvalidArgumentError("young: composition must sum to k");
  std::vector<Perm> gens;
  int offset = 0;
  for (int part : composition) {
    for (int i = offset + 1; i < offset + part; ++i) {
      std::vector<int> one_line(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) one_line[static_cast<std::size_t>(j)] = j + 1;
      std::swap(one_line[static_cast<std::size_t>(i - 1)], one_line[static_cast<std::size_t>(i)]);
      gens.push_back(Perm::from_one_line(one_line));
    }
    offset += part;
  }
  return closure(k, gens);
}

void PermGroup::finalize(const Bounds& bounds) {
  if (elems_.empty()) throw InvalidArgumentError("PermGroup: empty element set");
  index_.clear();
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].k() != k_) throw InvalidArgumentError("PermGroup: degree mismatch");
    index_.emplace(elems_[i].one_line(), i);
  }

  bool has_identity = false;
  inverse_.assign(elems_.size(), 0);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].is_identity()) {
      identity_ = i;
      has_identity = true;
    }
    auto inv = index_.find(elems_[i].inverse().one_line());
    if (inv == index_.end())
      throw InvalidArgumentError("PermGroup: set is not closed under inverses");
    inverse_[i] = inv->second;
  }
  if (!has_identity) throw InvalidArgumentError("PermGroup: identity missing");

  const bool build_table = elems_.size() <= bounds.group_table && elems_.size() <= 65535;
  if (build_table) table_.assign(elems_.size() * elems_.size(), 0);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      auto it = index_.find(elems_[i].compose(elems_[j]).one_line());
      if (it == index_.end())
        throw InvalidArgumentError("PermGroup: set is not closed under composition");
      if (build_table) table_[i * elems_.size() + j] = static_cast<std::uint16_t>(it->second);
    }
  }
}

bool PermGroup::contains(const Perm& p) const {
  return p.k() == k_ && index_.count(p.one_line()) != 0;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = p.k() == k_ ? index_.find(p.one_line()) : index_.end();
  if (it == index_.end())
    throw InvalidArgumentError("PermGroup: element not in group: " + p.to_string());
  return it->second;
}

std::size_t PermGroup::compose_index(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * elems_.size() + j];
  return index_of(elems_[i].compose(elems_[j]));
}

std::vector<MultiIndex> PermGroup::orbit_sorted(const MultiIndex& x) const {
  std::vector<MultiIndex> out;
  out.reserve(elems_.size());
  for (const Perm& g : elems_) out.push_back(act(g, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> PermGroup::stabilizer_indices(const MultiIndex& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (act(elems_[i], x) == x) out.push_back(i);
  return out;
}

MultiIndex PermGroup::canonical_rep(const MultiIndex& x) const {
  MultiIndex best = x;
  for (const Perm& g : elems_) {
    MultiIndex y = act(g, x);
    if (y < best) best = y;
  }
  return best;
}

PermGroup PermGroup::subgroup_from_indices(const std::vector<std::size_t>& indices,
                                           const Bounds& bounds) const {
  std::vector<Perm> subset;
  subset.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= elems_.size()) throw InvalidArgumentError("subgroup_from_indices: bad index");
    subset.push_back(elems_[i]);
  }
  return from_elements(k_, std::move(subset), bounds);
}

} // namespace immvar
