#include "immvar/chimatroid.hpp"

#include "immvar/errors.hpp"
#include "immvar/symtensor.hpp"

#include <algorithm>
#include <numeric>

namespace immvar {

SubsetB SubsetB::from_members(PosetPtr base, const std::vector<MultiIndex>& members) {
  if (!base) throw InvalidArgumentError("SubsetB: null poset");
  SubsetB s;
  s.base = std::move(base);
  for (const MultiIndex& x : members) s.members.push_back(s.base->index_of(x));
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  return s;
}

std::vector<MultiIndex> SubsetB::member_elements() const {
  std::vector<MultiIndex> out;
  out.reserve(members.size());
  for (std::size_t i : members) out.push_back(base->element(i));
  return out;
}

SubsetB relabel(const Perm& sigma, const SubsetB& x) {
  if (sigma.k() != x.base->n())
    throw InvalidArgumentError("relabel: sigma must permute the value set [n]");
  const PermGroup& g = x.base->character().group();
  SubsetB out;
  out.base = x.base;
  for (std::size_t i : x.members) {
    const MultiIndex& m = x.base->element(i);
    MultiIndex image = m;
    for (std::size_t pos = 0; pos < image.v.size(); ++pos)
      image.v[pos] = sigma.apply(m[static_cast<int>(pos)]);
    out.members.push_back(x.base->index_of(g.canonical_rep(image)));
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

MaximaReport has_unique_max(const SubsetB& x) {
  if (x.members.empty()) throw InvalidArgumentError("has_unique_max: empty subset");
  MaximaReport r;
  for (std::size_t i : x.base->maximal_of(x.members)) r.maxima.push_back(x.base->element(i));
  r.unique = r.maxima.size() == 1;
  return r;
}

MatroidVerdict is_chi_matroid(const SubsetB& x, const Bounds& bounds) {
  const int n = x.base->n();
  if (n > bounds.relabel_n)
    throw BoundError("is_chi_matroid: n exceeds the S_n sweep bound");
  std::vector<int> one_line(static_cast<std::size_t>(n));
  std::iota(one_line.begin(), one_line.end(), 1);
  MatroidVerdict v;
  do {
    const Perm sigma = Perm::from_one_line(one_line);
    const MaximaReport r = has_unique_max(relabel(sigma, x));
    if (!r.unique) {
      v.is_chi_matroid = false;
      v.witness = sigma;
      v.maxima = r.maxima;
      return v;
    }
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return v;
}

MatroidVerdict support_is_matroid(const Character& chi,
                                  const std::vector<std::vector<Rat>>& factors,
                                  const Bounds& bounds) {
  const SymTensor v = apply_idempotent(chi, SymTensor::decomposable(factors));
  if (v.is_zero())
    throw InvalidArgumentError(
        "support_is_matroid: the idempotent kills this point (outside the chart)");
  const auto poset = std::make_shared<const BPoset>(BPoset::build(chi, v.n(), bounds));
  return is_chi_matroid(SubsetB::from_members(poset, support(chi, v)), bounds);
}

std::vector<std::vector<Rat>> interval_representing_tensor(const MultiIndex& x,
                                                           const MultiIndex& y, int n) {
  if (x.k() != y.k()) throw InvalidArgumentError("interval_representing_tensor: length mismatch");
  if (!x.weakly_increasing() || !y.weakly_increasing())
    throw InvalidArgumentError("interval_representing_tensor: endpoints must be weakly increasing");
  validate_multi_index(x, n);
  validate_multi_index(y, n);
  if (!x.leq_componentwise(y))
    throw InvalidArgumentError("interval_representing_tensor: lower endpoint is not below upper");
  std::vector<std::vector<Rat>> factors;
  for (int j = 0; j < x.k(); ++j) {
    std::vector<Rat> f(static_cast<std::size_t>(n), Rat(0));
    for (int i = x[j]; i <= y[j]; ++i) f[static_cast<std::size_t>(i - 1)] = 1;
    factors.push_back(std::move(f));
  }
  return factors;
}

} // namespace immvar
