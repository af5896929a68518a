#include "immvar/bposet.hpp"

#include "immvar/errors.hpp"
#include "immvar/symtensor.hpp"

#include <algorithm>
#include <bit>

namespace immvar {

namespace {

using Row = std::vector<std::uint64_t>;

std::uint64_t and_popcount(const Row& a, const Row& b) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    total += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  return total;
}

Row and_rows(const Row& a, const Row& b) {
  Row out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool subset_of(const Row& a, const Row& b) { // a subseteq b
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::vector<std::size_t> bits_of(const Row& row) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word) {
      out.push_back((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

void set_bit(Row& row, std::size_t i) { row[i >> 6] |= std::uint64_t(1) << (i & 63); }

} // namespace

std::vector<std::size_t> BPoset::row_indices(const std::vector<std::uint64_t>& row) const {
  return bits_of(row);
}

std::size_t BPoset::index_of(const MultiIndex& x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw InvalidArgumentError("BPoset: " + x.to_string() + " is not an element");
  return it->second;
}

bool BPoset::leq(std::size_t i, std::size_t j) const { return bit(up_[i], j); }

bool BPoset::leq(const MultiIndex& x, const MultiIndex& y) const {
  return leq(index_of(x), index_of(y));
}

BPoset BPoset::build(const Character& chi, int n, const Bounds& bounds) {
  BPoset p(chi, n);
  p.elems_ = canonical_index_set(chi, n, bounds);
  const std::size_t nelem = p.elems_.size();
  const PermGroup& g = chi.group();
  if (nelem > 0) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(nelem) * nelem;
    if (pairs > bounds.poset_work / std::max<std::uint64_t>(g.size(), 1))
      throw BoundError("BPoset: |B|^2 * |G| exceeds the work bound");
  }
  p.rho_.reserve(nelem);
  for (std::size_t i = 0; i < nelem; ++i) {
    p.rho_.push_back(p.elems_[i].rho());
    p.index_.emplace(p.elems_[i], i);
  }
  p.words_ = (nelem + 63) / 64;
  p.up_.assign(nelem, Row(p.words_, 0));
  p.down_.assign(nelem, Row(p.words_, 0));
  for (std::size_t j = 0; j < nelem; ++j) {
    const auto orbit = g.orbit_sorted(p.elems_[j]);
    for (std::size_t i = 0; i < nelem; ++i) {
      // strict comparability forces a strict rho increase
      if (p.rho_[i] > p.rho_[j] || (p.rho_[i] == p.rho_[j] && i != j)) continue;
      bool le = i == j;
      for (std::size_t t = 0; t < orbit.size() && !le; ++t)
        le = p.elems_[i].leq_componentwise(orbit[t]);
      if (le) {
        set_bit(p.up_[i], j);
        set_bit(p.down_[j], i);
      }
    }
  }
  p.verify_axioms();

  p.covers_up_.assign(nelem, {});
  for (std::size_t i = 0; i < nelem; ++i) {
    for (std::size_t j : bits_of(p.up_[i])) {
      if (j == i) continue;
      if (and_popcount(p.up_[i], p.down_[j]) == 2) p.covers_up_[i].push_back(j);
    }
  }

  bool graded = true;
  for (std::size_t i = 0; i < nelem && graded; ++i)
    for (std::size_t j : p.covers_up_[i])
      if (p.rho_[j] != p.rho_[i] + 1) {
        graded = false;
        break;
      }
  int min_rho = -1, max_rho = -1;
  for (std::size_t i = 0; i < nelem && graded; ++i) {
    if (and_popcount(p.down_[i], p.down_[i]) == 1) {
      if (min_rho == -1) min_rho = p.rho_[i];
      else if (min_rho != p.rho_[i]) graded = false;
    }
    if (and_popcount(p.up_[i], p.up_[i]) == 1) {
      if (max_rho == -1) max_rho = p.rho_[i];
      else if (max_rho != p.rho_[i]) graded = false;
    }
  }
  p.graded_ = graded;
  return p;
}

void BPoset::verify_axioms() const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (!bit(up_[i], i)) throw CheckError("BPoset: order is not reflexive");
    if (and_popcount(up_[i], down_[i]) != 1)
      throw CheckError("BPoset: order is not antisymmetric");
    for (std::size_t j : bits_of(up_[i]))
      if (!subset_of(up_[j], up_[i]))
        throw CheckError("BPoset: order is not transitive");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> BPoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j : covers_up_[i]) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

int BPoset::rank_of(std::size_t i) const {
  if (!graded_) throw InvalidArgumentError("BPoset: rank is undefined, poset is not graded");
  return rho_[i];
}

QPoly BPoset::rank_generating() const {
  if (!graded_)
    throw InvalidArgumentError("BPoset: rank polynomial is undefined, poset is not graded");
  QPoly acc;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    acc += QPoly::q_power(static_cast<unsigned>(rho_[i]));
  return acc;
}

bool BPoset::rank_symmetric() const { return rank_generating().palindromic(); }

LatticeReport BPoset::lattice_report() const {
  LatticeReport r;
  const std::size_t nelem = elems_.size();
  auto extremes = [&](std::size_t a, std::size_t b, bool lower) {
    const auto& rows = lower ? down_ : up_;
    const auto& opp = lower ? up_ : down_;
    const Row comb = and_rows(rows[a], rows[b]);
    std::vector<std::size_t> out;
    for (std::size_t z : bits_of(comb))
      if (and_popcount(opp[z], comb) == 1) out.push_back(z);
    return out;
  };
  auto fail_at = [&](std::size_t a, std::size_t b, const char* stage) {
    r.is_lattice = false;
    r.failing = stage;
    r.witness_a = elems_[a];
    r.witness_b = elems_[b];
    for (std::size_t z : extremes(a, b, true)) r.maximal_lower_bounds.push_back(elems_[z]);
    for (std::size_t z : extremes(a, b, false)) r.minimal_upper_bounds.push_back(elems_[z]);
  };
  for (std::size_t a = 0; a < nelem; ++a)
    for (std::size_t b = a + 1; b < nelem; ++b)
      if (extremes(a, b, true).size() != 1) {
        fail_at(a, b, "meet");
        return r;
      }
  for (std::size_t a = 0; a < nelem; ++a)
    for (std::size_t b = a + 1; b < nelem; ++b)
      if (extremes(a, b, false).size() != 1) {
        fail_at(a, b, "join");
        return r;
      }
  return r;
}

std::optional<bool> BPoset::is_distributive() const {
  if (!is_lattice()) return std::nullopt;
  const std::size_t nelem = elems_.size();
  std::vector<std::uint32_t> meet(nelem * nelem), join(nelem * nelem);
  auto the_extreme = [&](std::size_t a, std::size_t b, bool lower) -> std::uint32_t {
    const auto& rows = lower ? down_ : up_;
    const auto& opp = lower ? up_ : down_;
    const Row comb = and_rows(rows[a], rows[b]);
    for (std::size_t z : bits_of(comb))
      if (and_popcount(opp[z], comb) == 1) return static_cast<std::uint32_t>(z);
    throw CheckError("BPoset: lattice scan lost an extreme bound");
  };
  for (std::size_t a = 0; a < nelem; ++a)
    for (std::size_t b = a; b < nelem; ++b) {
      meet[a * nelem + b] = meet[b * nelem + a] = the_extreme(a, b, true);
      join[a * nelem + b] = join[b * nelem + a] = the_extreme(a, b, false);
    }
  for (std::size_t a = 0; a < nelem; ++a)
    for (std::size_t b = 0; b < nelem; ++b)
      for (std::size_t c = 0; c < nelem; ++c) {
        const std::size_t bc = join[b * nelem + c];
        const std::size_t lhs = meet[a * nelem + bc];
        const std::size_t rhs =
            join[static_cast<std::size_t>(meet[a * nelem + b]) * nelem + meet[a * nelem + c]];
        if (lhs != rhs) return false;
      }
  return true;
}

Int BPoset::mobius(std::size_t i, std::size_t j) const {
  if (!leq(i, j)) throw InvalidArgumentError("mobius: arguments are incomparable");
  std::vector<std::size_t> iv = interval(i, j);
  std::stable_sort(iv.begin(), iv.end(),
                   [&](std::size_t a, std::size_t b) { return rho_[a] < rho_[b]; });
  std::map<std::size_t, Int> mu;
  for (std::size_t z : iv) {
    if (z == i) {
      mu[z] = 1;
      continue;
    }
    Int s = 0;
    for (std::size_t w : iv)
      if (w != z && leq(w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[j];
}

std::vector<std::size_t> BPoset::principal_ideal(std::size_t i) const {
  return bits_of(down_[i]);
}

std::vector<std::size_t> BPoset::interval(std::size_t i, std::size_t j) const {
  return bits_of(and_rows(up_[i], down_[j]));
}

std::vector<std::size_t> BPoset::open_interval(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t z : interval(i, j))
    if (z != i && z != j) out.push_back(z);
  return out;
}

std::vector<std::size_t> BPoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (and_popcount(down_[i], down_[i]) == 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> BPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (and_popcount(up_[i], up_[i]) == 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> BPoset::maximal_of(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> members(subset);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t z : members)
    if (z >= elems_.size()) throw InvalidArgumentError("maximal_of: index out of range");
  std::vector<std::size_t> out;
  for (std::size_t z : members) {
    bool dominated = false;
    for (std::size_t w : members)
      if (w != z && leq(z, w)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(z);
  }
  return out;
}

std::vector<std::vector<std::size_t>> BPoset::order_ideals(const Bounds& bounds) const {
  return enumerate_order_ideals(
      elems_.size(), [this](std::size_t a, std::size_t b) { return leq(a, b); },
      bounds.ideal_cap);
}

std::vector<std::vector<std::size_t>>
enumerate_order_ideals(std::size_t count,
                       const std::function<bool(std::size_t, std::size_t)>& leq,
                       std::uint64_t cap) {
  std::vector<std::size_t> order;
  order.reserve(count);
  std::vector<char> placed(count, 0);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t pick = count;
    for (std::size_t i = 0; i < count && pick == count; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < count && ready; ++j)
        if (!placed[j] && j != i && leq(j, i)) ready = false;
      if (ready) pick = i;
    }
    if (pick == count)
      throw InvalidArgumentError("enumerate_order_ideals: relation has a cycle");
    placed[pick] = 1;
    order.push_back(pick);
  }
  std::vector<std::vector<std::size_t>> below(count);
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (leq(order[q], order[p])) below[p].push_back(q);

  std::vector<std::vector<std::size_t>> out;
  std::vector<char> chosen(count, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == count) {
      if (out.size() >= cap) throw BoundError("enumerate_order_ideals: cap exceeded");
      std::vector<std::size_t> ideal;
      for (std::size_t pos = 0; pos < count; ++pos)
        if (chosen[pos]) ideal.push_back(order[pos]);
      std::sort(ideal.begin(), ideal.end());
      out.push_back(std::move(ideal));
      return;
    }
    rec(p + 1);
    bool allowed = true;
    for (std::size_t q : below[p])
      if (!chosen[q]) {
        allowed = false;
        break;
      }
    if (allowed) {
      chosen[p] = 1;
      rec(p + 1);
      chosen[p] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

QPoly polya_rank_generating(const PermGroup& g, int n) {
  if (n < 1) throw InvalidArgumentError("polya_rank_generating: n must be positive");
  QPoly acc;
  for (const Perm& w : g.elements()) {
    QPoly prod = QPoly::one();
    const std::vector<int> counts = w.cycle_length_counts();
    for (std::size_t len = 1; len <= counts.size(); ++len) {
      const int c = counts[len - 1];
      if (c > 0)
        prod = prod * QPoly::bracket(static_cast<unsigned>(n), static_cast<unsigned>(len))
                          .pow(static_cast<unsigned>(c));
    }
    acc += prod;
  }
  acc.divide_exact(Int(g.size()));
  return acc;
}

namespace {

int moebius_number(int d) {
  int primes = 0;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    ++primes;
  }
  if (d > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

} // namespace

Int witt_count(int k, int n) {
  if (k < 1 || n < 1) throw InvalidArgumentError("witt_count: k and n must be positive");
  Int sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = moebius_number(d);
    if (mu != 0) sum += Int(mu) * int_pow(Int(n), k / d);
  }
  if (sum % k != 0) throw CheckError("witt_count: Moebius sum is not divisible by k");
  return sum / k;
}

bool projection_check(GroupPtr g, int n, const Bounds& bounds) {
  const Character trivial = Character::trivial(g);
  const BPoset p = BPoset::build(trivial, n, bounds);
  const int k = g->k();
  bool ok = true;
  MultiIndexRange range(n, k);
  range.for_each([&](const MultiIndex& y) {
    if (!ok) return;
    const MultiIndex ybar = g->canonical_rep(y);
    if (ybar.rho() != y.rho()) {
      ok = false;
      return;
    }
    const std::size_t jy = p.index_of(ybar);
    MultiIndex x = MultiIndex::constant(k, 1);
    for (;;) {
      const MultiIndex xbar = g->canonical_rep(x);
      if (xbar.rho() != x.rho() || !p.leq(p.index_of(xbar), jy)) {
        ok = false;
        break;
      }
      int pos = k - 1;
      while (pos >= 0 && x.v[static_cast<std::size_t>(pos)] == y[pos]) {
        x.v[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++x.v[static_cast<std::size_t>(pos)];
    }
  });
  return ok;
}

} // namespace immvar
