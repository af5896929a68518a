#include "immvar/complexes.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace immvar {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::erase_if(facets, [](const std::vector<int>& f) { return f.empty(); });
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex c;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < facets.size() && maximal; ++j)
      if (j != i && facets[i].size() <= facets[j].size() &&
          std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()) &&
          facets[i] != facets[j])
        maximal = false;
    if (maximal) c.facets_.push_back(facets[i]);
  }
  return c;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Int> SimplicialComplex::f_vector(const Bounds& bounds) const {
  std::set<std::vector<int>> faces;
  for (const auto& f : facets_) {
    if (f.size() > 62) throw BoundError("f_vector: facet too large to enumerate faces");
    const std::uint64_t subsets = std::uint64_t(1) << f.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < f.size(); ++b)
        if (mask & (std::uint64_t(1) << b)) face.push_back(f[b]);
      faces.insert(std::move(face));
      if (faces.size() > bounds.ideal_cap) throw BoundError("f_vector: face cap exceeded");
    }
  }
  std::vector<Int> fv(static_cast<std::size_t>(dimension() + 1), Int(0));
  for (const auto& face : faces) ++fv[face.size() - 1];
  return fv;
}

Int SimplicialComplex::reduced_euler(const Bounds& bounds) const {
  Int chi = -1;
  int sign = 1;
  for (const Int& f : f_vector(bounds)) {
    chi += sign * f;
    sign = -sign;
  }
  return chi;
}

SimplicialComplex order_complex(const BPoset& p, const Bounds& bounds) {
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return order_complex(p, all, bounds);
}

SimplicialComplex order_complex(const BPoset& p, const std::vector<std::size_t>& subset,
                                const Bounds& bounds) {
  std::vector<std::size_t> verts(subset);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::size_t v : verts)
    if (v >= p.size()) throw InvalidArgumentError("order_complex: index out of range");
  const std::size_t s = verts.size();
  // induced covers
  std::vector<std::vector<std::size_t>> next(s);
  std::vector<char> has_lower(s, 0);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      if (a == b || !p.leq(verts[a], verts[b])) continue;
      has_lower[b] = 1;
      bool covered = false;
      for (std::size_t c = 0; c < s && !covered; ++c)
        covered = c != a && c != b && p.leq(verts[a], verts[c]) && p.leq(verts[c], verts[b]);
      if (!covered) next[a].push_back(b);
    }
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  std::function<void(std::size_t)> extend = [&](std::size_t a) {
    current.push_back(static_cast<int>(verts[a]));
    if (next[a].empty()) {
      if (chains.size() >= bounds.ideal_cap)
        throw BoundError("order_complex: maximal-chain cap exceeded");
      chains.push_back(current);
    } else {
      for (std::size_t b : next[a]) extend(b);
    }
    current.pop_back();
  };
  for (std::size_t a = 0; a < s; ++a)
    if (!has_lower[a]) extend(a);
  return SimplicialComplex::from_facets(std::move(chains));
}

namespace {

struct BudgetHit {};

// The nonpure shelling condition for appending facet j after the facets in
// `used`: every earlier intersection with F_j must lie inside one of
// codimension one in F_j.
struct ShellSearch {
  const std::vector<std::vector<int>>* facets;
  std::vector<std::vector<std::vector<int>>> inter; // inter[i][j]
  std::vector<std::size_t> codim_target;            // |F_j| - 1
  std::uint64_t steps = 0;
  std::uint64_t budget = 0; // 0 = unbudgeted
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> order;

  bool admissible(std::uint64_t used, std::size_t j) {
    ++steps;
    if (budget && steps > budget) throw BudgetHit{};
    const std::size_t t = facets->size();
    for (std::size_t i = 0; i < t; ++i) {
      if (!(used & (std::uint64_t(1) << i))) continue;
      const auto& meet = inter[i][j];
      if (meet.size() == codim_target[j]) continue;
      bool dominated = false;
      for (std::size_t l = 0; l < t && !dominated; ++l) {
        if (!(used & (std::uint64_t(1) << l)) || inter[l][j].size() != codim_target[j]) continue;
        dominated = std::includes(inter[l][j].begin(), inter[l][j].end(), meet.begin(),
                                  meet.end());
      }
      if (!dominated) return false;
    }
    return true;
  }

  bool dfs(std::uint64_t used, std::size_t placed) {
    const std::size_t t = facets->size();
    if (placed == t) return true;
    if (dead.count(used)) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if (used & (std::uint64_t(1) << j)) continue;
      if (!admissible(used, j)) continue;
      order.push_back(j);
      if (dfs(used | (std::uint64_t(1) << j), placed + 1)) return true;
      order.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

} // namespace

ShellResult shellable(const SimplicialComplex& c, const Bounds& bounds) {
  ShellResult r;
  const auto& facets = c.facets();
  const std::size_t t = facets.size();
  if (t <= 1) {
    r.verdict = ShellVerdict::Yes;
    if (t == 1) r.order.push_back(0);
    return r;
  }
  if (t > 64) {
    r.verdict = ShellVerdict::Unknown;
    return r;
  }
  ShellSearch search;
  search.facets = &facets;
  search.inter.assign(t, std::vector<std::vector<int>>(t));
  search.codim_target.assign(t, 0);
  for (std::size_t j = 0; j < t; ++j) {
    search.codim_target[j] = facets[j].size() - 1;
    for (std::size_t i = 0; i < t; ++i) {
      std::vector<int> meet;
      std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(),
                            facets[j].end(), std::back_inserter(meet));
      search.inter[i][j] = std::move(meet);
    }
  }
  search.budget = t <= bounds.shell_facet_cap ? 0 : bounds.shell_step_budget;
  try {
    const bool found = search.dfs(0, 0);
    r.steps = search.steps;
    if (found) {
      r.verdict = ShellVerdict::Yes;
      r.order = search.order;
    } else {
      r.verdict = ShellVerdict::No;
    }
  } catch (const BudgetHit&) {
    r.steps = search.steps;
    r.verdict = ShellVerdict::Unknown;
  }
  return r;
}

std::string to_string(ShellVerdict v) {
  switch (v) {
  case ShellVerdict::Yes: return "yes";
  case ShellVerdict::No: return "no";
  default: return "unknown";
  }
}

} // namespace immvar
