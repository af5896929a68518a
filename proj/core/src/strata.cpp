#include "immvar/strata.hpp"

#include "immvar/errors.hpp"

namespace immvar {

namespace {

void require_trivial_character(const BPoset& p, const char* where) {
  for (const CycloNum& v : p.character().values())
    if (!v.is_one())
      throw InvalidArgumentError(std::string(where) + ": needs a trivial-character poset");
}

} // namespace

Stratum make_stratum(PosetPtr base, const MultiIndex& x) {
  if (!base) throw InvalidArgumentError("make_stratum: null poset");
  require_trivial_character(*base, "make_stratum");
  Stratum s;
  s.base = std::move(base);
  s.top = x;
  s.ideal = s.base->principal_ideal(s.base->index_of(x));
  s.dimension = x.rho();
  return s;
}

std::map<MultiIndex, MVPoly> stratum_equations(const BPoset& p, const MultiIndex& x) {
  require_trivial_character(p, "stratum_equations");
  const std::size_t top = p.index_of(x);
  const PermGroup& g = p.character().group();
  const int k = p.k();
  const Matrix<MVPoly> truncated = truncate(generic_matrix(p.n(), k), x);
  const VarsPtr vars = truncated.at(1, 1).vars_ptr();
  const MultiIndex cols = MultiIndex::iota(k);
  std::map<MultiIndex, MVPoly> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const MultiIndex& y = p.element(i);
    if (!p.leq(i, top)) {
      out.emplace(y, MVPoly::zero(vars));
      continue;
    }
    const Rat scale(1, static_cast<long>(g.stabilizer_indices(y).size()));
    out.emplace(y, immanant(p.character(), y, cols, truncated) * CycloNum(scale));
  }
  return out;
}

std::vector<std::pair<MultiIndex, int>> chow_generators(const BPoset& p) {
  require_trivial_character(p, "chow_generators");
  std::vector<std::pair<MultiIndex, int>> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(p.element(i), p.rho_of(i));
  return out;
}

QPoly hp_upper_bound(const PermGroup& g, int n) { return polya_rank_generating(g, n); }

} // namespace immvar
