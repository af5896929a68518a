#include "doctest.h"

#include "immvar/character.hpp"
#include "immvar/errors.hpp"
#include "immvar/rng.hpp"
#include "immvar/strata.hpp"
#include "immvar/symtensor.hpp"

#include <memory>

using namespace immvar;

namespace {

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

PosetPtr poset_of(const Character& chi, int n) {
  return std::make_shared<const BPoset>(BPoset::build(chi, n));
}

} // namespace

TEST_CASE("matrix truncation") {
  SmallRng rng(23);
  const Matrix<Rat> a = rng.rat_matrix(3, 2);
  const Matrix<Rat> cut = truncate(a, MultiIndex({2, 3}));
  CHECK(cut.at(1, 1) == a.at(1, 1));
  CHECK(cut.at(2, 1) == a.at(2, 1));
  CHECK(cut.at(3, 1) == Rat(0));
  for (int i = 1; i <= 3; ++i) CHECK(cut.at(i, 2) == a.at(i, 2));
  CHECK_THROWS_AS(truncate(a, MultiIndex({2})), InvalidArgumentError);
  CHECK_THROWS_AS(truncate(a, MultiIndex({4, 1})), InvalidArgumentError);
}

TEST_CASE("stratum structure") {
  const Character chi = Character::trivial(share(PermGroup::symmetric(2)));
  const PosetPtr p = poset_of(chi, 3);
  const MultiIndex x({2, 3});
  const Stratum s = make_stratum(p, x);
  CHECK(s.top == x);
  CHECK(s.dimension == 3);
  CHECK(s.dimension == stratum_dimension(x));
  CHECK(s.ideal == p->principal_ideal(p->index_of(x)));

  const Character sgn = Character::sign(share(PermGroup::symmetric(2)));
  const PosetPtr q = poset_of(sgn, 3);
  CHECK_THROWS_AS(make_stratum(q, MultiIndex({1, 2})), InvalidArgumentError);
}

TEST_CASE("stratum equations specialize to coordinates") {
  const GroupPtr g = share(PermGroup::symmetric(2));
  const Character chi = Character::trivial(g);
  const PosetPtr p = poset_of(chi, 3);
  SmallRng rng(29);

  for (std::size_t xi = 0; xi < p->size(); ++xi) {
    const MultiIndex& x = p->element(xi);
    const auto eqs = stratum_equations(*p, x);
    CHECK(eqs.size() == p->size());

    for (int trial = 0; trial < 5; ++trial) {
      const Matrix<Rat> a = rng.rat_matrix(3, 2);
      const Matrix<Rat> cut = truncate(a, x);
      std::vector<std::vector<Rat>> cols(2);
      for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 3; ++i) cols[static_cast<std::size_t>(j - 1)].push_back(cut.at(i, j));
      const SymTensor w = apply_idempotent(chi, SymTensor::decomposable(cols));
      const auto coords = coords_in_basis(chi, w);

      std::vector<CycloNum> point;
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) point.emplace_back(a.at(i, j));

      for (const auto& [y, eq] : eqs) {
        const auto it = coords.find(y);
        const CycloNum expected = it == coords.end() ? CycloNum() : it->second;
        CHECK(eq.evaluate(point) == expected);
        if (!p->leq(p->index_of(y), xi)) CHECK(eq.is_zero());
      }
    }
  }
}

TEST_CASE("chow generators and bound") {
  const Character chi = Character::trivial(share(PermGroup::symmetric(2)));
  const PosetPtr p = poset_of(chi, 3);
  const auto gens = chow_generators(*p);
  CHECK(gens.size() == p->size());
  for (const auto& [x, dim] : gens) CHECK(dim == x.rho());

  const QPoly bound = hp_upper_bound(chi.group(), 3);
  CHECK(bound == polya_rank_generating(chi.group(), 3));

  const QPoly segre = hp_upper_bound(PermGroup::young(4, {2, 1, 1}), 2);
  CHECK(segre == QPoly::bracket(3, 1) * QPoly::bracket(2, 1) * QPoly::bracket(2, 1));
  CHECK(segre == QPoly({1, 3, 4, 3, 1}));
  CHECK(segre.degree() == 4);
}

TEST_CASE("stratum equations are monotone under truncation") {
  const GroupPtr g = share(PermGroup::cyclic(3));
  const Character chi = Character::trivial(g);
  const PosetPtr p = poset_of(chi, 2);
  const int k = 3;

  for (std::size_t yi = 0; yi < p->size(); ++yi) {
    const auto upper = stratum_equations(*p, p->element(yi));
    for (std::size_t xi = 0; xi < p->size(); ++xi) {
      if (!p->leq(xi, yi)) continue;
      const MultiIndex& x = p->element(xi);
      const auto lower = stratum_equations(*p, x);

      const Perm* witness = nullptr;
      for (const Perm& w : g->elements())
        if (x.leq_componentwise(act(w, p->element(yi)))) {
          witness = &w;
          break;
        }
      REQUIRE(witness != nullptr);

      std::vector<std::size_t> new_index(static_cast<std::size_t>(2 * k));
      std::vector<bool> zeroed(static_cast<std::size_t>(2 * k));
      for (int r = 1; r <= 2; ++r)
        for (int j = 1; j <= k; ++j) {
          const std::size_t from = static_cast<std::size_t>((r - 1) * k + (j - 1));
          new_index[from] = static_cast<std::size_t>((r - 1) * k + (witness->apply(j) - 1));
          zeroed[from] = r > x[j - 1];
        }

      for (const auto& [t, eq] : lower)
        CHECK(eq == upper.at(t).renamed(new_index).with_zeroed(zeroed));
    }
  }
}
