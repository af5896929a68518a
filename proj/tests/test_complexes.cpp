#include "doctest.h"

#include "immvar/bposet.hpp"
#include "immvar/character.hpp"
#include "immvar/complexes.hpp"
#include "immvar/errors.hpp"

#include <memory>

using namespace immvar;

namespace {

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

Character faithful_cyclic(int k) {
  const GroupPtr g = share(PermGroup::cyclic(k));
  std::vector<int> one_line(static_cast<std::size_t>(k));
  one_line[0] = k;
  for (int i = 1; i < k; ++i) one_line[static_cast<std::size_t>(i)] = i;
  return Character::from_generator_exponents(g, static_cast<unsigned>(k),
                                             {{Perm::from_one_line(one_line), 1}});
}

} // namespace

TEST_CASE("facet canonicalization") {
  const SimplicialComplex c =
      SimplicialComplex::from_facets({{3, 1}, {1, 2}, {2}, {1, 3}});
  CHECK(c.facets() == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
  CHECK(c.vertices() == std::vector<int>{1, 2, 3});
  CHECK(c.dimension() == 1);
  CHECK(SimplicialComplex::from_facets({}).dimension() == -1);
}

TEST_CASE("f-vectors and euler characteristics") {
  const SimplicialComplex triangle = SimplicialComplex::from_facets({{1, 2, 3}});
  CHECK(triangle.f_vector() == std::vector<Int>{3, 3, 1});
  CHECK(triangle.reduced_euler() == 0);

  const SimplicialComplex circle = SimplicialComplex::from_facets({{1, 2}, {1, 3}, {2, 3}});
  CHECK(circle.f_vector() == std::vector<Int>{3, 3});
  CHECK(circle.reduced_euler() == -1);

  const SimplicialComplex empty = SimplicialComplex::from_facets({});
  CHECK(empty.reduced_euler() == -1);

  const SimplicialComplex point = SimplicialComplex::from_facets({{1}});
  CHECK(point.reduced_euler() == 0);
}

TEST_CASE("order complexes") {
  const Character chi = Character::trivial(share(PermGroup::symmetric(2)));
  const BPoset p = BPoset::build(chi, 3);
  const SimplicialComplex full = order_complex(p);
  CHECK(full.dimension() + 1 == 1 + p.rank_of(p.maximal_elements()[0]));
  for (const auto& facet : full.facets()) CHECK(facet.size() == 5);

  const SimplicialComplex empty = order_complex(p, std::vector<std::size_t>{});
  CHECK(empty.facets().empty());
}

TEST_CASE("mobius equals reduced euler characteristic") {
  std::vector<std::pair<Character, int>> samples = {
      {Character::trivial(share(PermGroup::symmetric(2))), 3},
      {Character::trivial(share(PermGroup::alternating(3))), 3},
      {faithful_cyclic(6), 2},
  };
  for (const auto& [chi, n] : samples) {
    const BPoset p = BPoset::build(chi, n);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (i == j || !p.leq(i, j)) continue;
        const SimplicialComplex open = order_complex(p, p.open_interval(i, j));
        CHECK(open.reduced_euler() == p.mobius(i, j));
      }
  }
}

TEST_CASE("shellability verdicts") {
  const SimplicialComplex simplex = SimplicialComplex::from_facets({{1, 2, 3, 4}});
  CHECK(shellable(simplex).verdict == ShellVerdict::Yes);

  const SimplicialComplex circle = SimplicialComplex::from_facets({{1, 2}, {1, 3}, {2, 3}});
  const ShellResult ring = shellable(circle);
  CHECK(ring.verdict == ShellVerdict::Yes);
  CHECK(ring.order.size() == 3);

  const SimplicialComplex split = SimplicialComplex::from_facets({{1, 2}, {3, 4}});
  CHECK(shellable(split).verdict == ShellVerdict::No);

  const SimplicialComplex empty = SimplicialComplex::from_facets({});
  CHECK(shellable(empty).verdict == ShellVerdict::Yes);

  CHECK(to_string(ShellVerdict::Yes) == "yes");
  CHECK(to_string(ShellVerdict::No) == "no");
  CHECK(to_string(ShellVerdict::Unknown) == "unknown");
}

TEST_CASE("budgeted search reports unknown") {
  std::vector<std::vector<int>> many;
  for (int i = 0; i < 30; ++i) many.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
  const SimplicialComplex wide = SimplicialComplex::from_facets(many);
  Bounds tiny;
  tiny.shell_facet_cap = 4;
  tiny.shell_step_budget = 3;
  CHECK(shellable(wide, tiny).verdict == ShellVerdict::Unknown);
}

TEST_CASE("open intervals of the symmetric poset shell") {
  const Character chi = Character::trivial(share(PermGroup::symmetric(3)));
  const BPoset p = BPoset::build(chi, 3);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j || !p.leq(i, j)) continue;
      const ShellResult r = shellable(order_complex(p, p.open_interval(i, j)));
      CHECK(r.verdict == ShellVerdict::Yes);
    }
}
