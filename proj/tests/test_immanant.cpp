#include "doctest.h"

#include "immvar/character.hpp"
#include "immvar/errors.hpp"
#include "immvar/immanant.hpp"
#include "immvar/oracles.hpp"
#include "immvar/rng.hpp"

#include <memory>

using namespace immvar;

namespace {

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

Character s3_standard() {
  const GroupPtr g = share(PermGroup::symmetric(3));
  std::vector<CycloNum> values;
  for (const Perm& w : g->elements()) {
    switch (w.cycle_count()) {
      case 3: values.emplace_back(2L); break;
      case 2: values.emplace_back(0L); break;
      default: values.emplace_back(-1L); break;
    }
  }
  return Character::table(g, 1, values);
}

MVPoly entry(const Matrix<MVPoly>& a, int i, int j) { return a.at(i, j); }

} // namespace

TEST_CASE("two displayed immanants") {
  const Matrix<MVPoly> a = generic_matrix(3, 3);
  const MultiIndex x22({2, 2});
  const MultiIndex y23({2, 3});
  const MultiIndex x12({1, 2});
  const MultiIndex y13({1, 3});

  Matrix<MVPoly> a2(2, 3, MVPoly::zero(a.at(1, 1).vars_ptr()));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) a2.at(i, j) = a.at(i, j);

  const Character triv = Character::trivial(share(PermGroup::symmetric(2)));
  const Character sgn = Character::sign(share(PermGroup::symmetric(2)));

  CHECK(immanant(triv, x22, y23, a2) ==
        CycloNum(Rat(2)) * entry(a, 2, 2) * entry(a, 2, 3));
  CHECK(immanant(sgn, x12, y13, a2) ==
        entry(a, 1, 1) * entry(a, 2, 3) - entry(a, 2, 1) * entry(a, 1, 3));
  CHECK(immanant(sgn, x22, y23, a2).is_zero());
}

TEST_CASE("determinant and permanent recovery") {
  SmallRng rng(3);
  for (int n = 2; n <= 5; ++n) {
    const GroupPtr sn = share(PermGroup::symmetric(n));
    const Character sgn = Character::sign(sn);
    const Character triv = Character::trivial(sn);
    const MultiIndex diag = MultiIndex::iota(n);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix<Rat> m = rng.rat_matrix(n, n);
      CHECK(immanant(sgn, diag, diag, m) == CycloNum(determinant_cofactor(m)));
      CHECK(immanant(triv, diag, diag, m) == CycloNum(permanent_ryser(m)));
    }
  }
}

TEST_CASE("oracles on known matrices") {
  const Matrix<Rat> m = Matrix<Rat>::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  CHECK(determinant_cofactor(m) == Rat(-2));
  CHECK(permanent_ryser(m) == Rat(10));
  const Matrix<Rat> upper = Matrix<Rat>::from_rows(
      {{Rat(2), Rat(5), Rat(7)}, {Rat(0), Rat(3), Rat(1)}, {Rat(0), Rat(0), Rat(4)}});
  CHECK(determinant_cofactor(upper) == Rat(24));
}

TEST_CASE("row permutation equivariance") {
  const Character chi = Character::from_generator_exponents(share(PermGroup::cyclic(4)), 4,
                                                            {{Perm::parse("4123"), 1}});
  const PermGroup& g = chi.group();
  SmallRng rng(5);
  const Matrix<Rat> m = rng.rat_matrix(3, 2);
  MultiIndexRange rows(3, 4);
  MultiIndexRange cols(2, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiIndex x = rows.at(rng.below(rows.count()));
    const MultiIndex y = cols.at(rng.below(cols.count()));
    const CycloNum base = immanant(chi, x, y, m);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(immanant(chi, act(g.element(i), x), y, m) ==
            chi.value(g.inverse_index(i)) * base);
  }
}

TEST_CASE("idempotent entry identity") {
  SmallRng rng(7);
  std::vector<std::pair<Character, std::pair<int, int>>> configs = {
      {Character::sign(share(PermGroup::symmetric(2))), {2, 3}},
      {s3_standard(), {3, 2}},
      {Character::from_generator_exponents(share(PermGroup::cyclic(3)), 3,
                                           {{Perm::parse("312"), 1}}),
       {2, 2}},
  };
  for (const auto& [chi, shape] : configs) {
    const auto [rows, cols] = shape;
    const int k = chi.group().k();
    const Matrix<Rat> m = rng.rat_matrix(rows, cols);
    MultiIndexRange xr(rows, k), yr(cols, k);
    xr.for_each([&](const MultiIndex& x) {
      yr.for_each([&](const MultiIndex& y) { CHECK(check_immanant_identity(chi, m, x, y)); });
    });
  }
}

TEST_CASE("parametric equations match the displayed system") {
  const Character chi = s3_standard();
  const auto eqs = parametric_equations(chi, 2);
  CHECK(eqs.size() == 8);

  const Matrix<MVPoly> a = generic_matrix(2, 3);
  auto v = [&](int i, int j) { return a.at(i, j); };
  const CycloNum two(2L);

  CHECK(eqs.at(MultiIndex({1, 1, 1})).is_zero());
  CHECK(eqs.at(MultiIndex({2, 2, 2})).is_zero());
  CHECK(eqs.at(MultiIndex({1, 1, 2})) ==
        two * v(1, 1) * v(1, 2) * v(2, 3) - v(2, 1) * v(1, 2) * v(1, 3) -
            v(1, 1) * v(2, 2) * v(1, 3));
  CHECK(eqs.at(MultiIndex({1, 2, 1})) ==
        two * v(1, 1) * v(2, 2) * v(1, 3) - v(1, 1) * v(1, 2) * v(2, 3) -
            v(2, 1) * v(1, 2) * v(1, 3));
  CHECK(eqs.at(MultiIndex({1, 2, 2})) ==
        two * v(1, 1) * v(2, 2) * v(2, 3) - v(2, 1) * v(1, 2) * v(2, 3) -
            v(2, 1) * v(2, 2) * v(1, 3));
  CHECK(eqs.at(MultiIndex({2, 1, 1})) ==
        two * v(2, 1) * v(1, 2) * v(1, 3) - v(1, 1) * v(2, 2) * v(1, 3) -
            v(1, 1) * v(1, 2) * v(2, 3));
  CHECK(eqs.at(MultiIndex({2, 1, 2})) ==
        two * v(2, 1) * v(1, 2) * v(2, 3) - v(2, 1) * v(2, 2) * v(1, 3) -
            v(1, 1) * v(2, 2) * v(2, 3));
  CHECK(eqs.at(MultiIndex({2, 2, 1})) ==
        two * v(2, 1) * v(2, 2) * v(1, 3) - v(1, 1) * v(2, 2) * v(2, 3) -
            v(2, 1) * v(1, 2) * v(2, 3));
}

TEST_CASE("immanant argument validation") {
  const Character sgn = Character::sign(share(PermGroup::symmetric(2)));
  const Matrix<Rat> m(2, 2, Rat(1));
  CHECK_THROWS_AS(immanant(sgn, MultiIndex({1, 2, 1}), MultiIndex({1, 2}), m),
                  InvalidArgumentError);
  CHECK_THROWS_AS(immanant(sgn, MultiIndex({1, 3}), MultiIndex({1, 2}), m),
                  InvalidArgumentError);
}
