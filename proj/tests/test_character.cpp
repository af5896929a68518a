#include "doctest.h"

#include "immvar/character.hpp"
#include "immvar/errors.hpp"

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

} // namespace

TEST_CASE("trivial and sign characters") {
  const GroupPtr s4 = share(PermGroup::symmetric(4));
  const Character triv = Character::trivial(s4);
  const Character sgn = Character::sign(s4);
  CHECK(triv.degree() == 1);
  CHECK(triv.one_dimensional());
  for (std::size_t i = 0; i < s4->size(); ++i) {
    CHECK(triv.value(i).is_one());
    CHECK(sgn.value(i) == CycloNum(long(s4->element(i).parity())));
  }
  CHECK(sgn.kernel_subgroup() == PermGroup::alternating(4));
  CHECK(triv.conductor() == 1);
}

TEST_CASE("generator exponent characters") {
  const GroupPtr c6 = share(PermGroup::cyclic(6));
  const Perm r = Perm::parse("612345");
  const Character chi = Character::from_generator_exponents(c6, 6, {{r, 1}});
  for (std::size_t i = 0; i < c6->size(); ++i) {
    const Perm& w = c6->element(i);
    long h = 0;
    Perm acc(6);
    while (!(acc == w)) {
      acc = r.compose(acc);
      ++h;
    }
    CHECK(chi.value(i) == CycloNum::root_of_unity(6, h));
  }
  CHECK(chi.kernel_subgroup().size() == 1);

  const GroupPtr c2 = share(PermGroup::cyclic(2));
  CHECK_THROWS_AS(Character::from_generator_exponents(c2, 3, {{Perm::parse("21"), 1}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(Character::from_generator_exponents(c6, 6, {{Perm::parse("214365"), 1}}),
                  InvalidArgumentError);
}

TEST_CASE("table characters") {
  const Character chi = s3_standard();
  CHECK(chi.degree() == 2);
  CHECK_FALSE(chi.one_dimensional());
  CHECK(chi.inner_product(chi) == CycloNum(6L));
  CHECK_THROWS_AS(chi.kernel_indices(), InvalidArgumentError);

  const GroupPtr s3 = share(PermGroup::symmetric(3));
  std::vector<CycloNum> ragged(5, CycloNum::one());
  CHECK_THROWS_AS(Character::table(s3, 1, ragged), InvalidArgumentError);

  std::vector<CycloNum> not_class(6, CycloNum::one());
  not_class[1] = CycloNum(-1L);
  CHECK_THROWS_AS(Character::table(s3, 1, not_class), InvalidArgumentError);

  std::vector<CycloNum> bad_identity(6, CycloNum::one());
  bad_identity[s3->identity_index()] = CycloNum(Rat(1, 2));
  CHECK_THROWS_AS(Character::table(s3, 1, bad_identity), InvalidArgumentError);
}

TEST_CASE("orthogonality") {
  const GroupPtr s3 = share(PermGroup::symmetric(3));
  const Character triv = Character::trivial(s3);
  const Character sgn = Character::sign(s3);
  const Character std2 = s3_standard();
  CHECK(triv.inner_product(triv) == CycloNum(6L));
  CHECK(triv.inner_product(sgn).is_zero());
  CHECK(std2.inner_product(triv).is_zero());
  CHECK(std2.inner_product(sgn).is_zero());
}

TEST_CASE("idempotent coefficients square to themselves") {
  std::vector<Character> chis = {
      Character::sign(share(PermGroup::symmetric(3))),
      Character::from_generator_exponents(share(PermGroup::cyclic(4)), 4,
                                          {{Perm::parse("4123"), 1}}),
      s3_standard(),
  };
  for (const Character& chi : chis) {
    const PermGroup& g = chi.group();
    const std::vector<CycloNum> coeff = chi.idempotent_coefficients();
    for (std::size_t t = 0; t < g.size(); ++t) {
      CycloNum conv;
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          if (g.compose_index(a, b) == t) conv += coeff[a] * coeff[b];
      CHECK(conv == coeff[t]);
    }
  }
}

TEST_CASE("restriction") {
  const GroupPtr s3 = share(PermGroup::symmetric(3));
  const Character sgn = Character::sign(s3);
  std::vector<std::size_t> a3_indices;
  for (std::size_t i = 0; i < s3->size(); ++i)
    if (s3->element(i).parity() == 1) a3_indices.push_back(i);
  const Character res = sgn.restricted(a3_indices);
  CHECK(res.group().size() == 3);
  for (std::size_t i = 0; i < res.group().size(); ++i) CHECK(res.value(i).is_one());
  CHECK_THROWS_AS(sgn.restricted({0, 3}), InvalidArgumentError);
}
