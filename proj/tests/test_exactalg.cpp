#include "doctest.h"

#include "immvar/cyclotomic.hpp"
#include "immvar/errors.hpp"
#include "immvar/mvpoly.hpp"
#include "immvar/qpoly.hpp"
#include "immvar/rational.hpp"

using namespace immvar;

TEST_CASE("rational parsing") {
  CHECK(parse_rat("2/3") == Rat(2, 3));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK(to_string(Rat(-2, 4)) == "-1/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("2/-3"), ParseError);
  CHECK(is_integer(Rat(6, 3)));
  CHECK(to_integer(Rat(6, 3)) == 2);
  CHECK_THROWS_AS(to_integer(Rat(1, 2)), InvalidArgumentError);
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(int_pow(Int(-2), 3) == -8);
  CHECK(int_pow(Int(7), 0) == 1);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity") {
  for (unsigned m = 2; m <= 12; ++m) {
    CycloNum sum;
    for (unsigned e = 0; e < m; ++e) sum += CycloNum::root_of_unity(m, e);
    CHECK(sum.is_zero());
  }
  const CycloNum z6 = CycloNum::root_of_unity(6, 1);
  CHECK(z6 * z6 == z6 - CycloNum::one());
  CHECK(CycloNum::root_of_unity(6, 6).is_one());
  CHECK(CycloNum::root_of_unity(6, -1) == CycloNum::root_of_unity(6, 5));
  CHECK(CycloNum::root_of_unity(2, 1) == CycloNum(-1L));
}

TEST_CASE("conductor lifting") {
  const CycloNum z3 = CycloNum::root_of_unity(3, 1);
  CHECK(z3.lifted(6) == CycloNum::root_of_unity(6, 2));
  CHECK(z3 + CycloNum::root_of_unity(2, 1) == CycloNum::root_of_unity(6, 2) - CycloNum::one());
  const CycloNum mixed = CycloNum::root_of_unity(4, 1) * CycloNum::root_of_unity(3, 1);
  CHECK(mixed == CycloNum::root_of_unity(12, 7));
}

TEST_CASE("field inverses") {
  for (unsigned m : {5u, 8u, 12u}) {
    const CycloNum z = CycloNum::root_of_unity(m, 1);
    const CycloNum v = z + CycloNum(Rat(2)) * z * z - CycloNum::one();
    CHECK((v * v.inverse()).is_one());
  }
  CHECK_THROWS_AS(CycloNum().inverse(), InvalidArgumentError);
}

TEST_CASE("cyclotomic printing") {
  CHECK(CycloNum(Rat(-1, 2)).to_string() == "-1/2");
  CHECK(CycloNum::root_of_unity(6, 1).to_string() == "z_6");
  CHECK((CycloNum::root_of_unity(6, 1) - CycloNum::one()).to_string() == "z_6 - 1");
  CHECK(CycloNum().to_string() == "0");
  CHECK(CycloNum::root_of_unity(4, 2).is_rational());
  CHECK(CycloNum::root_of_unity(4, 2).to_rational() == Rat(-1));
}

TEST_CASE("q-polynomials") {
  CHECK(QPoly::bracket(3, 1).to_string() == "q^2 + q + 1");
  CHECK(QPoly::bracket(2, 2).to_string() == "q^2 + 1");
  CHECK(QPoly::bracket(1, 5) == QPoly::one());
  const QPoly p = QPoly::bracket(2, 1).pow(2);
  CHECK(p.to_string() == "q^2 + 2*q + 1");
  CHECK(p.value_at_one() == 4);
  CHECK(p.palindromic());
  CHECK_FALSE((QPoly::bracket(2, 1) + QPoly::one()).palindromic());
  QPoly d = QPoly({Int(2), Int(4)});
  d.divide_exact(Int(2));
  CHECK(d == QPoly({Int(1), Int(2)}));
  QPoly bad = QPoly({Int(3)});
  CHECK_THROWS_AS(bad.divide_exact(Int(2)), CheckError);
  CHECK(QPoly().to_string() == "0");
  CHECK(QPoly().degree() == -1);
}

TEST_CASE("multivariate arithmetic") {
  const VarsPtr vars = make_vars({"x", "y"});
  const MVPoly x = MVPoly::variable(vars, 0);
  const MVPoly y = MVPoly::variable(vars, 1);
  const MVPoly one = MVPoly::constant(vars, CycloNum::one());

  CHECK((x + y) * (x + y) == x * x + CycloNum(Rat(2)) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK((x * y).total_degree() == 2);
  CHECK(MVPoly::zero(vars).total_degree() == -1);
  CHECK((x * x + y).to_string() == "x^2 + y");
  CHECK((y - x * x).to_string() == "-x^2 + y");

  SUBCASE("evaluation is a ring morphism") {
    const std::vector<CycloNum> pt = {CycloNum::root_of_unity(5, 1), CycloNum(Rat(2, 3))};
    const MVPoly p = x * x * y - y + one;
    const MVPoly q = x * y + CycloNum(Rat(3)) * one;
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
  }

  SUBCASE("zeroing and renaming") {
    const MVPoly p = x * x + x * y + y;
    CHECK(p.with_zeroed({false, true}) == x * x);
    CHECK(p.renamed({1, 0}) == y * y + x * y + x);
    CHECK_THROWS_AS(p.evaluate({CycloNum::one()}), InvalidArgumentError);
  }
}
