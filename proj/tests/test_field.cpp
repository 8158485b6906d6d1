#include "doctest.h"
#include "rcurves/field.hpp"

using namespace rcurves;

TEST_CASE("rational arithmetic is canonical") {
  RationalField F;
  auto a = F.parse("2/4");
  CHECK(F.to_string(a) == "1/2");
  CHECK(F.to_string(F.parse("3/-6")) == "-1/2");
  CHECK(F.to_string(F.parse("-7")) == "-7");
  CHECK(F.eq(F.add(a, a), F.one()));
  CHECK(F.to_string(F.mul(F.parse("2/3"), F.parse("9/4"))) == "3/2");
  CHECK(F.to_string(F.inv(F.parse("-2/5"))) == "-5/2");
  CHECK(F.is_zero(F.sub(a, a)));
  CHECK(F.to_string(F.from_int(-12)) == "-12");
  CHECK_THROWS_AS(F.inv(F.zero()), PreconditionError);
  CHECK_THROWS_AS(F.parse("1/0"), ValidationError);
  CHECK_THROWS_AS(F.parse("zebra"), ValidationError);
}

TEST_CASE("rational rows scale to primitive integer vectors") {
  RationalField F;
  std::vector<mpq_class> row{F.parse("1/2"), F.parse("1/3"), F.zero()};
  F.make_primitive(row);
  CHECK(F.to_string(row[0]) == "3");
  CHECK(F.to_string(row[1]) == "2");
  std::vector<mpq_class> row2{F.parse("4"), F.parse("6")};
  F.make_primitive(row2);
  CHECK(F.to_string(row2[0]) == "2");
  CHECK(F.to_string(row2[1]) == "3");
}

TEST_CASE("prime field arithmetic") {
  PrimeField F(101);
  CHECK(F.modulus() == 101);
  CHECK(F.from_int(-1) == 100);
  CHECK(F.from_int(202) == 0);
  CHECK(F.add(100, 2) == 1);
  CHECK(F.sub(1, 2) == 100);
  CHECK(F.neg(0) == 0);
  for (std::uint64_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.eq(F.parse("100"), F.from_int(-1)));
  CHECK_THROWS_AS(F.inv(0), PreconditionError);
  CHECK_THROWS_AS(F.parse("10x"), ValidationError);
}

TEST_CASE("prime field validates the modulus") {
  CHECK_THROWS_AS(PrimeField(1), ValidationError);
  CHECK_THROWS_AS(PrimeField(100), ValidationError);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), ValidationError);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1 is prime
  PrimeField F2(2);
  CHECK(F2.add(1, 1) == 0);
  CHECK(F2.inv(1) == 1);
}
