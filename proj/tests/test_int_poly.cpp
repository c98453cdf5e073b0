#include <random>
#include <stdexcept>

#include "altdesc/errors.hpp"
#include "altdesc/int_poly.hpp"
#include "test_helpers.hpp"

using namespace altdesc;
using test::poly;

namespace {

IntPoly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<BigInt> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(coeff(rng));
  return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("normalization and accessors") {
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{3, 4}.coeff(5) == 0);
  CHECK(IntPoly{3, 4}.coeff(-1) == 0);
  CHECK(IntPoly::monomial(BigInt(7), 3) == IntPoly{0, 0, 0, 7});
  CHECK(IntPoly::monomial(BigInt(0), 3).is_zero());
  CHECK(to_plain(IntPoly{}) == "0");
  CHECK(to_plain(IntPoly{0, 5, 0, 6}) == "0 5 0 6");
}

TEST_CASE("ring operations") {
  CHECK(IntPoly{1, 0, 2}.derivative() == IntPoly{0, 4});
  CHECK(IntPoly{1, 1} * IntPoly{1, -1} == IntPoly{1, 0, -1});
  CHECK(IntPoly{1, 1}.evaluate(BigInt(1)) == 2);
  CHECK(IntPoly{1, 1} - IntPoly{1, 1} == IntPoly{});
  CHECK(IntPoly{1, 1} + IntPoly{0, -1, 3} == IntPoly{1, 0, 3});
  CHECK(-IntPoly{1, -2} == IntPoly{-1, 2});
  CHECK(IntPoly{1, 1}.pow(3) == IntPoly{1, 3, 3, 1});
  CHECK(IntPoly{5}.pow(0) == IntPoly{1});
  CHECK(IntPoly{2, 3} * BigInt(2) == IntPoly{4, 6});
  CHECK(IntPoly{}.derivative().is_zero());
  IntPoly p{1};
  p.add_to_coeff(3, BigInt(2));
  CHECK(p == IntPoly{1, 0, 0, 2});
  p.add_to_coeff(3, BigInt(-2));
  CHECK(p == IntPoly{1});
  CHECK(first_difference(IntPoly{1, 2, 3}, IntPoly{1, 2, 4}) == 2);
  CHECK(first_difference(IntPoly{1, 2}, IntPoly{1, 2, 4}) == 2);
  CHECK_FALSE(first_difference(IntPoly{1, 2}, IntPoly{1, 2}).has_value());
}

TEST_CASE("coefficients exceed 64 bits") {
  const IntPoly big = IntPoly{1, 1}.pow(100);
  CHECK(big.coeff(50) == BigInt("100891344545564193334812497256"));
  CHECK(big.evaluate(BigInt(1)) == pow2(100));
}

TEST_CASE("homogenized Mobius substitution") {
  CHECK(mobius_hom_sub(IntPoly{0, 1}, 1) == IntPoly{1, 1});
  CHECK(mobius_hom_sub(IntPoly{1, 0, 1}, 2) == IntPoly{2, 0, 2});
  CHECK(mobius_hom_sub(IntPoly{1}, 0) == IntPoly{1});
  CHECK(mobius_hom_sub(IntPoly{}, 3).is_zero());
  CHECK_THROWS_AS(mobius_hom_sub(IntPoly{0, 0, 1}, 1), std::invalid_argument);
}

TEST_CASE("Mobius substitution composed with its inverse scales by 2^m") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = static_cast<int>(rng() % 9);
    const IntPoly p = random_poly(rng, static_cast<int>(rng() % (m + 1)));
    const auto um = static_cast<unsigned>(m);
    CHECK(inverse_mobius_hom_sub(mobius_hom_sub(p, um), um) == p * pow2(um));
    CHECK(mobius_hom_sub(inverse_mobius_hom_sub(p, um), um) == p * pow2(um));
  }
}

TEST_CASE("reciprocal transform") {
  CHECK(reciprocal_transform(IntPoly{1, 2}, 1) == IntPoly{2, 1});
  CHECK(reciprocal_transform(IntPoly{1}, 3) == IntPoly{0, 0, 0, 1});
  CHECK_THROWS_AS(reciprocal_transform(IntPoly{1, 1, 1}, 1), std::invalid_argument);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IntPoly p = random_poly(rng, static_cast<int>(rng() % 6));
    const unsigned n = 6;
    CHECK(reciprocal_transform(reciprocal_transform(p, n), n) == p);
  }
}

TEST_CASE("exact division") {
  CHECK(exact_divide(IntPoly{2, 0, 2}, IntPoly{1, 0, 1}) == IntPoly{2});
  CHECK(exact_divide(IntPoly{0, -1, 0, 1}, IntPoly{-1, 1}) == IntPoly{0, 1, 1});
  CHECK(exact_divide(IntPoly{1, 2, 1}, IntPoly{1, 1}) == IntPoly{1, 1});
  CHECK(exact_divide(IntPoly{}, IntPoly{1, 1}).is_zero());
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 0, 1}, IntPoly{1, 1}), ExactnessError);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{2}), ExactnessError);
  CHECK(exact_divide(IntPoly{4, 6}, BigInt(2)) == IntPoly{2, 3});
  CHECK_THROWS_AS(exact_divide(IntPoly{3, 6}, BigInt(2)), ExactnessError);
  CHECK_THROWS_AS(exact_divide(IntPoly{3, 6}, BigInt(0)), std::invalid_argument);
}

TEST_CASE("exact division round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly q = random_poly(rng, static_cast<int>(rng() % 6));
    IntPoly d = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    if (d.is_zero()) continue;
    CHECK(exact_divide(q * d, d) == q);
  }
}

}
