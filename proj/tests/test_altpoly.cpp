#include <stdexcept>

#include "altdesc/altpoly.hpp"
#include "altdesc/derivative_polys.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/signed_perm.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace altdesc;
using test::poly;

TEST_SUITE("altpoly") {

TEST_CASE("type A by enumeration") {
  CHECK(a_hat_bruteforce(1) == IntPoly{1});
  CHECK(a_hat_bruteforce(2) == IntPoly{1, 1});
  CHECK(a_hat_bruteforce(3) == IntPoly{2, 2, 2});
  CHECK(a_hat_bruteforce(4) == IntPoly{5, 7, 7, 5});
  CHECK(a_hat_bruteforce(6) == IntPoly{61, 117, 182, 182, 117, 61});
  for (int n = 1; n <= 8; ++n) CHECK(a_hat_bruteforce(n) == poly(oracle::a_hat(n)));
  CHECK_THROWS_AS(a_hat_bruteforce(9), BoundExceeded);
  CHECK_THROWS_AS(a_hat_bruteforce(0), std::invalid_argument);
}

TEST_CASE("type B by enumeration") {
  CHECK(b_hat_bruteforce(0) == IntPoly{1});
  CHECK(b_hat_bruteforce(1) == IntPoly{1, 1});
  CHECK(b_hat_bruteforce(2) == IntPoly{3, 2, 3});
  CHECK(b_hat_bruteforce(3) == IntPoly{11, 13, 13, 11});
  const TypeBSplit s4 = b_hat_split_bruteforce(4);
  CHECK(s4.minus == IntPoly{57, 53, 59, 23});
  CHECK(s4.plus == IntPoly{0, 23, 59, 53, 57});
  for (int n = 1; n <= 6; ++n) {
    const oracle::Split o = oracle::b_hat_split(n);
    const TypeBSplit s = b_hat_split_bruteforce(n);
    CHECK(s.minus == poly(o.minus));
    CHECK(s.plus == poly(o.plus));
  }
  CHECK_THROWS_AS(b_hat_bruteforce(8), BoundExceeded);
  CHECK_THROWS_AS(b_hat_bruteforce(-1), std::invalid_argument);
}

TEST_CASE("combinatorial routes") {
  CHECK(a_hat_combinatorial(2) == IntPoly{1, 1});
  CHECK(b_hat_combinatorial(0) == IntPoly{1});
  CHECK(b_hat_combinatorial(1) == IntPoly{1, 1});
  for (int n = 1; n <= 8; ++n) CHECK(a_hat_combinatorial(n) == a_hat_bruteforce(n));
  for (int n = 1; n <= 7; ++n) CHECK(b_hat_combinatorial(n) == b_hat_bruteforce(n));
  CHECK_THROWS_AS(a_hat_combinatorial(9), BoundExceeded);
}

TEST_CASE("orbit polynomials") {
  const OrbitPolynomials one = orbit_polynomial(Permutation({1}));
  CHECK(one.enumerated == IntPoly{2});
  CHECK(one.closed_form == IntPoly{2});
  for (const auto& w : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    const OrbitPolynomials o = orbit_polynomial(Permutation(w));
    CHECK(o.enumerated == IntPoly{2, 2});
    CHECK(o.closed_form == IntPoly{2, 2});
  }
  CHECK(orbit_weight(1, 1, 1) == IntPoly{2, 2, 2, 2});
  CHECK_THROWS_AS(orbit_polynomial(Permutation()), std::invalid_argument);
}

TEST_CASE("derivative polynomial routes") {
  CHECK(a_hat_from_p(IntPoly{1, 0, 1}, 1) == IntPoly{1});
  CHECK(a_hat_via_p(2) == IntPoly{1, 1});
  CHECK(b_hat_via_q(0) == IntPoly{1});
  CHECK(b_hat_via_q(1) == IntPoly{1, 1});
  CHECK(b_hat_via_q(2) == IntPoly{3, 2, 3});
  for (int n = 1; n <= 8; ++n) CHECK(a_hat_via_p(n) == a_hat_bruteforce(n));
  for (int n = 0; n <= 7; ++n) CHECK(b_hat_via_q(n) == b_hat_bruteforce(n));
}

TEST_CASE("a broken P_n surfaces as an exactness error") {
  IntPoly broken = p_poly(3);
  broken.add_to_coeff(0, BigInt(1));
  CHECK_THROWS_AS(a_hat_from_p(broken, 3), ExactnessError);
}

TEST_CASE("recurrences") {
  const auto rows = b_hat_recurrence_rows(7);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == IntPoly{1});
  CHECK(rows[1] == IntPoly{1, 1});
  CHECK(rows[2] == IntPoly{3, 2, 3});
  for (int n = 0; n <= 7; ++n) CHECK(rows[static_cast<std::size_t>(n)] == b_hat_bruteforce(n));
  CHECK(b_hat_diff_recurrence(2) == IntPoly{3, 2, 3});
  CHECK(b_hat_diff_recurrence(5) == b_hat_via_q(5));
  CHECK(b_hat_diff_recurrence(0) == IntPoly{1});
  const auto long_rows = b_hat_recurrence_rows(20);
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(long_rows[static_cast<std::size_t>(n)] == b_hat_via_q(n));
    CHECK(b_hat_diff_recurrence(n) == b_hat_via_q(n));
    CHECK(long_rows[static_cast<std::size_t>(n)].coeff(0) == snake_number(n));
  }
  CHECK_THROWS_AS(b_hat_recurrence_rows(0), std::invalid_argument);
}

TEST_CASE("scalar anchors from the formula routes") {
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    const auto un = static_cast<unsigned>(n);
    CHECK(a_hat_via_p(n).evaluate(BigInt(1)) == factorial(un));
    CHECK(b_hat_via_q(n).evaluate(BigInt(1)) == pow2(un) * factorial(un));
  }
}

TEST_CASE("type B split from descent sets") {
  for (int n = 1; n <= 7; ++n) {
    const TypeBSplit s = b_hat_split_bruteforce(n);
    CHECK(b_hat_minus_via_descent_sets(n) == s.minus);
    CHECK(b_hat_plus_via_descent_sets(n) == s.plus);
    CHECK(reciprocal_transform(s.minus, static_cast<unsigned>(n)) == s.plus);
  }
  CHECK_THROWS_AS(b_hat_minus_via_descent_sets(0), std::invalid_argument);
}

}
