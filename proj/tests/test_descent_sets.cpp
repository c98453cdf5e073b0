#include <stdexcept>

#include "altdesc/descent_sets.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/signed_perm.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace altdesc;

TEST_SUITE("descent_sets") {

TEST_CASE("compositions and subsets") {
  CHECK(composition_of(4, 0b101) == std::vector<int>{1, 2, 1});
  CHECK(subset_of(4, {2, 2}) == 0b10);
  CHECK(composition_of(5, 0) == std::vector<int>{5});
  CHECK_THROWS_AS(composition_of(3, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(subset_of(4, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(subset_of(4, {4, 0}), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    for (SubsetMask s = 0; s < (SubsetMask{1} << (n - 1)); ++s) CHECK(subset_of(n, composition_of(n, s)) == s);
  }
  CHECK(multinomial({1, 2, 1}) == 12);
  CHECK(multinomial({3}) == 1);
}

TEST_CASE("alpha and beta point queries") {
  CHECK(alpha_minus_bruteforce(2, 0b1) == 4);
  CHECK(alpha_minus_bruteforce(2, 0) == 3);
  CHECK(alpha_minus_formula(2, 0b1) == 4);
  CHECK(alpha_minus_formula(3, 0) == 11);
  CHECK(alpha_minus_formula(4, 0b101) == 96);
  CHECK(alpha_minus_bruteforce(4, 0b101) == 96);
  CHECK(beta_minus_bruteforce(2, 0b1) == 1);
  CHECK_THROWS_AS(alpha_minus_bruteforce(8, 0), BoundExceeded);
}

TEST_CASE("formula matches the oracle on every subset") {
  for (int n = 1; n <= 6; ++n) {
    for (SubsetMask s = 0; s < (SubsetMask{1} << (n - 1)); ++s) {
      CAPTURE(n);
      CAPTURE(s);
      CHECK(alpha_minus_formula(n, s) == oracle::alpha_minus(n, s));
    }
  }
}

TEST_CASE("tables and their transforms") {
  for (int n = 1; n <= 6; ++n) {
    const DescentSetTable beta = beta_minus_table(n);
    const DescentSetTable alpha = alpha_minus_table(n);
    REQUIRE(beta.entries.size() == (std::size_t{1} << (n - 1)));
    CHECK(subset_sums(beta).entries == alpha.entries);
    CHECK(subset_differences(alpha).entries == beta.entries);
    BigInt total = 0;
    for (const auto& v : beta.entries) total += v;
    CHECK(total == pow2(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n)));
    // the empty set collects the snakes after negation
    CHECK(alpha[0] == snake_number(n));
  }
  CHECK_THROWS_AS(beta_minus_table(8), BoundExceeded);
}

}
