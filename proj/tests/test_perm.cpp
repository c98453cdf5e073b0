#include <set>
#include <sstream>
#include <stdexcept>

#include "altdesc/perm.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace altdesc;

TEST_SUITE("core_perm") {

TEST_CASE("permutation construction validates the word") {
  CHECK(Permutation({2, 1, 3})(1) == 2);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
  CHECK(Permutation({1, 3, 2}).reversed() == Permutation({2, 3, 1}));
}

TEST_CASE("iteration over S_n") {
  SUBCASE("n = 0 yields the empty word once") {
    int count = 0;
    for (const Permutation& p : Permutations(0)) {
      CHECK(p.size() == 0);
      ++count;
    }
    CHECK(count == 1);
  }
  SUBCASE("n = 2 in lexicographic order") {
    std::vector<Permutation> seen;
    for (const Permutation& p : Permutations(2)) seen.push_back(p);
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == Permutation({1, 2}));
    CHECK(seen[1] == Permutation({2, 1}));
  }
  SUBCASE("n = 8 gives 8! distinct words") {
    std::set<std::vector<int>> seen;
    for (const Permutation& p : Permutations(8)) seen.emplace(p.word().begin(), p.word().end());
    CHECK(seen.size() == 40320);
  }
  SUBCASE("prefix streams partition S_n") {
    std::size_t total = 0;
    for (int first = 1; first <= 5; ++first) {
      for (const Permutation& p : Permutations(5, {first})) {
        CHECK(p(1) == first);
        ++total;
      }
    }
    CHECK(total == 120);
    int count = 0;
    for (const Permutation& p : Permutations(4, {3, 1})) {
      CHECK(p(1) == 3);
      CHECK(p(2) == 1);
      ++count;
    }
    CHECK(count == 2);
  }
}

TEST_CASE("alternating descent set") {
  CHECK(alt_descent_set(Permutation({1, 2, 3})) == PositionSet{2});
  CHECK(alt_descent_set(Permutation({2, 1, 3})) == PositionSet{1, 2});
  CHECK(alt_descent_set(Permutation({3, 2, 1})) == PositionSet{1});
  CHECK(alt_descent_count(Permutation({1})) == 0);
  CHECK(alt_descent_set(Permutation()).empty());
}

TEST_CASE("alternating descent count matches the oracle on S_7") {
  for (const Permutation& p : Permutations(7)) {
    const std::vector<int> w(p.word().begin(), p.word().end());
    REQUIRE(alt_descent_count(p) == oracle::alt_descents(w));
  }
}

TEST_CASE("stat profile examples") {
  SUBCASE("123 closed-high") {
    const Permutation p({1, 2, 3});
    CHECK(decorated_value(p, 0, BoundaryConvention::closed_high) == 4);
    CHECK(decorated_value(p, 4, BoundaryConvention::closed_high) == 4);
    const StatProfile s = stat_profile(p, BoundaryConvention::closed_high);
    CHECK(s.val == 1);
    CHECK(s.val_set == PositionSet{1});
    CHECK(s.da == 2);
    CHECK(s.da_set == PositionSet{2, 3});
    CHECK(s.dd == 0);
    CHECK(s.pk == 0);
  }
  SUBCASE("213 closed-high") {
    const StatProfile s = stat_profile(Permutation({2, 1, 3}), BoundaryConvention::closed_high);
    CHECK(s.dd_set == PositionSet{1});
    CHECK(s.val_set == PositionSet{2});
    CHECK(s.da_set == PositionSet{3});
    CHECK(s.pk == 0);
  }
  SUBCASE("123 zero-high") {
    const Permutation p({1, 2, 3});
    CHECK(decorated_value(p, 0, BoundaryConvention::zero_high) == 0);
    const StatProfile s = stat_profile(p, BoundaryConvention::zero_high);
    CHECK(s.da == 3);
    CHECK(s.dd + s.val + s.pk == 0);
    CHECK(s.dda() == 3);
  }
  SUBCASE("a peak") {
    const StatProfile s = stat_profile(Permutation({1, 3, 2}), BoundaryConvention::zero_high);
    CHECK(s.pk_set == PositionSet{2});
    CHECK(s.val_set == PositionSet{3});
  }
}

TEST_CASE("boundary facts hold exhaustively for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& p : Permutations(n)) {
      const StatProfile c = stat_profile(p, BoundaryConvention::closed_high);
      REQUIRE(c.val == c.pk + 1);
      REQUIRE(2 * c.val + c.dda() == n + 1);
      const StatProfile z = stat_profile(p, BoundaryConvention::zero_high);
      REQUIRE(z.val == z.pk);
      REQUIRE(2 * z.val + z.dda() == n);
    }
  }
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating(Permutation({2, 1, 3}), Direction::down_up));
  CHECK_FALSE(is_alternating(Permutation({1, 2, 3}), Direction::down_up));
  CHECK(is_alternating(Permutation(), Direction::down_up));
  CHECK(is_alternating(Permutation(), Direction::up_down));
  CHECK(is_alternating(Permutation({1, 3, 2}), Direction::up_down));
  CHECK_FALSE(is_alternating(Permutation({1, 3, 2}), Direction::down_up));
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(1) == 1);
  CHECK(euler_number(3) == 2);
  CHECK(euler_number(4) == 5);
  CHECK_THROWS_AS(euler_number(0), std::invalid_argument);
  for (int n = 1; n <= 9; ++n) CHECK(euler_number(n) == oracle::euler(n));
  // Seidel triangle continues past brute-force reach
  CHECK(euler_number(20) == BigInt("370371188237525"));
}

TEST_CASE("position set helpers") {
  PositionSet s{0, 3};
  s.insert(5);
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  std::ostringstream os;
  os << s;
  CHECK(os.str() == "{0,3,5}");
}

}
