#include <stdexcept>
#include <thread>

#include "altdesc/derivative_polys.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/series.hpp"
#include "test_helpers.hpp"

using namespace altdesc;

TEST_SUITE("derivative_polys") {

TEST_CASE("P_n") {
  CHECK(p_poly(0) == IntPoly{0, 1});
  CHECK(p_poly(1) == IntPoly{1, 0, 1});
  CHECK(p_poly(3) == IntPoly{2, 0, 8, 0, 6});
  CHECK(p_poly(5) == IntPoly{16, 0, 136, 0, 240, 0, 120});
  CHECK_THROWS_AS(p_poly(-1), std::invalid_argument);
}

TEST_CASE("Q_n") {
  CHECK(q_poly(0) == IntPoly{1});
  CHECK(q_poly(2) == IntPoly{1, 0, 2});
  CHECK(q_poly(3) == IntPoly{0, 5, 0, 6});
  CHECK(q_poly(5) == IntPoly{0, 61, 0, 180, 0, 120});
  CHECK_THROWS_AS(q_poly(-1), std::invalid_argument);
}

TEST_CASE("P_n(0) and Q_n(0) are the tangent and secant numbers") {
  // n-th derivatives of tan and sec at 0 read off the Maclaurin series
  const int order = 12;
  const SeriesQx tan = trig_series(Trig::tan, order, 0);
  const SeriesQx sec = trig_series(Trig::sec, order, 0);
  for (int n = 0; n <= order; ++n) {
    CAPTURE(n);
    const Rational scale(factorial(static_cast<unsigned>(n)));
    CHECK(Rational(p_poly(n).coeff(0)) == tan[n].coeff(0) * scale);
    CHECK(Rational(q_poly(n).coeff(0)) == sec[n].coeff(0) * scale);
  }
}

TEST_CASE("statistic sums reproduce the derivative polynomials") {
  CHECK(p_via_statistics(1) == IntPoly{1, 0, 1});
  CHECK(q_via_statistics(1) == IntPoly{0, 1});
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(p_via_statistics(n) == p_poly(n));
    CHECK(q_via_statistics(n) == q_poly(n));
  }
}

TEST_CASE("statistic sums respect the enumeration bound") {
  EnumerationBounds small{4, 4};
  CHECK_NOTHROW(p_via_statistics(4, small));
  CHECK_THROWS_AS(p_via_statistics(5, small), BoundExceeded);
  CHECK_THROWS_AS(q_via_statistics(5, small), BoundExceeded);
  CHECK_THROWS_AS(p_via_statistics(0), std::invalid_argument);
}

TEST_CASE("memoized access is safe from several threads") {
  std::vector<IntPoly> results(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = q_poly(30 + t % 3); });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == q_poly(30 + t % 3));
}

}
