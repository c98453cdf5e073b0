#include "altdesc/derivative_polys.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "altdesc/errors.hpp"

namespace altdesc {

namespace {

// Grows a memo table of a first-order recurrence; published entries are
// never modified, so readers only need a shared lock.
class RecurrenceMemo {
 public:
  RecurrenceMemo(IntPoly seed, IntPoly (*step)(const IntPoly&, int))
      : table_{std::move(seed)}, step_(step) {}

  IntPoly get(int n) {
    if (n < 0) throw std::invalid_argument("derivative polynomial index must be >= 0");
    {
      std::shared_lock lock(mu_);
      if (n < static_cast<int>(table_.size())) return table_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mu_);
    while (static_cast<int>(table_.size()) <= n) {
      const int m = static_cast<int>(table_.size()) - 1;
      table_.push_back(step_(table_.back(), m));
    }
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  std::shared_mutex mu_;
  std::vector<IntPoly> table_;
  IntPoly (*step_)(const IntPoly&, int);
};

const IntPoly kOnePlusXSquared{1, 0, 1};

IntPoly next_p(const IntPoly& p, int) { return kOnePlusXSquared * p.derivative(); }

IntPoly next_q(const IntPoly& q, int) {
  return IntPoly{0, 1} * q + kOnePlusXSquared * q.derivative();
}

IntPoly statistics_sum(int n, BoundaryConvention conv, const EnumerationBounds& bounds,
                       Exec exec, const char* name) {
  if (n < 1) throw std::invalid_argument(std::string(name) + ": n must be >= 1");
  if (n > bounds.type_a) {
    throw BoundExceeded(std::string(name) + ": n=" + std::to_string(n) +
                        " exceeds the type A enumeration bound " + std::to_string(bounds.type_a) +
                        "; use the recurrence route");
  }
  IntPoly sum;
  for (const ProfileCount& c : profile_histogram(n, conv, exec)) {
    sum += IntPoly::monomial(from_u64(c.count), static_cast<unsigned>(c.dda)) *
           kOnePlusXSquared.pow(static_cast<unsigned>(c.val));
  }
  return sum;
}

}  // namespace

IntPoly p_poly(int n) {
  static RecurrenceMemo memo(IntPoly{0, 1}, next_p);
  return memo.get(n);
}

IntPoly q_poly(int n) {
  static RecurrenceMemo memo(IntPoly{1}, next_q);
  return memo.get(n);
}

IntPoly p_via_statistics(int n, const EnumerationBounds& bounds, Exec exec) {
  return statistics_sum(n, BoundaryConvention::closed_high, bounds, exec, "p_via_statistics");
}

IntPoly q_via_statistics(int n, const EnumerationBounds& bounds, Exec exec) {
  return statistics_sum(n, BoundaryConvention::zero_high, bounds, exec, "q_via_statistics");
}

}  // namespace altdesc
