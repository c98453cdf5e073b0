// Serial reference implementations. Written against the public value types so
// they double as an independent check on the OpenMP kernels.

#include <algorithm>
#include <map>
#include <tuple>

#include "altdesc/signed_perm.hpp"
#include "kernels_detail.hpp"

namespace altdesc::detail {

std::vector<std::uint64_t> alt_descent_histogram_A_serial(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (const Permutation& p : Permutations(n)) ++counts[static_cast<std::size_t>(alt_descent_count(p))];
  return counts;
}

TypeBHistograms alt_descent_histograms_B_serial(int n) {
  TypeBHistograms h;
  const auto size = static_cast<std::size_t>(n) + 1;
  h.minus.assign(size, 0);
  h.plus.assign(size, 0);
  h.unsigned_positions.assign(size, 0);
  for (const SignedPermutation& s : SignedPermutations(n)) {
    const auto d = static_cast<std::size_t>(alt_descent_count_B(s));
    ++(s(1) < 0 ? h.minus : h.plus)[d];
    ++h.unsigned_positions[static_cast<std::size_t>(alt_descent_count_unsigned_positions(s))];
  }
  return h;
}

std::vector<ProfileCount> profile_histogram_serial(int n, BoundaryConvention conv) {
  std::map<std::tuple<int, int, int>, std::uint64_t> acc;
  for (const Permutation& p : Permutations(n)) {
    const StatProfile prof = stat_profile(p, conv);
    ++acc[{prof.dda(), prof.val, prof.pk}];
  }
  std::vector<ProfileCount> out;
  for (const auto& [key, count] : acc) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  }
  return out;
}

std::vector<std::uint64_t> descent_set_counts_B_minus_serial(int n) {
  std::vector<std::uint64_t> counts(std::size_t{1} << (n - 1), 0);
  for (const SignedPermutation& s : SignedPermutations(n)) {
    if (s(1) > 0) continue;
    // Position 0 never occurs on B_n^-; shift so bit i-1 stands for position i.
    ++counts[alt_descent_set_B(s).mask() >> 1];
  }
  return counts;
}

AlternatingCounts alternating_counts_serial(int n) {
  AlternatingCounts c;
  for (const Permutation& p : Permutations(n)) {
    if (is_alternating(p, Direction::down_up)) ++c.type_a;
  }
  for (const SignedPermutation& s : SignedPermutations(n)) {
    if (is_alternating(s, Direction::down_up)) ++c.type_b;
    if (is_snake(s)) ++c.snakes;
  }
  return c;
}

}  // namespace altdesc::detail
