// OpenMP enumeration kernels. The n! words are split into n(n-1) tasks by
// their first two letters; each thread fills a private histogram and the
// histograms are summed at the end, so results do not depend on scheduling.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "altdesc/config.hpp"
#include "kernels_detail.hpp"

namespace altdesc::detail {

namespace {

using Word = std::array<int, 32>;

int task_count(int n) {
  if (n <= 1) return 1;
  return n * (n - 1);
}

// Lexicographically first word of task t: the prefix (a, b) with a = t/(n-1)+1
// and b the (t mod (n-1))-th smallest remaining value, then the rest ascending.
// Returns the number of fixed leading letters.
int seed_task(int n, int t, Word& w) {
  if (n <= 1) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return n;
  }
  const int a = t / (n - 1) + 1;
  int b_rank = t % (n - 1);
  int b = 0;
  for (int v = 1; v <= n; ++v) {
    if (v == a) continue;
    if (b_rank-- == 0) {
      b = v;
      break;
    }
  }
  w[0] = a;
  w[1] = b;
  std::size_t k = 2;
  for (int v = 1; v <= n; ++v) {
    if (v != a && v != b) w[k++] = v;
  }
  return 2;
}

template <class Acc, class Visit>
Acc reduce_permutations(int n, const Acc& zero, Visit visit) {
  Acc total = zero;
  const int tasks = task_count(n);
#pragma omp parallel
  {
    Acc local = zero;
    Word w{};
#pragma omp for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) {
      const int fixed = seed_task(n, t, w);
      do {
        visit(w, local);
      } while (std::next_permutation(w.begin() + fixed, w.begin() + n));
    }
#pragma omp critical
    total += local;
  }
  return total;
}

// Element-wise summable histogram.
struct Counts {
  std::vector<std::uint64_t> v;

  Counts& operator+=(const Counts& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
};

inline int alt_descents_A(const Word& w, int n) {
  int d = 0;
  for (int j = 0; j + 1 < n; ++j) {
    // position j+1; odd positions count descents, even ones ascents
    const bool descent = w[static_cast<std::size_t>(j)] > w[static_cast<std::size_t>(j + 1)];
    d += ((j % 2 == 0) == descent) ? 1 : 0;
  }
  return d;
}

inline void apply_signs(const Word& w, int n, std::uint32_t mask, Word& s) {
  for (int j = 0; j < n; ++j) {
    const int v = w[static_cast<std::size_t>(j)];
    s[static_cast<std::size_t>(j)] = ((mask >> j) & 1U) ? -v : v;
  }
}

// Type B alternating descents of the signed word s at positions 1..n-1.
inline std::uint32_t interior_descent_mask_B(const Word& s, int n) {
  std::uint32_t m = 0;
  for (int i = 1; i < n; ++i) {
    const bool descent = s[static_cast<std::size_t>(i - 1)] > s[static_cast<std::size_t>(i)];
    if ((i % 2 == 1) == descent) m |= 1U << (i - 1);
  }
  return m;
}

inline bool down_up(const Word& s, int n) {
  for (int j = 0; j + 1 < n; ++j) {
    const bool descent = s[static_cast<std::size_t>(j)] > s[static_cast<std::size_t>(j + 1)];
    if (descent != (j % 2 == 0)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> alt_descent_histogram_A_parallel(int n) {
  const Counts zero{std::vector<std::uint64_t>(static_cast<std::size_t>(std::max(n, 1)), 0)};
  return reduce_permutations(n, zero, [n](const Word& w, Counts& acc) {
           ++acc.v[static_cast<std::size_t>(alt_descents_A(w, n))];
         }).v;
}

TypeBHistograms alt_descent_histograms_B_parallel(int n) {
  const auto width = static_cast<std::size_t>(n) + 1;
  // Layout: [minus | plus | unsigned positions].
  const Counts zero{std::vector<std::uint64_t>(3 * width, 0)};
  const std::uint32_t masks = 1U << n;
  Counts c = reduce_permutations(n, zero, [n, width, masks](const Word& w, Counts& acc) {
    Word s{};
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      apply_signs(w, n, mask, s);
      const int interior = std::popcount(interior_descent_mask_B(s, n));
      const bool positive_first = s[0] > 0;
      const std::size_t d = static_cast<std::size_t>(interior + (positive_first ? 1 : 0));
      ++acc.v[(positive_first ? width : 0) + d];
      ++acc.v[2 * width + static_cast<std::size_t>(interior)];
    }
  });
  TypeBHistograms h;
  h.minus.assign(c.v.begin(), c.v.begin() + static_cast<std::ptrdiff_t>(width));
  h.plus.assign(c.v.begin() + static_cast<std::ptrdiff_t>(width),
                c.v.begin() + static_cast<std::ptrdiff_t>(2 * width));
  h.unsigned_positions.assign(c.v.begin() + static_cast<std::ptrdiff_t>(2 * width), c.v.end());
  return h;
}

std::vector<ProfileCount> profile_histogram_parallel(int n, BoundaryConvention conv) {
  const int side = n + 1;
  const auto cells = static_cast<std::size_t>(side) * static_cast<std::size_t>(side) *
                     static_cast<std::size_t>(side);
  const Counts zero{std::vector<std::uint64_t>(cells, 0)};
  const int first = conv == BoundaryConvention::closed_high ? n + 1 : 0;
  Counts c = reduce_permutations(n, zero, [n, side, first](const Word& w, Counts& acc) {
    int dda = 0;
    int val = 0;
    int pk = 0;
    int left = first;
    for (int j = 0; j < n; ++j) {
      const int mid = w[static_cast<std::size_t>(j)];
      const int right = j + 1 < n ? w[static_cast<std::size_t>(j + 1)] : n + 1;
      if ((left < mid) == (mid < right)) {
        ++dda;
      } else if (left > mid) {
        ++val;
      } else {
        ++pk;
      }
      left = mid;
    }
    ++acc.v[static_cast<std::size_t>((dda * side + val) * side + pk)];
  });
  std::vector<ProfileCount> out;
  for (int dda = 0; dda < side; ++dda) {
    for (int val = 0; val < side; ++val) {
      for (int pk = 0; pk < side; ++pk) {
        const std::uint64_t k = c.v[static_cast<std::size_t>((dda * side + val) * side + pk)];
        if (k != 0) out.push_back({dda, val, pk, k});
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> descent_set_counts_B_minus_parallel(int n) {
  const Counts zero{std::vector<std::uint64_t>(std::size_t{1} << (n - 1), 0)};
  const std::uint32_t masks = 1U << n;
  return reduce_permutations(n, zero, [n, masks](const Word& w, Counts& acc) {
           Word s{};
           // odd masks: first entry negative
           for (std::uint32_t mask = 1; mask < masks; mask += 2) {
             apply_signs(w, n, mask, s);
             ++acc.v[interior_descent_mask_B(s, n)];
           }
         }).v;
}

AlternatingCounts alternating_counts_parallel(int n) {
  struct Acc {
    std::uint64_t a = 0, b = 0, snakes = 0;
    Acc& operator+=(const Acc& o) {
      a += o.a;
      b += o.b;
      snakes += o.snakes;
      return *this;
    }
  };
  const std::uint32_t masks = 1U << n;
  const Acc total = reduce_permutations(n, Acc{}, [n, masks](const Word& w, Acc& acc) {
    if (down_up(w, n)) ++acc.a;
    Word s{};
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      apply_signs(w, n, mask, s);
      if (down_up(s, n)) {
        ++acc.b;
        if (s[0] > 0) ++acc.snakes;
      }
    }
  });
  return {total.a, total.b, total.snakes};
}

}  // namespace altdesc::detail
