#pragma once

// Exhaustive enumeration kernels over S_n and B_n.
//
// Every kernel has an OpenMP implementation (Exec::parallel) that splits the
// words by their two leading letters and reduces thread-local histograms, and
// a serial reference implementation (Exec::serial) written against the
// public Permutation / SignedPermutation API. The reference is kept for
// testing and for the benchmarks; both return identical results.

#include <cstdint>
#include <vector>

#include "altdesc/perm.hpp"

namespace altdesc {

enum class Exec { serial, parallel };

/// counts[k] = #{sigma in S_n : alternating descents = k}, size max(n, 1).
std::vector<std::uint64_t> alt_descent_histogram_A(int n, Exec exec = Exec::parallel);

struct TypeBHistograms {
  std::vector<std::uint64_t> minus;    // d_B over sigma(1) < 0, size n+1
  std::vector<std::uint64_t> plus;     // d_B over sigma(1) > 0, size n+1
  std::vector<std::uint64_t> unsigned_positions;  // d (position 0 ignored) over B_n
};

TypeBHistograms alt_descent_histograms_B(int n, Exec exec = Exec::parallel);

/// Joint distribution of (dda, val, pk) over S_n under a boundary convention.
struct ProfileCount {
  int dda = 0;
  int val = 0;
  int pk = 0;
  std::uint64_t count = 0;

  bool operator==(const ProfileCount&) const = default;
};

/// Sorted by (dda, val, pk); only nonzero entries.
std::vector<ProfileCount> profile_histogram(int n, BoundaryConvention conv,
                                            Exec exec = Exec::parallel);

/// counts[mask] = #{sigma in B_n^- : alternating descent set = mask}, where bit
/// i-1 of mask stands for position i in [n-1]. Size 2^(n-1).
std::vector<std::uint64_t> descent_set_counts_B_minus(int n, Exec exec = Exec::parallel);

struct AlternatingCounts {
  std::uint64_t type_a = 0;  // down-up words in S_n
  std::uint64_t type_b = 0;  // down-up words in B_n
  std::uint64_t snakes = 0;  // down-up words in B_n with positive first entry
};

AlternatingCounts alternating_counts(int n, Exec exec = Exec::parallel);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int kernel_threads();
void set_kernel_threads(int n);

}  // namespace altdesc
