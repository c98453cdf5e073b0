#pragma once

#include "altdesc/kernels.hpp"

namespace altdesc::detail {

std::vector<std::uint64_t> alt_descent_histogram_A_serial(int n);
std::vector<std::uint64_t> alt_descent_histogram_A_parallel(int n);

TypeBHistograms alt_descent_histograms_B_serial(int n);
TypeBHistograms alt_descent_histograms_B_parallel(int n);

std::vector<ProfileCount> profile_histogram_serial(int n, BoundaryConvention conv);
std::vector<ProfileCount> profile_histogram_parallel(int n, BoundaryConvention conv);

std::vector<std::uint64_t> descent_set_counts_B_minus_serial(int n);
std::vector<std::uint64_t> descent_set_counts_B_minus_parallel(int n);

AlternatingCounts alternating_counts_serial(int n);
AlternatingCounts alternating_counts_parallel(int n);

}  // namespace altdesc::detail
