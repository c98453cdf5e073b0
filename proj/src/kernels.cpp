#include "altdesc/kernels.hpp"

#include <stdexcept>
#include <string>

#include "altdesc/config.hpp"
#include "kernels_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altdesc {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                " outside supported range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

std::vector<std::uint64_t> alt_descent_histogram_A(int n, Exec exec) {
  require_range(n, 0, kMaxEnumerationA, "alt_descent_histogram_A");
  return exec == Exec::serial ? detail::alt_descent_histogram_A_serial(n)
                              : detail::alt_descent_histogram_A_parallel(n);
}

TypeBHistograms alt_descent_histograms_B(int n, Exec exec) {
  require_range(n, 1, kMaxEnumerationB, "alt_descent_histograms_B");
  return exec == Exec::serial ? detail::alt_descent_histograms_B_serial(n)
                              : detail::alt_descent_histograms_B_parallel(n);
}

std::vector<ProfileCount> profile_histogram(int n, BoundaryConvention conv, Exec exec) {
  require_range(n, 0, kMaxEnumerationA, "profile_histogram");
  return exec == Exec::serial ? detail::profile_histogram_serial(n, conv)
                              : detail::profile_histogram_parallel(n, conv);
}

std::vector<std::uint64_t> descent_set_counts_B_minus(int n, Exec exec) {
  require_range(n, 1, kMaxEnumerationB, "descent_set_counts_B_minus");
  return exec == Exec::serial ? detail::descent_set_counts_B_minus_serial(n)
                              : detail::descent_set_counts_B_minus_parallel(n);
}

AlternatingCounts alternating_counts(int n, Exec exec) {
  require_range(n, 1, kMaxEnumerationB, "alternating_counts");
  return exec == Exec::serial ? detail::alternating_counts_serial(n)
                              : detail::alternating_counts_parallel(n);
}

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_kernel_threads(int n) {
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace altdesc
