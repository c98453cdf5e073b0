#pragma once

// Direct transcriptions of the definitions over raw int words, independent of
// the library's permutation types and kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<int> iota_word(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

template <class F>
void for_each_perm(int n, F&& f) {
  std::vector<int> w = iota_word(n);
  do {
    f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

template <class F>
void for_each_signed(int n, F&& f) {
  for_each_perm(n, [&](const std::vector<int>& p) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> w = p;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      }
      f(w);
    }
  });
}

// word is sigma(1..n); positions are 1-based
inline int alt_descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const bool desc = w[i - 1] > w[i];
    d += (i % 2 == 1) ? desc : !desc;
  }
  return d;
}

// positions {0} u [n-1] with sigma(0) = 0, as a bitmask over positions
inline std::uint64_t alt_descent_set_B(const std::vector<int>& w) {
  std::uint64_t s = 0;
  int prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool asc = prev < w[i];
    if ((i % 2 == 0) ? asc : !asc) s |= std::uint64_t{1} << i;
    prev = w[i];
  }
  return s;
}

inline std::vector<long long> trim(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline std::vector<long long> a_hat(int n) {
  std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
  for_each_perm(n, [&](const std::vector<int>& w) { ++c[static_cast<std::size_t>(alt_descents(w))]; });
  return trim(c);
}

struct Split {
  std::vector<long long> minus, plus;
};

inline Split b_hat_split(int n) {
  Split s{std::vector<long long>(static_cast<std::size_t>(n) + 1, 0),
          std::vector<long long>(static_cast<std::size_t>(n) + 1, 0)};
  for_each_signed(n, [&](const std::vector<int>& w) {
    const auto d = static_cast<std::size_t>(__builtin_popcountll(alt_descent_set_B(w)));
    ++(w[0] < 0 ? s.minus : s.plus)[d];
  });
  s.minus = trim(s.minus);
  s.plus = trim(s.plus);
  return s;
}

inline bool down_up(const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if ((i % 2 == 0) != (w[i] > w[i + 1])) return false;
  }
  return true;
}

inline long euler(int n) {
  long c = 0;
  for_each_perm(n, [&](const std::vector<int>& w) { c += down_up(w); });
  return c;
}

inline long snakes(int n) {
  long c = 0;
  for_each_signed(n, [&](const std::vector<int>& w) { c += w[0] > 0 && down_up(w); });
  return c;
}

// elements of B_n^- whose type B descent set (shifted: bit i-1 <-> position i)
// is contained in mask
inline long alpha_minus(int n, std::uint64_t mask) {
  long c = 0;
  for_each_signed(n, [&](const std::vector<int>& w) {
    if (w[0] > 0) return;
    if (((alt_descent_set_B(w) >> 1) & ~mask) == 0) ++c;
  });
  return c;
}

}  // namespace oracle
