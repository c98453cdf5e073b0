#include "altdesc/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace altdesc {

SignedPermutation::SignedPermutation(Permutation base, std::uint64_t negative_mask)
    : base_(std::move(base)), negative_mask_(negative_mask) {
  const int n = base_.size();
  if (n < 64 && (negative_mask_ >> n) != 0) {
    throw std::invalid_argument("SignedPermutation: sign mask wider than the word");
  }
}

SignedPermutation SignedPermutation::from_word(const std::vector<int>& word) {
  std::vector<int> abs_word(word.size());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    abs_word[i] = std::abs(word[i]);
    if (word[i] < 0) mask |= std::uint64_t{1} << i;
  }
  return SignedPermutation(Permutation(std::move(abs_word)), mask);
}

std::vector<int> SignedPermutation::signs() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = sign(i);
  return out;
}

std::vector<int> SignedPermutation::word() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(i);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& s) {
  for (int i = 1; i <= s.size(); ++i) os << (i > 1 ? " " : "") << s(i);
  return os;
}

SignedPermutations::SignedPermutations(int n, std::vector<int> base_prefix)
    : n_(n), prefix_(std::move(base_prefix)) {
  if (n >= 64) throw std::invalid_argument("SignedPermutations: n must be < 64");
  Permutations check(n, prefix_);  // validates the prefix
}

SignedPermutations::iterator::iterator(int n, std::vector<int> prefix)
    : base_(Permutations(n, std::move(prefix)).begin()),
      mask_end_(std::uint64_t{1} << n),
      current_(*base_, 0),
      done_(false) {}

SignedPermutations::iterator& SignedPermutations::iterator::operator++() {
  if (++mask_ == mask_end_) {
    mask_ = 0;
    ++base_;
    if (base_ == std::default_sentinel) {
      done_ = true;
      return *this;
    }
  }
  current_ = SignedPermutation(*base_, mask_);
  return *this;
}

PositionSet alt_descent_set_B(const SignedPermutation& s) {
  PositionSet out;
  for (int i = 0; i < s.size(); ++i) {
    const bool ascent = s(i) < s(i + 1);
    if ((i % 2 == 0) == ascent) out.insert(i);
  }
  return out;
}

int alt_descent_count_B(const SignedPermutation& s) { return alt_descent_set_B(s).size(); }

int alt_descent_count_unsigned_positions(const SignedPermutation& s) {
  PositionSet d = alt_descent_set_B(s);
  return d.size() - (d.contains(0) ? 1 : 0);
}

std::vector<SignedPermutation> orbit(const Permutation& p) {
  const int n = p.size();
  if (n >= 64) throw std::invalid_argument("orbit: n must be < 64");
  std::vector<SignedPermutation> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.emplace_back(p, mask);
  return out;
}

std::vector<SignedPermutation> iso_copies(const Permutation& p) {
  const int n = p.size();
  if (n >= 64) throw std::invalid_argument("iso_copies: n must be < 64");
  std::vector<SignedPermutation> out;
  out.reserve(std::size_t{1} << n);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::vector<int> word(static_cast<std::size_t>(n));
  for (std::uint64_t negated = 0; negated < (std::uint64_t{1} << n); ++negated) {
    for (int v = 1; v <= n; ++v) {
      values[static_cast<std::size_t>(v - 1)] = ((negated >> (v - 1)) & 1U) ? -v : v;
    }
    std::sort(values.begin(), values.end());
    for (int i = 1; i <= n; ++i) {
      word[static_cast<std::size_t>(i - 1)] = values[static_cast<std::size_t>(p(i) - 1)];
    }
    out.push_back(SignedPermutation::from_word(word));
  }
  return out;
}

SignedPermutation negate(const SignedPermutation& s) {
  const int n = s.size();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return SignedPermutation(s.base(), s.negative_mask() ^ all);
}

bool is_alternating(const SignedPermutation& s, Direction dir) {
  const std::vector<int> w = s.word();
  return is_alternating(std::span<const int>(w), dir);
}

bool is_snake(const SignedPermutation& s) {
  if (s.size() < 1) throw std::invalid_argument("is_snake: n must be >= 1");
  return s(1) > 0 && is_alternating(s, Direction::down_up);
}

BigInt snake_number(int n) {
  if (n < 0) throw std::invalid_argument("snake_number: n must be >= 0");

  // The EGF is 1/(cos z - sin z). Clearing the denominator gives
  // sum_k C(m,k) c_k S_{m-k} = [m == 0] where c_k is the k-th derivative of
  // cos - sin at 0, periodic (1, -1, -1, 1).
  static std::mutex mu;
  static std::vector<BigInt> cache{BigInt(1)};
  static constexpr int kPeriod[4] = {1, -1, -1, 1};

  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    BigInt acc = 0;
    for (unsigned k = 1; k <= m; ++k) {
      acc -= binomial(m, k) * kPeriod[k % 4] * cache[m - k];
    }
    cache.push_back(acc);
  }
  return cache[static_cast<std::size_t>(n)];
}

BigInt du_b_number(int n) {
  if (n < 1) throw std::invalid_argument("du_b_number: n must be >= 1");
  return pow2(static_cast<unsigned>(n)) * euler_number(n);
}

}  // namespace altdesc
