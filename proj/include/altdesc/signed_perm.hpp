#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "altdesc/bigint.hpp"
#include "altdesc/perm.hpp"

namespace altdesc {

/// Element of the hyperoctahedral group B_n: an unsigned word |sigma| plus a
/// sign per position. Bit i of the negative mask marks position i+1 as
/// negative, so an orbit is a sweep over masks 0..2^n-1.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(Permutation base, std::uint64_t negative_mask);
  /// From a signed word such as {2, -1}; throws std::invalid_argument if the
  /// absolute values are not a permutation of [n].
  static SignedPermutation from_word(const std::vector<int>& word);

  int size() const { return base_.size(); }
  const Permutation& base() const { return base_; }
  std::uint64_t negative_mask() const { return negative_mask_; }

  /// sigma(i) for 1 <= i <= n, and sigma(0) = 0.
  int operator()(int i) const {
    if (i == 0) return 0;
    const int v = base_(i);
    return ((negative_mask_ >> (i - 1)) & 1U) ? -v : v;
  }
  int sign(int i) const { return ((negative_mask_ >> (i - 1)) & 1U) ? -1 : 1; }
  std::vector<int> signs() const;
  std::vector<int> word() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  Permutation base_;
  std::uint64_t negative_mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& s);

/// All of B_n, grouped by base permutation (lexicographic) and then by sign
/// mask in binary counting order. Splittable by base-permutation prefix.
class SignedPermutations {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const SignedPermutation& operator*() const { return current_; }
    const SignedPermutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class SignedPermutations;
    iterator(int n, std::vector<int> prefix);

    Permutations::iterator base_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_end_ = 1;
    SignedPermutation current_;
    bool done_ = true;
  };

  explicit SignedPermutations(int n, std::vector<int> base_prefix = {});

  iterator begin() const { return iterator(n_, prefix_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  std::vector<int> prefix_;
};

/// Positions i in {0} u [n-1] with sigma(i) < sigma(i+1), i even, or
/// sigma(i) > sigma(i+1), i odd, where sigma(0) = 0.
PositionSet alt_descent_set_B(const SignedPermutation& s);
int alt_descent_count_B(const SignedPermutation& s);

/// Alternating descents of a signed word ignoring position 0.
int alt_descent_count_unsigned_positions(const SignedPermutation& s);

/// The 2^n sign assignments of p, in sign-mask order.
std::vector<SignedPermutation> orbit(const Permutation& p);

/// The 2^n elements of B_n order-isomorphic to p, one per subset of values
/// to negate (subset mask order).
std::vector<SignedPermutation> iso_copies(const Permutation& p);

/// sigma^-(i) = -sigma(i).
SignedPermutation negate(const SignedPermutation& s);

bool is_alternating(const SignedPermutation& s, Direction dir);

/// Down-up alternating with a positive first entry. Requires n >= 1.
bool is_snake(const SignedPermutation& s);

/// Number of snakes of length n (Springer numbers). Requires n >= 0; S_0 = 1.
BigInt snake_number(int n);

/// Down-up alternating elements of B_n: 2^n E_n. Requires n >= 1.
BigInt du_b_number(int n);

}  // namespace altdesc
