#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <vector>

#include "altdesc/bigint.hpp"

namespace altdesc {

/// Set of small non-negative positions (0..63) stored as a bitmask.
class PositionSet {
 public:
  constexpr PositionSet() = default;
  constexpr explicit PositionSet(std::uint64_t mask) : mask_(mask) {}
  PositionSet(std::initializer_list<int> positions);

  constexpr void insert(int i) { mask_ |= std::uint64_t{1} << i; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint64_t mask() const { return mask_; }

  std::vector<int> to_vector() const;

  constexpr bool operator==(const PositionSet&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PositionSet& s);

/// A permutation of [n] in one-line notation. Positions are 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection of [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  Permutation reversed() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Values attached at positions 0 and n+1 before classifying positions.
enum class BoundaryConvention {
  closed_high,  // sigma(0) = n+1, sigma(n+1) = n+1
  zero_high,    // sigma(0) = 0,   sigma(n+1) = n+1
};

/// sigma(i) for 0 <= i <= n+1 under the given convention.
int decorated_value(const Permutation& p, int i, BoundaryConvention conv);

struct StatProfile {
  int da = 0;
  int dd = 0;
  int val = 0;
  int pk = 0;
  PositionSet da_set;
  PositionSet dd_set;
  PositionSet val_set;
  PositionSet pk_set;

  int dda() const { return da + dd; }
};

/// Classifies every i in [n] as double ascent, double descent, valley or peak.
StatProfile stat_profile(const Permutation& p, BoundaryConvention conv);

/// Positions i in [n-1] with sigma(i) > sigma(i+1), i odd, or
/// sigma(i) < sigma(i+1), i even.
PositionSet alt_descent_set(const Permutation& p);
int alt_descent_count(const Permutation& p);

enum class Direction { down_up, up_down };

/// True iff consecutive comparisons alternate, the first one going the given
/// way. Empty and single-letter words are alternating.
bool is_alternating(std::span<const int> word, Direction dir);
inline bool is_alternating(const Permutation& p, Direction dir) {
  return is_alternating(p.word(), dir);
}

/// Euler number E_n (down-up alternating permutations of [n]) from the
/// Seidel/Entringer triangle. Requires n >= 1.
BigInt euler_number(int n);

/// Lexicographic stream of permutations of [n] whose one-line word starts
/// with `prefix`. With an empty prefix this is all of S_n; the n! words split
/// into disjoint sub-streams by first entry (or any longer prefix).
class Permutations {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class Permutations;
    iterator(int n, std::vector<int> prefix);

    std::size_t fixed_ = 0;
    std::vector<int> word_;
    Permutation current_;
    bool done_ = true;
  };

  explicit Permutations(int n, std::vector<int> prefix = {});

  iterator begin() const { return iterator(n_, prefix_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  std::vector<int> prefix_;
};

}  // namespace altdesc
