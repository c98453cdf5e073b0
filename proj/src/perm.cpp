#include "altdesc/perm.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace altdesc {

PositionSet::PositionSet(std::initializer_list<int> positions) {
  for (int i : positions) insert(i);
}

std::vector<int> PositionSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::ostream& operator<<(std::ostream& os, const PositionSet& s) {
  os << '{';
  bool first = true;
  for (int i : s.to_vector()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  return os << '}';
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(word_.rbegin(), word_.rend()));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? " " : "") << p(i);
  return os;
}

int decorated_value(const Permutation& p, int i, BoundaryConvention conv) {
  const int n = p.size();
  if (i == 0) return conv == BoundaryConvention::closed_high ? n + 1 : 0;
  if (i == n + 1) return n + 1;
  return p(i);
}

StatProfile stat_profile(const Permutation& p, BoundaryConvention conv) {
  StatProfile prof;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const int left = decorated_value(p, i - 1, conv);
    const int mid = p(i);
    const int right = decorated_value(p, i + 1, conv);
    if (left < mid && mid < right) {
      ++prof.da;
      prof.da_set.insert(i);
    } else if (left > mid && mid > right) {
      ++prof.dd;
      prof.dd_set.insert(i);
    } else if (left > mid && mid < right) {
      ++prof.val;
      prof.val_set.insert(i);
    } else {
      ++prof.pk;
      prof.pk_set.insert(i);
    }
  }
  return prof;
}

PositionSet alt_descent_set(const Permutation& p) {
  PositionSet s;
  for (int i = 1; i < p.size(); ++i) {
    const bool descent = p(i) > p(i + 1);
    if ((i % 2 == 1) == descent) s.insert(i);
  }
  return s;
}

int alt_descent_count(const Permutation& p) { return alt_descent_set(p).size(); }

bool is_alternating(std::span<const int> word, Direction dir) {
  bool expect_down = dir == Direction::down_up;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if ((word[i] > word[i + 1]) != expect_down) return false;
    expect_down = !expect_down;
  }
  return true;
}

BigInt euler_number(int n) {
  if (n < 1) throw std::invalid_argument("euler_number: n must be >= 1");

  // Entringer triangle: row m has m+1 entries, its last entry is E_m.
  static std::mutex mu;
  static std::vector<BigInt> cache{BigInt(1)};
  static std::vector<BigInt> row{BigInt(1)};

  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const std::size_t m = cache.size();
    std::vector<BigInt> next(m + 1);
    next[0] = 0;
    for (std::size_t k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
    cache.push_back(next[m]);
    row = std::move(next);
  }
  return cache[static_cast<std::size_t>(n)];
}

Permutations::Permutations(int n, std::vector<int> prefix) : n_(n), prefix_(std::move(prefix)) {
  if (n < 0) throw std::invalid_argument("Permutations: n must be >= 0");
  if (static_cast<int>(prefix_.size()) > n) {
    throw std::invalid_argument("Permutations: prefix longer than n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : prefix_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutations: invalid prefix");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutations::iterator::iterator(int n, std::vector<int> prefix) : fixed_(prefix.size()) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : prefix) used[static_cast<std::size_t>(v)] = true;
  word_ = std::move(prefix);
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) word_.push_back(v);
  }
  current_ = Permutation(word_);
  done_ = false;
}

Permutations::iterator& Permutations::iterator::operator++() {
  const auto tail = word_.begin() + static_cast<std::ptrdiff_t>(fixed_);
  if (std::next_permutation(tail, word_.end())) {
    current_ = Permutation(word_);
  } else {
    done_ = true;
  }
  return *this;
}

}  // namespace altdesc
