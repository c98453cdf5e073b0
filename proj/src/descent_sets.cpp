#include "altdesc/descent_sets.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "altdesc/errors.hpp"
#include "altdesc/signed_perm.hpp"

namespace altdesc {

namespace {

SubsetMask full_mask(int n) { return (SubsetMask{1} << (n - 1)) - 1; }

void require_subset(int n, SubsetMask s) {
  if (n < 1 || n > 63) throw std::invalid_argument("subset of [n-1]: n must be in [1, 63]");
  if ((s & ~full_mask(n)) != 0) {
    throw std::invalid_argument("mask has positions outside [" + std::to_string(n - 1) + "]");
  }
}

}  // namespace

DescentSetTable beta_minus_table(int n, const EnumerationBounds& bounds, Exec exec) {
  if (n < 1) throw std::invalid_argument("beta_minus_table: n must be >= 1");
  if (n > bounds.type_b) {
    throw BoundExceeded("beta_minus_table: n=" + std::to_string(n) +
                        " exceeds the type B enumeration bound " + std::to_string(bounds.type_b));
  }
  DescentSetTable t{n, {}};
  for (std::uint64_t c : descent_set_counts_B_minus(n, exec)) t.entries.push_back(from_u64(c));
  return t;
}

DescentSetTable alpha_minus_table(int n, const EnumerationBounds& bounds, Exec exec) {
  return subset_sums(beta_minus_table(n, bounds, exec));
}

BigInt beta_minus_bruteforce(int n, SubsetMask s, const EnumerationBounds& bounds) {
  require_subset(n, s);
  return beta_minus_table(n, bounds)[s];
}

BigInt alpha_minus_bruteforce(int n, SubsetMask s, const EnumerationBounds& bounds) {
  require_subset(n, s);
  const DescentSetTable beta = beta_minus_table(n, bounds);
  BigInt sum = 0;
  // every T contained in s, including the empty set
  for (SubsetMask t = s;; t = (t - 1) & s) {
    sum += beta[t];
    if (t == 0) break;
  }
  return sum;
}

BigInt alpha_minus_formula(int n, SubsetMask s) {
  require_subset(n, s);
  const std::vector<int> parts = composition_of(n, s);
  BigInt result = multinomial(parts) * snake_number(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) result *= du_b_number(parts[i]);
  return result;
}

DescentSetTable subset_sums(const DescentSetTable& beta) {
  DescentSetTable t = beta;
  // zeta transform over the subset lattice
  for (int bit = 0; bit + 1 < t.n; ++bit) {
    for (SubsetMask s = 0; s < t.entries.size(); ++s) {
      if ((s >> bit) & 1U) t.entries[s] += t.entries[s ^ (SubsetMask{1} << bit)];
    }
  }
  return t;
}

DescentSetTable subset_differences(const DescentSetTable& alpha) {
  DescentSetTable t = alpha;
  for (int bit = 0; bit + 1 < t.n; ++bit) {
    for (SubsetMask s = 0; s < t.entries.size(); ++s) {
      if ((s >> bit) & 1U) t.entries[s] -= t.entries[s ^ (SubsetMask{1} << bit)];
    }
  }
  return t;
}

std::vector<int> composition_of(int n, SubsetMask s) {
  require_subset(n, s);
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i) {
    if ((s >> (i - 1)) & 1U) {
      parts.push_back(i - prev);
      prev = i;
    }
  }
  parts.push_back(n - prev);
  return parts;
}

SubsetMask subset_of(int n, const std::vector<int>& composition) {
  if (composition.empty()) throw std::invalid_argument("subset_of: empty composition");
  int sum = 0;
  SubsetMask s = 0;
  for (std::size_t i = 0; i < composition.size(); ++i) {
    if (composition[i] < 1) throw std::invalid_argument("subset_of: parts must be positive");
    sum += composition[i];
    if (i + 1 < composition.size()) {
      if (sum >= n) throw std::invalid_argument("subset_of: parts do not sum to n");
      s |= SubsetMask{1} << (sum - 1);
    }
  }
  if (sum != n) throw std::invalid_argument("subset_of: parts do not sum to n");
  return s;
}

BigInt multinomial(const std::vector<int>& parts) {
  int total = 0;
  BigInt result = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    result *= binomial(static_cast<unsigned>(total), static_cast<unsigned>(p));
  }
  return result;
}

}  // namespace altdesc
