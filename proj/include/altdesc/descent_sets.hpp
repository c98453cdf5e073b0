#pragma once

#include <cstdint>
#include <vector>

#include "altdesc/bigint.hpp"
#include "altdesc/config.hpp"
#include "altdesc/kernels.hpp"

namespace altdesc {

/// Subsets of [n-1] are bitmasks: bit i-1 <-> position i.
using SubsetMask = std::uint64_t;

/// Counts indexed by subset of [n-1].
struct DescentSetTable {
  int n = 0;
  std::vector<BigInt> entries;  // size 2^(n-1)

  const BigInt& operator[](SubsetMask s) const { return entries[s]; }
};

/// beta^-(S): elements of B_n^- whose type B alternating descent set is S.
DescentSetTable beta_minus_table(int n, const EnumerationBounds& bounds = {},
                                 Exec exec = Exec::parallel);
/// alpha^-(S): elements of B_n^- whose descent set is contained in S.
DescentSetTable alpha_minus_table(int n, const EnumerationBounds& bounds = {},
                                  Exec exec = Exec::parallel);

BigInt beta_minus_bruteforce(int n, SubsetMask s, const EnumerationBounds& bounds = {});
BigInt alpha_minus_bruteforce(int n, SubsetMask s, const EnumerationBounds& bounds = {});

/// Multinomial(co(S)) * S_{s_1} * DU^B_{s_2-s_1} * ... * DU^B_{n-s_k}.
BigInt alpha_minus_formula(int n, SubsetMask s);

/// alpha(S) = sum_{T subset S} beta(T).
DescentSetTable subset_sums(const DescentSetTable& beta);
/// Inverse of subset_sums (inclusion-exclusion).
DescentSetTable subset_differences(const DescentSetTable& alpha);

/// co(S) = (s_1, s_2-s_1, ..., n-s_k). Throws std::invalid_argument if S has
/// a bit outside [n-1].
std::vector<int> composition_of(int n, SubsetMask s);
/// S_gamma = {gamma_1, gamma_1+gamma_2, ...}. Throws std::invalid_argument on
/// a non-positive part or if the parts do not sum to n.
SubsetMask subset_of(int n, const std::vector<int>& composition);

BigInt multinomial(const std::vector<int>& parts);

}  // namespace altdesc
