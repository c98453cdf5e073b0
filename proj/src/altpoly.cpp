#include "altdesc/altpoly.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "altdesc/derivative_polys.hpp"
#include "altdesc/descent_sets.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/signed_perm.hpp"

namespace altdesc {

namespace {

void require_bound(int n, int bound, const char* kind, const char* name) {
  if (n > bound) {
    throw BoundExceeded(std::string(name) + ": n=" + std::to_string(n) + " exceeds the " + kind +
                        " enumeration bound " + std::to_string(bound));
  }
}

void require_at_least(int n, int lo, const char* name) {
  if (n < lo) {
    throw std::invalid_argument(std::string(name) + ": n must be >= " + std::to_string(lo));
  }
}

IntPoly from_histogram(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t v : counts) c.push_back(from_u64(v));
  return IntPoly(std::move(c));
}

// Rethrows with the route name so callers can tell which identity broke.
template <class F>
IntPoly divide_or_report(const char* route, int n, F&& f) {
  try {
    return f();
  } catch (const ExactnessError& e) {
    throw ExactnessError(std::string(route) + " at n=" + std::to_string(n) + ": " + e.what());
  }
}

}  // namespace

IntPoly a_hat_bruteforce(int n, const EnumerationBounds& bounds, Exec exec) {
  require_at_least(n, 1, "a_hat_bruteforce");
  require_bound(n, bounds.type_a, "type A", "a_hat_bruteforce");
  return from_histogram(alt_descent_histogram_A(n, exec));
}

TypeBSplit b_hat_split_bruteforce(int n, const EnumerationBounds& bounds, Exec exec) {
  require_at_least(n, 0, "b_hat_bruteforce");
  if (n == 0) return {IntPoly{}, IntPoly{1}};
  require_bound(n, bounds.type_b, "type B", "b_hat_bruteforce");
  const TypeBHistograms h = alt_descent_histograms_B(n, exec);
  return {from_histogram(h.minus), from_histogram(h.plus)};
}

IntPoly b_hat_bruteforce(int n, const EnumerationBounds& bounds, Exec exec) {
  return b_hat_split_bruteforce(n, bounds, exec).total();
}

IntPoly orbit_weight(int dda, int val, int pk) {
  return IntPoly{1, 1}.pow(static_cast<unsigned>(dda)) * IntPoly{1, 0, 1}.pow(static_cast<unsigned>(pk)) *
         pow2(static_cast<unsigned>(val));
}

IntPoly weighted_profile_sum(const std::vector<ProfileCount>& hist) {
  IntPoly sum;
  for (const ProfileCount& c : hist) sum += orbit_weight(c.dda, c.val, c.pk) * from_u64(c.count);
  return sum;
}

IntPoly a_hat_combinatorial(int n, const EnumerationBounds& bounds, Exec exec) {
  require_at_least(n, 1, "a_hat_combinatorial");
  require_bound(n, bounds.type_a, "type A", "a_hat_combinatorial");
  const IntPoly scaled = weighted_profile_sum(profile_histogram(n, BoundaryConvention::closed_high, exec));
  return divide_or_report("a_hat_combinatorial", n,
                          [&] { return exact_divide(scaled, pow2(static_cast<unsigned>(n))); });
}

IntPoly b_hat_combinatorial(int n, const EnumerationBounds& bounds, Exec exec) {
  require_at_least(n, 0, "b_hat_combinatorial");
  if (n == 0) return IntPoly{1};
  require_bound(n, bounds.type_a, "type A", "b_hat_combinatorial");
  return weighted_profile_sum(profile_histogram(n, BoundaryConvention::zero_high, exec));
}

OrbitPolynomials orbit_polynomial(const Permutation& p) {
  require_at_least(p.size(), 1, "orbit_polynomial");
  OrbitPolynomials out;
  std::vector<BigInt> counts(static_cast<std::size_t>(p.size()), 0);
  for (const SignedPermutation& s : orbit(p)) {
    counts[static_cast<std::size_t>(alt_descent_count_unsigned_positions(s))] += 1;
  }
  out.enumerated = IntPoly(std::move(counts));
  const StatProfile prof = stat_profile(p, BoundaryConvention::closed_high);
  out.closed_form = orbit_weight(prof.dda(), prof.val, prof.pk);
  return out;
}

IntPoly a_hat_from_p(const IntPoly& p_n, int n) {
  require_at_least(n, 1, "a_hat_via_p");
  return divide_or_report("a_hat_via_p", n, [&] {
    const IntPoly lhs = mobius_hom_sub(p_n, static_cast<unsigned>(n + 1));
    return exact_divide(exact_divide(lhs, IntPoly{1, 0, 1}), pow2(static_cast<unsigned>(n)));
  });
}

IntPoly a_hat_via_p(int n) { return a_hat_from_p(p_poly(n), n); }

IntPoly b_hat_from_q(const IntPoly& q_n, int n) {
  require_at_least(n, 0, "b_hat_via_q");
  return mobius_hom_sub(q_n, static_cast<unsigned>(n));
}

IntPoly b_hat_via_q(int n) { return b_hat_from_q(q_poly(n), n); }

std::vector<IntPoly> b_hat_recurrence_rows(int n_max) {
  require_at_least(n_max, 1, "b_hat_recurrence_rows");
  std::vector<IntPoly> rows{IntPoly{1}, IntPoly{1, 1}};
  for (int n = 1; n < n_max; ++n) {
    const IntPoly& prev = rows.back();
    auto b = [&](int k) { return prev.coeff(k); };  // zero outside [0, n]
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) {
      next[static_cast<std::size_t>(k)] = (n + 1 - k) * (b(k) + b(k - 2)) +
                                          k * (b(k + 1) + b(k - 1)) + b(k + 1) + b(k - 2);
    }
    rows.emplace_back(std::move(next));
  }
  return rows;
}

IntPoly b_hat_diff_recurrence(int n) {
  require_at_least(n, 0, "b_hat_diff_recurrence");
  if (n == 0) return IntPoly{1};
  const IntPoly cubic = IntPoly{1, -1} * IntPoly{1, 0, 1};
  IntPoly b{1, 1};
  for (int m = 1; m < n; ++m) {
    const IntPoly factor{static_cast<long>(m + 1), 1, static_cast<long>(m)};
    b = factor * b + cubic * b.derivative();
  }
  return b;
}

IntPoly b_hat_minus_via_descent_sets(int n) {
  require_at_least(n, 1, "b_hat_minus_via_descent_sets");
  if (n > 24) throw std::invalid_argument("b_hat_minus_via_descent_sets: n too large");
  // sum_S alpha(S) x^|S| = (1+x)^(n-1) B^-(x/(1+x)); substituting back,
  // B^-(y) = sum_S alpha(S) y^|S| (1-y)^(n-1-|S|). Group subsets by size.
  std::vector<BigInt> by_size(static_cast<std::size_t>(n), 0);
  for (SubsetMask s = 0; s < (SubsetMask{1} << (n - 1)); ++s) {
    by_size[static_cast<std::size_t>(std::popcount(s))] += alpha_minus_formula(n, s);
  }
  IntPoly out;
  for (int k = 0; k < n; ++k) {
    out += IntPoly::monomial(by_size[static_cast<std::size_t>(k)], static_cast<unsigned>(k)) *
           IntPoly{1, -1}.pow(static_cast<unsigned>(n - 1 - k));
  }
  return out;
}

IntPoly b_hat_plus_via_descent_sets(int n) {
  return reciprocal_transform(b_hat_minus_via_descent_sets(n), static_cast<unsigned>(n));
}

}  // namespace altdesc
