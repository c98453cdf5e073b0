#pragma once

#include <vector>

#include "altdesc/config.hpp"
#include "altdesc/int_poly.hpp"
#include "altdesc/kernels.hpp"
#include "altdesc/perm.hpp"

namespace altdesc {

// Alternating descent polynomials
//   A_n(x) = sum_{sigma in S_n} x^{alternating descents},
//   B_n(x) = sum_{sigma in B_n} x^{type B alternating descents},
// computed by every available route. Enumeration routes throw BoundExceeded
// past the configured bound; routes with a guaranteed exact division throw
// ExactnessError if it fails.

IntPoly a_hat_bruteforce(int n, const EnumerationBounds& bounds = {},
                         Exec exec = Exec::parallel);

struct TypeBSplit {
  IntPoly minus;  // sigma(1) < 0
  IntPoly plus;   // sigma(1) > 0
  IntPoly total() const { return minus + plus; }
};

/// B_0 = 1 (empty word, no split).
TypeBSplit b_hat_split_bruteforce(int n, const EnumerationBounds& bounds = {},
                                  Exec exec = Exec::parallel);
IntPoly b_hat_bruteforce(int n, const EnumerationBounds& bounds = {},
                         Exec exec = Exec::parallel);

/// 2^-n sum over S_n (closed-high) of (1+x)^dda 2^val (1+x^2)^pk.
IntPoly a_hat_combinatorial(int n, const EnumerationBounds& bounds = {},
                            Exec exec = Exec::parallel);
/// sum over S_n (zero-high) of (1+x)^dda 2^val (1+x^2)^pk.
IntPoly b_hat_combinatorial(int n, const EnumerationBounds& bounds = {},
                            Exec exec = Exec::parallel);

/// (1+x)^dda 2^val (1+x^2)^pk for one profile.
IntPoly orbit_weight(int dda, int val, int pk);
/// sum of orbit_weight over a profile histogram.
IntPoly weighted_profile_sum(const std::vector<ProfileCount>& hist);

struct OrbitPolynomials {
  IntPoly enumerated;   // sum over Orb(p) of x^{d(pi)}, position 0 ignored
  IntPoly closed_form;  // orbit_weight of the closed-high profile of p
};

OrbitPolynomials orbit_polynomial(const Permutation& p);

/// (1-x)^{n+1} P_n((1+x)/(1-x)) / (2^n (1+x^2)).
IntPoly a_hat_via_p(int n);
IntPoly a_hat_from_p(const IntPoly& p_n, int n);
/// (1-x)^n Q_n((1+x)/(1-x)).
IntPoly b_hat_via_q(int n);
IntPoly b_hat_from_q(const IntPoly& q_n, int n);

/// Rows 0..n_max of the coefficient recurrence seeded with row 1 = (1, 1);
/// row 0 holds B_0 = 1.
std::vector<IntPoly> b_hat_recurrence_rows(int n_max);

/// B_{n+1} = (n+1+x+nx^2) B_n + (1-x)(1+x^2) B_n' from B_1 = 1+x.
IntPoly b_hat_diff_recurrence(int n);

/// B_n^- from the descent-set counting formula:
/// sum over S in [n-1] of alpha^-(S) x^|S| (1-x)^(n-1-|S|). No enumeration.
IntPoly b_hat_minus_via_descent_sets(int n);
/// x^n B_n^-(1/x).
IntPoly b_hat_plus_via_descent_sets(int n);

}  // namespace altdesc
