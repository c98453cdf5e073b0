#include "altdesc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "altdesc/altpoly.hpp"
#include "altdesc/derivative_polys.hpp"
#include "altdesc/descent_sets.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/series.hpp"
#include "altdesc/signed_perm.hpp"
#include "altdesc/table_cache.hpp"

namespace altdesc::verify {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

std::optional<Profile> parse_profile(std::string_view s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  return std::nullopt;
}

IntPoly Context::derivative_poly(char family, int n) const {
  const Family fam = family == 'P' ? Family::P : Family::Q;
  IntPoly poly;
  if (auto hit = cache ? cache->get(fam, n) : std::nullopt) {
    poly = IntPoly(std::move(*hit));
  } else {
    poly = family == 'P' ? p_poly(n) : q_poly(n);
    if (cache) cache->put(fam, n, poly.coeffs());
  }
  if (mutation && mutation->family == family && mutation->n == n) {
    poly.add_to_coeff(static_cast<unsigned>(mutation->k), BigInt(mutation->delta));
  }
  return poly;
}

IntPoly Context::p(int n) const { return derivative_poly('P', n); }
IntPoly Context::q(int n) const { return derivative_poly('Q', n); }

namespace {

// Which enumeration bounds a check's n_max is subject to.
enum class Cost { type_a, type_b, series, formula };

struct Outcome {
  std::optional<Witness> witness;
  std::string note;
};

using CheckFn = std::function<Outcome(const CheckParams&, const Context&)>;

struct Entry {
  std::string id;
  Cost cost;
  bool needs_a = false;  // also bounded by the type A bound
  CheckFn fn;
};

std::string poly_detail(const IntPoly& lhs, const IntPoly& rhs) {
  std::ostringstream os;
  os << "lhs [" << to_plain(lhs) << "] vs rhs [" << to_plain(rhs) << "]";
  return os.str();
}

std::optional<Witness> compare(int n, const IntPoly& lhs, const IntPoly& rhs,
                               std::string_view what = {}) {
  if (auto k = first_difference(lhs, rhs)) {
    std::string detail = what.empty() ? "" : std::string(what) + ": ";
    return Witness{n, *k, detail + poly_detail(lhs, rhs)};
  }
  return std::nullopt;
}

std::optional<Witness> compare_int(int n, long long position, const BigInt& lhs, const BigInt& rhs,
                                   std::string_view what) {
  if (lhs == rhs) return std::nullopt;
  return Witness{n, position,
                 std::string(what) + ": " + to_decimal(lhs) + " vs " + to_decimal(rhs)};
}

std::optional<Witness> compare_series(const SeriesQx& lhs, const SeriesQx& rhs) {
  const SeriesComparison cmp = series_equal(lhs, rhs);
  if (cmp.equal) return std::nullopt;
  const SeriesMismatch& m = *cmp.first_mismatch;
  return Witness{m.n, m.x_degree,
                 "coefficient of z^" + std::to_string(m.n) + " x^" + std::to_string(m.x_degree) +
                     ": " + m.lhs + " vs " + m.rhs};
}

// Loops n over the range and stops at the first witness.
Outcome for_each_n(const CheckParams& p, const std::function<std::optional<Witness>(int)>& body) {
  for (int n = p.n_min; n <= p.n_max; ++n) {
    if (auto w = body(n)) return {w, {}};
  }
  return {};
}

// Turns an exactness failure inside a route into a witness at n.
std::optional<Witness> guarded(int n, const std::function<std::optional<Witness>()>& body) {
  try {
    return body();
  } catch (const ExactnessError& e) {
    return Witness{n, 0, std::string("exact division failed: ") + e.what()};
  }
}

const IntPoly kOnePlusX{1, 1};
const IntPoly kOnePlusXSquared{1, 0, 1};

// ---- boundary facts --------------------------------------------------------

Outcome check_boundary(const CheckParams& p, BoundaryConvention conv) {
  const bool closed = conv == BoundaryConvention::closed_high;
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    long long rank = 0;
    const std::uint64_t all = (std::uint64_t{1} << (n + 1)) - 2;  // bits 1..n
    for (const Permutation& perm : Permutations(n)) {
      const StatProfile s = stat_profile(perm, conv);
      const bool partition =
          (s.da_set.mask() | s.dd_set.mask() | s.val_set.mask() | s.pk_set.mask()) == all &&
          s.da_set.size() + s.dd_set.size() + s.val_set.size() + s.pk_set.size() == n &&
          s.da_set.size() == s.da && s.dd_set.size() == s.dd && s.val_set.size() == s.val &&
          s.pk_set.size() == s.pk;
      const bool holds = closed ? (s.val == s.pk + 1 && 2 * s.val + s.dda() == n + 1)
                                : (s.val == s.pk && 2 * s.val + s.dda() == n);
      if (!partition || !holds) {
        std::ostringstream os;
        os << "permutation " << perm << ": da=" << s.da << " dd=" << s.dd << " val=" << s.val
           << " pk=" << s.pk;
        return Witness{n, rank, os.str()};
      }
      ++rank;
    }
    return std::nullopt;
  });
}

// ---- combinatorial formulas ------------------------------------------------

Outcome check_pan1(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    return guarded(n, [&] {
      return compare(n, a_hat_bruteforce(n, ctx.bounds), a_hat_combinatorial(n, ctx.bounds));
    });
  });
}

Outcome check_pan2(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    return compare(n, b_hat_bruteforce(n, ctx.bounds), b_hat_combinatorial(n, ctx.bounds));
  });
}

Outcome check_qi1(const CheckParams& p, const Context&) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    long long rank = 0;
    for (const Permutation& perm : Permutations(n)) {
      const OrbitPolynomials op = orbit_polynomial(perm);
      if (auto k = first_difference(op.enumerated, op.closed_form)) {
        std::ostringstream os;
        os << "orbit of " << perm << " (rank " << rank << "), x^" << *k << ": "
           << poly_detail(op.enumerated, op.closed_form);
        return Witness{n, *k, os.str()};
      }
      ++rank;
    }
    return std::nullopt;
  });
}

Outcome check_eql(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const TypeBHistograms h = alt_descent_histograms_B(n);
    std::vector<BigInt> counts;
    for (std::uint64_t c : h.unsigned_positions) counts.push_back(from_u64(c));
    const IntPoly over_bn(std::move(counts));
    const IntPoly scaled = a_hat_bruteforce(n, ctx.bounds) * pow2(static_cast<unsigned>(n));
    if (auto w = compare(n, over_bn, scaled, "sum over B_n vs 2^n A_n")) return w;

    IntPoly orbits;
    for (const Permutation& perm : Permutations(n)) {
      orbits += orbit_polynomial(perm).enumerated;
      // every order-isomorphic copy carries the statistic of perm itself
      const int d = alt_descent_count(perm);
      for (const SignedPermutation& s : iso_copies(perm)) {
        if (alt_descent_count_unsigned_positions(s) != d) {
          std::ostringstream os;
          os << "Iso(" << perm << ") contains " << s << " with a different statistic";
          return Witness{n, d, os.str()};
        }
      }
    }
    return compare(n, orbits, scaled, "sum of orbit polynomials vs 2^n A_n");
  });
}

// Each classified position of p in S_n (closed-high) has its alternating
// descent outcome over Orb(p) fixed by one sign; verified by grouping the
// orbit on that sign.
Outcome check_sign_determination(const CheckParams& p, const Context&) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    long long rank = 0;
    for (const Permutation& perm : Permutations(n)) {
      const StatProfile prof = stat_profile(perm, BoundaryConvention::closed_high);
      const std::vector<SignedPermutation> orb = orbit(perm);
      std::vector<PositionSet> descents;
      descents.reserve(orb.size());
      for (const auto& s : orb) descents.push_back(alt_descent_set_B(s));

      // outcome(s) -> value in {0, 1, 2}; 2 marks a peak split across its two positions
      auto determined = [&](int sign_index, const std::function<int(const PositionSet&)>& outcome,
                            const char* kind, int i) -> std::optional<Witness> {
        int seen[2] = {-1, -1};
        for (std::size_t j = 0; j < orb.size(); ++j) {
          const int block = orb[j].sign(sign_index) > 0 ? 1 : 0;
          const int o = outcome(descents[j]);
          if (o == 2 || (seen[block] != -1 && seen[block] != o)) {
            std::ostringstream os;
            os << kind << " at " << i << " of " << perm << " (rank " << rank
               << ") not determined by the sign of position " << sign_index;
            return Witness{n, i, os.str()};
          }
          seen[block] = o;
        }
        return std::nullopt;
      };

      for (int i = 1; i <= n; ++i) {
        std::optional<Witness> w;
        if (prof.da_set.contains(i) && i - 1 >= 1) {
          w = determined(i, [i](const PositionSet& d) { return d.contains(i - 1) ? 1 : 0; },
                         "double ascent", i);
        } else if (prof.dd_set.contains(i) && i <= n - 1) {
          w = determined(i, [i](const PositionSet& d) { return d.contains(i) ? 1 : 0; },
                         "double descent", i);
        } else if (prof.pk_set.contains(i)) {
          w = determined(i,
                         [i](const PositionSet& d) {
                           const bool a = d.contains(i - 1);
                           const bool b = d.contains(i);
                           return a == b ? (a ? 1 : 0) : 2;
                         },
                         "peak", i);
        } else if (prof.val_set.contains(i) && i <= n - 1) {
          w = determined(i + 1, [i](const PositionSet& d) { return d.contains(i) ? 1 : 0; },
                         "valley", i);
        }
        if (w) return w;
      }
      ++rank;
    }
    return std::nullopt;
  });
}

// ---- derivative polynomial links ------------------------------------------

Outcome check_my1(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    const IntPoly lhs =
        a_hat_bruteforce(n, ctx.bounds) * kOnePlusXSquared * pow2(static_cast<unsigned>(n));
    return compare(n, lhs, mobius_hom_sub(ctx.p(n), static_cast<unsigned>(n + 1)));
  });
}

Outcome check_my2(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    return compare(n, b_hat_bruteforce(n, ctx.bounds), b_hat_from_q(ctx.q(n), n));
  });
}

Outcome check_a_link(const CheckParams& p, const Context& ctx, bool type_a) {
  const BoundaryConvention conv =
      type_a ? BoundaryConvention::closed_high : BoundaryConvention::zero_high;
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const IntPoly lhs = type_a ? mobius_hom_sub(ctx.p(n), static_cast<unsigned>(n + 1))
                               : mobius_hom_sub(ctx.q(n), static_cast<unsigned>(n));
    const auto hist = profile_histogram(n, conv);
    IntPoly middle;
    for (const ProfileCount& c : hist) {
      middle += kOnePlusX.pow(static_cast<unsigned>(c.dda)) *
                (kOnePlusXSquared * BigInt(2)).pow(static_cast<unsigned>(c.val)) *
                from_u64(c.count);
    }
    IntPoly right = weighted_profile_sum(hist);
    if (type_a) right *= kOnePlusXSquared;
    if (auto w = compare(n, lhs, middle, "substituted polynomial vs (2+2x^2)^val sum")) return w;
    return compare(n, middle, right, "(2+2x^2)^val sum vs orbit-weight sum");
  });
}

// ---- generating functions --------------------------------------------------

struct TrigKit {
  int order;
  int x_order;
  SeriesQx sin, cos, one;

  TrigKit(int n, int xo)
      : order(n),
        x_order(xo),
        sin(trig_series(Trig::sin, n, xo)),
        cos(trig_series(Trig::cos, n, xo)),
        one(SeriesQx::constant(RatPoly{1}, n, xo)) {}

  SeriesQx poly(const RatPoly& c) const { return SeriesQx::constant(c, order, x_order); }
};

const RatPoly kX{0, 1};

Outcome check_hof(const CheckParams& p, const Context& ctx, bool tangent) {
  const TrigKit t(p.n_max, p.x_order);
  const SeriesQx denom = t.cos - kX * t.sin;
  const SeriesQx rhs = tangent ? (t.sin + kX * t.cos) / denom : t.one / denom;
  const SeriesQx lhs = egf_from_family(
      [&](int n) { return tangent ? ctx.p(n) : ctx.q(n); }, t.order, 0, t.x_order);
  return {compare_series(lhs, rhs), {}};
}

std::string route_note(const char* brute, int bound, int order, const char* formula) {
  if (order <= bound) return std::string(brute) + " for every n";
  return std::string(brute) + " for n <= " + std::to_string(bound) + ", " + formula + " above";
}

Outcome check_che(const CheckParams& p, const Context& ctx) {
  const TrigKit t(p.n_max, p.x_order);
  const RatPoly one_minus_x{1, -1};
  const SeriesQx u = scale_z(trig_series(Trig::sec, t.order, t.x_order) +
                                 trig_series(Trig::tan, t.order, t.x_order),
                             one_minus_x);
  const SeriesQx rhs = (u - t.one) / (t.one - kX * u);
  const int bound = ctx.bounds.type_a;
  std::optional<Witness> failure;
  SeriesQx lhs(t.order, t.x_order);
  try {
    lhs = egf_from_family(
        [&](int n) {
          return n <= bound ? a_hat_bruteforce(n, ctx.bounds) : a_hat_from_p(ctx.p(n), n);
        },
        t.order, 1, t.x_order);
  } catch (const ExactnessError& e) {
    return {Witness{0, 0, e.what()}, {}};
  }
  return {compare_series(lhs, rhs),
          "A_n: " + route_note("enumeration", bound, t.order, "derivative-polynomial route")};
}

Outcome check_p6(const CheckParams& p, const Context& ctx) {
  const TrigKit t(p.n_max, p.x_order);
  const RatPoly one_minus_x{1, -1};
  const RatPoly x_minus_one{-1, 1};
  const RatPoly x_plus_one{1, 1};
  const SeriesQx c = scale_z(t.cos, one_minus_x);
  const SeriesQx s = scale_z(t.sin, one_minus_x);
  const SeriesQx rhs = t.poly(x_minus_one) / (x_minus_one * c + x_plus_one * s);
  const int bound = ctx.bounds.type_b;
  const SeriesQx lhs = egf_from_family(
      [&](int n) { return n <= bound ? b_hat_bruteforce(n, ctx.bounds) : b_hat_from_q(ctx.q(n), n); },
      t.order, 0, t.x_order);
  return {compare_series(lhs, rhs),
          "B_n: " + route_note("enumeration", bound, t.order, "derivative-polynomial route")};
}

Outcome check_bminus_egf(const CheckParams& p, const Context& ctx) {
  const TrigKit t(p.n_max, p.x_order);
  const RatPoly x_minus_one{-1, 1};
  const RatPoly x_plus_one{1, 1};
  const SeriesQx c = scale_z(t.cos, x_minus_one);
  const SeriesQx s = scale_z(t.sin, x_minus_one);
  const SeriesQx rhs = (c + s - t.one) / (x_minus_one * c - x_plus_one * s);
  const int bound = ctx.bounds.type_b;
  const SeriesQx lhs = egf_from_family(
      [&](int n) {
        return n <= bound ? b_hat_split_bruteforce(n, ctx.bounds).minus
                          : b_hat_minus_via_descent_sets(n);
      },
      t.order, 1, t.x_order);
  return {compare_series(lhs, rhs),
          "B_n^-: " + route_note("enumeration", bound, t.order, "descent-set formula")};
}

Outcome check_euler_egf(const CheckParams& p, const Context& ctx) {
  const TrigKit t(p.n_max, p.x_order);
  const SeriesQx rhs = trig_series(Trig::tan, t.order, t.x_order) +
                       trig_series(Trig::sec, t.order, t.x_order);
  const int bound = ctx.bounds.type_b;
  const SeriesQx lhs = egf_from_family(
      [&](int n) {
        if (n == 0) return IntPoly{1};
        if (n <= bound) return IntPoly::constant(from_u64(alternating_counts(n).type_a));
        return IntPoly::constant(euler_number(n));
      },
      t.order, 0, t.x_order);
  return {compare_series(lhs, rhs),
          "E_n: " + route_note("enumeration", bound, t.order, "Seidel triangle")};
}

Outcome check_snake_egf(const CheckParams& p, const Context& ctx) {
  const TrigKit t(p.n_max, p.x_order);
  const SeriesQx rhs = t.one / (t.cos - t.sin);
  const int bound = ctx.bounds.type_b;
  const SeriesQx lhs = egf_from_family(
      [&](int n) {
        if (n == 0) return IntPoly{1};
        if (n <= bound) return IntPoly::constant(from_u64(alternating_counts(n).snakes));
        return IntPoly::constant(snake_number(n));
      },
      t.order, 0, t.x_order);
  return {compare_series(lhs, rhs),
          "S_n: " + route_note("enumeration", bound, t.order, "integer recurrence")};
}

// ---- type B alternating permutations and descent sets ----------------------

Outcome check_dub(const CheckParams& p, const Context&) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const AlternatingCounts c = alternating_counts(n);
    if (auto w = compare_int(n, 0, from_u64(c.type_a), euler_number(n), "E_n enumerated vs Seidel")) {
      return w;
    }
    return compare_int(n, 0, from_u64(c.type_b), du_b_number(n), "DU_n^B enumerated vs 2^n E_n");
  });
}

Outcome check_key(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const DescentSetTable alpha = alpha_minus_table(n, ctx.bounds);
    for (SubsetMask s = 0; s < alpha.entries.size(); ++s) {
      if (auto w = compare_int(n, static_cast<long long>(s), alpha[s], alpha_minus_formula(n, s),
                               "alpha^-(S) enumerated vs formula, S mask")) {
        return w;
      }
    }
    return std::nullopt;
  });
}

Outcome check_beta_partition(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const DescentSetTable beta = beta_minus_table(n, ctx.bounds);
    BigInt total = 0;
    for (const auto& v : beta.entries) total += v;
    const BigInt expected = pow2(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
    if (auto w = compare_int(n, -1, total, expected, "sum of beta^- vs 2^(n-1) n!")) return w;

    DescentSetTable alpha{n, {}};
    for (SubsetMask s = 0; s < beta.entries.size(); ++s) {
      alpha.entries.push_back(alpha_minus_formula(n, s));
    }
    const DescentSetTable recovered = subset_differences(alpha);
    for (SubsetMask s = 0; s < beta.entries.size(); ++s) {
      if (auto w = compare_int(n, static_cast<long long>(s), recovered[s], beta[s],
                               "inclusion-exclusion of formula alpha vs enumerated beta, S mask")) {
        return w;
      }
    }
    return std::nullopt;
  });
}

Outcome check_reciprocal(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    const TypeBSplit split = b_hat_split_bruteforce(n, ctx.bounds);
    return compare(n, reciprocal_transform(split.minus, static_cast<unsigned>(n)), split.plus);
  });
}

Outcome check_rec_prop(const CheckParams& p, const Context& ctx) {
  const std::vector<IntPoly> rows = b_hat_recurrence_rows(std::max(p.n_max, 1));
  return for_each_n(p, [&](int n) -> std::optional<Witness> {
    const IntPoly& row = rows[static_cast<std::size_t>(n)];
    if (auto w = compare(n, row, b_hat_bruteforce(n, ctx.bounds), "recurrence row vs enumeration")) {
      return w;
    }
    return compare_int(n, 0, row.coeff(0), snake_number(n), "B(n,0) vs S_n");
  });
}

Outcome check_rec_diff(const CheckParams& p, const Context& ctx) {
  return for_each_n(p, [&](int n) {
    return compare(n, b_hat_diff_recurrence(n), b_hat_from_q(ctx.q(n), n));
  });
}

Outcome check_b_n0_snake(const CheckParams& p, const Context& ctx) {
  const std::vector<IntPoly> rows = b_hat_recurrence_rows(std::max(p.n_max, 1));
  const int bound = ctx.bounds.type_b;
  Outcome out = for_each_n(p, [&](int n) -> std::optional<Witness> {
    const BigInt& column = rows[static_cast<std::size_t>(n)].coeff(0);
    if (auto w = compare_int(n, 0, column, snake_number(n), "B(n,0) vs S_n")) return w;
    if (n <= bound && n <= kMaxEnumerationB) {
      return compare_int(n, 0, column, from_u64(alternating_counts(n).snakes),
                         "B(n,0) vs enumerated snakes");
    }
    return std::nullopt;
  });
  out.note = "snakes enumerated for n <= " + std::to_string(std::min(bound, p.n_max));
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&](std::string id, Cost cost, bool needs_a, CheckFn fn) {
      t.push_back({std::move(id), cost, needs_a, std::move(fn)});
    };
    add("L1", Cost::type_a, false,
        [](const CheckParams& p, const Context&) { return check_boundary(p, BoundaryConvention::closed_high); });
    add("L2", Cost::type_a, false,
        [](const CheckParams& p, const Context&) { return check_boundary(p, BoundaryConvention::zero_high); });
    add("pan1", Cost::type_a, false, check_pan1);
    add("pan2", Cost::type_b, true, check_pan2);
    add("Qi1", Cost::type_b, false, check_qi1);
    add("eqL", Cost::type_b, true, check_eql);
    add("lemma21", Cost::type_b, false, check_sign_determination);
    add("my1", Cost::type_a, false, check_my1);
    add("my2", Cost::type_b, false, check_my2);
    add("A1", Cost::type_a, false,
        [](const CheckParams& p, const Context& c) { return check_a_link(p, c, true); });
    add("A2", Cost::type_a, false,
        [](const CheckParams& p, const Context& c) { return check_a_link(p, c, false); });
    add("hof1", Cost::series, false,
        [](const CheckParams& p, const Context& c) { return check_hof(p, c, true); });
    add("hof2", Cost::series, false,
        [](const CheckParams& p, const Context& c) { return check_hof(p, c, false); });
    add("che", Cost::series, false, check_che);
    add("p6", Cost::series, false, check_p6);
    add("bminus_egf", Cost::series, false, check_bminus_egf);
    add("euler_egf", Cost::series, false, check_euler_egf);
    add("snake_egf", Cost::series, false, check_snake_egf);
    add("dub_2nEn", Cost::type_b, false, check_dub);
    add("key", Cost::type_b, false, check_key);
    add("beta_partition", Cost::type_b, false, check_beta_partition);
    add("reciprocal", Cost::type_b, false, check_reciprocal);
    add("rec_prop", Cost::type_b, false, check_rec_prop);
    add("rec_diff", Cost::formula, false, check_rec_diff);
    add("b_n0_snake", Cost::formula, false, check_b_n0_snake);
    return t;
  }();
  return table;
}

const Entry& find(std::string_view id) {
  for (const Entry& e : entries()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown identity check '" + std::string(id) + "'");
}

// Lowest n each check is defined for.
int first_n(std::string_view id) { return id == "my2" ? 0 : 1; }

}  // namespace

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Entry& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

bool in_catalog(std::string_view id) {
  return std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.id == id; });
}

CheckParams default_params(std::string_view id, Profile profile) {
  const Entry& e = find(id);
  const bool quick = profile == Profile::quick;
  const int a = quick ? 6 : 8;
  const int b = quick ? 5 : 7;
  const int order = quick ? 8 : 12;

  CheckParams p;
  p.n_min = first_n(id);
  switch (e.cost) {
    case Cost::type_a: p.n_max = a; break;
    case Cost::type_b:
      p.n_max = (id == "key" || id == "beta_partition" || id == "lemma21") ? std::min(b, 6) : b;
      break;
    case Cost::series:
      p.kind = ParamKind::series_order;
      p.n_min = 0;
      p.n_max = order;
      p.x_order = x_order_for(order);
      break;
    case Cost::formula:
      if (id == "rec_diff") p.n_max = quick ? 12 : 20;
      else p.n_max = quick ? 10 : 12;
      break;
  }
  return p;
}

IdentityCheck run(std::string_view id, const CheckParams& params, const Context& ctx) {
  const Entry& e = find(id);
  IdentityCheck result;
  result.id = e.id;
  result.params = params;
  if (e.cost == Cost::series) {
    result.params.kind = ParamKind::series_order;
    result.params.n_min = 0;
    if (result.params.x_order <= 0) result.params.x_order = x_order_for(params.n_max);
  } else {
    result.params.kind = ParamKind::n_range;
    result.params.n_min = std::max(params.n_min, first_n(id));
  }
  const CheckParams& p = result.params;
  if (p.n_max < p.n_min || p.n_max < 0) {
    throw std::invalid_argument(e.id + ": empty parameter range");
  }

  auto skip = [&](const char* kind, int bound) {
    result.status = Status::skipped;
    result.note = "n_max " + std::to_string(p.n_max) + " exceeds the " + kind +
                  " enumeration bound " + std::to_string(bound);
    return result;
  };
  if (e.cost == Cost::type_a && p.n_max > ctx.bounds.type_a) return skip("type A", ctx.bounds.type_a);
  if (e.cost == Cost::type_b) {
    if (p.n_max > ctx.bounds.type_b) return skip("type B", ctx.bounds.type_b);
    if (e.needs_a && p.n_max > ctx.bounds.type_a) return skip("type A", ctx.bounds.type_a);
  }

  Outcome out = e.fn(p, ctx);
  result.note = std::move(out.note);
  if (out.witness) {
    result.status = Status::fail;
    result.witness = std::move(out.witness);
  }
  return result;
}

std::vector<IdentityCheck> run_all(Profile profile, const Context& ctx) {
  std::vector<IdentityCheck> out;
  for (const Entry& e : entries()) out.push_back(run(e.id, default_params(e.id, profile), ctx));
  return out;
}

bool all_passed(const std::vector<IdentityCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const IdentityCheck& c) { return c.status == Status::fail; });
}

nlohmann::json report_json(const std::vector<IdentityCheck>& checks, const ReportMeta& meta) {
  nlohmann::json doc;
  doc["version"] = 1;
  if (meta.generated) doc["header"] = {{"tool", "altdesc"}, {"generated", *meta.generated}};
  doc["profile"] = meta.profile;
  doc["bounds"] = {{"type_a", meta.bounds.type_a}, {"type_b", meta.bounds.type_b}};
  std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
  nlohmann::json list = nlohmann::json::array();
  for (const IdentityCheck& c : checks) {
    nlohmann::json item;
    item["id"] = c.id;
    if (c.params.kind == ParamKind::series_order) {
      item["params"] = {{"order", c.params.n_max}, {"x_order", c.params.x_order}};
    } else {
      item["params"] = {{"n_min", c.params.n_min}, {"n_max", c.params.n_max}};
    }
    item["status"] = std::string(to_string(c.status));
    if (c.witness) {
      item["witness"] = {{"n", c.witness->n}, {"position", c.witness->position},
                         {"detail", c.witness->detail}};
    } else {
      item["witness"] = nullptr;
    }
    item["note"] = c.note;
    ++summary[std::string(to_string(c.status))];
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  doc["summary"] = summary;
  return doc;
}

std::string report_text(const std::vector<IdentityCheck>& checks, const ReportMeta& meta) {
  std::ostringstream os;
  if (meta.generated) os << "# altdesc verify, generated " << *meta.generated << '\n';
  os << "profile " << meta.profile << ", bounds A=" << meta.bounds.type_a
     << " B=" << meta.bounds.type_b << '\n';
  int failed = 0;
  int skipped = 0;
  for (const IdentityCheck& c : checks) {
    os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ");
    os << c.id;
    if (c.params.kind == ParamKind::series_order) {
      os << " order=" << c.params.n_max << " x_order=" << c.params.x_order;
    } else {
      os << " n=" << c.params.n_min << ".." << c.params.n_max;
    }
    if (c.witness) os << " witness n=" << c.witness->n << " pos=" << c.witness->position << " ("
                      << c.witness->detail << ")";
    if (!c.note.empty()) os << " [" << c.note << "]";
    os << '\n';
    failed += c.status == Status::fail;
    skipped += c.status == Status::skipped;
  }
  os << checks.size() - static_cast<std::size_t>(failed + skipped) << " passed, " << failed
     << " failed, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace altdesc::verify
