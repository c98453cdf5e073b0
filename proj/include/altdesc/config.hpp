#pragma once

namespace altdesc {

/// Upper limits on n for every route whose cost grows like n! (type A) or
/// 2^n n! (type B). Shared by the statistic sums, brute-force polynomials and
/// the verification catalog.
struct EnumerationBounds {
  int type_a = 8;
  int type_b = 7;

  /// Defaults overridden by ALTDESC_ENUM_BOUND_A / ALTDESC_ENUM_BOUND_B.
  static EnumerationBounds from_env();
};

// Hard ceilings of the enumeration kernels (fixed-width buffers, 64-bit counts).
inline constexpr int kMaxEnumerationA = 12;
inline constexpr int kMaxEnumerationB = 10;

}  // namespace altdesc
