#pragma once

#include "altdesc/config.hpp"
#include "altdesc/int_poly.hpp"
#include "altdesc/kernels.hpp"

namespace altdesc {

/// Derivative polynomials of tan and sec: d^n/dx^n tan = P_n(tan) and
/// d^n/dx^n sec = Q_n(tan) sec. Both memoized and safe to call concurrently.
IntPoly p_poly(int n);
IntPoly q_poly(int n);

/// sum over S_n (closed-high boundary) of x^dda (1+x^2)^val.
/// Throws BoundExceeded above bounds.type_a; use p_poly there.
IntPoly p_via_statistics(int n, const EnumerationBounds& bounds = {},
                         Exec exec = Exec::parallel);
/// Same sum over the zero-high boundary.
IntPoly q_via_statistics(int n, const EnumerationBounds& bounds = {},
                         Exec exec = Exec::parallel);

}  // namespace altdesc
