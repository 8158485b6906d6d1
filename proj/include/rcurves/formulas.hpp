#pragma once

#include <span>
#include <vector>

#include "rcurves/errors.hpp"

namespace rcurves::formulas {

/// Closed-form dimension counts for spaces of maps and curves. All inputs
/// and outputs are exact integers; values may be negative (virtual or
/// expected dimensions).

/// Degree-d maps from the line to P^n: (n+1)(d+1) - 1.
inline long long mor_dim_projective(long long n, long long d) {
  if (n < 1 || d < 0) throw ValidationError("BadArgument", "need n >= 1, d >= 0");
  return (n + 1) * (d + 1) - 1;
}

/// Degree-d maps from the line into a degree-e hypersurface in P^(n+1):
/// (n+1)(d+1) - 1 + (d+1) - (de+1) = (n+2-e)d + n.
inline long long mor_hypersurface_bound(long long n, long long e, long long d) {
  if (n < 1 || e < 1 || d < 1) throw ValidationError("BadArgument", "need n, e, d >= 1");
  return (n + 2 - e) * d + n;
}

/// Maps of a curve C to P^n with fixed line bundle pullback L:
/// (n+1) h0(C, L) - 1.
inline long long mor_fixed_bundle_dim(long long n, long long h0_line) {
  if (n < 1 || h0_line < 0) throw ValidationError("BadArgument", "need n >= 1, h0 >= 0");
  return (n + 1) * h0_line - 1;
}

/// Maps of C into a degree-e hypersurface X in P^(n+1) with fixed pullback
/// L: (n+2) h0(C, L) - 1 - h0(C, L^e).
inline long long mor_L_hypersurface_bound(long long n, long long h0_line, long long h0_line_e) {
  if (n < 1 || h0_line < 0 || h0_line_e < 0)
    throw ValidationError("BadArgument", "need n >= 1 and nonnegative section counts");
  return (n + 2) * h0_line - 1 - h0_line_e;
}

/// Local lower bound for the space of maps of a genus-g curve to X at a
/// point where X is smooth: c1(X).beta + dim(X) (1 - g).
inline long long mor_bound(long long c1_beta, long long dim_x, long long g) {
  if (dim_x < 1 || g < 0) throw ValidationError("BadArgument", "need dim X >= 1, g >= 0");
  return c1_beta + dim_x * (1 - g);
}

/// Refinement of mor_bound through a hypersurface presentation, with the
/// first cohomology of the pullback line bundle and its e-th power added
/// back: c1.beta + dim(X)(1-g) - g + dim(X) h1(L) - h1(L^e).
/// Reduces to mor_bound when g = 0 and both h1 terms vanish.
inline long long mor_refined_bound(long long c1_beta, long long dim_x, long long g, long long h1_l,
                                   long long h1_le) {
  if (dim_x < 1 || g < 0 || h1_l < 0 || h1_le < 0)
    throw ValidationError("BadArgument", "need dim X >= 1 and nonnegative g, h1 terms");
  return c1_beta + dim_x * (1 - g) - g + dim_x * h1_l - h1_le;
}

/// Bound for the space of curves (images rather than maps):
/// c1(X).beta + (dim X - 3)(1 - g).
inline long long curves_bound(long long c1_beta, long long dim_x, long long g) {
  if (dim_x < 1 || g < 0) throw ValidationError("BadArgument", "need dim X >= 1, g >= 0");
  return c1_beta + (dim_x - 3) * (1 - g);
}

/// Expected dimension of the genus-g class-beta curve space cut by point or
/// cycle conditions of the given codimensions:
/// c1.beta + (dim X - 3)(1 - g) - sum_i (codim_i - 1).
inline long long gw_expected_dim(long long c1_beta, long long dim_x, long long g,
                                 std::span<const long long> codims) {
  if (dim_x < 1 || g < 0) throw ValidationError("BadArgument", "need dim X >= 1, g >= 0");
  long long v = curves_bound(c1_beta, dim_x, g);
  for (long long c : codims) {
    if (c < 1) throw ValidationError("BadArgument", "constraint codimension must be >= 1");
    v -= c - 1;
  }
  return v;
}

inline long long gw_expected_dim(long long c1_beta, long long dim_x, long long g,
                                 const std::vector<long long>& codims) {
  return gw_expected_dim(c1_beta, dim_x, g, std::span<const long long>(codims));
}

/// Expected dimension of the space of lines on a degree-e hypersurface
/// X^n in P^(n+1): 2n - e - 1. Zero exactly at e = 2n - 1.
inline long long fano_lines_expected_dim(long long n, long long e) {
  if (n < 2 || e < 1) throw ValidationError("BadArgument", "need n >= 2, e >= 1");
  return 2 * n - e - 1;
}

}  // namespace rcurves::formulas
