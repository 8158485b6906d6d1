#pragma once

#include <string>

#include "rcurves/errors.hpp"

namespace rcurves::hirzebruch {

/// Divisor class a E + b F on the Hirzebruch surface F_e, where E is the
/// section with self-intersection -e and F the fiber (E.F = 1, F.F = 0).
/// The parameter e travels with the class; mixing classes from different
/// surfaces is rejected.
struct SurfaceClass {
  int e = 0;
  long long a = 0;
  long long b = 0;

  bool operator==(const SurfaceClass& o) const { return e == o.e && a == o.a && b == o.b; }

  std::string to_string() const {
    return std::to_string(a) + "E + " + std::to_string(b) + "F on F_" + std::to_string(e);
  }
};

inline SurfaceClass make_class(int e, long long a, long long b) {
  if (e < 0) throw ValidationError("BadArgument", "surface parameter e must be >= 0");
  return {e, a, b};
}

inline void require_same_surface(const SurfaceClass& c1, const SurfaceClass& c2) {
  if (c1.e != c2.e)
    throw ValidationError("MixedContext", "classes live on different Hirzebruch surfaces");
}

/// Intersection pairing: (a1 E + b1 F).(a2 E + b2 F) = -e a1 a2 + a1 b2 + a2 b1.
inline long long intersect(const SurfaceClass& c1, const SurfaceClass& c2) {
  require_same_surface(c1, c2);
  return -static_cast<long long>(c1.e) * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

/// Whether a E + b F contains an effective divisor: both coefficients
/// nonnegative (E and F generate the effective cone of F_e).
inline bool is_effective(const SurfaceClass& c) { return c.a >= 0 && c.b >= 0; }

/// Number of global sections of O(a E + b F): a E + b F decomposes against
/// the ruling into pieces b - ie for i = 0..a, each contributing
/// max(0, b - ie + 1) sections. Equals the count of lattice points (i, j)
/// with 0 <= i <= a, 0 <= j <= b - ie.
inline long long h0_class(const SurfaceClass& c) {
  if (c.a < 0) return 0;
  long long n = 0;
  for (long long i = 0; i <= c.a; ++i) {
    long long top = c.b - i * c.e;
    if (top >= 0) n += top + 1;
  }
  return n;
}

/// Dimension of the linear system |c| through m general points, each point
/// imposing one condition: h0 - 1 - m. Values below -1 mean the conditions
/// overdetermine an empty system.
inline long long through_points_dim(const SurfaceClass& c, long long m) {
  if (m < 0) throw ValidationError("BadArgument", "point count must be >= 0");
  return h0_class(c) - 1 - m;
}

/// Dimension of the space of degree-k maps P^1 -> P^1 with k >= 1 modulo
/// reparametrization of the source: 2k - 2. Parametrizes the k-fold covers
/// of a fixed rational curve.
inline long long cover_moduli_dim(long long k) {
  if (k < 1) throw ValidationError("BadArgument", "cover degree must be >= 1");
  return 2 * k - 2;
}

/// Canonical class of F_e: -2E - (e+2)F.
inline SurfaceClass canonical_class(int e) { return make_class(e, -2, -(e + 2)); }

/// Base change along the degree-2 cover F_0 -> F_(2e') collapsing the ruling:
/// on an even surface F_e the class a E + b F pulls back to
/// a E_0 + (b - (e/2) a) F_0. The map is an isometry for the intersection
/// pairing and matches canonical classes.
inline SurfaceClass transport_to_f0(const SurfaceClass& c) {
  if (c.e % 2 != 0)
    throw ValidationError("BadArgument", "transport to F_0 needs an even surface parameter");
  return make_class(0, c.a, c.b - (c.e / 2) * c.a);
}

}  // namespace rcurves::hirzebruch
