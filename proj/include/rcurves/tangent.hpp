#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/geometry.hpp"
#include "rcurves/splitting_type.hpp"
#include "rcurves/syzygy.hpp"

namespace rcurves {

/// Witness data for a pulled-back tangent bundle computation, sufficient to
/// re-verify every step by matrix composition:
///   - jacobian_row: the map sum O(d_b)^(blocks) -> O(sum e_b d_b) given by
///     the partials of G evaluated along the curve (zero rows when X is the
///     whole ambient space),
///   - stage1_inclusion: kernel bundle M of the jacobian row into the source,
///   - euler_coordinates: the coordinates w of each Euler section of M,
///   - stage2_kernel: kernel bundle of w^T on the dual side, whose negated
///     twists are the splitting of the pulled-back tangent bundle.
template <FieldContext K>
struct TangentCertificate {
  GradedMatrix<K> jacobian_row;
  GradedMatrix<K> stage1_inclusion;
  GradedMatrix<K> euler_pairing;   // rows: one per Euler section; columns: summands of M
  GradedMatrix<K> stage2_kernel;   // kernel of euler_pairing, included into the dual of M
};

template <FieldContext K>
struct TangentResult {
  SplittingType splitting;
  TangentCertificate<K> certificate;
};

namespace detail {

/// Row of partial derivatives of G pulled back along the curve:
/// sum_b O(d_b)^(size_b) -> O(sum_b e_b d_b). When X is the whole ambient
/// space the target is empty and the kernel is everything.
template <FieldContext K>
GradedMatrix<K> jacobian_row(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X) {
  std::vector<int> source_twists;
  for (std::size_t b = 0; b < f.blocks().size(); ++b)
    source_twists.insert(source_twists.end(), f.blocks()[b].size(), f.degrees()[b]);

  GradedFreeModule source{source_twists};
  if (!X.equation) return GradedMatrix<K>(F, source, GradedFreeModule{{}});

  const auto& G = *X.equation;
  int target = 0;
  for (int b = 0; b < G.blocks(); ++b) target += G.block_degree(b) * f.degrees()[b];

  GradedMatrix<K> row(F, source, GradedFreeModule{{target}});
  for (int v = 0; v < G.total_vars(); ++v) {
    auto dv = substitute(F, G.partial(F, v), f.blocks());
    int want = row.entry_degree(0, v);
    if (dv.is_zero(F)) {
      dv = BinaryForm<K>::zero(F, std::max(0, want));
    } else if (dv.degree() != want) {
      throw ValidationError("DegreeMismatch", "pulled-back partial has unexpected degree");
    }
    if (want >= 0) row.set_entry(F, 0, v, std::move(dv));
  }
  return row;
}

/// Smoothness of X along the image of f: the pulled-back partials may not
/// have a common zero.
template <FieldContext K>
void require_smooth_along(const K& F, const GradedMatrix<K>& jac) {
  if (jac.target().rank() == 0) return;
  std::vector<BinaryForm<K>> entries;
  for (int j = 0; j < jac.source().rank(); ++j) entries.push_back(jac.entry(0, j));
  try {
    auto g = gcd_forms(F, entries);
    if (g.degree() != 0)
      throw PreconditionError("SingularAlongCurve",
                              "jacobian vanishes along " + form_to_string(F, g));
  } catch (const PreconditionError& e) {
    if (std::string(e.kind()) == "AllFormsZero")
      throw PreconditionError("SingularAlongCurve", "jacobian vanishes along the whole curve");
    throw;
  }
}

}  // namespace detail

/// Splitting type of the pulled-back tangent bundle of X along f, computed
/// in two stages. Stage one: the kernel bundle M of the jacobian row, which
/// realizes the pullback of T(ambient) restricted over X via the Euler
/// presentation. Stage two: each projective factor contributes the Euler
/// section u_b = (coordinates of f in block b, zeros elsewhere) of M;
/// quotienting M by the trivial subbundle they span is dual to taking the
/// kernel of the pairing row(s) w_b^T on the dual module. The splitting of
/// the pulled-back tangent bundle is the negated dual kernel splitting.
///
/// Preconditions: f lies on X (NotOnHypersurface) and X is smooth along the
/// image (SingularAlongCurve).
template <FieldContext K>
TangentResult<K> pullback_tangent_splitting(const K& F, const RationalCurve<K>& f,
                                            const Hypersurface<K>& X) {
  if (!on_hypersurface(F, f, X))
    throw PreconditionError("NotOnHypersurface", "curve does not lie on the hypersurface");

  auto jac = detail::jacobian_row(F, f, X);
  detail::require_smooth_along(F, jac);

  auto stage1 = kernel_bundle(F, jac);
  const auto& M = stage1.inclusion.source();

  // Euler sections: one per block, assembled in the big module at twist 0,
  // then rewritten in the coordinates of M. They lie in M identically:
  // pairing the coordinates of f against the pulled-back partials gives
  // (deg G) * G(f) = 0.
  const int nblocks = static_cast<int>(f.blocks().size());
  std::vector<std::vector<BinaryForm<K>>> w(nblocks);
  {
    const auto& big = stage1.inclusion.target();
    int offset = 0;
    for (int b = 0; b < nblocks; ++b) {
      std::vector<BinaryForm<K>> u;
      u.reserve(big.rank());
      for (int j = 0; j < big.rank(); ++j) u.push_back(BinaryForm<K>::zero(F, big.twists[j]));
      for (std::size_t i = 0; i < f.blocks()[b].size(); ++i)
        u[offset + static_cast<int>(i)] = f.blocks()[b][i];
      w[b] = express_in_kernel(F, stage1.inclusion, u, 0);
      offset += static_cast<int>(f.blocks()[b].size());
    }
  }

  // Pairing rows on the dual of M: source twists -a_i, one target O(0) per
  // Euler section; entry (b, i) = w_b[i] of degree a_i.
  std::vector<int> dual_twists;
  dual_twists.reserve(M.rank());
  for (int t : M.twists) dual_twists.push_back(-t);
  GradedMatrix<K> pairing(F, GradedFreeModule{dual_twists},
                          GradedFreeModule{std::vector<int>(nblocks, 0)});
  for (int b = 0; b < nblocks; ++b)
    for (int i = 0; i < M.rank(); ++i) {
      if (pairing.entry_degree(b, i) < 0) {
        if (!w[b][i].is_zero(F))
          throw PreconditionError("DegenerateEulerFrame", "Euler coordinate of negative degree");
        continue;
      }
      pairing.set_entry(F, b, i, w[b][i]);
    }

  KernelBundle<K> stage2 = [&] {
    try {
      return kernel_bundle(F, pairing);
    } catch (const PreconditionError& e) {
      if (std::string(e.kind()) == "NotSurjective")
        throw PreconditionError("DegenerateEulerFrame",
                                "Euler sections do not span a trivial subbundle");
      throw;
    }
  }();

  std::vector<int> split;
  split.reserve(stage2.splitting.rank());
  for (int t : stage2.splitting.values()) split.push_back(-t);
  SplittingType result(split);

  // Exactness bookkeeping: rank and degree must match the geometry. These
  // hold by construction, so a failure is a bug rather than bad input.
  if (result.rank() != X.dim())
    throw Error("Internal", "splitting rank does not equal dim X");
  if (result.degree() != X.c1_pairing(f.degrees()))
    throw Error("Internal", "splitting degree does not equal c1 pairing");

  return {result, {std::move(jac), std::move(stage1.inclusion), std::move(pairing),
                   std::move(stage2.inclusion)}};
}

/// Dimension of the space of first-order deformations of f as a map to X,
/// computed without the splitting: sections at twist zero of the kernel of
/// the jacobian row, minus one Euler relation per projective factor.
template <FieldContext K>
long long mor_tangent_dim_direct(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X) {
  if (!on_hypersurface(F, f, X))
    throw PreconditionError("NotOnHypersurface", "curve does not lie on the hypersurface");
  auto jac = detail::jacobian_row(F, f, X);
  auto [layout, basis] = sections_at_twist(F, jac, 0);
  return static_cast<long long>(basis.size()) - static_cast<long long>(f.blocks().size());
}

/// Twisted variant used as an independent check of the splitting route:
/// h^0 of the pulled-back tangent bundle twisted by O(k), for k >= -1,
/// equals the twist-k section count of ker(jacobian row) minus
/// (number of factors) * max(0, k + 1) sections of the trivial summands.
template <FieldContext K>
long long tangent_h0_direct(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X,
                            int k) {
  if (k < -1)
    throw ValidationError("DegreeMismatch", "direct section count needs twist >= -1");
  if (!on_hypersurface(F, f, X))
    throw PreconditionError("NotOnHypersurface", "curve does not lie on the hypersurface");
  auto jac = detail::jacobian_row(F, f, X);
  auto [layout, basis] = sections_at_twist(F, jac, k);
  return static_cast<long long>(basis.size()) -
         static_cast<long long>(f.blocks().size()) * std::max(0, k + 1);
}

template <FieldContext K>
bool is_free(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X) {
  auto r = pullback_tangent_splitting(F, f, X);
  return r.splitting.rank() == 0 || r.splitting.min_value() >= 0;
}

template <FieldContext K>
bool is_very_free(const K& F, const RationalCurve<K>& f, const Hypersurface<K>& X) {
  auto r = pullback_tangent_splitting(F, f, X);
  return r.splitting.rank() == 0 || r.splitting.min_value() >= 1;
}

/// The rigid pattern {2, -1, ..., -1}: one O(2) summand and dim X - 1
/// summands O(-1). Unobstructed infinitesimally rigid curves of this shape
/// contribute to genus-zero invariants without moduli.
inline bool is_gw_rigid_type(const SplittingType& s, int dim_x) {
  if (s.rank() != dim_x || dim_x < 1) return false;
  const auto& v = s.values();
  if (v[0] != 2) return false;
  for (int i = 1; i < dim_x; ++i)
    if (v[i] != -1) return false;
  return true;
}

/// Smoothness report for the space of maps at [f]: when every twist in the
/// splitting is >= -1 the first cohomology vanishes, the tangent dimension
/// h^0 is the actual local dimension, and the verdict is
/// "smooth_of_dim_<h0>"; otherwise the computation is inconclusive.
struct SmoothnessReport {
  SplittingType splitting;
  long long h0 = 0;
  long long h1 = 0;
  long long c1 = 0;
  int dim_x = 0;

  bool smooth() const { return h1 == 0; }

  std::string verdict() const {
    if (!smooth()) return "inconclusive";
    return "smooth_of_dim_" + std::to_string(h0);
  }

  /// c1 pairing + dim X: the expected dimension of the space of maps, met
  /// exactly when h1 vanishes.
  long long expected_dim() const { return c1 + dim_x; }
};

template <FieldContext K>
SmoothnessReport smoothness_report(const K& F, const RationalCurve<K>& f,
                                   const Hypersurface<K>& X) {
  auto r = pullback_tangent_splitting(F, f, X);
  SmoothnessReport rep;
  rep.splitting = r.splitting;
  rep.h0 = r.splitting.h0(0);
  rep.h1 = r.splitting.h1(0);
  rep.c1 = r.splitting.degree();
  rep.dim_x = X.dim();
  return rep;
}

}  // namespace rcurves
