#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rcurves/binary_form.hpp"
#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/matrix.hpp"
#include "rcurves/splitting_type.hpp"

namespace rcurves {

/// Finite direct sum of line bundles O(t_1) + ... + O(t_r) on the projective
/// line, recorded by its twists.
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  long long twist_sum() const {
    long long s = 0;
    for (int t : twists) s += t;
    return s;
  }
};

/// Map of graded free modules phi: source -> target. Entry (k, j) is a
/// binary form of degree target.twists[k] - source.twists[j]; a required
/// negative degree forces the entry to be zero and is stored as a zero form
/// of degree 0.
template <FieldContext K>
class GradedMatrix {
 public:
  GradedMatrix(const K& F, GradedFreeModule source, GradedFreeModule target)
      : source_(std::move(source)), target_(std::move(target)) {
    entries_.reserve(static_cast<std::size_t>(target_.rank()) * source_.rank());
    for (int k = 0; k < target_.rank(); ++k)
      for (int j = 0; j < source_.rank(); ++j)
        entries_.push_back(BinaryForm<K>::zero(F, std::max(0, entry_degree(k, j))));
  }

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }

  int entry_degree(int row, int col) const {
    return target_.twists[row] - source_.twists[col];
  }

  const BinaryForm<K>& entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * source_.rank() + col];
  }

  void set_entry(const K& F, int row, int col, BinaryForm<K> f) {
    int d = entry_degree(row, col);
    if (d < 0) {
      if (!f.is_zero(F))
        throw ValidationError("DegreeMismatch", "entry with negative required degree must vanish");
      return;
    }
    if (f.degree() != d)
      throw ValidationError("DegreeMismatch", "entry degree does not match twist difference");
    entries_[static_cast<std::size_t>(row) * source_.rank() + col] = std::move(f);
  }

  bool is_zero(const K& F) const {
    for (const auto& e : entries_)
      if (!e.is_zero(F)) return false;
    return true;
  }

 private:
  GradedFreeModule source_, target_;
  std::vector<BinaryForm<K>> entries_;  // row-major
};

/// Composition A . B of graded maps (B applied first). B's target twists
/// must equal A's source twists.
template <FieldContext K>
GradedMatrix<K> compose(const K& F, const GradedMatrix<K>& A, const GradedMatrix<K>& B) {
  if (A.source().twists != B.target().twists)
    throw ValidationError("ArityMismatch", "composition twist mismatch");
  GradedMatrix<K> C(F, B.source(), A.target());
  for (int k = 0; k < A.target().rank(); ++k)
    for (int j = 0; j < B.source().rank(); ++j) {
      int d = C.entry_degree(k, j);
      if (d < 0) continue;
      auto acc = BinaryForm<K>::zero(F, d);
      for (int i = 0; i < A.source().rank(); ++i) {
        if (A.entry_degree(k, i) < 0 || B.entry_degree(i, j) < 0) continue;
        acc = form_add(F, acc, form_mul(F, A.entry(k, i), B.entry(i, j)));
      }
      C.set_entry(F, k, j, std::move(acc));
    }
  return C;
}

/// Coordinate layout for the degree-(twist + m) graded piece of a free
/// module: component j contributes coefficients of a form of degree
/// twists[j] + m when that is >= 0 and is absent otherwise.
struct TwistLayout {
  int m = 0;
  std::vector<int> component_degree;  // twists[j] + m, or -1 when absent
  std::vector<int> offset;            // flat offset of component j, -1 when absent
  int total = 0;

  static TwistLayout build(const GradedFreeModule& mod, int m) {
    TwistLayout L;
    L.m = m;
    L.component_degree.resize(mod.rank());
    L.offset.resize(mod.rank());
    for (int j = 0; j < mod.rank(); ++j) {
      int d = mod.twists[j] + m;
      if (d < 0) {
        L.component_degree[j] = -1;
        L.offset[j] = -1;
      } else {
        L.component_degree[j] = d;
        L.offset[j] = L.total;
        L.total += d + 1;
      }
    }
    return L;
  }
};

/// Flat coefficient vector -> tuple of forms for the given layout. Absent
/// components come back as degree-0 zero forms.
template <FieldContext K>
std::vector<BinaryForm<K>> unflatten_section(const K& F, const TwistLayout& L,
                                             const std::vector<typename K::Element>& v) {
  std::vector<BinaryForm<K>> forms;
  forms.reserve(L.component_degree.size());
  for (std::size_t j = 0; j < L.component_degree.size(); ++j) {
    int d = L.component_degree[j];
    if (d < 0) {
      forms.push_back(BinaryForm<K>::zero(F, 0));
      continue;
    }
    auto f = BinaryForm<K>::zero(F, d);
    for (int i = 0; i <= d; ++i) f.set_coeff(i, v[L.offset[j] + i]);
    forms.push_back(std::move(f));
  }
  return forms;
}

/// Matrix of the map "degree-m sections of source -> degree-m sections of
/// target" induced by phi, in the coefficient bases of the two layouts.
template <FieldContext K>
Matrix<K> twist_action_matrix(const K& F, const GradedMatrix<K>& phi, const TwistLayout& src,
                              const TwistLayout& dst) {
  Matrix<K> A = Matrix<K>::zero(F, dst.total, src.total);
  for (int k = 0; k < phi.target().rank(); ++k) {
    if (dst.component_degree[k] < 0) continue;
    for (int j = 0; j < phi.source().rank(); ++j) {
      if (src.component_degree[j] < 0 || phi.entry_degree(k, j) < 0) continue;
      const auto& g = phi.entry(k, j);
      for (int ig = 0; ig <= g.degree(); ++ig) {
        if (F.is_zero(g.coeff(ig))) continue;
        for (int iv = 0; iv <= src.component_degree[j]; ++iv) {
          auto& cell = A.at(dst.offset[k] + ig + iv, src.offset[j] + iv);
          cell = F.add(cell, g.coeff(ig));
        }
      }
    }
  }
  return A;
}

/// Global sections of ker(phi) twisted by m, as the kernel of the twist-m
/// action matrix. Exact for every m: taking sections is left exact, so
/// degree-m sections of the kernel sheaf are precisely the kernel vectors.
template <FieldContext K>
std::pair<TwistLayout, std::vector<std::vector<typename K::Element>>> sections_at_twist(
    const K& F, const GradedMatrix<K>& phi, int m) {
  TwistLayout src = TwistLayout::build(phi.source(), m);
  TwistLayout dst = TwistLayout::build(phi.target(), m);
  auto A = twist_action_matrix(F, phi, src, dst);
  return {src, kernel_basis(F, A)};
}

/// Rewrites a flat coefficient vector from the layout at twist m-1 to the
/// layout at twist m, multiplying every component by s or by t.
template <FieldContext K>
std::vector<typename K::Element> embed_shift(const K& F, const TwistLayout& from,
                                             const TwistLayout& to,
                                             const std::vector<typename K::Element>& v, bool by_t) {
  std::vector<typename K::Element> out(to.total, F.zero());
  for (std::size_t j = 0; j < from.component_degree.size(); ++j) {
    int d = from.component_degree[j];
    if (d < 0) continue;
    for (int i = 0; i <= d; ++i) out[to.offset[j] + i + (by_t ? 1 : 0)] = v[from.offset[j] + i];
  }
  return out;
}

namespace detail {

/// Determinant of the square submatrix on rows row.. and the given source
/// columns, by Laplace expansion along the top row. `deg` is the degree the
/// result must have; contributions that cannot reach it are zero and are
/// skipped, which keeps every intermediate sum homogeneous.
template <FieldContext K>
BinaryForm<K> graded_minor_rec(const K& F, const GradedMatrix<K>& phi, int row,
                               const std::vector<int>& cols, int deg) {
  if (cols.empty()) return BinaryForm<K>::constant(F, F.one());
  auto acc = BinaryForm<K>::zero(F, deg);
  for (std::size_t p = 0; p < cols.size(); ++p) {
    if (phi.entry_degree(row, cols[p]) < 0) continue;
    const auto& e = phi.entry(row, cols[p]);
    if (e.is_zero(F)) continue;
    int d_sub = deg - e.degree();
    if (d_sub < 0) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t q = 0; q < cols.size(); ++q)
      if (q != p) rest.push_back(cols[q]);
    auto term = form_mul(F, e, graded_minor_rec(F, phi, row + 1, rest, d_sub));
    if (p % 2 == 1) term = form_neg(F, term);
    acc = form_add(F, acc, term);
  }
  return acc;
}

/// Maximal minor of phi on the given source columns. Homogeneous of degree
/// sum(target twists) - sum(selected source twists); a negative degree
/// means the minor vanishes identically.
template <FieldContext K>
BinaryForm<K> graded_minor(const K& F, const GradedMatrix<K>& phi, const std::vector<int>& cols) {
  long long deg = 0;
  for (int k = 0; k < phi.target().rank(); ++k) deg += phi.target().twists[k];
  for (int c : cols) deg -= phi.source().twists[c];
  if (deg < 0) return BinaryForm<K>::zero(F, 0);
  return graded_minor_rec(F, phi, 0, cols, static_cast<int>(deg));
}

/// Surjectivity test for phi as a map of sheaves: full row rank over the
/// function field and no common zero among the maximal minors. Throws
/// NotSurjective otherwise.
template <FieldContext K>
void require_surjective(const K& F, const GradedMatrix<K>& phi) {
  const int r = phi.target().rank();
  const int n = phi.source().rank();
  if (r == 0) return;
  if (r > n) throw PreconditionError("NotSurjective", "more target rows than source columns");

  std::vector<std::vector<UniPoly<K>>> dehom(r, std::vector<UniPoly<K>>(n));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < n; ++j)
      if (phi.entry_degree(k, j) >= 0) dehom[k][j] = form_dehomogenize_t(F, phi.entry(k, j));
  if (rank_poly_matrix(F, dehom) < r)
    throw PreconditionError("NotSurjective", "map does not have full row rank");

  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  std::vector<BinaryForm<K>> minors;
  while (true) {
    minors.push_back(graded_minor(F, phi, cols));
    int i = r - 1;
    while (i >= 0 && cols[i] == n - r + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  auto g = gcd_forms(F, minors);
  if (g.degree() != 0)
    throw PreconditionError("NotSurjective",
                            "maximal minors share the common factor " + form_to_string(F, g));
}

}  // namespace detail

/// Result of the kernel bundle computation: the splitting type of ker(phi)
/// and its inclusion back into the source module.
template <FieldContext K>
struct KernelBundle {
  SplittingType splitting;
  GradedMatrix<K> inclusion;  // ker -> phi.source
};

/// Computes the kernel bundle of a surjective map phi of direct sums of line
/// bundles: its splitting type and the inclusion into the source. Minimal
/// generators are found by scanning twists upward and extracting, at each
/// twist m, a canonical complement of s*(previous sections) + t*(previous
/// sections) inside the current sections; a generator discovered at twist m
/// contributes a summand O(-m). The scan stops once the generator count
/// equals rank(source) - rank(target) and the collected twists sum to
/// sum(source twists) - sum(target twists); a budget cap guards the loop.
template <FieldContext K>
KernelBundle<K> kernel_bundle(const K& F, const GradedMatrix<K>& phi) {
  detail::require_surjective(F, phi);

  const int n = phi.source().rank();
  const int r = phi.target().rank();
  const int kernel_rank = n - r;
  const long long kernel_degree = phi.source().twist_sum() - phi.target().twist_sum();

  if (kernel_rank == 0) {
    return {SplittingType(std::vector<int>{}),
            GradedMatrix<K>(F, GradedFreeModule{{}}, phi.source())};
  }

  // Every kernel summand O(c) maps into some source summand by a nonzero
  // form, so c <= max source twist; summing against the fixed total degree
  // bounds the lowest summand, and with it the last scan level, from below.
  const int max_source = *std::max_element(phi.source().twists.begin(), phi.source().twists.end());
  const int m_min = -max_source;
  const long long m_cap = (kernel_rank - 1) * static_cast<long long>(max_source) - kernel_degree;

  struct Generator {
    int m;
    std::vector<typename K::Element> flat;
  };
  std::vector<Generator> gens;
  long long gen_twist_sum = 0;

  TwistLayout prev_layout;
  std::vector<std::vector<typename K::Element>> prev_basis;

  for (int m = m_min;; ++m) {
    if (m > m_cap) throw Error("Internal", "kernel generator scan exceeded its twist bound");
    auto [layout, basis] = sections_at_twist(F, phi, m);

    IncrementalSpan<K> span(layout.total);
    for (const auto& w : prev_basis) {
      span.insert(F, embed_shift(F, prev_layout, layout, w, /*by_t=*/false));
      span.insert(F, embed_shift(F, prev_layout, layout, w, /*by_t=*/true));
    }
    std::vector<int> new_pivots;
    for (const auto& v : basis)
      if (auto p = span.insert(F, v)) new_pivots.push_back(*p);

    // Rows are fetched after all inserts at this twist, so each generator is
    // reduced against the full span and the choice is canonical.
    for (int p : new_pivots) {
      gens.push_back({m, span.row_with_pivot(p)});
      gen_twist_sum += -m;
    }
    if (static_cast<int>(gens.size()) > kernel_rank)
      throw PreconditionError("NotSurjective", "kernel has more generators than its rank");
    if (static_cast<int>(gens.size()) == kernel_rank && gen_twist_sum == kernel_degree) break;

    prev_layout = layout;
    prev_basis = std::move(basis);
  }

  std::vector<int> twists;
  twists.reserve(gens.size());
  for (const auto& g : gens) twists.push_back(-g.m);

  GradedMatrix<K> inclusion(F, GradedFreeModule{twists}, phi.source());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    TwistLayout L = TwistLayout::build(phi.source(), gens[i].m);
    auto forms = unflatten_section(F, L, gens[i].flat);
    for (int j = 0; j < n; ++j) {
      if (inclusion.entry_degree(j, static_cast<int>(i)) < 0) continue;
      inclusion.set_entry(F, j, static_cast<int>(i), forms[j]);
    }
  }
  return {SplittingType(twists), inclusion};
}

/// Expresses a degree-m section v of psi's target that lies in the image of
/// the kernel inclusion psi as a combination of the kernel generators.
/// Throws NotInKernel when v is not such a section. Components of v must
/// have degree target_twist + m, with degree-0 zero forms standing in for
/// absent components.
template <FieldContext K>
std::vector<BinaryForm<K>> express_in_kernel(const K& F, const GradedMatrix<K>& psi,
                                             const std::vector<BinaryForm<K>>& v, int m) {
  const auto& big = psi.target();
  if (static_cast<int>(v.size()) != big.rank())
    throw ValidationError("ArityMismatch", "section has wrong number of components");
  TwistLayout dst = TwistLayout::build(big, m);
  std::vector<typename K::Element> rhs(dst.total, F.zero());
  for (int j = 0; j < big.rank(); ++j) {
    int d = dst.component_degree[j];
    if (d < 0) {
      if (!v[j].is_zero(F))
        throw ValidationError("DegreeMismatch", "component must vanish at this twist");
      continue;
    }
    if (v[j].degree() != d)
      throw ValidationError("DegreeMismatch", "section component has wrong degree");
    for (int i = 0; i <= d; ++i) rhs[dst.offset[j] + i] = v[j].coeff(i);
  }

  TwistLayout src = TwistLayout::build(psi.source(), m);
  auto A = twist_action_matrix(F, psi, src, dst);
  auto sol = solve(F, A, rhs);
  if (sol.status == SolveStatus::inconsistent)
    throw PreconditionError("NotInKernel", "section is not in the kernel bundle");
  if (sol.status == SolveStatus::underdetermined)
    throw PreconditionError("NotInKernel", "kernel inclusion is not injective at this twist");
  return unflatten_section(F, src, sol.x);
}

}  // namespace rcurves
