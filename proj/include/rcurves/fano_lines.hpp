#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/formulas.hpp"
#include "rcurves/geometry.hpp"
#include "rcurves/tangent.hpp"

namespace rcurves {

/// One line on (or probed against) a hypersurface: the canonical reduced
/// row-echelon 2 x (N+1) spanning matrix, and tangent data when X is smooth
/// along the line. fano_tangent_dim = h0 - 3 subtracts the automorphisms of
/// the parametrizing line.
template <FieldContext K>
struct LineRecord {
  std::vector<std::vector<typename K::Element>> matrix;  // 2 rows, canonical RREF
  bool smooth_along = true;
  SplittingType splitting;   // empty when !smooth_along
  long long h0 = 0;          // 0 when !smooth_along
  long long fano_tangent_dim = 0;
  bool unobstructed = false;

  bool operator==(const LineRecord& o) const { return matrix == o.matrix; }
};

namespace detail {

template <FieldContext K>
RationalCurve<K> line_from_rows(const K& F, const AmbientSpace& space,
                                const std::vector<typename K::Element>& r0,
                                const std::vector<typename K::Element>& r1) {
  std::vector<BinaryForm<K>> coords;
  coords.reserve(r0.size());
  for (std::size_t j = 0; j < r0.size(); ++j)
    coords.push_back(BinaryForm<K>(1, {r0[j], r1[j]}));
  return RationalCurve<K>(F, space, {std::move(coords)});
}

/// Expected dimension of the line space: 2n - e - 1 for a degree-e
/// hypersurface X^n, and dim of the Grassmannian of lines, 2 dim(X) - 2,
/// when X is a whole projective space.
template <FieldContext K>
long long line_space_expected_dim(const Hypersurface<K>& X) {
  if (!X.equation) return 2LL * X.dim() - 2;
  return formulas::fano_lines_expected_dim(X.dim(), X.equation->block_degree(0));
}

}  // namespace detail

/// Tangent data for one line on X. The spanning matrix is canonicalized by
/// row reduction, so records compare equal iff the lines coincide. When X is
/// singular somewhere along the line the record is flagged and carries no
/// splitting.
template <FieldContext K>
LineRecord<K> line_report(const K& F, const RationalCurve<K>& line, const Hypersurface<K>& X) {
  if (!X.ambient.is_projective() || X.dim() < 2)
    throw ValidationError("BadArgument", "line reports need a projective hypersurface of dim >= 2");
  if (line.degrees().at(0) != 1)
    throw ValidationError("DegreeMismatch", "line reports need a degree-1 curve");
  if (!on_hypersurface(F, line, X))
    throw PreconditionError("NotOnHypersurface", "the line does not lie on the hypersurface");

  LineRecord<K> rec;
  const auto& coords = line.blocks()[0];
  Matrix<K> span = Matrix<K>::zero(F, 2, static_cast<int>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    span.at(0, static_cast<int>(j)) = coords[j].coeff(0);
    span.at(1, static_cast<int>(j)) = coords[j].coeff(1);
  }
  if (rref_inplace(F, span).size() != 2)
    throw ValidationError("DegreeMismatch", "spanning rows of a line must be independent");
  rec.matrix = {span.row(0), span.row(1)};

  try {
    auto result = pullback_tangent_splitting(F, line, X);
    rec.splitting = result.splitting;
    rec.h0 = result.splitting.h0(0);
    rec.fano_tangent_dim = rec.h0 - 3;
    rec.unobstructed = rec.fano_tangent_dim == detail::line_space_expected_dim(X);
  } catch (const PreconditionError& e) {
    if (std::string(e.kind()) != "SingularAlongCurve") throw;
    rec.smooth_along = false;
  }
  return rec;
}

/// Number of lines in P^N over GF(p): the Gaussian binomial
/// (p^(N+1)-1)(p^N-1) / ((p^2-1)(p-1)). Saturates at UINT64_MAX.
inline std::uint64_t line_count_of_projective_space(std::uint64_t p, int big_n) {
  const __uint128_t cap = static_cast<__uint128_t>(1) << 100;
  __uint128_t pn1 = 1, pn = 1;
  for (int i = 0; i < big_n + 1; ++i) {
    pn1 *= p;
    if (pn1 > cap) return UINT64_MAX;
  }
  for (int i = 0; i < big_n; ++i) pn *= p;
  // p^2 - 1 divides p^k - 1 exactly when k is even; pair the factors so
  // both divisions are exact.
  __uint128_t count = (big_n + 1) % 2 == 0
                          ? ((pn1 - 1) / (p * p - 1)) * ((pn - 1) / (p - 1))
                          : ((pn1 - 1) / (p - 1)) * ((pn - 1) / (p * p - 1));
  if (count > UINT64_MAX) return UINT64_MAX;
  return static_cast<std::uint64_t>(count);
}

/// Enumerates every GF(p)-rational line contained in X, as canonical
/// echelon records sorted lexicographically by matrix entries. Lines are
/// generated cell by cell over the pivot-column patterns of reduced 2-row
/// echelon matrices, which visits each line exactly once. The Grassmannian
/// size is budget-checked first. Sharding across threads is deterministic:
/// cells are distributed round-robin and results are merged by sort.
inline std::vector<LineRecord<PrimeField>> enumerate_lines(const PrimeField& F,
                                                           const Hypersurface<PrimeField>& X,
                                                           std::uint64_t budget = 1000000,
                                                           int threads = 1) {
  using K = PrimeField;
  if (!X.ambient.is_projective() || X.dim() < 2)
    throw ValidationError("BadArgument",
                          "line enumeration needs a projective hypersurface of dim >= 2");

  const std::uint64_t p = F.modulus();
  const int ncols = X.ambient.n + 1;
  std::uint64_t total = line_count_of_projective_space(p, X.ambient.n);
  if (total > budget)
    throw PreconditionError("BudgetExceeded",
                            "line Grassmannian has " + std::to_string(total) +
                                " candidates, budget " + std::to_string(budget));

  // Echelon cells: pivot columns i < j; row0 = e_i + free entries in columns
  // > i excluding j; row1 = e_j + free entries in columns > j.
  struct Cell {
    int i, j;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < ncols; ++i)
    for (int j = i + 1; j < ncols; ++j) cells.push_back({i, j});

  auto scan_cell = [&](const Cell& cell, std::vector<LineRecord<K>>& out) {
    std::vector<int> free0, free1;
    for (int c = cell.i + 1; c < ncols; ++c)
      if (c != cell.j) free0.push_back(c);
    for (int c = cell.j + 1; c < ncols; ++c) free1.push_back(c);
    const int nfree = static_cast<int>(free0.size() + free1.size());

    std::vector<typename K::Element> r0(ncols, F.zero()), r1(ncols, F.zero());
    r0[cell.i] = F.one();
    r1[cell.j] = F.one();

    std::uint64_t count = 1;
    for (int k = 0; k < nfree; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t rest = code;
      for (int c : free0) r0[c] = F.zero();
      for (int c : free1) r1[c] = F.zero();
      for (std::size_t k = 0; k < free0.size(); ++k) {
        r0[free0[k]] = rest % p;
        rest /= p;
      }
      for (std::size_t k = 0; k < free1.size(); ++k) {
        r1[free1[k]] = rest % p;
        rest /= p;
      }
      auto line = detail::line_from_rows(F, X.ambient, r0, r1);
      if (!on_hypersurface(F, line, X)) continue;
      out.push_back(line_report(F, line, X));
    }
  };

  std::vector<LineRecord<K>> records;
  if (threads <= 1) {
    for (const auto& cell : cells) scan_cell(cell, records);
  } else {
    std::vector<std::vector<LineRecord<K>>> buckets(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < cells.size(); c += threads) scan_cell(cells[c], buckets[t]);
      });
    for (auto& th : pool) th.join();
    for (auto& b : buckets) records.insert(records.end(), b.begin(), b.end());
  }

  std::sort(records.begin(), records.end(),
            [](const LineRecord<K>& a, const LineRecord<K>& b) { return a.matrix < b.matrix; });
  return records;
}

}  // namespace rcurves
