#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/field.hpp"
#include "rcurves/unipoly.hpp"

namespace rcurves {

/// Dense matrix over a field, row-major.
template <FieldContext K>
class Matrix {
 public:
  using Elem = typename K::Element;

  Matrix(int rows, int cols, Elem fill)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix zero(const K& F, int rows, int cols) { return Matrix(rows, cols, F.zero()); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Elem> row(int i) const {
    return {a_.begin() + static_cast<std::size_t>(i) * cols_,
            a_.begin() + static_cast<std::size_t>(i + 1) * cols_};
  }

  void set_row(int i, const std::vector<Elem>& r) {
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
  }

 private:
  int rows_, cols_;
  std::vector<Elem> a_;
};

/// Reduces A to reduced row echelon form and returns the pivot columns.
/// Forward pass is fraction-free (Bareiss updates) after each row is scaled
/// primitive, which keeps rational entries integral; the back pass
/// normalizes pivots to one. Pivoting is deterministic (first nonzero row),
/// and the RREF itself is basis-unique regardless.
template <FieldContext K>
std::vector<int> rref_inplace(const K& F, Matrix<K>& A) {
  const int rows = A.rows(), cols = A.cols();
  for (int i = 0; i < rows; ++i) {
    auto r = A.row(i);
    F.make_primitive(r);
    A.set_row(i, r);
  }

  std::vector<int> pivots;
  typename K::Element prev = F.one();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!F.is_zero(A.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        A.at(i, j) =
            F.div(F.sub(F.mul(A.at(i, j), A.at(r, col)), F.mul(A.at(i, col), A.at(r, j))), prev);
      A.at(i, col) = F.zero();
    }
    prev = A.at(r, col);
    pivots.push_back(col);
    ++r;
  }

  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    int pc = pivots[k];
    auto inv = F.inv(A.at(k, pc));
    for (int j = pc; j < cols; ++j) A.at(k, j) = F.mul(inv, A.at(k, j));
    for (int i = 0; i < k; ++i) {
      if (F.is_zero(A.at(i, pc))) continue;
      auto factor = A.at(i, pc);
      for (int j = pc; j < cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(factor, A.at(k, j)));
    }
  }
  return pivots;
}

template <FieldContext K>
int rank(const K& F, Matrix<K> A) {
  return static_cast<int>(rref_inplace(F, A).size());
}

/// Canonical kernel basis from the RREF: one vector per free column f, with
/// v[f] = 1 and pivot coordinates filled by back-substitution. Vectors are
/// ordered by free column index.
template <FieldContext K>
std::vector<std::vector<typename K::Element>> kernel_basis(const K& F, Matrix<K> A) {
  auto pivots = rref_inplace(F, A);
  const int cols = A.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename K::Element>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename K::Element> v(cols, F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(A.at(static_cast<int>(r), f));
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class SolveStatus { unique, inconsistent, underdetermined };

template <FieldContext K>
struct SolveResult {
  SolveStatus status;
  std::vector<typename K::Element> x;  // valid when status == unique
};

/// Solves A x = b exactly via RREF of the augmented matrix.
template <FieldContext K>
SolveResult<K> solve(const K& F, const Matrix<K>& A, const std::vector<typename K::Element>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw ValidationError("ArityMismatch", "right-hand side has wrong length");
  Matrix<K> aug(A.rows(), A.cols() + 1, F.zero());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  auto pivots = rref_inplace(F, aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return {SolveStatus::inconsistent, {}};
  if (static_cast<int>(pivots.size()) < A.cols()) return {SolveStatus::underdetermined, {}};
  std::vector<typename K::Element> x(A.cols(), F.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols());
  return {SolveStatus::unique, std::move(x)};
}

/// Rank over the rational function field K(x) of a matrix of univariate
/// polynomials, by fraction-free elimination with exact polynomial division.
template <FieldContext K>
int rank_poly_matrix(const K& F, std::vector<std::vector<UniPoly<K>>> a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  UniPoly<K> prev = unipoly_from(F, {F.one()});
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = unipoly_divexact(
            F, unipoly_sub(F, unipoly_mul(F, a[i][j], a[r][col]), unipoly_mul(F, a[i][col], a[r][j])),
            prev);
      a[i][col] = {};
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

/// Row space accumulator in fully reduced echelon form. Used to detect which
/// vectors extend a span; insertion keeps all stored rows Jordan-reduced
/// against each other, so the stored rows are canonical for the span and the
/// insertion order only determines discovery, not the final basis.
template <FieldContext K>
class IncrementalSpan {
 public:
  using Elem = typename K::Element;

  explicit IncrementalSpan(int cols) : cols_(cols) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Inserts v; returns the pivot column if v extended the span, nullopt if
  /// v was already in it.
  std::optional<int> insert(const K& F, std::vector<Elem> v) {
    for (auto& [pc, row] : rows_) {
      if (F.is_zero(v[pc])) continue;
      auto factor = v[pc];
      for (int j = 0; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(factor, row[j]));
    }
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
      if (!F.is_zero(v[j])) {
        pivot = j;
        break;
      }
    if (pivot < 0) return std::nullopt;
    auto inv = F.inv(v[pivot]);
    for (int j = 0; j < cols_; ++j) v[j] = F.mul(inv, v[j]);
    for (auto& [pc, row] : rows_) {
      if (F.is_zero(row[pivot])) continue;
      auto factor = row[pivot];
      for (int j = 0; j < cols_; ++j) row[j] = F.sub(row[j], F.mul(factor, v[j]));
    }
    rows_.emplace(pivot, std::move(v));
    return pivot;
  }

  const std::vector<Elem>& row_with_pivot(int pivot) const { return rows_.at(pivot); }

 private:
  int cols_;
  std::map<int, std::vector<Elem>> rows_;  // pivot column -> reduced row
};

}  // namespace rcurves
