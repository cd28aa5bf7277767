#pragma once

#include "trilie/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace trilie {

struct EchelonForm {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.
EchelonForm rref(Mat m);

std::size_t rank(const Mat& m);

/// Right null space. One vector per free column, in increasing column order:
/// 1 at the free column, minus the reduced entries at the pivot columns.
std::vector<Vec> kernel_basis(const Mat& m);

std::optional<Mat> try_inverse(const Mat& m);

/// Throws NotInvertible.
Mat inverse(const Mat& m);

/// Solve m x = b; nullopt when inconsistent. Free variables set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Incrementally maintained reduced echelon basis of a subspace.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Inserts v; returns false when v was already in the span.
  bool add(const Vec& v);
  /// Canonical representative of v modulo the span.
  [[nodiscard]] Vec reduce(Vec v) const;
  [[nodiscard]] bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vec>& basis() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;            // sorted by pivot, fully reduced
  std::vector<std::size_t> pivots_;  // parallel to rows_
};

std::size_t span_rank(std::span<const Vec> vectors);

/// dim span(cocycles) - dim span(coboundaries). Throws ContainmentViolation
/// when some coboundary is outside span(cocycles).
std::size_t quotient_dim(std::span<const Vec> cocycles, std::span<const Vec> coboundaries);

}  // namespace trilie
