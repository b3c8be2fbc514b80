#ifndef LIEGEN_SPAN_BASIS_HPP
#define LIEGEN_SPAN_BASIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "liegen/matrix.hpp"

namespace liegen {

/// Basis of a linear subspace of n x n matrices, kept in reduced row-echelon
/// form over the row-major flattening. The reduced form of a subspace is
/// unique, so two bases of the same span compare equal regardless of the
/// insertion order.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Pivot coordinates (0-based, into the flattened vector), increasing.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  Matrix row(std::size_t k) const;
  std::vector<Matrix> rows() const;

  /// Adds m to the span. Returns true iff the rank grew.
  bool insert(const Matrix& m);

  bool contains(const Matrix& m) const;

  friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

 private:
  using Vector = std::vector<Rational>;

  /// Reduces v in place against all rows; returns the index of the first
  /// nonzero coordinate of the remainder, or n^2 if it vanished.
  std::size_t reduce(Vector& v) const;

  std::size_t n_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  // Nonzero positions of each row, for skipping zeros during reduction.
  std::vector<std::vector<std::size_t>> support_;
};

/// Value-style insertion: returns the enlarged basis and whether rank grew.
std::pair<SpanBasis, bool> span_insert(SpanBasis basis, const Matrix& m);

}  // namespace liegen

#endif
