#ifndef LIEGEN_CLOSURE_HPP
#define LIEGEN_CLOSURE_HPP

#include <optional>
#include <span>
#include <string>

#include "liegen/generators.hpp"
#include "liegen/span_basis.hpp"

namespace liegen {

struct ClosureResult {
  SpanBasis basis;
  std::size_t dim = 0;
  /// Bracket sweeps performed until no new element appeared.
  std::size_t rounds = 0;
  /// True when the final sweep confirmed [b_i, b_j] in span for all rows.
  bool verified = false;
};

struct ClosureOptions {
  /// Re-bracket every pair of basis rows after the fixpoint is reached.
  bool verify = true;
};

/// Lie subalgebra generated by `seed`.
ClosureResult subalgebra_closure(std::span<const Matrix> seed, ClosureOptions options = {});

enum class TypeFamily { A, B, C, G2, full_matrix_algebra, unrecognized };

struct TypeLabel {
  TypeFamily family = TypeFamily::unrecognized;
  std::optional<std::size_t> rank;
  std::size_t dim = 0;

  bool recognized() const noexcept {
    return family != TypeFamily::unrecognized && family != TypeFamily::full_matrix_algebra;
  }
  /// "A4", "C3", "G2", "gl7", "unrecognized".
  std::string name() const;
  /// "C3, dim 21".
  std::string summary() const;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Dimension of the simple algebra of the given family and rank.
std::size_t type_dimension(TypeFamily family, std::size_t rank);

/// Lookup by (matrix size, dimension); B and C share dimension m(2m+1) and
/// are told apart by the parity of n.
TypeLabel classify(std::size_t n, std::size_t dim);
inline TypeLabel classify(std::size_t n, const ClosureResult& r) { return classify(n, r.dim); }

/// The type the generator family is known to produce at size n.
TypeLabel predicted_type(Family family, std::size_t n);

/// C(s,i) = binom(s,i) - binom(s,i-1).
Integer c_shift(long s, long i);

/// [x^0,y] = y, [x^{s+1},y] = [x,[x^s,y]]. Beyond s = 4n the result is
/// only returned if ad x has already vanished on y; otherwise throws.
Matrix iterated_bracket(const Matrix& x, const Matrix& y, std::size_t s);

/// Closed-form expansion of [x^s, y] for the corner or double-corner y.
Matrix closed_form_bracket(std::size_t n, std::size_t s, Family variant);

/// Dimension of {z in gl(n) : phi(z) = z} for the diagram automorphism phi.
std::size_t fixed_subalgebra_dimension(std::size_t n);

}  // namespace liegen

#endif
