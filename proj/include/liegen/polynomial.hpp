#ifndef LIEGEN_POLYNOMIAL_HPP
#define LIEGEN_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegen/rational.hpp"

namespace liegen {

/// Univariate polynomial with rational coefficients in ascending degree.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial monomial(const Rational& c, unsigned degree);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const;
  Rational coefficient(unsigned k) const;

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;

  /// Multiplies through by the least common multiple of the denominators,
  /// giving integer coefficients with the same sign pattern.
  Polynomial clear_denominators() const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "T") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// counted with a Sturm sequence.
std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Interval [lo, hi] around the largest positive real root of a polynomial.
struct RootBracket {
  Rational lo;
  Rational hi;
  Rational width_bound;
};

inline constexpr unsigned kDefaultWidthExponent = 40;
Rational default_root_width();

/// Brackets the largest positive root of p, or returns nullopt when p has no
/// root in (0, inf). The leading coefficient must be positive.
///
/// Every root of p lies below the Cauchy bound 1 + max|c_i / c_lead|; the
/// bracket is narrowed by bisection with exact Sturm counts, so the result
/// satisfies p(t) > 0 for all t >= hi and hi - lo <= width. When the root
/// has odd multiplicity (every polynomial arising here) also p(lo) <= 0.
std::optional<RootBracket> isolate_largest_positive_root(const Polynomial& p,
                                                        const Rational& width);

}  // namespace liegen

#endif
