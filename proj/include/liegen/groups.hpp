#ifndef LIEGEN_GROUPS_HPP
#define LIEGEN_GROUPS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liegen/matrix.hpp"

namespace liegen {

enum class Letter { A, B };

struct Syllable {
  Letter letter = Letter::A;
  long exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Alternating word in two generators. Construct through Word::make, which
/// rejects zero exponents and adjacent syllables on the same letter.
class Word {
 public:
  Word() = default;
  static Word make(std::vector<Syllable> syllables);
  static bool is_reduced(const std::vector<Syllable>& syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t length() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  /// "A^1 B^-1 A^1", or "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Canonical scan order: syllable count, then starting letter, then the
/// exponent tuple.
bool canonical_less(const Word& a, const Word& b);

struct GroupElement {
  Matrix matrix;
  std::optional<Word> provenance;

  bool has_unit_determinant() const { return determinant(matrix) == 1; }
};

/// a(t) = exp(t x) = 1 + sum_{i<j} t^{j-i}/(j-i)! e_{i,j}.
GroupElement exp_upper(const Rational& t, std::size_t n);

/// b(s) = exp(s e_{n,1}) = 1 + s e_{n,1}.
GroupElement exp_corner(const Rational& s, std::size_t n);

/// c(r) = exp(r z) for z = sum b_i e_{i+1,i}: entry (j,i) is
/// c_{j-i,j} r^{j-i}/(j-i)! with c_{k,j} = b_{j-1} b_{j-2} ... b_{j-k}.
GroupElement exp_lower(const Rational& r, const RationalVector& b);

/// Truncated series sum_{k<n} t^k M^k / k!; throws unless M^n = 0.
GroupElement exp_nilpotent(const Matrix& m, const Rational& t);

/// m -> g^m for a generator of the word group.
using PowerMap = std::function<Matrix(long)>;

/// Powers of a one-parameter subgroup by scaling the parameter,
/// f(t)^m = f(m t).
PowerMap parametric_powers(std::function<Matrix(const Rational&)> family, Rational parameter);

/// Powers of a fixed invertible matrix by binary exponentiation.
PowerMap matrix_powers(Matrix g);

/// Product of the syllable matrices left to right; the empty word gives the
/// identity of size n. Throws on an unreduced word.
Matrix word_eval(const Word& w, const PowerMap& a, const PowerMap& b, std::size_t n);

struct ScanReport {
  std::size_t words_checked = 0;
  std::vector<Word> collisions;
};

/// Evaluates every reduced word with 1..max_syllables syllables and exponents
/// in [-max_exp, max_exp] \ {0}, collecting those equal to the identity.
ScanReport freeness_scan(std::size_t n, const PowerMap& a, const PowerMap& b,
                         std::size_t max_syllables, long max_exp);

/// Scan over {a(t), b(s)}.
ScanReport freeness_scan_corner(std::size_t n, const Rational& t, const Rational& s,
                                std::size_t max_syllables, long max_exp);

/// Scan over {a(t), c(r)} with subdiagonal b.
ScanReport freeness_scan_lower(const Rational& t, const Rational& r, const RationalVector& b,
                               std::size_t max_syllables, long max_exp);

/// Anti-diagonal sign matrix J = sum_k (-1)^{k-1} e_{k,n+1-k}. Its form
/// z^T J + J z = 0 cuts out exactly the fixed points of the diagram
/// automorphism, so J is alternating for even n and symmetric for odd n.
struct FormMatrix {
  std::size_t n = 0;
  Matrix j;
};

FormMatrix form_matrix(std::size_t n);

/// g^T J g == J.
bool check_form(const Matrix& g, const FormMatrix& form);

}  // namespace liegen

#endif
