#include "liegen/closure.hpp"

#include <algorithm>

namespace liegen {

ClosureResult subalgebra_closure(std::span<const Matrix> seed, ClosureOptions options) {
  if (seed.empty()) fail(ErrorCode::invalid_argument, "closure: empty seed");
  const std::size_t n = seed.front().size();
  for (const auto& m : seed) require_same_size(seed.front(), m, "closure seed");

  ClosureResult result;
  result.basis = SpanBasis(n);
  const std::size_t full = n * n;

  // `elements` holds the inserted brackets themselves (sparser than the
  // echelon rows); elements [0, done) have been bracketed with each other.
  std::vector<Matrix> elements;
  for (const auto& m : seed)
    if (result.basis.insert(m)) elements.push_back(m);

  std::size_t done = 0;
  while (done < elements.size() && result.basis.rank() < full) {
    ++result.rounds;
    const std::size_t end = elements.size();
    for (std::size_t j = done; j < end && result.basis.rank() < full; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Matrix c = bracket(elements[i], elements[j]);
        if (c.is_zero()) continue;
        if (result.basis.insert(c)) {
          elements.push_back(std::move(c));
          if (result.basis.rank() == full) break;
        }
      }
    done = end;
  }
  result.dim = result.basis.rank();

  if (options.verify) {
    const auto rows = result.basis.rows();
    bool closed = true;
    for (std::size_t i = 0; i < rows.size() && closed; ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (!result.basis.contains(bracket(rows[i], rows[j]))) {
          closed = false;
          break;
        }
    if (!closed) fail(ErrorCode::internal_error, "closure verification sweep failed");
    result.verified = true;
  }
  return result;
}

std::size_t type_dimension(TypeFamily family, std::size_t rank) {
  switch (family) {
    case TypeFamily::A: return (rank + 1) * (rank + 1) - 1;
    case TypeFamily::B:
    case TypeFamily::C: return rank * (2 * rank + 1);
    case TypeFamily::G2: return 14;
    case TypeFamily::full_matrix_algebra: return rank * rank;
    case TypeFamily::unrecognized: break;
  }
  return 0;
}

std::string TypeLabel::name() const {
  const std::string r = rank ? std::to_string(*rank) : std::string();
  switch (family) {
    case TypeFamily::A: return "A" + r;
    case TypeFamily::B: return "B" + r;
    case TypeFamily::C: return "C" + r;
    case TypeFamily::G2: return "G2";
    case TypeFamily::full_matrix_algebra: return "gl" + r;
    case TypeFamily::unrecognized: break;
  }
  return "unrecognized";
}

std::string TypeLabel::summary() const { return name() + ", dim " + std::to_string(dim); }

namespace {

TypeLabel make_label(TypeFamily f, std::size_t rank) {
  return TypeLabel{f, rank, type_dimension(f, rank)};
}

}  // namespace

TypeLabel classify(std::size_t n, std::size_t dim) {
  if (n >= 2 && dim == n * n - 1) return make_label(TypeFamily::A, n - 1);
  const std::size_t m = n / 2;
  if (m >= 1 && dim == m * (2 * m + 1))
    return make_label(n % 2 == 0 ? TypeFamily::C : TypeFamily::B, m);
  if (n == 7 && dim == 14) return make_label(TypeFamily::G2, 2);
  // rank carries n here so the name reads gl<n>.
  if (dim == n * n) return TypeLabel{TypeFamily::full_matrix_algebra, n, dim};
  return TypeLabel{TypeFamily::unrecognized, std::nullopt, dim};
}

TypeLabel predicted_type(Family family, std::size_t n) {
  switch (family) {
    case Family::corner:
      if (n < 3) break;
      return n % 2 ? make_label(TypeFamily::A, n - 1) : make_label(TypeFamily::C, n / 2);
    case Family::double_corner:
      if (n < 4) break;
      if (n % 2 == 0) return make_label(TypeFamily::A, n - 1);
      if (n == 7) return make_label(TypeFamily::G2, 2);
      return make_label(TypeFamily::B, (n - 1) / 2);
    case Family::g2_7x7:
      if (n != 7) break;
      return make_label(TypeFamily::G2, 2);
    case Family::lower_bidiagonal:
      fail(ErrorCode::invalid_argument, "no predicted type for the lower family (depends on b)");
  }
  fail(ErrorCode::invalid_argument,
       "no predicted type for family " + to_string(family) + " at n=" + std::to_string(n));
}

Integer c_shift(long s, long i) {
  if (s < 0) fail(ErrorCode::invalid_argument, "C(s,i) needs s >= 0");
  return binomial(s, i) - binomial(s, i - 1);
}

Matrix iterated_bracket(const Matrix& x, const Matrix& y, std::size_t s) {
  require_same_size(x, y, "iterated bracket");
  const std::size_t cap = 4 * x.size();
  Matrix cur = y;
  for (std::size_t k = 1; k <= s; ++k) {
    if (cur.is_zero()) return cur;
    if (k > cap)
      fail(ErrorCode::domain_error, "iterated bracket: ad x not nilpotent on y within 4n steps");
    cur = bracket(x, cur);
  }
  return cur;
}

Matrix closed_form_bracket(std::size_t n, std::size_t s, Family variant) {
  if (n < 2) fail(ErrorCode::invalid_argument, "closed form bracket needs n >= 2");
  if (s > 2 * n) fail(ErrorCode::invalid_argument, "closed form bracket needs s <= 2n");
  const long N = static_cast<long>(n), S = static_cast<long>(s);
  Matrix out(n);
  auto sign = [](long i) { return i % 2 ? -1 : 1; };
  switch (variant) {
    case Family::corner:
      // sum_{i=max(0,s-n+1)}^{min(s,n-1)} (-1)^i binom(s,i) e_{n-s+i,i+1}
      for (long i = std::max(0L, S - N + 1); i <= std::min(S, N - 1); ++i)
        out(N - S + i, i + 1) = Rational(sign(i) * binomial(S, i));
      break;
    case Family::double_corner:
      // sum_{i=max(0,s-n+2)}^{min(s+1,n-1)} (-1)^i C(s,i) e_{n-s+i-1,i+1}
      for (long i = std::max(0L, S - N + 2); i <= std::min(S + 1, N - 1); ++i)
        out(N - S + i - 1, i + 1) = Rational(sign(i) * c_shift(S, i));
      break;
    default:
      fail(ErrorCode::invalid_argument, "closed form bracket: variant must be corner or double_corner");
  }
  return out;
}

std::size_t fixed_subalgebra_dimension(std::size_t n) {
  // phi is an involution, so the fixed space is the image of (1 + phi).
  SpanBasis fixed(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Matrix e = Matrix::unit(n, i, j);
      fixed.insert(e + diagram_automorphism(e));
    }
  return fixed.rank();
}

}  // namespace liegen
