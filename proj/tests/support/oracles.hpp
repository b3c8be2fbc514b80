// Independent reference computations used only by the tests. Nothing here
// calls into SpanBasis, Polynomial root isolation, exp_* or freeness_scan, so
// agreement with the library is a genuine cross-check.
#ifndef LIEGEN_TEST_ORACLES_HPP
#define LIEGEN_TEST_ORACLES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "liegen/matrix.hpp"

namespace oracle {

using liegen::Matrix;
using liegen::Rational;
using Dense = std::vector<std::vector<Rational>>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long num = 20, long den = 9) {
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long num = 20, long den = 9) {
    Rational q;
    do q = rational(num, den);
    while (q == 0);
    return q;
  }

  Matrix matrix(std::size_t n, long num = 5, long den = 3) {
    Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) m(i, j) = rational(num, den);
    return m;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline Dense to_dense(const Matrix& m) {
  Dense d(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i + 1, j + 1);
  return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense commutator(const Dense& a, const Dense& b) {
  Dense ab = multiply(a, b), ba = multiply(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

inline bool same(const Dense& d, const Matrix& m) {
  if (d.size() != m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[i][j] != m(i + 1, j + 1)) return false;
  return true;
}

// Echelon set of vectors, kept by plain forward elimination on the first
// nonzero coordinate. Deliberately not reduced and not sorted.
class Echelon {
 public:
  bool add(std::vector<Rational> v) {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      const Rational f = v[piv] / row[piv];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
    }
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        rows_.emplace_back(k, std::move(v));
        return true;
      }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

inline std::vector<Rational> flatten(const Dense& d) {
  std::vector<Rational> v;
  for (const auto& row : d) v.insert(v.end(), row.begin(), row.end());
  return v;
}

inline std::size_t rank(const std::vector<Matrix>& mats) {
  Echelon e;
  for (const auto& m : mats) e.add(flatten(to_dense(m)));
  return e.rank();
}

// Naive closure: bracket every pair of the accumulated generating list until
// nothing new is independent.
inline std::size_t closure_dim(const std::vector<Matrix>& seed) {
  Echelon e;
  std::vector<Dense> elems;
  for (const auto& m : seed) {
    auto d = to_dense(m);
    if (e.add(flatten(d))) elems.push_back(std::move(d));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = elems.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        auto c = commutator(elems[i], elems[j]);
        if (e.add(flatten(c))) {
          elems.push_back(std::move(c));
          grew = true;
        }
      }
  }
  return e.rank();
}

// exp(t M) for nilpotent M by summing the series until the power vanishes.
inline Dense exp_series(const Matrix& m, const Rational& t) {
  const std::size_t n = m.size();
  Dense result(n, std::vector<Rational>(n));
  Dense term(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1;
  Dense tm = to_dense(m);
  for (auto& row : tm)
    for (auto& x : row) x *= t;
  for (unsigned k = 1; k <= n; ++k) {
    term = multiply(term, tm);
    bool zero = true;
    for (auto& row : term)
      for (auto& x : row) {
        x /= k;
        if (x != 0) zero = false;
      }
    if (zero) break;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  return result;
}

inline double horner(const std::vector<double>& ascending, double t) {
  double v = 0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) v = v * t + *it;
  return v;
}

// Floating-point sign bisection on [lo, hi]; requires a sign change.
inline double bisect_root(const std::vector<double>& ascending, double lo, double hi) {
  double flo = horner(ascending, lo);
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = horner(ascending, mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Rightmost sign change of p on a fine grid over (0, limit], then bisection.
inline double largest_positive_root(const std::vector<double>& ascending, double limit,
                                    double step = 1e-3) {
  double root = -1;
  double prev = horner(ascending, step);
  for (double t = 2 * step; t <= limit; t += step) {
    const double cur = horner(ascending, t);
    if ((cur > 0) != (prev > 0)) root = bisect_root(ascending, t - step, t);
    prev = cur;
  }
  return root;
}

// SL(2, Z) integer words: exhaustive scan of a(t)^k b(s)^l ... with 64-bit
// entries, independent of the library's enumeration.
using Int2 = std::array<std::int64_t, 4>;

inline Int2 mul2(const Int2& a, const Int2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

struct Scan2 {
  std::size_t words = 0;
  std::size_t identities = 0;
};

inline Scan2 scan_sl2(std::int64_t t, std::int64_t s, int max_syll, int max_exp) {
  Scan2 out;
  std::function<void(const Int2&, int, int)> walk = [&](const Int2& g, int last, int len) {
    if (len == max_syll) return;
    const int letter = 1 - last;
    for (int e = -max_exp; e <= max_exp; ++e) {
      if (e == 0) continue;
      const Int2 step = letter == 0 ? Int2{1, e * t, 0, 1} : Int2{1, 0, e * s, 1};
      const Int2 h = mul2(g, step);
      ++out.words;
      if (h == Int2{1, 0, 0, 1}) ++out.identities;
      walk(h, letter, len + 1);
    }
  };
  walk({1, 0, 0, 1}, 1, 0);
  walk({1, 0, 0, 1}, 0, 0);
  return out;
}

}  // namespace oracle

#endif
