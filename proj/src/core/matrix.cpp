#include "liegen/matrix.hpp"

#include <string>
#include <utility>

namespace liegen {

void require_same_size(const Matrix& a, const Matrix& b, const char* what) {
  if (a.size() != b.size())
    fail(ErrorCode::dimension_mismatch, std::string(what) + ": dimension mismatch (" +
                                            std::to_string(a.size()) + " vs " +
                                            std::to_string(b.size()) + ")");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    fail(ErrorCode::invalid_argument, "unit matrix index out of range");
  Matrix m(n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i + 1, i + 1) = d[i];
  return m;
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    fail(ErrorCode::invalid_argument, "matrix index out of range");
  return (*this)(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 1; i <= n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_size(*this, o, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_size(*this, o, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) {
  for (auto& x : a.flat()) x = -x;
  return a;
}
Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "matrix product");
  const std::size_t n = a.size();
  Matrix c(n);
  Rational tmp;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c(i, j) += tmp;
      }
    }
  return c;
}

Matrix bracket(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "bracket");
  return a * b - b * a;
}

Matrix power(const Matrix& m, unsigned long k) {
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational determinant(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 1; c <= n; ++c) {
    std::size_t p = c;
    while (p <= n && sgn(a(p, c)) == 0) ++p;
    if (p > n) return 0;
    if (p != c) {
      for (std::size_t j = 1; j <= n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r <= n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j <= n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 1; c <= n; ++c) {
    std::size_t p = c;
    while (p <= n && sgn(a(p, c)) == 0) ++p;
    if (p > n) fail(ErrorCode::domain_error, "matrix is singular");
    if (p != c)
      for (std::size_t j = 1; j <= n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 1; j <= n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 1; r <= n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 1; j <= n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_nilpotent(const Matrix& m) {
  if (m.size() == 0) return true;
  return power(m, m.size()).is_zero();
}

}  // namespace liegen
