#ifndef LIEGEN_MATRIX_HPP
#define LIEGEN_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "liegen/rational.hpp"

namespace liegen {

/// Dense square matrix over the rationals. Entry access is 1-based so that
/// (i, j) reads the same as the elementary matrix e_{i,j}.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix zero(std::size_t n) { return Matrix(n); }
  static Matrix identity(std::size_t n);
  /// The elementary matrix e_{i,j}.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix diagonal(std::span<const Rational> d);

  std::size_t size() const noexcept { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * n_ + (j - 1)]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * n_ + (j - 1)];
  }

  /// Bounds-checked access, throws on out-of-range indices.
  const Rational& at(std::size_t i, std::size_t j) const;

  /// Row-major flattening, (i, j) with i outer.
  std::span<const Rational> flat() const noexcept { return data_; }
  std::span<Rational> flat() noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_integral() const;
  Rational trace() const;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& c);
Matrix operator*(const Rational& c, Matrix a);

/// Lie bracket AB - BA.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Nonnegative integer power by repeated squaring.
Matrix power(const Matrix& m, unsigned long k);

Rational determinant(const Matrix& m);

/// Gauss-Jordan inverse; throws domain_error when singular.
Matrix inverse(const Matrix& m);

/// M^n == 0 where n is the matrix size.
bool is_nilpotent(const Matrix& m);

void require_same_size(const Matrix& a, const Matrix& b, const char* what);

}  // namespace liegen

#endif
