#include <algorithm>

#include "doctest.h"
#include "liegen/polynomial.hpp"
#include "liegen/span_basis.hpp"
#include "support/oracles.hpp"

using namespace liegen;

TEST_CASE("rational parsing") {
  CHECK(parse_canonical_rational("3/4") == Rational(3, 4));
  CHECK(parse_canonical_rational("-7") == -7);
  CHECK(parse_canonical_rational("0") == 0);
  for (const char* bad : {"2/4", "3/1", "-0", "+1", "01", "1/0", "", "1/", "a", "1.5"})
    CHECK_THROWS_AS(parse_canonical_rational(bad), Error);

  CHECK(parse_rational("7.25") == Rational(29, 4));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK(parse_rational("+6/4") == Rational(3, 2));
  CHECK(parse_rational(" 12 ") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);

  const auto list = parse_rational_list("8,12,14");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == 14);
}

TEST_CASE("rational printing round-trips through the strict parser") {
  oracle::Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational q = rng.rational(1000, 1000);
    CHECK(parse_canonical_rational(to_string(q)) == q);
  }
}

TEST_CASE("factorial, binomial, dyadic_above") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(dyadic_above(Rational(2), 10) == Rational(2049, 1024));
  CHECK(dyadic_above(Rational(1, 3), 10) == Rational(171, 512));
  oracle::Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const Rational q = rng.rational(100, 97);
    const Rational d = dyadic_above(q, 10);
    CHECK(d > q);
    CHECK(d - q <= Rational(1, 1024));
    CHECK(Rational(d * 1024).get_den() == 1);
  }
}

TEST_CASE("bracket examples") {
  const Matrix e12 = Matrix::unit(2, 1, 2), e21 = Matrix::unit(2, 2, 1);
  CHECK(bracket(e12, e21) == Matrix::unit(2, 1, 1) - Matrix::unit(2, 2, 2));

  const Matrix x = Matrix::unit(3, 1, 2) + Matrix::unit(3, 2, 3);
  const Matrix y = Matrix::unit(3, 3, 1);
  CHECK(bracket(x, y) == Matrix::unit(3, 2, 1) - Matrix::unit(3, 3, 2));

  CHECK_THROWS_AS(bracket(e12, x), Error);
}

TEST_CASE("bracket is alternating, bilinear and satisfies Jacobi") {
  oracle::Rng rng(13);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      const Matrix a = rng.matrix(n), b = rng.matrix(n), c = rng.matrix(n);
      const Rational u = rng.rational(), v = rng.rational();
      CHECK(bracket(a, a).is_zero());
      CHECK(bracket(a, b) == -bracket(b, a));
      CHECK(bracket(u * a + v * b, c) == u * bracket(a, c) + v * bracket(b, c));
      CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b)))
                .is_zero());
      CHECK(oracle::same(oracle::commutator(oracle::to_dense(a), oracle::to_dense(b)),
                         bracket(a, b)));
    }
}

TEST_CASE("matrix products agree with the naive oracle") {
  oracle::Rng rng(14);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Matrix a = rng.matrix(n), b = rng.matrix(n);
    CHECK(oracle::same(oracle::multiply(oracle::to_dense(a), oracle::to_dense(b)), a * b));
  }
}

TEST_CASE("determinant and inverse") {
  oracle::Rng rng(15);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      const Matrix a = rng.matrix(n), b = rng.matrix(n);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      if (determinant(a) != 0) CHECK((a * inverse(a)).is_identity());
    }
  Matrix singular(2);
  singular(1, 1) = 1;
  CHECK(determinant(singular) == 0);
  CHECK_THROWS_AS(inverse(singular), Error);
}

TEST_CASE("matrix helpers") {
  CHECK(Matrix::identity(3).is_identity());
  CHECK(power(Matrix::unit(3, 1, 2) + Matrix::unit(3, 2, 3), 3).is_zero());
  CHECK(is_nilpotent(Matrix::unit(4, 4, 1)));
  CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
  CHECK_THROWS_AS(Matrix::identity(2).at(3, 1), Error);
  Matrix h(3);
  h(1, 1) = Rational(1, 2);
  CHECK_FALSE(h.is_integral());
  CHECK(h.is_diagonal());
  CHECK(h.transpose() == h);
  CHECK(h.trace() == Rational(1, 2));
}

TEST_CASE("span_insert examples") {
  SpanBasis basis(2);
  auto [b1, first] = span_insert(basis, Matrix::unit(2, 1, 2));
  auto [b2, second] = span_insert(b1, Matrix::unit(2, 1, 2));
  CHECK(first);
  CHECK_FALSE(second);
  CHECK(b2.rank() == 1);

  auto [b3, grew] = span_insert(b1, Matrix::unit(2, 1, 2) + Matrix::unit(2, 2, 1));
  CHECK(grew);
  CHECK(b3.rank() == 2);

  SpanBasis full(3);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) full.insert(Matrix::unit(3, i, j));
  CHECK(full.rank() == 9);

  CHECK_THROWS_AS(full.insert(Matrix::identity(2)), Error);
}

TEST_CASE("span basis is independent of insertion order") {
  oracle::Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<Matrix> mats;
    const int count = static_cast<int>(rng.integer(1, 2 * n * n));
    for (int k = 0; k < count; ++k) {
      Matrix m = rng.matrix(n, 2, 2);
      // Sparse-ish inputs make dependencies likely.
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          if (rng.integer(0, 2) != 0) m(i, j) = 0;
      mats.push_back(m);
      if (k > 0 && rng.integer(0, 3) == 0) mats.push_back(mats[k - 1] + Rational(2) * m);
    }
    SpanBasis a(n), b(n);
    std::size_t last = 0;
    for (const auto& m : mats) {
      a.insert(m);
      CHECK(a.rank() >= last);
      last = a.rank();
    }
    auto shuffled = mats;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
    for (const auto& m : shuffled) b.insert(m);
    CHECK(a.rank() == oracle::rank(mats));
    CHECK(a == b);
    for (const auto& m : mats) CHECK(a.contains(m));
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p({Rational(-2), Rational(1)});  // T - 2
  const Polynomial q({Rational(1), Rational(0), Rational(1)});
  CHECK((p * q).degree() == 3);
  CHECK((p * q)(Rational(2)) == 0);
  CHECK((p - p).is_zero());
  CHECK(Polynomial().degree() == -1);
  auto [quot, rem] = divmod(p * q + Polynomial({Rational(5)}), q);
  CHECK(quot == p);
  CHECK(rem == Polynomial({Rational(5)}));
  CHECK(Polynomial({Rational(1, 2), Rational(1, 3)}).clear_denominators() ==
        Polynomial({Rational(3), Rational(2)}));
  CHECK(Polynomial({Rational(-12), Rational(-12), Rational(-6), Rational(1)}).to_string() ==
        "T^3 - 6*T^2 - 12*T - 12");
  CHECK(Polynomial({Rational(0), Rational(0), Rational(3)}).derivative() ==
        Polynomial({Rational(0), Rational(6)}));
}

TEST_CASE("Sturm root counts match constructed roots") {
  // (T-1)(T-2)(T-3)(T+4)
  Polynomial p({Rational(1)});
  for (int r : {1, 2, 3, -4}) p = p * Polynomial({Rational(-r), Rational(1)});
  CHECK(count_roots(p, Rational(0), Rational(10)) == 3);
  CHECK(count_roots(p, Rational(1), Rational(2)) == 1);
  CHECK(count_roots(p, Rational(-5), Rational(0)) == 1);
  CHECK(count_roots(p * p, Rational(0), Rational(10)) == 3);
}

namespace {

std::vector<double> to_double(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

void check_bracket_contract(const Polynomial& p, const RootBracket& br, const Rational& width) {
  CHECK(br.lo < br.hi);
  CHECK(br.hi - br.lo <= width);
  CHECK(br.width_bound == width);
  CHECK(sgn(p(br.lo)) <= 0);
  CHECK(sgn(p(br.hi)) > 0);
  CHECK(sgn(p(br.hi + 1)) > 0);
  CHECK(count_roots(p, br.hi, br.hi + 1000000) == 0);
}

}  // namespace

TEST_CASE("root isolation examples") {
  const Rational w = default_root_width();

  const Polynomial linear({Rational(-2), Rational(1)});
  auto b2 = isolate_largest_positive_root(linear, w);
  REQUIRE(b2);
  check_bracket_contract(linear, *b2, w);
  CHECK(b2->lo <= 2);
  CHECK(b2->hi > 2);

  // T^2/2 - 2T - 2: largest root 2 + 2 sqrt 2.
  const Polynomial quad({Rational(-2), Rational(-2), Rational(1, 2)});
  auto b3 = isolate_largest_positive_root(quad, w);
  REQUIRE(b3);
  check_bracket_contract(quad, *b3, w);
  CHECK(std::abs(b3->hi.get_d() - (2 + 2 * std::sqrt(2.0))) < 1e-9);

  const Polynomial cubic({Rational(-12), Rational(-12), Rational(-6), Rational(1)});
  auto b4 = isolate_largest_positive_root(cubic, w);
  REQUIRE(b4);
  check_bracket_contract(cubic, *b4, w);
  const double ref = oracle::largest_positive_root(to_double(cubic), 20.0);
  CHECK(ref > 7.7);
  CHECK(ref < 7.8);
  CHECK(b4->lo.get_d() <= ref + 1e-9);
  CHECK(b4->hi.get_d() >= ref - 1e-9);
}

TEST_CASE("root isolation edge cases") {
  const Rational w = default_root_width();
  CHECK_THROWS_AS(isolate_largest_positive_root(Polynomial(), w), Error);
  CHECK_THROWS_AS(isolate_largest_positive_root(Polynomial({Rational(1), Rational(-1)}), w), Error);
  CHECK_THROWS_AS(isolate_largest_positive_root(Polynomial({Rational(1), Rational(1)}), Rational(0)),
                  Error);
  CHECK_FALSE(isolate_largest_positive_root(Polynomial({Rational(3)}), w));
  CHECK_FALSE(isolate_largest_positive_root(Polynomial({Rational(1), Rational(1)}), w));
  CHECK_FALSE(isolate_largest_positive_root(Polynomial({Rational(1), Rational(0), Rational(1)}), w));

  // Several positive roots: the rightmost is returned.
  Polynomial p({Rational(1)});
  for (int r : {1, 2, 5}) p = p * Polynomial({Rational(-r), Rational(1)});
  auto br = isolate_largest_positive_root(p, w);
  REQUIRE(br);
  CHECK(br->lo <= 5);
  CHECK(br->hi > 5);

  // Exact rational root hit by bisection.
  auto exact = isolate_largest_positive_root(Polynomial({Rational(-1), Rational(2)}), Rational(1, 4));
  REQUIRE(exact);
  CHECK(exact->lo <= Rational(1, 2));
  CHECK(exact->hi > Rational(1, 2));
}

TEST_CASE("root isolation property: random polynomials with known roots") {
  oracle::Rng rng(17);
  const Rational w(1, 1 << 20);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p({Rational(rng.integer(1, 5))});
    Rational largest = 0;
    const int degree = static_cast<int>(rng.integer(1, 5));
    for (int k = 0; k < degree; ++k) {
      const Rational r = rng.rational(30, 7);
      if (r > largest) largest = r;
      p = p * Polynomial({-r, Rational(1)});
    }
    auto br = isolate_largest_positive_root(p, w);
    if (largest <= 0) {
      CHECK_FALSE(br);
      continue;
    }
    REQUIRE(br);
    CHECK(br->lo <= largest);
    CHECK(br->hi > largest);
    CHECK(br->hi - br->lo <= w);
    CHECK(sgn(p(br->hi)) > 0);
  }
}
