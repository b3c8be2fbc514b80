#include "doctest.h"
#include "liegen/pingpong.hpp"
#include "support/oracles.hpp"

using namespace liegen;

namespace {

Polynomial ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(c);
}

std::vector<double> to_double(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

}  // namespace

TEST_CASE("regions") {
  const Region x1{RegionKind::X1, 3}, x2{RegionKind::X2, 3};
  CHECK(in_region({5, 1, 1}, x1));
  CHECK(in_region({1, 1, 5}, x2));
  CHECK_FALSE(in_region({1, 1, 5}, x1));
  CHECK_FALSE(in_region({2, 2, 1}, x1));
  CHECK(in_region({-5, 4, -4}, x1));
  CHECK_THROWS_AS(in_region({1, 2}, x1), Error);
}

TEST_CASE("t inequality polynomials") {
  CHECK(t_inequality(2) == ints({-2, 1}));
  CHECK(t_inequality(3) == Polynomial({Rational(-2), Rational(-2), Rational(1, 2)}));
  CHECK(t_inequality(4) == Polynomial({Rational(-2), Rational(-2), Rational(-1), Rational(1, 6)}));
  CHECK(t_inequality(4).clear_denominators() == ints({-12, -12, -6, 1}));
  CHECK(t_inequality(7).clear_denominators() == ints({-1440, -1440, -720, -240, -60, -12, 1}));
  CHECK_THROWS_AS(t_inequality(1), Error);
}

TEST_CASE("r inequality polynomials") {
  const auto polys = r_inequalities({8, 12, 14});
  REQUIRE(polys.size() == 3);
  CHECK(polys[0] == ints({-2, -14, -84, 224}));
  CHECK(polys[1] == ints({-2, -22, -84, 224}));
  CHECK(polys[2] == ints({-2, -26, -132, 224}));

  const auto n2 = r_inequalities({3});
  REQUIRE(n2.size() == 1);
  CHECK(n2[0] == ints({-2, 3}));
  CHECK(r_inequalities({-3}) == n2);

  CHECK_THROWS_AS(r_inequalities({1, 0}), Error);
  CHECK_THROWS_AS(r_inequalities({}), Error);
}

TEST_CASE("r inequalities match the entries of c(r) evaluated directly") {
  // LHS - RHS_j at a sample point, computed from the matrix entries of c(r).
  oracle::Rng rng(51);
  for (std::size_t n = 2; n <= 6; ++n) {
    RationalVector b;
    for (std::size_t k = 0; k + 1 < n; ++k) b.push_back(rng.nonzero_rational(9, 4));
    const auto polys = r_inequalities(b);
    for (int trial = 0; trial < 5; ++trial) {
      const Rational r = abs(rng.nonzero_rational(5, 3));
      const Matrix c = exp_lower(r, b).matrix;
      Rational lhs = abs(c(n, 1));
      for (std::size_t i = 2; i <= n; ++i) lhs -= abs(c(n, i));
      for (std::size_t j = 1; j + 1 <= n; ++j) {
        Rational rhs = 0;
        for (std::size_t i = 1; i <= j; ++i) rhs += abs(c(j, i));
        CHECK(sgn(polys[j - 1](r)) == sgn(lhs - rhs));
      }
    }
  }
}

TEST_CASE("t bounds") {
  const Rational w = default_root_width();
  const auto t2 = compute_t0(2, w);
  REQUIRE(t2.bracket);
  CHECK(t2.bracket->lo <= 2);
  CHECK(t2.bracket->hi > 2);
  CHECK(t2.safe_value > 2);
  CHECK(t2.safe_value <= Rational(2) + Rational(1, 512));

  const auto t7 = compute_t0(7, w);
  REQUIRE(t7.bracket);
  CHECK(t7.bracket->hi.get_d() > 16.5);
  CHECK(t7.bracket->lo.get_d() < 16.7);
  CHECK(t7.safe_value <= 17);

  for (std::size_t n = 2; n <= 10; ++n) {
    const auto b = compute_t0(n, w);
    REQUIRE(b.bracket);
    const Polynomial p = t_inequality(n);
    CHECK(sgn(p(b.safe_value)) > 0);
    CHECK(sgn(p(b.safe_value + 1)) > 0);
    CHECK(sgn(p(b.bracket->lo)) <= 0);
    CHECK(b.bracket->hi <= b.safe_value);
    const double ref = oracle::largest_positive_root(to_double(p), 6.0 * n, 1e-2);
    CHECK(std::abs(ref - b.bracket->hi.get_d()) < 1e-6);
  }
}

TEST_CASE("r bounds") {
  const auto r = compute_r0({8, 12, 14}, default_root_width());
  REQUIRE(r.bracket);
  CHECK(r.bracket->hi.get_d() > 0.7);
  CHECK(r.bracket->lo.get_d() < 0.8);
  CHECK(r.safe_value <= 1);
  for (const auto& p : r.polys) {
    CHECK(sgn(p(r.safe_value)) > 0);
    const double ref = oracle::largest_positive_root(to_double(p), 2.0, 1e-4);
    CHECK(ref <= r.bracket->hi.get_d() + 1e-9);
  }
  CHECK(s0() == 2);

  const auto g2 = compute_r0(*g2_pair().b, default_root_width());
  REQUIRE(g2.bracket);
  CHECK(g2.safe_value <= 17);
  CHECK(g2.bracket->hi.get_d() > 16);
}

TEST_CASE("spot checks at certified parameters") {
  SpotcheckRequest upper;
  upper.n = 4;
  upper.generator = PingPongGenerator::upper;
  upper.parameter = 8;
  const auto ru = pingpong_spotcheck(upper);
  CHECK(ru.samples == 200);
  CHECK(ru.checks == 200 * 6);
  CHECK(ru.violations.empty());
  CHECK(ru.seed == 1);

  SpotcheckRequest corner;
  corner.n = 2;
  corner.generator = PingPongGenerator::corner;
  corner.parameter = 3;
  CHECK(pingpong_spotcheck(corner).violations.empty());
  corner.parameter = -3;
  CHECK(pingpong_spotcheck(corner).violations.empty());

  SpotcheckRequest lower;
  lower.n = 4;
  lower.generator = PingPongGenerator::lower;
  lower.parameter = 2;
  lower.b = {8, 12, 14};
  CHECK(pingpong_spotcheck(lower).violations.empty());

  SpotcheckRequest big = upper;
  big.n = 6;
  big.parameter = Rational(29, 2);
  big.seed = 99;
  CHECK(pingpong_spotcheck(big).violations.empty());
}

TEST_CASE("spot checks refuse below the threshold") {
  SpotcheckRequest req;
  req.n = 2;
  req.generator = PingPongGenerator::corner;
  req.parameter = 2;
  CHECK_THROWS_AS(pingpong_spotcheck(req), Error);
  req.generator = PingPongGenerator::upper;
  req.n = 4;
  req.parameter = 7;
  CHECK_THROWS_AS(pingpong_spotcheck(req), Error);

  // Diagnostics below the bound are allowed when asked for explicitly, and
  // here the inclusion genuinely fails.
  req.allow_uncertified = true;
  req.parameter = 1;
  CHECK_FALSE(pingpong_spotcheck(req).violations.empty());

  req.allow_uncertified = false;
  req.generator = PingPongGenerator::lower;
  req.parameter = 2;
  req.b = {8, 12};
  CHECK_THROWS_AS(pingpong_spotcheck(req), Error);
}

TEST_CASE("spot checks are reproducible from the seed") {
  SpotcheckRequest req;
  req.n = 3;
  req.generator = PingPongGenerator::upper;
  req.parameter = 1;
  req.allow_uncertified = true;
  req.seed = 7;
  const auto a = pingpong_spotcheck(req), b = pingpong_spotcheck(req);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t k = 0; k < a.violations.size(); ++k) CHECK(a.violations[k].sample == b.violations[k].sample);
}

TEST_CASE("certificates") {
  const auto c = certify_free_dense({Family::corner, 4, 8, 3, {}, default_root_width()});
  CHECK(c.conclusion == Conclusion::free_dense_certified);
  CHECK(c.density.closure_dim == 10);
  CHECK(c.density.type.name() == "C2");

  const auto t5 = compute_t0(5, default_root_width());
  const auto c5 = certify_free_dense({Family::corner, 5, t5.safe_value + 1, 3, {}, default_root_width()});
  CHECK(c5.conclusion == Conclusion::free_dense_certified);
  CHECK(c5.density.type.name() == "A4");

  const auto low = certify_free_dense({Family::corner, 4, 1, 1, {}, default_root_width()});
  CHECK(low.conclusion == Conclusion::dense_only);
  CHECK(low.density.certified);
  CHECK_FALSE(low.freeness.certified);

  const auto zero = certify_free_dense({Family::corner, 4, 0, 3, {}, default_root_width()});
  CHECK(zero.conclusion == Conclusion::insufficient);

  const auto lower = certify_free_dense({Family::lower_bidiagonal, 4, 8, 2, {8, 12, 14}, default_root_width()});
  CHECK(lower.conclusion == Conclusion::free_dense_certified);
  CHECK(lower.density.type.name() == "A3");

  const auto g2 = certify_free_dense({Family::g2_7x7, 7, 18, 18, {}, default_root_width()});
  CHECK(g2.conclusion == Conclusion::free_dense_certified);
  CHECK(g2.density.type.name() == "G2");
  const auto g2low = certify_free_dense({Family::g2_7x7, 7, 18, 16, {}, default_root_width()});
  CHECK(g2low.conclusion == Conclusion::dense_only);

  const auto dc = certify_free_dense({Family::double_corner, 7, 100, 100, {}, default_root_width()});
  CHECK(dc.conclusion == Conclusion::dense_only);
  CHECK_FALSE(dc.freeness.applicable);

  const auto sl2 = certify_free_dense({Family::corner, 2, 3, 3, {}, default_root_width()});
  CHECK(sl2.conclusion == Conclusion::free_dense_certified);

  // b = (1, 1, 1) fails the distinctness criterion; the pair generates
  // sp(4), which is not the target sl(4).
  const auto weak = certify_free_dense({Family::lower_bidiagonal, 4, 8, 5, {1, 1, 1}, default_root_width()});
  CHECK(weak.density.type.name() == "C2");
  CHECK_FALSE(weak.density.certified);
  CHECK(weak.conclusion == Conclusion::insufficient);
}

TEST_CASE("certificate conclusion is monotone in the parameters") {
  auto rank = [](Conclusion c) {
    return c == Conclusion::free_dense_certified ? 2 : c == Conclusion::dense_only ? 1 : 0;
  };
  const Rational w = default_root_width();
  for (std::size_t n : {3, 4}) {
    int prev = -1;
    for (int k = 1; k <= 12; ++k) {
      const auto c = certify_free_dense({Family::corner, n, Rational(k), Rational(k, 3), {}, w});
      CHECK(rank(c.conclusion) >= prev);
      prev = rank(c.conclusion);
    }
    CHECK(prev == 2);
  }
  int prev = -1;
  for (int k = 1; k <= 12; ++k) {
    const auto c = certify_free_dense({Family::lower_bidiagonal, 4, Rational(k), Rational(k, 8), {8, 12, 14}, w});
    CHECK(rank(c.conclusion) >= prev);
    prev = rank(c.conclusion);
  }
  CHECK(prev == 2);
}

TEST_CASE("thin pairs") {
  for (std::size_t n = 3; n <= 8; ++n)
    for (long q = 1; q <= 3; ++q) CHECK(exp_upper(Rational(factorial(n - 1)) * q, n).matrix.is_integral());

  const auto t3 = thin_pair(3, 2, 3);
  CHECK(t3.t == 4);
  CHECK(t3.first.matrix == exp_upper(4, 3).matrix);
  CHECK(t3.first.matrix(1, 3) == 8);
  CHECK(t3.integral);

  const auto t4 = thin_pair(4, 2, 3);
  CHECK(t4.first.matrix(1, 4) == 288);
  CHECK(t4.certified);
  CHECK(t4.warnings.empty());

  const auto t4low = thin_pair(4, 1, 3);
  CHECK(t4low.integral);
  CHECK_FALSE(t4low.certified);
  CHECK_FALSE(t4low.warnings.empty());

  const auto lower = thin_lower_pair(2, 1);
  CHECK(lower.t == 12);
  CHECK(lower.integral);
  CHECK(lower.certified);
  CHECK(lower.second.matrix(4, 1) == 224);

  CHECK_THROWS_AS(thin_pair(2, 1, 3), Error);
  CHECK_THROWS_AS(thin_pair(3, 0, 3), Error);
}
