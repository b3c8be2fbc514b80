#include "liegen/generators.hpp"

#include <algorithm>

namespace liegen {

std::string to_string(Family f) {
  switch (f) {
    case Family::corner: return "corner";
    case Family::double_corner: return "double_corner";
    case Family::lower_bidiagonal: return "lower_bidiagonal";
    case Family::g2_7x7: return "g2_7x7";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "corner") return Family::corner;
  if (name == "double_corner" || name == "double-corner") return Family::double_corner;
  if (name == "lower" || name == "lower_bidiagonal") return Family::lower_bidiagonal;
  if (name == "g2" || name == "g2_7x7") return Family::g2_7x7;
  fail(ErrorCode::invalid_argument, "unknown family \"" + std::string(name) + "\"");
}

Matrix upper_shift(std::size_t n) {
  Matrix x(n);
  for (std::size_t i = 1; i < n; ++i) x(i, i + 1) = 1;
  return x;
}

GeneratorPair shift_pair(std::size_t n, Family family) {
  GeneratorPair p;
  p.n = n;
  p.family = family;
  switch (family) {
    case Family::corner:
      if (n < 3) fail(ErrorCode::invalid_argument, "corner pair needs n >= 3");
      p.first = upper_shift(n);
      p.second = Matrix::unit(n, n, 1);
      break;
    case Family::double_corner:
      if (n < 4) fail(ErrorCode::invalid_argument, "double_corner pair needs n >= 4");
      p.first = upper_shift(n);
      p.second = Matrix::unit(n, n - 1, 1) + Matrix::unit(n, n, 2);
      break;
    default:
      fail(ErrorCode::invalid_argument, "shift_pair: family must be corner or double_corner");
  }
  return p;
}

GeneratorPair lower_pair(const RationalVector& b) {
  if (b.empty()) fail(ErrorCode::invalid_argument, "lower pair needs at least one b_i");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) == 0)
      fail(ErrorCode::invalid_argument, "lower pair: b_" + std::to_string(i + 1) + " is zero");
  const std::size_t n = b.size() + 1;
  GeneratorPair p;
  p.n = n;
  p.family = Family::lower_bidiagonal;
  p.first = upper_shift(n);
  p.second = Matrix(n);
  for (std::size_t i = 1; i < n; ++i) p.second(i + 1, i) = b[i - 1];
  p.b = b;
  return p;
}

RationalVector doubling_bvector(std::size_t n, BVectorConvention convention) {
  if (n < 3) fail(ErrorCode::invalid_argument, "doubling b-vector needs n >= 3");
  const std::size_t top = convention == BVectorConvention::matrix_size ? n : n - 1;
  RationalVector b(n - 1);
  Integer acc = 0;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, top - i);
    acc += term;
    b[i - 1] = Rational(acc);
  }
  return b;
}

namespace {

Matrix e(std::size_t i, std::size_t j) { return Matrix::unit(7, i, j); }

}  // namespace

CanonicalGenerators g2_canonical() {
  CanonicalGenerators g;
  g.rank = 2;
  g.cartan = cartan_matrix_g2();
  g.x = {e(2, 3) + e(5, 6), e(1, 2) + e(3, 4) + e(4, 5) + e(6, 7)};
  g.y = {e(3, 2) + e(6, 5), e(2, 1) + Rational(2) * e(4, 3) + Rational(2) * e(5, 4) + e(7, 6)};
  g.h = {bracket(g.x[0], g.y[0]), bracket(g.x[1], g.y[1])};
  if (auto failures = check_canonical_relations(g); !failures.empty())
    fail(ErrorCode::internal_error, "G2 canonical relation " + failures.front().relation + " fails");
  return g;
}

GeneratorPair g2_pair() {
  const auto g = g2_canonical();
  GeneratorPair p;
  p.n = 7;
  p.family = Family::g2_7x7;
  p.first = g.x[0] + g.x[1];
  p.second = g.y[1] - g.y[0];
  RationalVector b(6);
  for (std::size_t i = 1; i < 7; ++i) b[i - 1] = p.second(i + 1, i);
  p.b = b;
  return p;
}

IntMatrix cartan_matrix_a(std::size_t rank) {
  IntMatrix c(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    c[i][i] = 2;
    if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

IntMatrix cartan_matrix_g2() { return {{2, -3}, {-1, 2}}; }

std::vector<RelationFailure> check_canonical_relations(const CanonicalGenerators& g) {
  std::vector<RelationFailure> failures;
  const std::size_t l = g.rank;
  auto name = [](const char* a, std::size_t i, const char* b, std::size_t j) {
    return "[" + std::string(a) + std::to_string(i + 1) + "," + b + std::to_string(j + 1) + "]";
  };
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const Rational cji(g.cartan[j][i]);
      if (!bracket(g.h[i], g.h[j]).is_zero()) failures.push_back({name("h", i, "h", j)});
      if (bracket(g.h[i], g.x[j]) != cji * g.x[j]) failures.push_back({name("h", i, "x", j)});
      if (bracket(g.h[i], g.y[j]) != Rational(-cji) * g.y[j])
        failures.push_back({name("h", i, "y", j)});
      const Matrix expected = i == j ? g.h[i] : Matrix::zero(g.x[i].size());
      if (bracket(g.x[i], g.y[j]) != expected) failures.push_back({name("x", i, "y", j)});
    }
  return failures;
}

Matrix diagram_automorphism(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational& v = a(i, j);
      if (sgn(v) == 0) continue;
      // (-1)^{i-j+1} is -1 exactly when i - j is even.
      const bool negate = ((i + j) % 2) == 0;
      out(n - j + 1, n - i + 1) = negate ? Rational(-v) : v;
    }
  return out;
}

namespace {

bool plus_minus_distinct(const RationalVector& v) {
  std::vector<Rational> all;
  for (const auto& x : v) {
    all.push_back(x);
    all.push_back(-x);
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

CriterionResult prop2_criterion(const IntMatrix& cartan, const RationalVector& b) {
  const std::size_t l = cartan.size();
  if (b.size() != l)
    fail(ErrorCode::dimension_mismatch, "prop2 criterion: b has length " +
                                            std::to_string(b.size()) + ", Cartan matrix is " +
                                            std::to_string(l) + "x" + std::to_string(l));
  for (const auto& row : cartan)
    if (row.size() != l) fail(ErrorCode::dimension_mismatch, "prop2 criterion: Cartan matrix not square");
  for (const auto& x : b)
    if (sgn(x) == 0) fail(ErrorCode::invalid_argument, "prop2 criterion: zero entry in b");

  CriterionResult r;
  r.v.assign(l, Rational(0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) r.v[i] += Rational(cartan[i][j]) * b[j];
  r.holds = plus_minus_distinct(r.v);
  return r;
}

bool prop1_criterion(const Matrix& h) {
  if (!h.is_diagonal()) fail(ErrorCode::invalid_argument, "prop1 criterion: h must be diagonal");
  if (sgn(h.trace()) != 0) fail(ErrorCode::invalid_argument, "prop1 criterion: h must be traceless");
  RationalVector diffs;
  for (std::size_t i = 1; i < h.size(); ++i) diffs.push_back(h(i, i) - h(i + 1, i + 1));
  return plus_minus_distinct(diffs);
}

}  // namespace liegen
