#include "liegen/groups.hpp"

#include <algorithm>
#include <sstream>

namespace liegen {

Word Word::make(std::vector<Syllable> syllables) {
  if (!is_reduced(syllables))
    fail(ErrorCode::invalid_argument, "word is not reduced (zero exponent or repeated letter)");
  Word w;
  w.syllables_ = std::move(syllables);
  return w;
}

bool Word::is_reduced(const std::vector<Syllable>& syllables) {
  for (std::size_t k = 0; k < syllables.size(); ++k) {
    if (syllables[k].exponent == 0) return false;
    if (k > 0 && syllables[k].letter == syllables[k - 1].letter) return false;
  }
  return true;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < syllables_.size(); ++k) {
    if (k) os << ' ';
    os << (syllables_[k].letter == Letter::A ? 'A' : 'B') << '^' << syllables_[k].exponent;
  }
  return os.str();
}

bool canonical_less(const Word& a, const Word& b) {
  const auto& x = a.syllables();
  const auto& y = b.syllables();
  if (x.size() != y.size()) return x.size() < y.size();
  if (x.empty()) return false;
  if (x.front().letter != y.front().letter) return x.front().letter == Letter::A;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k].exponent != y[k].exponent) return x[k].exponent < y[k].exponent;
  return false;
}

GroupElement exp_upper(const Rational& t, std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "exp_upper needs n >= 2");
  Matrix m = Matrix::identity(n);
  // t^k / k! for k = 0..n-1
  std::vector<Rational> coeff(n);
  coeff[0] = 1;
  for (std::size_t k = 1; k < n; ++k) coeff[k] = coeff[k - 1] * t / static_cast<long>(k);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) m(i, j) = coeff[j - i];
  return {std::move(m), std::nullopt};
}

GroupElement exp_corner(const Rational& s, std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "exp_corner needs n >= 2");
  Matrix m = Matrix::identity(n);
  m(n, 1) += s;
  return {std::move(m), std::nullopt};
}

GroupElement exp_lower(const Rational& r, const RationalVector& b) {
  if (b.empty()) fail(ErrorCode::invalid_argument, "exp_lower needs at least one b_i");
  for (const auto& x : b)
    if (sgn(x) == 0) fail(ErrorCode::invalid_argument, "exp_lower: zero entry in b");
  const std::size_t n = b.size() + 1;
  Matrix m = Matrix::identity(n);
  std::vector<Rational> rk(n);  // r^k / k!
  rk[0] = 1;
  for (std::size_t k = 1; k < n; ++k) rk[k] = rk[k - 1] * r / static_cast<long>(k);
  for (std::size_t j = 2; j <= n; ++j) {
    Rational c = 1;  // c_{k,j}, built up one factor b_{j-k} at a time
    for (std::size_t k = 1; k < j; ++k) {
      c *= b[j - k - 1];
      m(j, j - k) = c * rk[k];
    }
  }
  return {std::move(m), std::nullopt};
}

GroupElement exp_nilpotent(const Matrix& m, const Rational& t) {
  if (!is_nilpotent(m)) fail(ErrorCode::domain_error, "exp_nilpotent: matrix is not nilpotent");
  const std::size_t n = m.size();
  Matrix tm = t * m;
  Matrix term = Matrix::identity(n);
  Matrix sum = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = term * tm;
    term *= Rational(1, static_cast<unsigned long>(k));
    sum += term;
  }
  return {std::move(sum), std::nullopt};
}

PowerMap parametric_powers(std::function<Matrix(const Rational&)> family, Rational parameter) {
  return [family = std::move(family), parameter = std::move(parameter)](long m) {
    return family(parameter * m);
  };
}

PowerMap matrix_powers(Matrix g) {
  Matrix inv = inverse(g);
  return [g = std::move(g), inv = std::move(inv)](long m) {
    return m >= 0 ? power(g, static_cast<unsigned long>(m))
                  : power(inv, static_cast<unsigned long>(-m));
  };
}

Matrix word_eval(const Word& w, const PowerMap& a, const PowerMap& b, std::size_t n) {
  if (!Word::is_reduced(w.syllables())) fail(ErrorCode::invalid_argument, "word is not reduced");
  Matrix acc = Matrix::identity(n);
  for (const auto& syl : w.syllables()) {
    Matrix g = syl.letter == Letter::A ? a(syl.exponent) : b(syl.exponent);
    require_same_size(acc, g, "word evaluation");
    acc = acc * g;
  }
  return acc;
}

namespace {

struct ScanState {
  std::size_t max_syllables;
  long max_exp;
  // tables[letter][k] holds g^{e_k} with e_k running -max..-1, 1..max.
  std::vector<Matrix> tables[2];
  std::vector<long> exponents;
  std::vector<Syllable> prefix;
  ScanReport report;

  void descend(const Matrix& acc, Letter next) {
    const int li = next == Letter::A ? 0 : 1;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      Matrix here = acc * tables[li][k];
      prefix.push_back({next, exponents[k]});
      ++report.words_checked;
      if (here.is_identity()) report.collisions.push_back(Word::make(prefix));
      if (prefix.size() < max_syllables)
        descend(here, next == Letter::A ? Letter::B : Letter::A);
      prefix.pop_back();
    }
  }
};

}  // namespace

ScanReport freeness_scan(std::size_t n, const PowerMap& a, const PowerMap& b,
                         std::size_t max_syllables, long max_exp) {
  if (max_syllables < 1) fail(ErrorCode::invalid_argument, "scan: max syllables must be >= 1");
  if (max_exp < 1) fail(ErrorCode::invalid_argument, "scan: max exponent must be >= 1");
  ScanState st{max_syllables, max_exp, {}, {}, {}, {}};
  for (long e = -max_exp; e <= max_exp; ++e)
    if (e != 0) st.exponents.push_back(e);
  for (long e : st.exponents) {
    st.tables[0].push_back(a(e));
    st.tables[1].push_back(b(e));
    require_same_size(Matrix(n), st.tables[0].back(), "scan generator A");
    require_same_size(Matrix(n), st.tables[1].back(), "scan generator B");
  }
  const Matrix id = Matrix::identity(n);
  st.descend(id, Letter::A);
  st.descend(id, Letter::B);
  std::sort(st.report.collisions.begin(), st.report.collisions.end(), canonical_less);
  return st.report;
}

ScanReport freeness_scan_corner(std::size_t n, const Rational& t, const Rational& s,
                                std::size_t max_syllables, long max_exp) {
  auto a = parametric_powers([n](const Rational& p) { return exp_upper(p, n).matrix; }, t);
  auto b = parametric_powers([n](const Rational& p) { return exp_corner(p, n).matrix; }, s);
  return freeness_scan(n, a, b, max_syllables, max_exp);
}

ScanReport freeness_scan_lower(const Rational& t, const Rational& r, const RationalVector& b,
                               std::size_t max_syllables, long max_exp) {
  const std::size_t n = b.size() + 1;
  auto ga = parametric_powers([n](const Rational& p) { return exp_upper(p, n).matrix; }, t);
  auto gc = parametric_powers([b](const Rational& p) { return exp_lower(p, b).matrix; }, r);
  return freeness_scan(n, ga, gc, max_syllables, max_exp);
}

FormMatrix form_matrix(std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "form matrix needs n >= 2");
  FormMatrix f{n, Matrix(n)};
  for (std::size_t k = 1; k <= n; ++k) f.j(k, n + 1 - k) = (k % 2 == 1) ? 1 : -1;
  return f;
}

bool check_form(const Matrix& g, const FormMatrix& form) {
  require_same_size(g, form.j, "form check");
  return g.transpose() * form.j * g == form.j;
}

}  // namespace liegen
