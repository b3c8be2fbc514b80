#include "liegen/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace liegen {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::coefficient(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::clear_denominators() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return Rational(l) * *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k >= 1) os << (k == 0 || unit ? "" : "*") << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::domain_error, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational f = rem[k] / lead;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Canonical Sturm chain p, p', -rem(...), each scaled by a positive constant.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  auto monic_abs = [](const Polynomial& q) { return Rational(1) / abs(q.leading()) * q; };
  std::vector<Polynomial> chain{monic_abs(p)};
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(monic_abs(d));
  while (true) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(monic_abs(Rational(-1) * r));
  }
  return chain;
}

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& t) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q(t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorCode::domain_error, "count_roots: zero polynomial");
  if (hi <= lo) return 0;
  auto chain = sturm_chain(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational default_root_width() {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, kDefaultWidthExponent);
  return Rational(1, scale);
}

std::optional<RootBracket> isolate_largest_positive_root(const Polynomial& p,
                                                        const Rational& width) {
  if (p.is_zero()) fail(ErrorCode::domain_error, "root isolation: zero polynomial");
  if (sgn(p.leading()) < 0)
    fail(ErrorCode::domain_error, "root isolation: leading coefficient must be positive");
  if (sgn(width) <= 0) fail(ErrorCode::invalid_argument, "root isolation: width must be positive");
  if (p.degree() == 0) return std::nullopt;

  Rational cauchy = 0;
  for (int k = 0; k < p.degree(); ++k) cauchy = std::max(cauchy, Rational(abs(p.coefficients()[k] / p.leading())));
  cauchy += 1;

  const auto chain = sturm_chain(p);
  auto roots_in = [&](const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };

  Rational lo = 0, hi = cauchy;
  if (roots_in(lo, hi) == 0) return std::nullopt;

  // Invariants: no root in (hi, cauchy]; at least one root in (lo, hi].
  while (hi - lo > width || roots_in(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (roots_in(mid, hi) > 0)
      lo = mid;
    else
      hi = mid;
  }
  if (sgn(p(hi)) == 0) {
    lo = hi;
    hi = lo + width;
  }
  return RootBracket{lo, hi, width};
}

}  // namespace liegen
