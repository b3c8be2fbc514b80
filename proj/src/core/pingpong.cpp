#include "liegen/pingpong.hpp"

#include <random>

namespace liegen {

bool in_region(const RationalVector& v, const Region& region) {
  if (v.size() != region.n)
    fail(ErrorCode::dimension_mismatch, "region test: vector length " + std::to_string(v.size()) +
                                            " but region dimension " + std::to_string(region.n));
  if (v.empty()) return false;
  const std::size_t dom = region.kind == RegionKind::X1 ? 0 : v.size() - 1;
  const Rational top = abs(v[dom]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != dom && !(top > abs(v[i]))) return false;
  return true;
}

Polynomial t_inequality(std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "t inequality needs n >= 2");
  std::vector<Rational> c(n);
  c[n - 1] = Rational(1) / Rational(factorial(n - 1));
  for (std::size_t i = 1; i <= n - 1; ++i) c[i - 1] -= Rational(2) / Rational(factorial(i - 1));
  return Polynomial(std::move(c));
}

std::vector<Polynomial> r_inequalities(const RationalVector& b) {
  if (b.empty()) fail(ErrorCode::invalid_argument, "r inequalities need at least one b_i");
  for (const auto& x : b)
    if (sgn(x) == 0) fail(ErrorCode::invalid_argument, "r inequalities: zero entry in b");
  const std::size_t n = b.size() + 1;

  // |c_{k,j}| = |b_{j-1} ... b_{j-k}|, with c_{0,j} = 1.
  auto c = [&](std::size_t k, std::size_t j) {
    Rational p = 1;
    for (std::size_t m = 1; m <= k; ++m) p *= b[j - m - 1];
    return abs(p);
  };
  auto term = [](const Rational& coeff, std::size_t k) {
    return Polynomial::monomial(coeff / Rational(factorial(k)), static_cast<unsigned>(k));
  };

  Polynomial lhs = term(c(n - 1, n), n - 1);
  for (std::size_t i = 2; i <= n; ++i) lhs = lhs - term(c(n - i, n), n - i);

  std::vector<Polynomial> out;
  for (std::size_t j = 1; j <= n - 1; ++j) {
    Polynomial rhs;
    for (std::size_t i = 1; i <= j; ++i) rhs = rhs + term(c(j - i, j), j - i);
    out.push_back((lhs - rhs).clear_denominators());
  }
  return out;
}

namespace {

PingPongBound bound_from(BoundKind kind, std::vector<Polynomial> polys, const Rational& width) {
  PingPongBound bound{kind, std::move(polys), std::nullopt, Rational(0)};
  for (const auto& p : bound.polys) {
    auto br = isolate_largest_positive_root(p, width);
    if (br && (!bound.bracket || br->hi > bound.bracket->hi)) bound.bracket = *br;
  }
  if (bound.bracket) bound.safe_value = dyadic_above(bound.bracket->hi, kSafeValueBits);
  for (const auto& p : bound.polys) {
    const bool ok = (sgn(bound.safe_value) == 0 || sgn(p(bound.safe_value)) > 0) &&
                    sgn(p(bound.safe_value + 1)) > 0;
    if (!ok) fail(ErrorCode::internal_error, "bound verification failed for " + p.to_string());
  }
  return bound;
}

}  // namespace

PingPongBound compute_t0(std::size_t n, const Rational& width) {
  return bound_from(BoundKind::t_bound, {t_inequality(n)}, width);
}

PingPongBound compute_r0(const RationalVector& b, const Rational& width) {
  return bound_from(BoundKind::r_bound, r_inequalities(b), width);
}

SpotcheckReport pingpong_spotcheck(const SpotcheckRequest& req) {
  const std::size_t n = req.n;
  if (n < 2) fail(ErrorCode::invalid_argument, "spotcheck needs n >= 2");
  if (req.m_min > req.m_max || (req.m_min == 0 && req.m_max == 0))
    fail(ErrorCode::invalid_argument, "spotcheck: empty exponent range");

  std::function<Matrix(const Rational&)> family;
  Rational threshold;
  Region source{RegionKind::X1, n}, target{RegionKind::X2, n};
  switch (req.generator) {
    case PingPongGenerator::upper:
      threshold = compute_t0(n, req.width).safe_value;
      family = [n](const Rational& p) { return exp_upper(p, n).matrix; };
      std::swap(source, target);
      break;
    case PingPongGenerator::corner:
      threshold = s0();
      family = [n](const Rational& p) { return exp_corner(p, n).matrix; };
      break;
    case PingPongGenerator::lower:
      if (req.b.size() + 1 != n)
        fail(ErrorCode::dimension_mismatch, "spotcheck: b must have length n-1");
      threshold = compute_r0(req.b, req.width).safe_value;
      family = [b = req.b](const Rational& p) { return exp_lower(p, b).matrix; };
      break;
  }
  if (!req.allow_uncertified && !(abs(req.parameter) > threshold))
    fail(ErrorCode::domain_error, "spotcheck: parameter " + to_string(req.parameter) +
                                      " does not exceed the certified threshold " +
                                      to_string(threshold));

  std::vector<std::pair<long, Matrix>> powers;
  for (long m = req.m_min; m <= req.m_max; ++m)
    if (m != 0) powers.emplace_back(m, family(req.parameter * m));

  SpotcheckReport report;
  report.seed = req.seed;
  std::mt19937_64 rng(req.seed);
  std::uniform_int_distribution<int> coord(-100, 100);
  RationalVector v(n), w(n);
  for (std::size_t s = 0; s < req.samples; ++s) {
    do {
      for (auto& x : v) x = coord(rng);
    } while (!in_region(v, source));
    ++report.samples;
    for (const auto& [m, g] : powers) {
      for (std::size_t i = 1; i <= n; ++i) {
        w[i - 1] = 0;
        for (std::size_t j = 1; j <= n; ++j) w[i - 1] += g(i, j) * v[j - 1];
      }
      ++report.checks;
      if (!in_region(w, target)) report.violations.push_back({v, m});
    }
  }
  return report;
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::free_dense_certified: return "free_dense_certified";
    case Conclusion::dense_only: return "dense_only";
    case Conclusion::insufficient: return "insufficient";
  }
  return "insufficient";
}

Certificate certify_free_dense(const CertifyRequest& request) {
  Certificate cert;
  cert.request = request;
  auto& req = cert.request;

  switch (req.family) {
    case Family::corner:
      if (req.n == 2) {
        cert.pair = GeneratorPair{2, Matrix::unit(2, 1, 2), Matrix::unit(2, 2, 1), Family::corner, {}};
        cert.density.expected = TypeLabel{TypeFamily::A, 1, 3};
      } else {
        cert.pair = shift_pair(req.n, req.family);
        cert.density.expected = predicted_type(req.family, req.n);
      }
      break;
    case Family::double_corner:
      cert.pair = shift_pair(req.n, req.family);
      cert.density.expected = predicted_type(req.family, req.n);
      break;
    case Family::lower_bidiagonal:
      if (req.n != 0 && req.b.size() + 1 != req.n)
        fail(ErrorCode::dimension_mismatch, "certify: b must have length n-1");
      cert.pair = lower_pair(req.b);
      req.n = cert.pair.n;
      cert.density.expected = TypeLabel{TypeFamily::A, req.n - 1, req.n * req.n - 1};
      break;
    case Family::g2_7x7:
      if (req.n != 0 && req.n != 7) fail(ErrorCode::invalid_argument, "certify: g2 family has n = 7");
      cert.pair = g2_pair();
      req.n = 7;
      req.b = *cert.pair.b;
      cert.density.expected = predicted_type(req.family, 7);
      break;
  }

  const std::vector<Matrix> seed{cert.pair.first, cert.pair.second};
  const auto closure = subalgebra_closure(seed);
  auto& d = cert.density;
  d.closure_dim = closure.dim;
  d.rounds = closure.rounds;
  d.type = classify(req.n, closure);
  d.nonzero_parameters = sgn(req.t) != 0 && sgn(req.second) != 0;
  d.certified = d.nonzero_parameters && d.type.recognized() && (!d.expected || d.type == *d.expected);

  auto& f = cert.freeness;
  f.t_bound = compute_t0(req.n, req.width);
  f.t_margin = abs(req.t) - f.t_bound.safe_value;
  switch (req.family) {
    case Family::corner:
      f.applicable = true;
      f.second_margin = abs(req.second) - f.s_threshold;
      break;
    case Family::lower_bidiagonal:
    case Family::g2_7x7:
      f.applicable = true;
      f.second_bound = compute_r0(req.b, req.width);
      f.second_margin = abs(req.second) - f.second_bound->safe_value;
      break;
    case Family::double_corner:
      break;
  }
  f.certified = f.applicable && sgn(f.t_margin) > 0 && sgn(*f.second_margin) > 0;

  if (d.certified)
    cert.conclusion = f.certified ? Conclusion::free_dense_certified : Conclusion::dense_only;
  return cert;
}

namespace {

void annotate(ThinPair& thin) {
  const auto& cert = thin.certificate;
  if (!thin.integral) thin.warnings.push_back("generators are not integral");
  if (!cert.density.certified) thin.warnings.push_back("density is not certified");
  const auto& f = cert.freeness;
  if (sgn(f.t_margin) <= 0)
    thin.warnings.push_back("|t| = " + to_string(abs(cert.request.t)) +
                            " does not exceed the t0 safe value " +
                            to_string(f.t_bound.safe_value));
  if (f.second_margin && sgn(*f.second_margin) <= 0)
    thin.warnings.push_back("second parameter " + to_string(cert.request.second) +
                            " does not exceed its threshold");
  thin.certified = thin.integral && cert.conclusion == Conclusion::free_dense_certified;
}

}  // namespace

ThinPair thin_pair(std::size_t n, long q, long s, const Rational& width) {
  if (n <= 2) fail(ErrorCode::invalid_argument, "thin pair needs n > 2");
  if (q == 0) fail(ErrorCode::invalid_argument, "thin pair needs q != 0");
  ThinPair thin;
  thin.t = Rational(factorial(n - 1)) * q;
  thin.first = exp_upper(thin.t, n);
  thin.second = exp_corner(s, n);
  thin.integral = thin.first.matrix.is_integral() && thin.second.matrix.is_integral();
  thin.certificate = certify_free_dense({Family::corner, n, thin.t, Rational(s), {}, width});
  annotate(thin);
  return thin;
}

ThinPair thin_lower_pair(long q, long r, const Rational& width) {
  if (q == 0) fail(ErrorCode::invalid_argument, "thin pair needs q != 0");
  const RationalVector b{8, 12, 14};
  ThinPair thin;
  thin.t = Rational(6 * q);
  thin.first = exp_upper(thin.t, 4);
  thin.second = exp_lower(Rational(r), b);
  thin.integral = thin.first.matrix.is_integral() && thin.second.matrix.is_integral();
  thin.certificate = certify_free_dense({Family::lower_bidiagonal, 4, thin.t, Rational(r), b, width});
  annotate(thin);
  return thin;
}

}  // namespace liegen
