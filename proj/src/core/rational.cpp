#include "liegen/rational.hpp"

#include <cctype>

namespace liegen {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits an optional leading '-' (and, if allowed, '+') from the digits.
std::pair<bool, std::string_view> split_sign(std::string_view s, bool allow_plus) {
  if (!s.empty() && s.front() == '-') return {true, s.substr(1)};
  if (allow_plus && !s.empty() && s.front() == '+') return {false, s.substr(1)};
  return {false, s};
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  fail(ErrorCode::parse_error, "invalid rational \"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational parse_canonical_rational(std::string_view text) {
  auto [neg, body] = split_sign(text, false);
  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!is_digits(den)) bad(text, "denominator must be a positive integer");
  }
  if (!is_digits(num)) bad(text, "numerator must be an integer");
  if (num.size() > 1 && num.front() == '0') bad(text, "leading zero");
  if (!den.empty() && den.size() > 1 && den.front() == '0') bad(text, "leading zero");
  Integer p{std::string(num)}, q{den.empty() ? std::string("1") : std::string(den)};
  if (neg && p == 0) bad(text, "negative zero");
  if (!den.empty() && q <= 1) bad(text, "denominator must exceed 1 when written");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) bad(text, "not in lowest terms");
  Rational r(neg ? Integer(-p) : p, q);
  return r;
}

Rational parse_rational(std::string_view raw) {
  std::string_view text = trim(raw);
  auto [neg, body] = split_sign(text, true);
  Rational r;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) bad(text, "expected p/q");
    Integer q{std::string(den)};
    if (q == 0) bad(text, "zero denominator");
    r = Rational(Integer(std::string(num)), q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !is_digits(ip)) ||
        (!fp.empty() && !is_digits(fp)))
      bad(text, "expected a decimal number");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Integer whole(ip.empty() ? std::string("0") : std::string(ip));
    Integer frac(fp.empty() ? std::string("0") : std::string(fp));
    r = Rational(whole * scale + frac, scale);
  } else {
    if (!is_digits(body)) bad(text, "expected an integer, p/q or decimal");
    r = Rational(Integer(std::string(body)));
  }
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double approx(const Rational& q) { return q.get_d(); }

Integer factorial(unsigned long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Integer binomial(long s, long i) {
  if (s < 0) fail(ErrorCode::invalid_argument, "binomial: negative upper index");
  if (i < 0 || i > s) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(i));
  return b;
}

Rational dyadic_above(const Rational& q, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational scaled = q * scale;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(fl + 1, scale);
  r.canonicalize();
  return r;
}

}  // namespace liegen
