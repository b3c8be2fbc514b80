#ifndef LIEGEN_PINGPONG_HPP
#define LIEGEN_PINGPONG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegen/closure.hpp"
#include "liegen/groups.hpp"
#include "liegen/polynomial.hpp"

namespace liegen {

enum class RegionKind {
  X1,  // |x_1| strictly dominates every other coordinate
  X2,  // |x_n| strictly dominates every other coordinate
};

struct Region {
  RegionKind kind = RegionKind::X1;
  std::size_t n = 0;
};

bool in_region(const RationalVector& v, const Region& region);

/// T^{n-1}/(n-1)! - 2 sum_{i=1}^{n-1} T^{i-1}/(i-1)!. Positive at |t|
/// means a(t) maps X2 into X1.
Polynomial t_inequality(std::size_t n);

/// One polynomial per j = 1..n-1: the left side minus the right side of the
/// c(r) domination inequality, multiplied through to integer coefficients.
/// All n-1 positive at |r| means c(r) maps X1 into X2.
std::vector<Polynomial> r_inequalities(const RationalVector& b);

enum class BoundKind { t_bound, r_bound };

/// A certified threshold: every polynomial is positive at safe_value and
/// everywhere beyond it.
struct PingPongBound {
  BoundKind kind = BoundKind::t_bound;
  std::vector<Polynomial> polys;
  /// Bracket of the largest positive root over all polys, if any has one.
  std::optional<RootBracket> bracket;
  Rational safe_value;
};

/// Denominator exponent used when rounding a bracket up to safe_value.
inline constexpr unsigned kSafeValueBits = 10;

PingPongBound compute_t0(std::size_t n, const Rational& width);
PingPongBound compute_r0(const RationalVector& b, const Rational& width);
inline Rational s0() { return 2; }

enum class PingPongGenerator {
  upper,   // a(t): X2 -> X1
  corner,  // b(s): X1 -> X2
  lower,   // c(r): X1 -> X2
};

struct SpotcheckRequest {
  std::size_t n = 0;
  PingPongGenerator generator = PingPongGenerator::upper;
  Rational parameter;
  RationalVector b;  // lower only
  long m_min = -3;
  long m_max = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  Rational width = default_root_width();
  /// Evaluate even below the threshold, where the inclusion is not
  /// guaranteed. For diagnostics only.
  bool allow_uncertified = false;
};

struct Violation {
  RationalVector sample;
  long m = 0;
};

struct SpotcheckReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<Violation> violations;
};

/// Applies g^m for every nonzero m in [m_min, m_max] to `samples` random
/// integer vectors from the source region and checks that each lands in the
/// target region. Refuses parameters at or below the certified threshold.
SpotcheckReport pingpong_spotcheck(const SpotcheckRequest& request);

enum class Conclusion { free_dense_certified, dense_only, insufficient };
std::string to_string(Conclusion c);

struct CertifyRequest {
  Family family = Family::corner;
  std::size_t n = 0;
  Rational t;
  Rational second;     // s for corner / double_corner, r for lower / g2
  RationalVector b;    // lower only
  Rational width = default_root_width();
};

struct DensityEvidence {
  std::size_t closure_dim = 0;
  std::size_t rounds = 0;
  TypeLabel type;
  std::optional<TypeLabel> expected;
  bool nonzero_parameters = false;
  bool certified = false;
};

struct FreenessEvidence {
  PingPongBound t_bound;
  /// Absent for double_corner, which has no ping-pong lemma.
  std::optional<PingPongBound> second_bound;
  Rational s_threshold = s0();  // corner only
  Rational t_margin;            // |t| - t safe value
  std::optional<Rational> second_margin;
  bool applicable = false;
  bool certified = false;
};

struct Certificate {
  CertifyRequest request;
  GeneratorPair pair;
  DensityEvidence density;
  FreenessEvidence freeness;
  Conclusion conclusion = Conclusion::insufficient;
};

/// Density from the closure of the generator pair, freeness from the
/// ping-pong thresholds; free_dense_certified needs both.
Certificate certify_free_dense(const CertifyRequest& request);

/// Integer generators (a(t), g) of a free dense subgroup of an arithmetic
/// group. `certified` is set only when the underlying certificate is
/// free_dense_certified and every entry is an integer.
struct ThinPair {
  GroupElement first;
  GroupElement second;
  Rational t;
  bool integral = false;
  bool certified = false;
  std::vector<std::string> warnings;
  Certificate certificate;
};

/// (a((n-1)! q), b(s)) for n > 2.
ThinPair thin_pair(std::size_t n, long q, long s, const Rational& width = default_root_width());

/// (a(6 q), c(r)) at n = 4 with b = (8, 12, 14).
ThinPair thin_lower_pair(long q, long r, const Rational& width = default_root_width());

}  // namespace liegen

#endif
