#ifndef LIEGEN_IO_HPP
#define LIEGEN_IO_HPP

#include <string>

#include "json.hpp"
#include "liegen/pingpong.hpp"

namespace liegen {

inline constexpr const char* kToolName = "liegen";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// {"rows": n, "cols": n, "entries": [["p/q", ...], ...]}, entries in lowest
/// terms. Parsing is strict so that print/parse round-trips exactly.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc);
Matrix matrix_from_json_text(const std::string& text);

Json rationals_to_json(const RationalVector& v);
Json rational_with_approx(const Rational& q);

Json polynomial_to_json(const Polynomial& p);
Json type_label_to_json(const TypeLabel& label);
Json closure_to_json(std::size_t n, const ClosureResult& r);
Json bound_to_json(const PingPongBound& b);
Json certificate_to_json(const Certificate& c);
Json scan_report_to_json(const ScanReport& r);
Json spotcheck_to_json(const SpotcheckReport& r);
Json thin_to_json(const ThinPair& thin);

}  // namespace liegen

#endif
