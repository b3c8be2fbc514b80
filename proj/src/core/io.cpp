#include "liegen/io.hpp"

namespace liegen {

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.size(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.size()}, {"cols", m.size()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& doc) {
  auto bad = [](const std::string& why) { fail(ErrorCode::parse_error, "matrix document: " + why); };
  if (!doc.is_object()) bad("expected an object");
  for (const char* key : {"rows", "cols", "entries"})
    if (!doc.contains(key)) bad(std::string("missing \"") + key + "\"");
  if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned())
    bad("rows and cols must be nonnegative integers");
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  if (rows != cols) bad("only square matrices are supported");
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) bad("entries must have `rows` rows");
  Matrix m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || row.size() != cols) bad("row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_string()) bad("entries must be strings");
      m(i + 1, j + 1) = parse_canonical_rational(row[j].get<std::string>());
    }
  }
  return m;
}

Matrix matrix_from_json_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("matrix document: ") + e.what());
  }
  return matrix_from_json(doc);
}

Json rationals_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json rational_with_approx(const Rational& q) {
  return Json{{"value", to_string(q)}, {"approx", approx(q)}};
}

Json polynomial_to_json(const Polynomial& p) {
  return Json{{"coefficients", rationals_to_json(p.coefficients())},
              {"integer_cleared", rationals_to_json(p.clear_denominators().coefficients())},
              {"text", p.to_string()}};
}

Json type_label_to_json(const TypeLabel& label) {
  Json j{{"name", label.name()}, {"dim", label.dim}, {"recognized", label.recognized()}};
  j["rank"] = label.rank ? Json(*label.rank) : Json(nullptr);
  return j;
}

Json closure_to_json(std::size_t n, const ClosureResult& r) {
  const auto label = classify(n, r);
  return Json{{"n", n},
              {"dim", r.dim},
              {"rounds", r.rounds},
              {"verified", r.verified},
              {"type", type_label_to_json(label)},
              {"summary", label.summary()}};
}

Json bound_to_json(const PingPongBound& b) {
  Json polys = Json::array();
  for (const auto& p : b.polys) polys.push_back(polynomial_to_json(p));
  Json j{{"kind", b.kind == BoundKind::t_bound ? "t_bound" : "r_bound"}, {"polynomials", polys}};
  if (b.bracket)
    j["bracket"] = Json{{"lo", to_string(b.bracket->lo)},
                        {"hi", to_string(b.bracket->hi)},
                        {"width_bound", to_string(b.bracket->width_bound)},
                        {"approx", {approx(b.bracket->lo), approx(b.bracket->hi)}}};
  else
    j["bracket"] = nullptr;
  j["safe_value"] = rational_with_approx(b.safe_value);
  return j;
}

Json certificate_to_json(const Certificate& c) {
  const auto& r = c.request;
  const bool uses_r = r.family == Family::lower_bidiagonal || r.family == Family::g2_7x7;
  Json input{{"family", to_string(r.family)}, {"n", r.n}, {"t", to_string(r.t)}};
  input[uses_r ? "r" : "s"] = to_string(r.second);
  if (uses_r) input["b"] = rationals_to_json(r.b);
  input["width"] = to_string(r.width);

  const auto& d = c.density;
  Json density{{"closure_dim", d.closure_dim},
               {"rounds", d.rounds},
               {"type", type_label_to_json(d.type)},
               {"expected", d.expected ? type_label_to_json(*d.expected) : Json(nullptr)},
               {"nonzero_parameters", d.nonzero_parameters},
               {"certified", d.certified}};

  const auto& f = c.freeness;
  Json freeness{{"applicable", f.applicable}, {"t_bound", bound_to_json(f.t_bound)}};
  if (r.family == Family::corner) freeness["s_bound"] = Json{{"safe_value", to_string(f.s_threshold)}};
  if (f.second_bound) freeness["r_bound"] = bound_to_json(*f.second_bound);
  Json margins{{"t", rational_with_approx(f.t_margin)}};
  if (f.second_margin) margins[uses_r ? "r" : "s"] = rational_with_approx(*f.second_margin);
  freeness["margins"] = margins;
  freeness["certified"] = f.certified;

  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"input", input},
              {"generators", {{"first", matrix_to_json(c.pair.first)},
                              {"second", matrix_to_json(c.pair.second)}}},
              {"density", density},
              {"freeness", freeness},
              {"conclusion", to_string(c.conclusion)}};
}

Json scan_report_to_json(const ScanReport& r) {
  Json words = Json::array();
  for (const auto& w : r.collisions) words.push_back(w.to_string());
  return Json{{"words_checked", r.words_checked},
              {"collision_count", r.collisions.size()},
              {"collisions", words}};
}

Json spotcheck_to_json(const SpotcheckReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"sample", rationals_to_json(x.sample)}, {"m", x.m}});
  return Json{{"seed", r.seed}, {"samples", r.samples}, {"checks", r.checks}, {"violations", v}};
}

Json thin_to_json(const ThinPair& thin) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"t", to_string(thin.t)},
              {"first", matrix_to_json(thin.first.matrix)},
              {"second", matrix_to_json(thin.second.matrix)},
              {"integral", thin.integral},
              {"certified", thin.certified},
              {"warnings", thin.warnings},
              {"certificate", certificate_to_json(thin.certificate)}};
}

}  // namespace liegen
