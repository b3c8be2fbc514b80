#include "liegen/liegen.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "liegen/io.hpp"

using namespace liegen;

struct liegen_matrix {
  Matrix m;
};

struct liegen_closure {
  std::size_t n;
  ClosureResult result;
};

struct liegen_certificate {
  Certificate cert;
};

struct liegen_scan {
  ScanReport report;
  Json input;
};

struct liegen_thin_pair {
  ThinPair thin;
};

namespace {

thread_local std::string last_error;

liegen_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return LIEGEN_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return LIEGEN_ERR_DIMENSION;
    case ErrorCode::parse_error: return LIEGEN_ERR_PARSE;
    case ErrorCode::domain_error: return LIEGEN_ERR_DOMAIN;
    case ErrorCode::internal_error: return LIEGEN_ERR_INTERNAL;
  }
  return LIEGEN_ERR_INTERNAL;
}

template <class F>
liegen_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return LIEGEN_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return LIEGEN_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LIEGEN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LIEGEN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LIEGEN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_json(const Json& j, char** out) { *out = dup_string(j.dump(2)); }

Rational rational_arg(const char* text, const char* what) {
  require(text, what);
  return parse_rational(text);
}

Rational width_arg(const char* text) {
  if (!text) return default_root_width();
  Rational w = parse_rational(text);
  if (sgn(w) <= 0) fail(ErrorCode::invalid_argument, "width must be positive");
  return w;
}

RationalVector bvector(const char* spec, std::size_t n) {
  require(spec, "b-vector spec");
  const std::string s(spec);
  if (s == "doubling") return doubling_bvector(n, BVectorConvention::matrix_size);
  if (s == "doubling-rank") return doubling_bvector(n, BVectorConvention::rank);
  auto b = parse_rational_list(s);
  if (n != 0 && b.size() + 1 != n)
    fail(ErrorCode::dimension_mismatch,
         "b-vector has length " + std::to_string(b.size()) + " but n = " + std::to_string(n));
  return b;
}

Family family_arg(const char* name) {
  require(name, "family");
  return parse_family(name);
}

GeneratorPair make_pair(const char* family, std::size_t n, const char* b_spec) {
  switch (family_arg(family)) {
    case Family::corner: return shift_pair(n, Family::corner);
    case Family::double_corner: return shift_pair(n, Family::double_corner);
    case Family::lower_bidiagonal: return lower_pair(bvector(b_spec, n));
    case Family::g2_7x7:
      if (n != 0 && n != 7) fail(ErrorCode::invalid_argument, "g2 family has n = 7");
      return g2_pair();
  }
  fail(ErrorCode::internal_error, "unhandled family");
}

}  // namespace

extern "C" {

const char* liegen_version(void) { return kToolVersion; }

const char* liegen_status_string(liegen_status status) {
  switch (status) {
    case LIEGEN_OK: return "ok";
    case LIEGEN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LIEGEN_ERR_DIMENSION: return "dimension mismatch";
    case LIEGEN_ERR_PARSE: return "parse error";
    case LIEGEN_ERR_DOMAIN: return "domain error";
    case LIEGEN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* liegen_last_error(void) { return last_error.c_str(); }

void liegen_string_free(char* s) { std::free(s); }

liegen_status liegen_matrix_from_json(const char* json, liegen_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new liegen_matrix{matrix_from_json_text(json)};
  });
}

liegen_status liegen_matrix_to_json(const liegen_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    put_json(matrix_to_json(m->m), out);
  });
}

liegen_status liegen_matrix_size(const liegen_matrix* m, size_t* n) {
  return guarded([&] {
    require(m, "matrix");
    require(n, "n");
    *n = m->m.size();
  });
}

liegen_status liegen_matrix_entry(const liegen_matrix* m, size_t i, size_t j, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(to_string(m->m.at(i, j)));
  });
}

liegen_status liegen_matrix_equal(const liegen_matrix* a, const liegen_matrix* b, int* equal) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    *equal = a->m == b->m ? 1 : 0;
  });
}

liegen_status liegen_matrix_bracket(const liegen_matrix* a, const liegen_matrix* b,
                                    liegen_matrix** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new liegen_matrix{bracket(a->m, b->m)};
  });
}

void liegen_matrix_free(liegen_matrix* m) { delete m; }

liegen_status liegen_generator_pair(const char* family, size_t n, const char* b_spec,
                                    liegen_matrix** first, liegen_matrix** second) {
  return guarded([&] {
    require(first, "first");
    require(second, "second");
    auto pair = make_pair(family, n, b_spec);
    auto* a = new liegen_matrix{std::move(pair.first)};
    try {
      *second = new liegen_matrix{std::move(pair.second)};
    } catch (...) {
      delete a;
      throw;
    }
    *first = a;
  });
}

liegen_status liegen_generator_pair_json(const char* family, size_t n, const char* b_spec,
                                         char** out) {
  return guarded([&] {
    require(out, "out");
    const auto pair = make_pair(family, n, b_spec);
    Json j{{"family", to_string(pair.family)}, {"n", pair.n}};
    j["b"] = pair.b ? rationals_to_json(*pair.b) : Json(nullptr);
    j["first"] = matrix_to_json(pair.first);
    j["second"] = matrix_to_json(pair.second);
    put_json(j, out);
  });
}

liegen_status liegen_closure_compute(const liegen_matrix* const* seed, size_t count,
                                     liegen_closure** out) {
  return guarded([&] {
    require(seed, "seed");
    require(out, "out");
    if (count == 0) fail(ErrorCode::invalid_argument, "closure needs a nonempty seed");
    std::vector<Matrix> mats;
    for (size_t k = 0; k < count; ++k) {
      require(seed[k], "seed element");
      mats.push_back(seed[k]->m);
    }
    const std::size_t n = mats.front().size();
    *out = new liegen_closure{n, subalgebra_closure(mats)};
  });
}

liegen_status liegen_closure_of_family(const char* family, size_t n, const char* b_spec,
                                       liegen_closure** out) {
  return guarded([&] {
    require(out, "out");
    const auto pair = make_pair(family, n, b_spec);
    const std::vector<Matrix> seed{pair.first, pair.second};
    *out = new liegen_closure{pair.n, subalgebra_closure(seed)};
  });
}

liegen_status liegen_closure_dim(const liegen_closure* c, size_t* dim) {
  return guarded([&] {
    require(c, "closure");
    require(dim, "dim");
    *dim = c->result.dim;
  });
}

liegen_status liegen_closure_recognized(const liegen_closure* c, int* recognized) {
  return guarded([&] {
    require(c, "closure");
    require(recognized, "recognized");
    const auto label = classify(c->n, c->result);
    *recognized = label.recognized() ? 1 : 0;
  });
}

liegen_status liegen_closure_type_name(const liegen_closure* c, char** out) {
  return guarded([&] {
    require(c, "closure");
    require(out, "out");
    *out = dup_string(classify(c->n, c->result).name());
  });
}

liegen_status liegen_closure_to_json(const liegen_closure* c, char** out) {
  return guarded([&] {
    require(c, "closure");
    require(out, "out");
    put_json(closure_to_json(c->n, c->result), out);
  });
}

void liegen_closure_free(liegen_closure* c) { delete c; }

liegen_status liegen_bounds_json(const char* family, size_t n, const char* b_spec,
                                 const char* width, char** out) {
  return guarded([&] {
    require(out, "out");
    const Family f = family_arg(family);
    const Rational w = width_arg(width);
    Json j{{"tool", kToolName}, {"version", kToolVersion}, {"family", to_string(f)}};
    switch (f) {
      case Family::corner:
      case Family::double_corner:
        if (n < 2) fail(ErrorCode::invalid_argument, "bounds need n >= 2");
        j["n"] = n;
        j["width"] = to_string(w);
        j["t_bound"] = bound_to_json(compute_t0(n, w));
        if (f == Family::corner)
          j["s_bound"] = Json{{"safe_value", rational_with_approx(s0())}};
        break;
      case Family::lower_bidiagonal:
      case Family::g2_7x7: {
        const auto pair = make_pair(family, n, b_spec);
        j["n"] = pair.n;
        j["b"] = rationals_to_json(*pair.b);
        j["width"] = to_string(w);
        j["t_bound"] = bound_to_json(compute_t0(pair.n, w));
        j["r_bound"] = bound_to_json(compute_r0(*pair.b, w));
        break;
      }
    }
    put_json(j, out);
  });
}

liegen_status liegen_exp(const char* kind, size_t n, const char* parameter, const char* b_spec,
                         const liegen_matrix* matrix, liegen_matrix** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const Rational p = rational_arg(parameter, "parameter");
    const std::string k(kind);
    GroupElement g;
    if (k == "upper")
      g = exp_upper(p, n);
    else if (k == "corner")
      g = exp_corner(p, n);
    else if (k == "lower")
      g = exp_lower(p, bvector(b_spec, n));
    else if (k == "nilpotent") {
      require(matrix, "matrix");
      g = exp_nilpotent(matrix->m, p);
    } else
      fail(ErrorCode::invalid_argument, "unknown exponential kind \"" + k + "\"");
    *out = new liegen_matrix{std::move(g.matrix)};
  });
}

liegen_status liegen_certify(const liegen_certify_params* params, liegen_certificate** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    CertifyRequest req;
    req.family = family_arg(params->family);
    req.n = params->n;
    req.t = rational_arg(params->t, "t");
    req.width = width_arg(params->width);
    switch (req.family) {
      case Family::corner:
      case Family::double_corner:
        req.second = rational_arg(params->s, "s");
        break;
      case Family::lower_bidiagonal:
        req.second = rational_arg(params->r, "r");
        req.b = bvector(params->b_spec, req.n);
        break;
      case Family::g2_7x7:
        req.second = rational_arg(params->r, "r");
        break;
    }
    *out = new liegen_certificate{certify_free_dense(req)};
  });
}

liegen_status liegen_certificate_conclusion(const liegen_certificate* c, liegen_conclusion* out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    switch (c->cert.conclusion) {
      case Conclusion::free_dense_certified: *out = LIEGEN_FREE_DENSE_CERTIFIED; break;
      case Conclusion::dense_only: *out = LIEGEN_DENSE_ONLY; break;
      case Conclusion::insufficient: *out = LIEGEN_INSUFFICIENT; break;
    }
  });
}

liegen_status liegen_certificate_to_json(const liegen_certificate* c, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    put_json(certificate_to_json(c->cert), out);
  });
}

void liegen_certificate_free(liegen_certificate* c) { delete c; }

liegen_status liegen_scan_run(const liegen_scan_params* params, liegen_scan** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    if (params->max_exp < 1) fail(ErrorCode::invalid_argument, "max_exp must be >= 1");
    if (params->max_syllables < 1) fail(ErrorCode::invalid_argument, "max_syllables must be >= 1");
    const Rational t = rational_arg(params->t, "t");
    Json input{{"n", params->n}, {"t", to_string(t)}};
    ScanReport report;
    if (params->s && params->r) fail(ErrorCode::invalid_argument, "give either s or r, not both");
    if (params->s) {
      const Rational s = parse_rational(params->s);
      input["s"] = to_string(s);
      report = freeness_scan_corner(params->n, t, s, params->max_syllables, params->max_exp);
    } else if (params->r) {
      const Rational r = parse_rational(params->r);
      const auto b = bvector(params->b_spec, params->n);
      input["r"] = to_string(r);
      input["b"] = rationals_to_json(b);
      report = freeness_scan_lower(t, r, b, params->max_syllables, params->max_exp);
    } else {
      fail(ErrorCode::invalid_argument, "scan needs s or r");
    }
    input["max_syllables"] = params->max_syllables;
    input["max_exp"] = params->max_exp;
    input["seed"] = params->seed;
    *out = new liegen_scan{std::move(report), std::move(input)};
  });
}

liegen_status liegen_scan_words_checked(const liegen_scan* s, size_t* count) {
  return guarded([&] {
    require(s, "scan");
    require(count, "count");
    *count = s->report.words_checked;
  });
}

liegen_status liegen_scan_collision_count(const liegen_scan* s, size_t* count) {
  return guarded([&] {
    require(s, "scan");
    require(count, "count");
    *count = s->report.collisions.size();
  });
}

liegen_status liegen_scan_collision(const liegen_scan* s, size_t k, char** out) {
  return guarded([&] {
    require(s, "scan");
    require(out, "out");
    if (k >= s->report.collisions.size())
      fail(ErrorCode::invalid_argument, "collision index out of range");
    *out = dup_string(s->report.collisions[k].to_string());
  });
}

liegen_status liegen_scan_to_json(const liegen_scan* s, char** out) {
  return guarded([&] {
    require(s, "scan");
    require(out, "out");
    Json j{{"tool", kToolName}, {"version", kToolVersion}, {"input", s->input}};
    j["seed"] = s->input["seed"];
    j.update(scan_report_to_json(s->report));
    j["clean"] = s->report.collisions.empty();
    put_json(j, out);
  });
}

void liegen_scan_free(liegen_scan* s) { delete s; }

liegen_status liegen_spotcheck_json(const liegen_spotcheck_params* params, size_t* violations,
                                    char** out) {
  return guarded([&] {
    require(params, "params");
    require(params->generator, "generator");
    require(out, "out");
    SpotcheckRequest req;
    const std::string g(params->generator);
    if (g == "upper")
      req.generator = PingPongGenerator::upper;
    else if (g == "corner")
      req.generator = PingPongGenerator::corner;
    else if (g == "lower")
      req.generator = PingPongGenerator::lower;
    else
      fail(ErrorCode::invalid_argument, "unknown generator \"" + g + "\"");
    req.n = params->n;
    req.parameter = rational_arg(params->parameter, "parameter");
    if (req.generator == PingPongGenerator::lower) req.b = bvector(params->b_spec, req.n);
    req.m_min = params->m_min;
    req.m_max = params->m_max;
    req.samples = params->samples;
    req.seed = params->seed;
    req.width = width_arg(params->width);
    const auto report = pingpong_spotcheck(req);
    if (violations) *violations = report.violations.size();
    Json j{{"tool", kToolName}, {"version", kToolVersion}, {"generator", g},
           {"n", req.n}, {"parameter", to_string(req.parameter)}};
    j.update(spotcheck_to_json(report));
    put_json(j, out);
  });
}

liegen_status liegen_thin(size_t n, long q, long s, const char* width, liegen_thin_pair** out) {
  return guarded([&] {
    require(out, "out");
    *out = new liegen_thin_pair{thin_pair(n, q, s, width_arg(width))};
  });
}

liegen_status liegen_thin_lower(long q, long r, const char* width, liegen_thin_pair** out) {
  return guarded([&] {
    require(out, "out");
    *out = new liegen_thin_pair{thin_lower_pair(q, r, width_arg(width))};
  });
}

liegen_status liegen_thin_certified(const liegen_thin_pair* t, int* certified) {
  return guarded([&] {
    require(t, "thin");
    require(certified, "certified");
    *certified = t->thin.certified ? 1 : 0;
  });
}

liegen_status liegen_thin_first(const liegen_thin_pair* t, liegen_matrix** out) {
  return guarded([&] {
    require(t, "thin");
    require(out, "out");
    *out = new liegen_matrix{t->thin.first.matrix};
  });
}

liegen_status liegen_thin_second(const liegen_thin_pair* t, liegen_matrix** out) {
  return guarded([&] {
    require(t, "thin");
    require(out, "out");
    *out = new liegen_matrix{t->thin.second.matrix};
  });
}

liegen_status liegen_thin_to_json(const liegen_thin_pair* t, char** out) {
  return guarded([&] {
    require(t, "thin");
    require(out, "out");
    put_json(thin_to_json(t->thin), out);
  });
}

void liegen_thin_free(liegen_thin_pair* t) { delete t; }

}  // extern "C"
