// liegen: construct, certify, emit and scan nilpotent generating pairs.
// JSON on stdout, diagnostics on stderr. Exit codes: 0 ok / certified /
// clean, 1 unrecognized / insufficient / collision, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liegen/liegen.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

struct Failure {
  liegen_status status;
};

void check(liegen_status st) {
  if (st != LIEGEN_OK) throw Failure{st};
}

void print_owned(char* s) {
  std::cout << s << '\n';
  liegen_string_free(s);
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

std::optional<std::string> env_width;

const char* width_or_env(const std::optional<std::string>& width) {
  if (width) return width->c_str();
  return env_width ? env_width->c_str() : nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "liegen: cannot read " << path << '\n';
    throw Failure{LIEGEN_ERR_INVALID_ARGUMENT};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Matrix {
  liegen_matrix* m = nullptr;
  Matrix() = default;
  Matrix(const Matrix&) = delete;
  Matrix& operator=(const Matrix&) = delete;
  ~Matrix() { liegen_matrix_free(m); }
};

int closure_exit(liegen_closure* c) {
  int recognized = 0;
  char* json = nullptr;
  liegen_status st = liegen_closure_recognized(c, &recognized);
  if (st == LIEGEN_OK) st = liegen_closure_to_json(c, &json);
  liegen_closure_free(c);
  check(st);
  print_owned(json);
  return recognized ? kOk : kNegative;
}

struct Options {
  std::string family;
  std::size_t n = 0;
  std::optional<std::string> b, width, t, s, r, matrix_file;
  std::vector<std::string> files;
  long q = 0;
  long s_int = 0;
  long r_int = 0;
  std::size_t max_syll = 4;
  long max_exp = 2;
  unsigned long long seed = 1;
};

int cmd_gen(const Options& o) {
  char* json = nullptr;
  check(liegen_generator_pair_json(o.family.c_str(), o.n, opt(o.b), &json));
  print_owned(json);
  return kOk;
}

int cmd_classify(const Options& o) {
  liegen_closure* c = nullptr;
  check(liegen_closure_of_family(o.family.c_str(), o.n, opt(o.b), &c));
  return closure_exit(c);
}

int cmd_closure(const Options& o) {
  std::vector<Matrix> mats(o.files.size());
  std::vector<const liegen_matrix*> seed;
  for (std::size_t k = 0; k < o.files.size(); ++k) {
    const auto text = read_file(o.files[k]);
    if (liegen_matrix_from_json(text.c_str(), &mats[k].m) != LIEGEN_OK) {
      std::cerr << "liegen: " << o.files[k] << ": " << liegen_last_error() << '\n';
      throw Failure{LIEGEN_ERR_PARSE};
    }
    seed.push_back(mats[k].m);
  }
  liegen_closure* c = nullptr;
  check(liegen_closure_compute(seed.data(), seed.size(), &c));
  return closure_exit(c);
}

int cmd_bounds(const Options& o) {
  char* json = nullptr;
  check(liegen_bounds_json(o.family.c_str(), o.n, opt(o.b), width_or_env(o.width), &json));
  print_owned(json);
  return kOk;
}

int cmd_exp(const Options& o) {
  const int given = (o.t ? 1 : 0) + (o.s ? 1 : 0) + (o.r ? 1 : 0);
  if (given != 1) {
    std::cerr << "liegen: exp needs exactly one of --t, --s, --r\n";
    return kBadInput;
  }
  Matrix source, out;
  const char* kind = o.t ? "upper" : o.s ? "corner" : "lower";
  const char* param = o.t ? o.t->c_str() : o.s ? o.s->c_str() : o.r->c_str();
  if (o.matrix_file) {
    if (!o.t) {
      std::cerr << "liegen: exp --matrix takes its parameter from --t\n";
      return kBadInput;
    }
    const auto text = read_file(*o.matrix_file);
    check(liegen_matrix_from_json(text.c_str(), &source.m));
    kind = "nilpotent";
  }
  check(liegen_exp(kind, o.n, param, opt(o.b), source.m, &out.m));
  char* json = nullptr;
  check(liegen_matrix_to_json(out.m, &json));
  print_owned(json);
  return kOk;
}

int cmd_certify(const Options& o) {
  liegen_certify_params p{};
  p.family = o.family.c_str();
  p.n = o.n;
  p.t = opt(o.t);
  p.s = opt(o.s);
  p.r = opt(o.r);
  p.b_spec = opt(o.b);
  p.width = width_or_env(o.width);
  liegen_certificate* cert = nullptr;
  check(liegen_certify(&p, &cert));
  liegen_conclusion conclusion = LIEGEN_INSUFFICIENT;
  char* json = nullptr;
  liegen_status st = liegen_certificate_conclusion(cert, &conclusion);
  if (st == LIEGEN_OK) st = liegen_certificate_to_json(cert, &json);
  liegen_certificate_free(cert);
  check(st);
  print_owned(json);
  return conclusion == LIEGEN_FREE_DENSE_CERTIFIED ? kOk : kNegative;
}

int cmd_scan(const Options& o) {
  liegen_scan_params p{};
  p.n = o.n;
  p.t = opt(o.t);
  p.s = opt(o.s);
  p.r = opt(o.r);
  p.b_spec = opt(o.b);
  p.max_syllables = o.max_syll;
  p.max_exp = o.max_exp;
  p.seed = o.seed;
  liegen_scan* scan = nullptr;
  check(liegen_scan_run(&p, &scan));
  std::size_t collisions = 0;
  char* json = nullptr;
  liegen_status st = liegen_scan_collision_count(scan, &collisions);
  if (st == LIEGEN_OK) st = liegen_scan_to_json(scan, &json);
  liegen_scan_free(scan);
  check(st);
  print_owned(json);
  if (collisions) std::cerr << "liegen: " << collisions << " words evaluate to the identity\n";
  return collisions ? kNegative : kOk;
}

int cmd_thin(const Options& o) {
  liegen_thin_pair* thin = nullptr;
  const std::string family = o.family.empty() ? "corner" : o.family;
  if (family == "corner")
    check(liegen_thin(o.n, o.q, o.s_int, width_or_env(o.width), &thin));
  else if (family == "lower" || family == "lower_bidiagonal")
    check(liegen_thin_lower(o.q, o.r_int, width_or_env(o.width), &thin));
  else {
    std::cerr << "liegen: thin supports --family corner or lower\n";
    return kBadInput;
  }
  int certified = 0;
  char* json = nullptr;
  liegen_status st = liegen_thin_certified(thin, &certified);
  if (st == LIEGEN_OK) st = liegen_thin_to_json(thin, &json);
  liegen_thin_free(thin);
  check(st);
  print_owned(json);
  if (!certified) std::cerr << "liegen: pair is not certified thin, see \"warnings\"\n";
  return certified ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent generating pairs, closure, ping-pong bounds and thin subgroups", "liegen"};
  app.set_version_flag("--version", std::string(liegen_version()));
  app.require_subcommand(1);

  Options o;
  auto family_opt = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--family", o.family, "corner | double_corner | lower | g2");
    if (required) f->required();
  };
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", o.n, "matrix size"); };
  auto b_opt = [&](CLI::App* sub) {
    sub->add_option("--b", o.b, "b-vector: doubling | doubling-rank | comma list");
  };
  auto width_opt = [&](CLI::App* sub) {
    sub->add_option("--width", o.width, "root isolation width (default $LIEGEN_DEFAULT_WIDTH or 2^-40)");
  };

  auto* gen = app.add_subcommand("gen", "print a generator pair");
  family_opt(gen, true);
  n_opt(gen);
  b_opt(gen);

  auto* closure = app.add_subcommand("closure", "closure of matrices read from JSON files");
  closure->add_option("files", o.files, "matrix documents")->required()->check(CLI::ExistingFile);

  auto* classify = app.add_subcommand("classify", "closure and type of a family's pair");
  family_opt(classify, true);
  n_opt(classify);
  b_opt(classify);

  auto* bounds = app.add_subcommand("bounds", "ping-pong thresholds");
  family_opt(bounds, true);
  n_opt(bounds);
  b_opt(bounds);
  width_opt(bounds);

  auto* exp = app.add_subcommand("exp", "a(t), b(s), c(r) or exp(t M)");
  n_opt(exp);
  exp->add_option("--t", o.t, "a(t), or the parameter for --matrix");
  exp->add_option("--s", o.s, "b(s)");
  exp->add_option("--r", o.r, "c(r), needs --b");
  b_opt(exp);
  exp->add_option("--matrix", o.matrix_file, "nilpotent matrix document")->check(CLI::ExistingFile);

  auto* certify = app.add_subcommand("certify", "free dense certificate");
  family_opt(certify, true);
  n_opt(certify);
  certify->add_option("--t", o.t)->required();
  certify->add_option("--s", o.s);
  certify->add_option("--r", o.r);
  b_opt(certify);
  width_opt(certify);

  auto* scan = app.add_subcommand("scan", "search reduced words for identity collisions");
  n_opt(scan);
  scan->add_option("--t", o.t)->required();
  scan->add_option("--s", o.s);
  scan->add_option("--r", o.r);
  b_opt(scan);
  scan->add_option("--max-syll", o.max_syll, "maximum syllable count")->check(CLI::PositiveNumber);
  scan->add_option("--max-exp", o.max_exp, "maximum |exponent|")->check(CLI::PositiveNumber);
  scan->add_option("--seed", o.seed, "recorded in the report");

  auto* thin = app.add_subcommand("thin", "integer generators of a thin subgroup");
  family_opt(thin, false);
  n_opt(thin);
  thin->add_option("--q", o.q)->required();
  thin->add_option("--s", o.s_int, "corner parameter");
  thin->add_option("--r", o.r_int, "lower parameter");
  width_opt(thin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (const char* w = std::getenv("LIEGEN_DEFAULT_WIDTH"); w && *w) env_width = w;

  try {
    if (*gen) return cmd_gen(o);
    if (*closure) return cmd_closure(o);
    if (*classify) return cmd_classify(o);
    if (*bounds) return cmd_bounds(o);
    if (*exp) return cmd_exp(o);
    if (*certify) return cmd_certify(o);
    if (*scan) return cmd_scan(o);
    if (*thin) return cmd_thin(o);
  } catch (const Failure& f) {
    const char* msg = liegen_last_error();
    if (*msg) std::cerr << "liegen: " << liegen_status_string(f.status) << ": " << msg << '\n';
    return kBadInput;
  }
  return kBadInput;
}
