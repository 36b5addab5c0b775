// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "ladder/ladder.h"

namespace {

enum Exit { kOk = 0, kDomain = 1, kInput = 2, kInternal = 3 };

struct RunConfig {
  std::string input;
  std::string format;
  std::string rho;
  std::string x;
  bool raw = false;
  std::optional<long long> expect_rank;
};

struct Failure {
  int code;
};

int exit_code(lad_status s) {
  switch (s) {
    case LAD_OK: return kOk;
    case LAD_E_DOMAIN: return kDomain;
    case LAD_E_PARSE:
    case LAD_E_ARG: return kInput;
    default: return kInternal;
  }
}

void check(lad_status s) {
  if (s == LAD_OK) return;
  std::cerr << "error: " << lad_last_error() << "\n";
  throw Failure{exit_code(s)};
}

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ostringstream ss;
  if (arg == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << arg << "'\n";
    throw Failure{kInput};
  }
  ss << in.rdbuf();
  return ss.str();
}

struct DatumDeleter {
  void operator()(lad_datum* d) const { lad_datum_free(d); }
};
using DatumPtr = std::unique_ptr<lad_datum, DatumDeleter>;

/// Takes ownership of a string returned by the library and prints it.
void emit(char* s) {
  std::fputs(s, stdout);
  lad_string_free(s);
}

std::string take(char* s) {
  std::string out(s);
  lad_string_free(s);
  return out;
}

lad_format parse_format(const std::string& f) {
  if (f == "json") return LAD_FMT_JSON;
  if (f == "text") return LAD_FMT_TEXT;
  if (f == "dot") return LAD_FMT_DOT;
  if (f == "ascii") return LAD_FMT_ASCII;
  if (f == "table") return LAD_FMT_TABLE;
  std::cerr << "error: unknown format '" << f << "'\n";
  throw Failure{kInput};
}

DatumPtr load(const RunConfig& cfg) {
  lad_datum* raw = nullptr;
  check(lad_datum_from_json(read_input(cfg.input).c_str(), &raw));
  DatumPtr d(raw);
  int64_t rank = 0;
  check(lad_validate(d.get(), &rank));
  if (cfg.expect_rank && *cfg.expect_rank != rank) {
    std::cerr << "error: [rank-mismatch] datum has rank " << rank << ", expected " << *cfg.expect_rank << "\n";
    throw Failure{kDomain};
  }
  return d;
}

std::string default_rho(const RunConfig& cfg, const lad_datum* d) {
  if (!cfg.rho.empty()) return cfg.rho;
  if (lad_datum_block_count(d) == 1) return lad_datum_block_id(d, 0);
  return "1";
}

void print_datum(const lad_datum* d, lad_format fmt) {
  char* s = nullptr;
  if (fmt == LAD_FMT_JSON) {
    check(lad_datum_to_json(d, &s));
  } else {
    check(lad_datum_render(d, LAD_FMT_TEXT, &s));
  }
  emit(s);
}

int run_validate(const RunConfig& cfg) {
  auto d = load(cfg);
  int64_t rank = 0;
  check(lad_validate(d.get(), &rank));
  if (parse_format(cfg.format) == LAD_FMT_JSON) {
    std::cout << "{\n  \"valid\": true,\n  \"rank\": " << rank << "\n}\n";
  } else {
    std::cout << "valid: rank " << rank << "\n";
  }
  return kOk;
}

int run_graph(const RunConfig& cfg) {
  auto d = load(cfg);
  char* s = nullptr;
  check(lad_graph_render(d.get(), cfg.rho.empty() ? nullptr : cfg.rho.c_str(), parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

int run_derivative(const RunConfig& cfg) {
  auto d = load(cfg);
  lad_datum* raw = nullptr;
  check(lad_derivative(d.get(), default_rho(cfg, d.get()).c_str(), cfg.x.c_str(), &raw));
  const lad_format fmt = parse_format(cfg.format);
  if (!raw) {
    std::cout << (fmt == LAD_FMT_JSON ? "{\n  \"zero\": true\n}\n" : "0\n");
    return kOk;
  }
  DatumPtr out(raw);
  print_datum(out.get(), fmt);
  return kOk;
}

int run_supp(const RunConfig& cfg) {
  auto d = load(cfg);
  char* s = nullptr;
  check(lad_support(d.get(), parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

int run_jacquet(const RunConfig& cfg) {
  auto d = load(cfg);
  char* s = nullptr;
  check(lad_jacquet(d.get(), default_rho(cfg, d.get()).c_str(), cfg.raw, parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

int run_aubert(const RunConfig& cfg) {
  auto d = load(cfg);
  lad_datum* raw = nullptr;
  check(lad_aubert(d.get(), &raw));
  DatumPtr dual(raw);
  const lad_format fmt = parse_format(cfg.format);
  char* module = nullptr;
  check(lad_standard_module(dual.get(), fmt == LAD_FMT_JSON ? LAD_FMT_JSON : LAD_FMT_TEXT, &module));
  if (fmt == LAD_FMT_JSON) {
    char* datum = nullptr;
    check(lad_datum_to_json(dual.get(), &datum));
    nlohmann::ordered_json out;
    out["dual"] = nlohmann::ordered_json::parse(take(datum));
    out["langlands"] = nlohmann::ordered_json::parse(take(module));
    std::cout << out.dump(2) << "\n";
  } else {
    char* datum = nullptr;
    check(lad_datum_render(dual.get(), LAD_FMT_TEXT, &datum));
    std::cout << "dual: " << take(datum) << "langlands: " << take(module);
  }
  return kOk;
}

int run_det_formula(const RunConfig& cfg) {
  auto d = load(cfg);
  char* s = nullptr;
  check(lad_det_formula(d.get(), cfg.raw ? 0 : 1, parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

int run_gl_det_formula(const RunConfig& cfg) {
  char* s = nullptr;
  check(lad_gl_det_formula(read_input(cfg.input).c_str(), parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

int run_langlands(const RunConfig& cfg) {
  auto d = load(cfg);
  char* s = nullptr;
  check(lad_standard_module(d.get(), parse_format(cfg.format), &s));
  emit(s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ladder representations of odd orthogonal and symplectic groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  long long expect_rank = 0;
  int (*handler)(const RunConfig&) = nullptr;
  std::deque<std::string> formats_by_command;

  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&), const char* default_format,
                 std::initializer_list<const char*> formats) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "JSON file, '-' for stdin, or inline JSON")->required();
    std::vector<std::string> allowed(formats.begin(), formats.end());
    std::string& format = formats_by_command.emplace_back(default_format);
    sub->add_option("--format", format, "output format")->capture_default_str()->check(CLI::IsMember(allowed));
    sub->callback([&handler, &cfg, &format, fn] {
      handler = fn;
      cfg.format = format;
    });
    return sub;
  };

  auto* validate = add("validate", "check a ladder datum and print its rank", run_validate, "text", {"text", "json"});
  validate->add_option("--expect-rank", expect_rank, "fail unless the rank equals this value");
  auto* graph = add("graph", "draw the ladder graph", run_graph, "ascii", {"ascii", "dot", "json"});
  graph->add_option("--rho", cfg.rho, "label id (default: every block)");
  auto* der = add("derivative", "the derivative at rho|.|^x", run_derivative, "json", {"json", "text"});
  der->add_option("--rho", cfg.rho, "label id");
  der->add_option("--x", cfg.x, "exponent, e.g. 3/2")->required();
  add("supp", "cuspidal support", run_supp, "json", {"json", "text"});
  auto* jac = add("jacquet", "Jacquet module along one label", run_jacquet, "json", {"json", "text"});
  jac->add_option("--rho", cfg.rho, "label id");
  jac->add_flag("--raw", cfg.raw, "one term per tuple, no merging");
  add("aubert", "Aubert dual datum and its Langlands data", run_aubert, "json", {"json", "text"});
  auto* det = add("det-formula", "determinantal formula", run_det_formula, "json", {"json", "text", "table"});
  det->add_flag("--raw", cfg.raw, "skip the support projection");
  add("gl-det-formula", "determinantal formula of a GL ladder", run_gl_det_formula, "json", {"json", "text"});
  add("langlands", "Langlands data of the standard module", run_langlands, "text", {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }
  if (validate->count("--expect-rank")) cfg.expect_rank = expect_rank;

  try {
    return handler(cfg);
  } catch (const Failure& f) {
    return f.code;
  }
}
