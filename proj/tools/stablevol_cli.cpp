// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Command-line front end over the C API. Results go to stdout or -o, logs
// and errors to stderr; the exit code is the library status code.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stablevol/stablevol.h"

namespace {

struct Options {
  std::string input;
  std::string output;
  std::vector<int> degrees;
  int degree = 1;
  std::optional<std::size_t> pair_index;
  std::optional<double> birth, death;
  double tolerance = 0;
  double epsilon = 0;
  std::optional<double> rsc_parameter;
  std::string grid = "0:0.4:0.01";
  std::string method = "optimal";
  std::optional<std::uint64_t> seed;
  double noise = 0.05;
  std::size_t trials = 100;
  bool squared = false;
  bool euclidean = false;
  bool tsv = false;
  unsigned threads = 0;
  std::string fixture;
};

class Failure {
 public:
  explicit Failure(int code, std::string msg = {}) : code(code), message(std::move(msg)) {}
  int code;
  std::string message;
};

void check(sv_status s) {
  if (s != SV_OK) throw Failure(static_cast<int>(s), sv_last_error());
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(SV_PARSE, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

// Owns a filtration handle for the duration of one command.
class Filtration {
 public:
  Filtration(const std::string& text, bool squared) {
    if (looks_like_json(text)) {
      if (squared) throw Failure(SV_PARSE, "--squared applies to point cloud input only");
      check(sv_filtration_from_complex_json(text.c_str(), &f_));
    } else {
      check(sv_filtration_from_points(text.c_str(), squared ? 1 : 0, &f_));
    }
  }
  ~Filtration() { sv_filtration_free(f_); }
  Filtration(const Filtration&) = delete;
  Filtration& operator=(const Filtration&) = delete;
  const sv_filtration* get() const { return f_; }

 private:
  sv_filtration* f_ = nullptr;
};

std::string take(char* s) {
  std::string out(s);
  sv_string_free(s);
  return out;
}

sv_pair_selector selector(const Options& o) {
  sv_pair_selector sel{};
  const bool window = o.birth || o.death;
  if (o.pair_index.has_value() == window)
    throw Failure(SV_PARSE, "give exactly one pair selector: --pair-index or --birth/--death");
  if (o.pair_index) {
    sel.by_index = 1;
    sel.index = *o.pair_index;
  } else {
    if (!o.birth || !o.death) throw Failure(SV_PARSE, "--birth and --death must be given together");
    sel.birth = *o.birth;
    sel.death = *o.death;
  }
  sel.tolerance = o.tolerance;
  return sel;
}

sv_method parse_method(const std::string& m) {
  if (m == "optimal") return SV_METHOD_OPTIMAL;
  if (m == "stable-tree") return SV_METHOD_STABLE_TREE;
  if (m == "stable-lp") return SV_METHOD_STABLE_LP;
  if (m == "sub") return SV_METHOD_SUB;
  throw Failure(SV_PARSE, "unknown method '" + m + "'");
}

void parse_grid(const std::string& g, double& a, double& b, double& step) {
  char c1 = 0, c2 = 0;
  std::istringstream in(g);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || in.peek() != EOF)
    throw Failure(SV_PARSE, "--epsilon-grid expects a:b:step");
}

std::string cmd_pd(const Options& o) {
  Filtration f(read_input(o.input), o.squared);
  std::vector<int> degrees = o.degrees.empty() ? std::vector<int>{1} : o.degrees;
  std::string out;
  if (o.tsv) {
    for (int d : degrees) {
      char* s = nullptr;
      check(sv_diagram_tsv(f.get(), d, &s));
      out += take(s);
    }
    return out;
  }
  if (degrees.size() == 1) {
    char* s = nullptr;
    check(sv_diagram_json(f.get(), degrees[0], &s));
    return take(s);
  }
  out = "[\n";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    char* s = nullptr;
    check(sv_diagram_json(f.get(), degrees[i], &s));
    std::string one = take(s);
    one.pop_back();  // trailing newline
    out += one + (i + 1 < degrees.size() ? ",\n" : "\n");
  }
  return out + "]\n";
}

std::string cmd_vol(const Options& o) {
  sv_method m = parse_method(o.method);
  sv_pair_selector sel = selector(o);
  Filtration f(read_input(o.input), o.squared);
  char* s = nullptr;
  check(sv_volume_json(f.get(), o.degree, &sel, m, o.epsilon, &s));
  return take(s);
}

std::string cmd_sweep(const Options& o) {
  double a, b, step;
  parse_grid(o.grid, a, b, step);
  sv_pair_selector sel = selector(o);
  Filtration f(read_input(o.input), o.squared);
  char* s = nullptr;
  check(sv_sweep_tsv(f.get(), o.degree, &sel, a, b, step, &s));
  return take(s);
}

std::string cmd_stat(const Options& o) {
  if (!o.seed) throw Failure(SV_PARSE, "stat needs --seed");
  sv_pair_selector sel = selector(o);
  std::string text = read_input(o.input);
  char* s = nullptr;
  check(sv_statistical_json(text.c_str(), o.degree, &sel, o.noise, *o.seed, o.trials, &s));
  return take(s);
}

std::string cmd_rsc(const Options& o) {
  sv_pair_selector sel = selector(o);
  Filtration f(read_input(o.input), o.squared);
  char* s = nullptr;
  check(sv_rsc_json(f.get(), &sel, o.rsc_parameter.value_or(-1.0), o.euclidean ? 1 : 0, &s));
  return take(s);
}

std::string cmd_gen(const Options& o) {
  char* s = nullptr;
  check(sv_generate_fixture(o.fixture.c_str(), o.seed.value_or(0), &s));
  return take(s);
}

std::string cmd_complex(const Options& o) {
  Filtration f(read_input(o.input), o.squared);
  char* s = nullptr;
  check(sv_complex_json(f.get(), &s));
  return take(s);
}

void add_selector(CLI::App* c, Options& o) {
  c->add_option("--degree", o.degree, "Homology degree")->capture_default_str();
  c->add_option("--pair-index", o.pair_index, "Position of the pair in the degree's diagram");
  c->add_option("--birth", o.birth, "Birth of the pair");
  c->add_option("--death", o.death, "Death of the pair");
  c->add_option("--tolerance", o.tolerance, "Half width of the birth/death window (default 1e-3)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable volumes and persistence diagrams of alpha filtrations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (default: STABLEVOL_THREADS or core count)");
  app.add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* pd = app.add_subcommand("pd", "Persistence diagrams");
  pd->add_option("input", o.input, "Point cloud text or complex JSON ('-' for stdin)")->required();
  pd->add_option("--degree", o.degrees, "Degrees to report (repeatable, default 1)");
  pd->add_flag("--squared", o.squared, "Report squared alpha values");
  pd->add_flag("--tsv", o.tsv, "Emit birth/death TSV instead of JSON");

  auto* vol = app.add_subcommand("vol", "Optimal, stable or sub-volume of one pair");
  vol->add_option("input", o.input)->required();
  add_selector(vol, o);
  vol->add_option("--method", o.method, "optimal | stable-tree | stable-lp | sub")->capture_default_str();
  vol->add_option("--epsilon", o.epsilon, "Noise bandwidth")->capture_default_str();
  vol->add_flag("--squared", o.squared);

  auto* sweep = app.add_subcommand("sweep", "Stable volume size over a bandwidth grid");
  sweep->add_option("input", o.input)->required();
  add_selector(sweep, o);
  sweep->add_option("--epsilon-grid", o.grid, "a:b:step")->capture_default_str();
  sweep->add_flag("--squared", o.squared);

  auto* stat = app.add_subcommand("stat", "Statistical resampling frequencies");
  stat->add_option("input", o.input)->required();
  add_selector(stat, o);
  stat->add_option("--seed", o.seed, "Random seed (required)");
  stat->add_option("--noise", o.noise, "Half width of the uniform noise")->capture_default_str();
  stat->add_option("--trials", o.trials, "Number of trials")->capture_default_str();

  auto* rsc = app.add_subcommand("rsc", "Reconstructed shortest cycle of a degree-1 pair");
  rsc->add_option("input", o.input)->required();
  add_selector(rsc, o);
  rsc->add_option("--epsilon", o.rsc_parameter, "Prefix up to level birth+epsilon (default: just before death)");
  rsc->add_flag("--euclidean", o.euclidean, "Use edge lengths instead of hop counts");
  rsc->add_flag("--squared", o.squared);

  auto* cx = app.add_subcommand("complex", "Alpha complex with levels as JSON");
  cx->add_option("input", o.input)->required();
  cx->add_flag("--squared", o.squared);

  auto* gen = app.add_subcommand("gen", "Generate a fixture point cloud");
  gen->add_option("fixture", o.fixture,
                  "fig1-five-points | lattice-3x3x3 | lattice-2d-defects | hexagon | annulus")
      ->required();
  gen->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return SV_PARSE;
  }

  try {
    sv_set_threads(o.threads);
    std::string result;
    if (*pd) result = cmd_pd(o);
    else if (*vol) result = cmd_vol(o);
    else if (*sweep) result = cmd_sweep(o);
    else if (*stat) result = cmd_stat(o);
    else if (*rsc) result = cmd_rsc(o);
    else if (*gen) result = cmd_gen(o);
    else if (*cx) result = cmd_complex(o);
    if (o.output.empty()) {
      std::cout << result;
    } else {
      std::ofstream out(o.output, std::ios::binary);
      if (!out || !(out << result)) throw Failure(SV_ERROR, "cannot write " + o.output);
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "stablevol: " << f.message << "\n";
    return f.code;
  }
}
