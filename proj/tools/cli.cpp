#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "affkm/description.hpp"
#include "affkm/mad.hpp"
#include "affkm/spectral.hpp"
#include "affkm/text.hpp"

namespace affkm {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string algebra;
  std::string command;
  std::string suite;
  std::vector<int> window;
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  std::string beta = "1";
  std::string format = "json";
  std::string x;
  std::string word;
  std::string spec;
  std::size_t words = 20;
};

struct Range {
  int lo;
  int hi;
};

Range window_or(const Config& cfg, int lo, int hi) {
  if (cfg.window.size() == 2) return {cfg.window[0], cfg.window[1]};
  return {lo, hi};
}

std::size_t samples_or(const Config& cfg, std::size_t fallback) { return cfg.samples > 0 ? cfg.samples : fallback; }

AffineElt element_or_regular(const Config& cfg, const LoopAlgebra& alg) {
  if (cfg.x.empty()) return regular_element(alg);
  AffineElt x = parse_affine(alg.g_ptr(), alg.order(), cfg.x);
  if (!alg.is_in_twisted(x.loop)) throw std::invalid_argument("--x is not in the twisted algebra");
  return x;
}

SubalgebraSpec read_spec(const std::string& path, const LoopAlgebra& alg) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open spec file '" + path + "'");
  SubalgebraSpec s;
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    s.generators.push_back(parse_affine(alg.g_ptr(), alg.order(), line, n));
  }
  return s;
}

Json header(const Config& cfg, const LoopAlgebra& alg) {
  Json j;
  j["schema"] = 1;
  j["command"] = cfg.command;
  if (!cfg.suite.empty()) j["suite"] = cfg.suite;
  j["algebra"] = alg.g().label();
  j["m"] = alg.order();
  j["seed"] = cfg.seed;
  return j;
}

std::string dims_line(const LoopAlgebra& alg) {
  std::ostringstream s;
  s << "g: " << alg.g().dim();
  if (alg.order() > 1) {
    for (int i = 0; i < alg.order(); ++i) s << ", g_" << i << ": " << alg.eigenbasis(i).size();
  }
  s << ", h0: " << alg.fixed_cartan().h0.size();
  return s.str();
}

int emit_reports(const Config& cfg, const LoopAlgebra& alg, const std::vector<Report>& reports, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (cfg.format == "json") {
    Json j = header(cfg, alg);
    j["passed"] = ok;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = arr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checked << " checks, " << r.failures.size()
          << " failures)\n";
      for (std::size_t i = 0; i < r.failures.size() && i < kMaxListedFailures; ++i) {
        const auto& f = r.failures[i];
        std::string in;
        for (const auto& s : f.inputs) in += (in.empty() ? "" : ", ") + s;
        out << "  [" << in << "] got " << f.lhs << ", expected " << f.rhs << "\n";
      }
    }
    out << (ok ? "all passed" : "FAILED") << "\n";
  }
  return ok ? kPass : kVerifyFailed;
}

std::vector<Report> run_suite(const Config& cfg, const std::string& suite, const LoopAlgebra& alg) {
  const int m = alg.order();
  const CycScalar beta = parse_scalar(m, cfg.beta);
  std::vector<Report> out;
  if (suite == "jacobi") {
    auto w = window_or(cfg, -2 * m, 2 * m);
    out.push_back(verify_jacobi_affine(alg, w.lo, w.hi));
  } else if (suite == "form") {
    auto w = window_or(cfg, -4, 4);
    out.push_back(verify_form_invariance(alg, samples_or(cfg, 500), w.lo, w.hi, beta, cfg.seed));
    out.push_back(verify_gram(alg, std::max(std::abs(w.lo), std::abs(w.hi)), beta));
    out.push_back(core_and_derived(alg, -m, m));
  } else if (suite == "lifts") {
    auto w = window_or(cfg, -2 * m, 2 * m);
    out.push_back(verify_lifts(alg, w.lo, w.hi, samples_or(cfg, 200), cfg.seed));
    out.push_back(verify_ring_diagram_commute(alg, w.lo, w.hi, samples_or(cfg, 200), cfg.seed));
    out.push_back(verify_centroid(alg, w.lo, w.hi, samples_or(cfg, 200), cfg.seed));
  } else if (suite == "exactseq") {
    auto w = window_or(cfg, -2 * m, 2 * m);
    out.push_back(verify_exact_sequence(alg, w.lo, w.hi, samples_or(cfg, 200), cfg.seed));
  } else if (suite == "spectral") {
    auto w = window_or(cfg, -3 * m, 3 * m);
    out.push_back(spectral_suite(alg, element_or_regular(cfg, alg), Window::make(alg, w.lo, w.hi), beta));
  } else if (suite == "mad") {
    auto w = window_or(cfg, -3 * m, 3 * m);
    Window win = Window::make(alg, w.lo, w.hi, true, true);
    out.push_back(mad_suite(alg, win, cfg.words, cfg.seed));
    if (!cfg.spec.empty() || !cfg.word.empty()) {
      SubalgebraSpec spec = cfg.spec.empty() ? standard_mad(alg) : read_spec(cfg.spec, alg);
      AutoWord word = cfg.word.empty() ? AutoWord{} : parse_word(alg, cfg.word);
      if (word.level != Level::Hat) throw std::invalid_argument("conjugacy needs a hat-level word");
      Report r = conjugacy_verify(alg, word, spec);
      r.extra["word"] = to_text(word);
      out.push_back(r);
    }
  } else if (suite == "all") {
    for (const char* s : {"jacobi", "form", "lifts", "exactseq", "spectral", "mad"}) {
      auto part = run_suite(cfg, s, alg);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return out;
}

int cmd_construct(const Config& cfg, const LoopAlgebra& alg, std::ostream& out) {
  const int m = alg.order();
  auto w = window_or(cfg, -3 * m, 3 * m);
  const std::size_t basis = alg.twisted_dim(w.lo, w.hi);
  if (cfg.format == "json") {
    Json j = header(cfg, alg);
    j["g"] = alg.g().dim();
    Json eig = Json::array();
    for (int i = 0; i < m; ++i) eig.push_back(alg.eigenbasis(i).size());
    j["g_i"] = eig;
    j["h0"] = alg.fixed_cartan().h0.size();
    j["window"] = {w.lo, w.hi};
    j["window_basis"] = basis;
    out << j.dump(2) << "\n";
  } else {
    out << dims_line(alg) << "\n";
    out << "window [" << w.lo << ", " << w.hi << "]: " << basis << " loop basis elements, " << basis + 2
        << " with c and d\n";
  }
  return kPass;
}

int cmd_spectrum(const Config& cfg, const LoopAlgebra& alg, std::ostream& out) {
  const int m = alg.order();
  auto w = window_or(cfg, -3 * m, 3 * m);
  AffineElt x = element_or_regular(cfg, alg);
  WeightDecomp d = weight_decompose(alg, x, Window::make(alg, w.lo, w.hi));
  if (cfg.format == "json") {
    Json j = header(cfg, alg);
    j["decomposition"] = to_json(d);
    out << j.dump(2) << "\n";
  } else {
    out << "x = " << to_text(x) << ", window [" << w.lo << ", " << w.hi << "]\n";
    for (const auto& s : d.weights) {
      out << "  w = " << s.w.str() << "  dim " << s.basis.size() << "  series " << s.series
          << (s.interior ? "" : "  (edge)") << "\n";
    }
    out << "series: " << d.series_count << ", diagonalizable: " << (d.diagonalizable ? "yes" : "no") << "\n";
  }
  return d.diagonalizable ? kPass : kVerifyFailed;
}

int cmd_conjugate(const Config& cfg, const LoopAlgebra& alg, std::ostream& out) {
  if (cfg.word.empty()) throw std::invalid_argument("conjugate needs --word");
  AutoWord word = parse_word(alg, cfg.word);
  std::vector<AffineElt> inputs;
  if (!cfg.spec.empty()) {
    inputs = read_spec(cfg.spec, alg).generators;
  } else {
    inputs.push_back(element_or_regular(cfg, alg));
  }
  if (word.level == Level::Loop) {
    for (const auto& x : inputs) {
      if (!x.c.is_zero() || !x.d.is_zero()) throw std::invalid_argument("loop-level words act on loop elements only");
    }
  }
  Json images = Json::array();
  for (const auto& x : inputs) images.push_back({{"input", to_text(x)}, {"image", to_text(apply_word(word, x))}});
  if (cfg.format == "json") {
    Json j = header(cfg, alg);
    j["word"] = to_text(word);
    j["images"] = images;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& im : images) out << im["input"].get<std::string>() << "  ->  " << im["image"].get<std::string>() << "\n";
  }
  return kPass;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{
      "Exact computations in twisted affine Kac-Moody algebras.\n"
      "Randomized checks draw integer coefficients in [-5, 5] and degrees inside the window\n"
      "from a seeded mt19937_64; the same seed gives byte-identical output.",
      "affkm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--algebra", cfg.algebra, "Algebra file (or a bare type such as A2)")->required();
  app.add_option("--window", cfg.window, "Degree window LO HI in units of 1/m")->expected(2);
  app.add_option("--samples", cfg.samples, "Number of random samples");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--beta", cfg.beta, "Value of (c, d) in the invariant form");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--x", cfg.x, "Element x' + b d, e.g. \"1/3*H_1*t^0 + d\"");
  app.add_option("--word", cfg.word, "Automorphism word, e.g. \"rootexp(a1, 2*t^1) . cochar(1) @ hat\"");
  app.add_option("--spec", cfg.spec, "File with one subalgebra generator per line");
  app.add_option("--words", cfg.words, "Random hat words in the mad suite");

  auto* construct = app.add_subcommand("construct", "Print dimensions of g, its eigenspaces and h0");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "jacobi, form, lifts, exactseq, spectral, mad or all")
      ->required()
      ->check(CLI::IsMember({"jacobi", "form", "lifts", "exactseq", "spectral", "mad", "all"}));
  auto* spectrum = app.add_subcommand("spectrum", "Weight decomposition of ad(x) on a window");
  auto* conjugate = app.add_subcommand("conjugate", "Apply a word to --x or to the generators in --spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (construct->parsed()) cfg.command = "construct";
  if (verify->parsed()) cfg.command = "verify";
  if (spectrum->parsed()) cfg.command = "spectrum";
  if (conjugate->parsed()) cfg.command = "conjugate";

  try {
    LoopAlgebraPtr alg = load_algebra(cfg.algebra);
    if (cfg.command == "construct") return cmd_construct(cfg, *alg, out);
    if (cfg.command == "verify") return emit_reports(cfg, *alg, run_suite(cfg, cfg.suite, *alg), out);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, *alg, out);
    return cmd_conjugate(cfg, *alg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace affkm
