#include "szego/cli.hpp"

#include "szego/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace szego::cli {

std::uint64_t default_seed() {
  const char* env = std::getenv("SZEGO_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return 1;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string mode = "polynomial";
  int n = 0;
  int n_max = 8;
  std::string format = "json";
  std::string output;
  std::string factors;
  std::string poly;
  std::string spec;
  std::string scalar;
  std::uint64_t seed = 1;
  int rounds = SearchConfig{}.rounds;
  int resamples = SearchConfig{}.resamples;
  int checks = 100;
  double scale = 0.05;
  int realize_n = 4;
  bool serial = false;
  bool strict = false;
  bool no_certificates = false;
};

const std::vector<std::string> kModes{"polynomial", "exponential", "poly", "pol", "exp"};

void add_mode(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "polynomial or exponential")->check(CLI::IsMember(kModes));
}
void add_output(CLI::App* sub, Options& o) {
  sub->add_option("-o,--output", o.output, "write the result to this file instead of stdout");
}
void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}
void add_seed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "random seed (default: SZEGO_SEED or 1)");
}
void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--rounds", o.rounds, "search rounds")->check(CLI::PositiveNumber);
  sub->add_option("--resamples", o.resamples, "candidates per round")->check(CLI::PositiveNumber);
  sub->add_flag("--serial", o.serial, "disable parallel evaluation");
}

std::string read_input(const std::string& value, std::istream& in) {
  if (value == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (!value.empty() && value.front() == '@') {
    std::ifstream f(value.substr(1));
    if (!f) throw UsageError("cannot read " + value.substr(1));
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  return value;
}

Json parse_json(const std::string& value, std::istream& in, const char* what) {
  try {
    return Json::parse(read_input(value, in));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  c.seed = o.seed;
  c.rounds = o.rounds;
  c.resamples = o.resamples;
  c.parallel = !o.serial;
  return c;
}

int require_n(const Options& o, std::optional<int> from_json, Mode mode) {
  if (o.n > 0) {
    if (from_json && *from_json != o.n) throw UsageError("--n disagrees with \"n\" in the input");
    return o.n;
  }
  if (from_json) return *from_json;
  if (mode == Mode::exponential) return 0;
  throw UsageError("--n is required in polynomial mode");
}

struct Object {
  RatPoly poly;
  int n = 0;
  Mode mode = Mode::polynomial;
};

Object read_object(const Options& o, std::istream& in) {
  ObjectInput obj = object_from_json(parse_json(o.poly, in, "--poly"));
  Mode mode = parse_mode(o.mode);
  if (obj.exp_form) mode = Mode::exponential;
  Object out{obj.poly, require_n(o, obj.n, mode), mode};
  if (mode == Mode::exponential && out.n == 0) out.n = std::max(obj.poly.degree(), 0) + 1;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_selftest(const Options& o, std::string& text) {
  LawConfig cfg;
  cfg.seed = o.seed;
  cfg.scale = o.scale;
  cfg.parallel = !o.serial;
  std::vector<LawResult> results;
  results.push_back(law_identity(cfg));
  for (Mode m : {Mode::polynomial, Mode::exponential}) results.push_back(law_roundtrip(cfg, m));
  for (auto& r : law_formula_suite(cfg)) results.push_back(std::move(r));
  for (Mode m : {Mode::polynomial, Mode::exponential}) {
    results.push_back(law_zero_multiplicity(cfg, m));
    results.push_back(law_necessary(cfg, m));
    results.push_back(law_base_structure(cfg, m));
    results.push_back(law_couple_closed_forms(cfg, m));
    results.push_back(law_couple_schedule(cfg, m));
    if (o.realize_n >= 2) results.push_back(law_realize_all(cfg, o.realize_n, m));
    results.push_back(law_phi(cfg, 6, m));
  }
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    arr.push_back(law_json(r));
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "name,pass,cases,failures\n";
    for (const auto& r : results) os << '"' << r.name << "\"," << r.passed() << ',' << r.cases << ',' << r.failures << '\n';
    text = os.str();
  } else {
    text = dump(Json{{"pass", all}, {"laws", arr}});
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  o.seed = default_seed();
  CLI::App app{"Exact Schur-Szego composition toolkit", "szego"};
  app.require_subcommand(1);

  auto* compose = app.add_subcommand("compose", "factor list -> composed polynomial");
  compose->add_option("--factors", o.factors, "JSON list or factor object; '-' reads stdin, '@file' a file")->required();
  compose->add_option("--n", o.n, "composition degree")->check(CLI::PositiveNumber);
  compose->add_option("--scalar", o.scalar, "overall scalar factor");
  add_mode(compose, o);
  add_output(compose, o);

  std::vector<CLI::App*> object_cmds;
  for (auto [name, what] : {std::pair{"decompose", "polynomial -> composition factors"},
                            std::pair{"signature", "polynomial -> sign signature"},
                            std::pair{"check", "polynomial -> necessary-condition report"}}) {
    auto* sub = app.add_subcommand(name, what);
    sub->add_option("--poly", o.poly, "polynomial JSON; '-' reads stdin, '@file' a file")->required();
    sub->add_option("--n", o.n, "composition degree")->check(CLI::PositiveNumber);
    add_mode(sub, o);
    add_output(sub, o);
    object_cmds.push_back(sub);
  }

  auto* enumerate = app.add_subcommand("enumerate-cases", "n -> admissible case tuples");
  enumerate->add_option("--n", o.n, "degree")->required()->check(CLI::Range(2, 40));
  enumerate->add_flag("--strict", o.strict, "restrict cases with a zero root to k = 1");
  add_format(enumerate, o);
  add_output(enumerate, o);

  auto* realize = app.add_subcommand("realize", "case spec -> verified certificate");
  realize->add_option("--spec", o.spec, "case spec JSON; '-' reads stdin, '@file' a file")->required();
  add_mode(realize, o);
  add_seed(realize, o);
  add_budget(realize, o);
  add_output(realize, o);

  auto* realize_all_cmd = app.add_subcommand("realize-all", "n -> certificates for every case + summary");
  realize_all_cmd->add_option("--n", o.n, "degree")->required()->check(CLI::Range(2, 40));
  realize_all_cmd->add_flag("--no-certificates", o.no_certificates, "summary only");
  add_mode(realize_all_cmd, o);
  add_seed(realize_all_cmd, o);
  add_budget(realize_all_cmd, o);
  add_format(realize_all_cmd, o);
  add_output(realize_all_cmd, o);

  auto* phi = app.add_subcommand("phi", "eigenvalue and affinity report for n = 2..n-max");
  phi->add_option("--n-max", o.n_max, "largest degree")->check(CLI::Range(2, 40));
  phi->add_option("--checks", o.checks, "random affinity checks per row")->check(CLI::NonNegativeNumber);
  add_mode(phi, o);
  add_seed(phi, o);
  add_format(phi, o);
  add_output(phi, o);

  auto* selftest = app.add_subcommand("selftest", "run the law sweeps at reduced scale");
  selftest->add_option("--scale", o.scale, "fraction of the full case counts")->check(CLI::Range(0.0001, 10.0));
  selftest->add_option("--realize-n", o.realize_n, "realize_all up to this n (0 skips)")->check(CLI::Range(0, 8));
  selftest->add_flag("--serial", o.serial, "disable parallel evaluation");
  add_seed(selftest, o);
  add_format(selftest, o);
  add_output(selftest, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (e.get_exit_code() == 0) return 0;
    err << "run with --help for usage\n";
    return 2;
  }

  std::string text;
  int code = 0;
  try {
    if (compose->parsed()) {
      Mode mode = parse_mode(o.mode);
      FactorMultiset f = factors_from_json(parse_json(o.factors, in, "--factors"));
      if (!o.scalar.empty()) f.scalar *= parse_rational(o.scalar);
      if (mode == Mode::polynomial) {
        if (o.n == 0) throw UsageError("--n is required in polynomial mode");
        text = dump(tagged_json(compose_factors(f, o.n, mode), o.n));
      } else {
        text = dump(exp_json(compose_factors(f, 0, mode)));
      }
    } else if (object_cmds[0]->parsed()) {
      Object obj = read_object(o, in);
      FactorMultiset f = obj.mode == Mode::polynomial ? decompose_poly(obj.poly, obj.n) : decompose_exp(obj.poly);
      text = dump(factors_json(f));
    } else if (object_cmds[1]->parsed()) {
      Object obj = read_object(o, in);
      text = dump(signature_json(signature_pair(obj.poly, obj.n, obj.mode)));
    } else if (object_cmds[2]->parsed()) {
      Object obj = read_object(o, in);
      Analysis an = analyze(obj.poly, obj.n, obj.mode);
      Json j = necessary_json(check_necessary(an.sig, an.factors, obj.n, obj.mode));
      j["signature"] = signature_json(an.sig);
      text = dump(j);
    } else if (enumerate->parsed()) {
      auto specs = enumerate_cases(o.n, o.strict);
      if (o.format == "csv") {
        text = spec_csv_header() + "\n";
        for (const auto& c : specs) text += spec_csv_row(c) + "\n";
      } else {
        Json arr = Json::array();
        for (const auto& c : specs) arr.push_back(spec_json(c));
        text = dump(arr);
      }
    } else if (realize->parsed()) {
      CaseSpec spec = spec_from_json(parse_json(o.spec, in, "--spec"));
      try {
        text = dump(certificate_json(realize_case(spec, parse_mode(o.mode), search_config(o))));
      } catch (const RealizationError& e) {
        Json j = error_json(e.unsupported() ? "unsupported" : "search_exhausted", e.what());
        j["error"]["candidates"] = e.trace().candidates;
        if (!e.trace().best_failure.empty()) j["error"]["best_failure"] = e.trace().best_failure;
        err << j.dump() << "\n";
        return 1;
      }
    } else if (realize_all_cmd->parsed()) {
      RealizeSummary sum = realize_all(o.n, parse_mode(o.mode), search_config(o));
      text = o.format == "csv" ? summary_csv(sum) : dump(summary_json(sum, !o.no_certificates));
      if (sum.failed > 0) {
        err << error_json("realization_failed", std::to_string(sum.failed) + " specs not realized").dump() << "\n";
        code = 1;
      }
    } else if (phi->parsed()) {
      auto rows = phi_report(o.n_max, parse_mode(o.mode), o.checks, o.seed);
      if (o.format == "csv") {
        text = phi_csv(rows);
      } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(phi_row_json(r));
        text = dump(arr);
      }
    } else if (selftest->parsed()) {
      code = run_selftest(o, text);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << error_json("domain_error", e.what()).dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << error_json("input_error", e.what()).dump() << "\n";
    return 1;
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "cannot write " << o.output << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace szego::cli
