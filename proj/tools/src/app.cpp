#include "toric/cli/app.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "toric/barcode.hpp"
#include "toric/certificates.hpp"
#include "toric/cli/report.hpp"
#include "toric/cli/spec_parser.hpp"
#include "toric/cremona.hpp"
#include "toric/obstructions.hpp"
#include "toric/random_complex.hpp"
#include "toric/weights.hpp"

#ifndef TORIC_VERSION
#define TORIC_VERSION "0.0.0"
#endif

namespace toric::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_positive(std::string_view key, std::string_view value) {
  const std::string t = trim(value);
  double v = 0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size()) {
    // Also accept exact fractions such as 1/1000.
    auto q = Rational::try_parse(t);
    v = q ? q->to_double() : 0;
  }
  if (!(v > 0) || !std::isfinite(v))
    throw InvalidArgument("config: " + std::string(key) + " must be a positive number");
  return v;
}

}  // namespace

void Config::set(std::string_view key_in, std::string_view value) {
  const std::string key = trim(key_in);
  if (key == "unit_norm") tolerances.unit_norm = parse_positive(key, value);
  else if (key == "agreement") tolerances.agreement = parse_positive(key, value);
  else if (key == "symplectic") tolerances.symplectic = parse_positive(key, value);
  else if (key == "fd_step") tolerances.fd_step = parse_positive(key, value);
  else if (key == "margin") analytic_margin = parse_positive(key, value);
  else if (key == "seed") seed = std::stoull(trim(value));
  else if (key == "workers") workers = static_cast<unsigned>(std::stoul(trim(value)));
  else throw InvalidArgument("config: unknown key '" + key + "'");
}

void Config::merge_pairs(std::string_view text, char separator) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(separator, start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty() || item.front() == '#') continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config: expected key=value, got '" + item + "'");
    set(std::string_view(item).substr(0, eq), std::string_view(item).substr(eq + 1));
  }
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Config c;
  c.merge_pairs(ss.str(), '\n');
  return c;
}

namespace {

struct Outcome {
  Report report;
  int code = kOk;
};

struct Options {
  bool pretty = false, json = false, timing = false, assert_knotted = false;
  std::string config_path;
  std::optional<std::uint64_t> seed;

  std::string quad;
  bool convex = false;

  std::string t, weights, tol = "1/1000";
  bool solve = false;

  std::string domain, factors;
  bool product = false;

  std::size_t cases = 200, max_gens = 15;
  std::string delta, level, level_to;
  int degree = 3;
  bool zero_differential = false;

  std::string w = "0,0", z = "0,0", tolerances;
  std::size_t samples = 10000, symplectic_samples = 1000;
  double c = 1.1;
  std::string csv_path;
};

Json string_list(std::string_view s) {
  Json a = Json::array();
  for (const auto& q : parse_rational_list(s)) a.push_back(to_json(q));
  return a;
}

std::vector<Rational> factors_of(const std::string& s) {
  if (s.empty()) throw InvalidArgument("--factors is required with --product");
  return parse_rational_list(s);
}

torus::Complex complex_of(const std::string& s, const char* flag) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw InvalidArgument(std::string(flag) + " expects re,im");
  auto re = Rational::try_parse(trim(s.substr(0, comma)));
  auto im = Rational::try_parse(trim(s.substr(comma + 1)));
  if (!re || !im) throw InvalidArgument(std::string(flag) + " expects re,im");
  return {re->to_double(), im->to_double()};
}

Report base(const std::string& command, const Config& cfg) {
  Report r;
  r.command = command;
  r.provenance.version = TORIC_VERSION;
  r.provenance.tolerances = to_json(cfg.tolerances);
  r.provenance.tolerances["analytic_margin"] = cfg.analytic_margin;
  return r;
}

Outcome cmd_weights(const Options& o, const Config& cfg) {
  auto v = parse_rational_list(o.quad);
  if (v.size() != 4) throw InvalidArgument("--quad expects a,b,x,y");
  Outcome out{base("weights", cfg)};
  out.report.inputs = {{"quad", string_list(o.quad)}, {"convex", o.convex}};
  auto& r = out.report.result;
  r["kind"] = to_string(classify_quadrilateral(v[0], v[1], v[2], v[3]));
  if (o.convex) {
    auto e = convex_expansion(v[0], v[1], v[2], v[3]);
    r["head"] = to_json(e.head);
    r["weights"] = to_json(e.negatives);
  } else {
    r["weights"] = to_json(concave_weights(v[0], v[1], v[2], v[3]));
  }
  return out;
}

Outcome cmd_pack(const Options& o, const Config& cfg) {
  WeightSeq w(parse_rational_list(o.weights));
  Outcome out{base("pack", cfg)};
  out.report.inputs = {{"weights", to_json(w)}};
  if (o.solve) {
    Rational tol = Rational::parse(o.tol);
    out.report.inputs["tolerance"] = to_json(tol);
    auto br = solve_packing(w, tol);
    out.report.result = {{"bracket", {{"no", to_json(br.no)}, {"yes", to_json(br.yes)}}}};
    return out;
  }
  if (o.t.empty()) throw InvalidArgument("--t is required unless --solve is given");
  Rational t = Rational::parse(o.t);
  out.report.inputs["t"] = to_json(t);
  out.report.result = to_json(packs(w, t));
  return out;
}

Outcome cmd_delta(const Options& o, const Config& cfg) {
  auto region = parse_domain_spec(o.domain);
  Outcome out{base("delta", cfg)};
  out.report.inputs = {{"domain", o.domain}, {"region", region.describe()}};
  out.report.result = to_json(delta_ell_upper(region));
  return out;
}

Outcome cmd_verdict(const Options& o, const Config& cfg) {
  auto region = parse_domain_spec(o.domain);
  Outcome out{base("verdict", cfg)};
  out.report.inputs = {{"domain", o.domain}, {"region", region.describe()}, {"product", o.product}};
  Verdict v;
  if (o.product) {
    auto f = factors_of(o.factors);
    out.report.inputs["factors"] = string_list(o.factors);
    v = product_verdict(region, f, cfg.analytic_margin);
  } else {
    v = knotted_verdict(region, cfg.analytic_margin);
  }
  out.report.result = to_json(v);
  if (o.assert_knotted && v.status != VerdictStatus::Knotted) out.code = kCheckFailed;
  return out;
}

unsigned workers_of(const Config& cfg) {
  if (cfg.workers) return cfg.workers;
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

Outcome cmd_selftest(const Options& o, const Config& cfg, std::uint64_t seed) {
  RandomComplexOptions opt;
  opt.max_generators = o.max_gens;
  auto s = filtered_selftest(o.cases, seed, opt, workers_of(cfg));
  Outcome out{base("filtered selftest", cfg)};
  out.report.provenance.seed = seed;
  out.report.inputs = {{"cases", o.cases}, {"max_gens", o.max_gens}};
  out.report.result = {{"pass", s.pass()},
                       {"cases", s.cases},
                       {"comparisons", s.comparisons},
                       {"mismatches", s.mismatches},
                       {"invariant_failures", s.invariant_failures},
                       {"failures", s.failures}};
  if (!s.pass()) out.code = kCheckFailed;
  return out;
}

Outcome cmd_barcode(const Options& o, const Config& cfg) {
  auto region = parse_domain_spec(o.domain);
  const Rational delta = Rational::parse(o.delta);
  const auto choice = o.zero_differential ? DifferentialChoice::Zero : DifferentialChoice::Default;
  BarcodeModel m;
  if (!o.factors.empty()) m = barcode_product(region, factors_of(o.factors), delta, choice);
  else if (region.is_convex()) m = barcode_convex(region, delta, choice);
  else m = barcode_concave(region, delta, choice);
  const Rational level = Rational::parse(o.level);
  Outcome out{base("filtered barcode", cfg)};
  out.report.inputs = {{"domain", o.domain}, {"delta", to_json(delta)},
                       {"degree", o.degree}, {"level", to_json(level)},
                       {"differential", o.zero_differential ? "zero" : "default"}};
  if (!o.factors.empty()) out.report.inputs["factors"] = string_list(o.factors);
  auto& r = out.report.result;
  r["model"] = m.kind;
  r["dimension"] = m.dimension;
  r["window"] = {{"degree", m.degree}, {"lo", to_json(m.window_lo)}, {"hi", to_json(m.window_hi)},
                 {"rank", m.window_rank}};
  r["rank"] = homology_rank(m.complex, o.degree, level.to_double());
  if (!o.level_to.empty()) {
    const Rational to = Rational::parse(o.level_to);
    out.report.inputs["to"] = to_json(to);
    r["inclusion_rank"] = inclusion_image_rank(m.complex, o.degree, level.to_double(), to.to_double());
  }
  Json gens = Json::array();
  for (const auto& g : m.complex.generators())
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"action", g.level}});
  r["generators"] = gens;
  return out;
}

Outcome cmd_phi_eval(const Options& o, const Config& cfg) {
  const torus::C2Point p{complex_of(o.w, "--w"), complex_of(o.z, "--z")};
  Outcome out{base("phi eval", cfg)};
  out.report.inputs = to_json(p);
  const auto a = torus::phi_flow(p);
  const auto b = torus::phi_closed(p);
  const auto j = torus::J_map(a);
  auto& r = out.report.result;
  r["flow"] = to_json(a);
  r["closed"] = to_json(b);
  r["agreement"] = torus::distance(a, b);
  r["J"] = Json::array({j[0], j[1]});
  r["unit_norm_residual"] = std::max({a.v.norm_residual(), a.w.norm_residual(),
                                      b.v.norm_residual(), b.w.norm_residual()});
  return out;
}

Outcome cmd_phi_verify(const Options& o, const Config& cfg, std::uint64_t seed) {
  auto rep = torus::verify_phi(o.samples, seed, cfg.tolerances, workers_of(cfg));
  Outcome out{base("phi verify", cfg)};
  out.report.provenance.seed = seed;
  out.report.inputs = {{"samples", o.samples}};
  out.report.result = {{"pass", rep.pass(cfg.tolerances)},
                       {"samples", rep.samples},
                       {"max_unit_norm_residual", rep.max_unit_norm},
                       {"max_moment_residual", rep.max_moment},
                       {"max_agreement_residual", rep.max_agreement},
                       {"max_flow_conservation_residual", rep.max_flow_conservation}};
  if (!rep.pass(cfg.tolerances)) out.code = kCheckFailed;
  return out;
}

Outcome cmd_phi_square(const Options& o, const Config& cfg, std::uint64_t seed) {
  const bool csv = !o.csv_path.empty();
  auto rep = torus::square_report(o.c, o.samples, seed, cfg.tolerances, o.symplectic_samples, csv,
                                  workers_of(cfg));
  Outcome out{base("phi square", cfg)};
  out.report.provenance.seed = seed;
  out.report.inputs = {{"c", o.c}, {"samples", o.samples}, {"symplectic_samples", o.symplectic_samples}};
  auto& r = out.report.result;
  r["in_proven_window"] = rep.in_proven_window;
  r["contained"] = rep.contained;
  r["containment_failures"] = rep.containment_failures();
  r["parabola_unsafe"] = rep.parabola_unsafe;
  r["image_description_failures"] = rep.image_description_failures;
  r["min_margin"] = rep.min_margin;
  r["symplectic"] = {{"samples", rep.symplectic_samples},
                     {"max_residual", rep.max_symplectic_residual},
                     {"pass", rep.max_symplectic_residual < cfg.tolerances.symplectic}};
  if (rep.pole_witness)
    r["pole_witness"] = {{"input", to_json(*rep.pole_witness)},
                         {"distance_to_pole", rep.pole_witness_distance}};
  const bool ok = rep.containment_failures() == 0 && rep.image_description_failures == 0 &&
                  rep.max_symplectic_residual < cfg.tolerances.symplectic;
  r["pass"] = rep.in_proven_window ? Json(ok) : Json(nullptr);
  if (rep.in_proven_window && !ok) out.code = kCheckFailed;
  if (csv) {
    std::ofstream f(o.csv_path);
    if (!f) throw InvalidArgument("cannot write '" + o.csv_path + "'");
    f << torus::csv_header() << '\n';
    for (const auto& row : rep.rows) f << torus::csv_row(row) << '\n';
    r["csv"] = o.csv_path;
  }
  return out;
}

std::uint64_t resolve_seed(const Options& o, const Config& cfg) {
  if (o.seed) return *o.seed;
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("TORIC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument("TORIC_SEED must be a non-negative integer");
    }
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symplectic embedding certificates and knottedness obstructions for toric domains", "toric"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", TORIC_VERSION);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_flag("--json", o.json, "Compact JSON output (default)");
  app.add_flag("--timing", o.timing, "Add wall-clock milliseconds to the report");
  app.add_flag("--assert-knotted", o.assert_knotted, "Exit 1 unless the verdict is Knotted");
  app.add_option("--config", o.config_path, "key=value file with tolerance overrides");
  app.add_option("--seed", o.seed, "Random seed (default: $TORIC_SEED, then 1)");

  auto* weights = app.add_subcommand("weights", "Weight sequence of a quadrilateral T(a,b,x,y)");
  weights->add_option("--quad", o.quad, "a,b,x,y")->required();
  weights->add_flag("--convex", o.convex, "Weight expansion of a convex quadrilateral");

  auto* pack = app.add_subcommand("pack", "Ball packing decision by Cremona reduction");
  pack->add_option("--t", o.t, "Target ball capacity");
  pack->add_option("--weights", o.weights, "w1,w2,...")->required();
  pack->add_flag("--solve", o.solve, "Bisect for the least packing capacity");
  pack->add_option("--tol", o.tol, "Bisection tolerance")->capture_default_str();

  auto* delta = app.add_subcommand("delta", "Upper bound on delta_ell with its certificate");
  delta->add_option("--domain", o.domain, "Domain spec")->required();

  auto* verdict = app.add_subcommand("verdict", "Knottedness verdict");
  verdict->add_option("--domain", o.domain, "Domain spec")->required();
  verdict->add_flag("--product", o.product, "Verdict for X x E(factors)");
  verdict->add_option("--factors", o.factors, "b1,b2,...");

  auto* filtered = app.add_subcommand("filtered", "Filtered chain complexes");
  filtered->require_subcommand(1);
  auto* selftest = filtered->add_subcommand("selftest", "Derived-complex rank equivalence on random complexes");
  selftest->add_option("--cases", o.cases)->capture_default_str();
  selftest->add_option("--max-gens", o.max_gens)->capture_default_str();
  auto* barcode = filtered->add_subcommand("barcode", "Rank of a barcode model at an action level");
  barcode->add_option("--domain", o.domain, "Domain spec")->required();
  barcode->add_option("--delta", o.delta, "Smoothing parameter")->required();
  barcode->add_option("--degree", o.degree)->capture_default_str();
  barcode->add_option("--level", o.level, "Action level L")->required();
  barcode->add_option("--to", o.level_to, "Second level; also report the inclusion rank");
  barcode->add_option("--factors", o.factors, "Ellipsoid factors for a product model");
  barcode->add_flag("--zero-differential", o.zero_differential);

  auto* phi = app.add_subcommand("phi", "Explicit embedding machinery");
  phi->require_subcommand(1);
  auto* eval = phi->add_subcommand("eval", "Evaluate both formulas for Phi at one point");
  eval->add_option("--w", o.w, "re,im")->capture_default_str();
  eval->add_option("--z", o.z, "re,im")->capture_default_str();
  auto* verify = phi->add_subcommand("verify", "Seeded residual checks for Phi");
  verify->add_option("--samples", o.samples)->capture_default_str();
  verify->add_option("--tolerances", o.tolerances, "key=value,...");
  auto* square = phi->add_subcommand("square", "Containment and symplecticity of the square embedding");
  square->add_option("--c", o.c)->capture_default_str();
  square->add_option("--samples", o.samples)->capture_default_str();
  square->add_option("--symplectic-samples", o.symplectic_samples)->capture_default_str();
  square->add_option("--emit-csv", o.csv_path, "Write sampled rows to this CSV file");
  square->add_option("--tolerances", o.tolerances, "key=value,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    Config cfg;
    if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
    if (!o.tolerances.empty()) cfg.merge_pairs(o.tolerances, ',');
    const auto start = std::chrono::steady_clock::now();
    Outcome res;
    if (weights->parsed()) res = cmd_weights(o, cfg);
    else if (pack->parsed()) res = cmd_pack(o, cfg);
    else if (delta->parsed()) res = cmd_delta(o, cfg);
    else if (verdict->parsed()) res = cmd_verdict(o, cfg);
    else if (selftest->parsed()) res = cmd_selftest(o, cfg, resolve_seed(o, cfg));
    else if (barcode->parsed()) res = cmd_barcode(o, cfg);
    else if (eval->parsed()) res = cmd_phi_eval(o, cfg);
    else if (verify->parsed()) res = cmd_phi_verify(o, cfg, resolve_seed(o, cfg));
    else res = cmd_phi_square(o, cfg, resolve_seed(o, cfg));
    if (o.timing)
      res.report.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << res.report.to_json().dump(o.pretty ? 2 : -1) << '\n';
    return res.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace toric::cli
