#include "szego/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "szego/analysis.hpp"
#include "szego/io.hpp"

namespace szego {

using json = nlohmann::json;

namespace {

/// Usage or configuration problem detected before any computation.
struct UsageError : Error {
  using Error::Error;
};

json strings(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(decimal(x));
  return a;
}

json strings(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(std::to_string(x));
  return a;
}

std::string range_text(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string zero_family_tag(const SeriesSpec& spec) { return spec.family_name(); }

// Config file values, overridden by flags given on the command line.
struct RunConfig {
  std::string family = "exp";
  std::string n = "1..10";
  bool normalize = true;
  int bits = 0;
  std::string out = "out";
  std::string format = "csv";
};

void apply_config_file(const std::string& path, RunConfig& cfg, const std::set<std::string>& given) {
  json obj;
  try {
    obj = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("config is not valid JSON: " + std::string(e.what()));
  }
  if (!obj.is_object()) throw UsageError("config must be a JSON object");
  const auto take_string = [&](const char* key, std::string& dst) {
    if (!obj.contains(key) || given.count(key)) return;
    const json& v = obj.at(key);
    if (v.is_string()) {
      dst = v.get<std::string>();
    } else if (v.is_object() || v.is_number()) {
      dst = v.dump();
    } else {
      throw UsageError(std::string("config field '") + key + "' has the wrong type");
    }
  };
  take_string("family", cfg.family);
  take_string("n", cfg.n);
  take_string("out", cfg.out);
  take_string("format", cfg.format);
  if (obj.contains("normalize") && !given.count("normalize")) {
    if (!obj.at("normalize").is_boolean()) throw UsageError("config field 'normalize' must be a boolean");
    cfg.normalize = obj.at("normalize").get<bool>();
  }
  if (obj.contains("bits") && !given.count("bits")) {
    const json& v = obj.at("bits");
    if (!v.is_number_integer() && !v.is_string()) throw UsageError("config field 'bits' must be an integer");
    cfg.bits = v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>();
  }
}

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string f;
  while (std::getline(in, f, ',')) {
    if (f != "csv" && f != "json" && f != "svg") throw UsageError("unknown output format '" + f + "'");
    out.insert(f);
  }
  if (out.empty()) throw UsageError("no output format given");
  return out;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
  const SeriesSpec spec = parse_family(cfg.family);
  const std::vector<int> ns = parse_int_range(cfg.n);
  if (ns.front() < 1) throw UsageError("degrees start at 1");
  const auto formats = parse_formats(cfg.format);
  if (cfg.bits != 0 && cfg.bits < 53) throw UsageError("bits must be at least 53");
  std::filesystem::create_directories(cfg.out);

  std::vector<ZeroSet> sets(ns.size());
  std::vector<APComplex> scales(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    PrecisionPolicy pol = default_policy(spec, ns[i]);
    if (cfg.bits != 0) {
      pol.start_bits = cfg.bits;
      pol.max_bits = std::max(pol.max_bits, 16 * cfg.bits);
    }
    const SectionPoly sec = section(spec, ns[i], pol.start_bits);
    sets[i] = find_section_zeros(sec, pol);
    scales[i] = sec.scale;
  });

  const std::string tag = zero_family_tag(spec);
  std::ostringstream normalized, raw;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    write_zeros_csv(normalized, sets[i], i == 0);
    ZeroSet unscaled = sets[i];
    for (auto& z : unscaled.zeros) z = z * scales[i].with_bits(z.bits());
    write_zeros_csv(raw, unscaled, i == 0);
  }
  const std::filesystem::path dir(cfg.out);
  std::vector<std::string> written;
  if (formats.count("csv")) {
    write_atomic((dir / ("zeros_" + tag + ".csv")).string(), normalized.str());
    write_atomic((dir / ("zeros_" + tag + "_raw.csv")).string(), raw.str());
    written.push_back((dir / ("zeros_" + tag + ".csv")).string());
    written.push_back((dir / ("zeros_" + tag + "_raw.csv")).string());
  }
  if (formats.count("json")) {
    json doc;
    doc["family"] = json::parse(family_json(spec));
    doc["normalized"] = cfg.normalize;
    json rows = json::array();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      json zs = json::array();
      for (const auto& z : sets[i].zeros) {
        const APComplex w = cfg.normalize ? z : z * scales[i].with_bits(z.bits());
        zs.push_back(json::array({w.re().to_string(30), w.im().to_string(30)}));
      }
      rows.push_back({{"n", std::to_string(ns[i])},
                      {"origin_multiplicity", std::to_string(sets[i].origin_multiplicity)},
                      {"zeros", zs}});
    }
    doc["sections"] = rows;
    const std::string path = (dir / ("zeros_" + tag + ".json")).string();
    write_atomic(path, doc.dump(2) + "\n");
    written.push_back(path);
  }
  if (formats.count("svg")) {
    SvgScene scene;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      SvgPointLayer layer{ns[i], {}};
      for (const auto& z : sets[i].zeros) {
        layer.points.push_back(cfg.normalize ? z.to_cdouble() : (z * scales[i].with_bits(z.bits())).to_cdouble());
      }
      scene.points.push_back(layer);
    }
    CurveSpec limit;
    if (cfg.normalize && limit_curve(spec, limit)) {
      scene.curves.push_back({curve_name(limit), strokes_from_polyline(sample_curve(limit, 1024)), true});
    }
    scene.fit_viewport();
    const std::string path = (dir / ("zeros_" + tag + ".svg")).string();
    write_atomic(path, scene.render());
    written.push_back(path);
  }
  for (const auto& w : written) out << w << '\n';
  return kExitOk;
}

int cmd_curve(const std::string& type, const std::string& params, int samples, const std::string& path,
              std::ostream& out) {
  if (samples < 16) throw UsageError("at least 16 samples are needed");
  const CurveSpec spec = parse_curve(type, params);
  const Polyline pl = sample_curve(spec, samples);
  std::ostringstream csv;
  write_polyline_csv(csv, pl);
  write_atomic(path, csv.str());
  out << path << '\n';
  return kExitOk;
}

int cmd_plot(const std::string& zeros_list, const std::string& curve_list, const std::string& path,
             std::ostream& out) {
  const auto files = [](const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    std::string f;
    while (std::getline(in, f, ',')) {
      if (!f.empty()) v.push_back(f);
    }
    return v;
  };
  SvgScene scene;
  std::map<int, SvgPointLayer> by_n;
  for (const auto& f : files(zeros_list)) {
    for (const auto& row : read_zeros_csv(f)) {
      auto& layer = by_n[row.n];
      layer.n = row.n;
      layer.points.push_back(row.z);
    }
  }
  for (auto& [n, layer] : by_n) scene.points.push_back(std::move(layer));
  for (const auto& f : files(curve_list)) {
    scene.curves.push_back({std::filesystem::path(f).filename().string(), strokes_from_rows(read_curve_csv(f)), false});
  }
  if (scene.points.empty() && scene.curves.empty()) throw UsageError("nothing to plot");
  scene.fit_viewport();
  write_atomic(path, scene.render());
  out << path << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyArgs {
  std::string n;
  std::string family;
  std::string side = "auto";
  double delta = 0.5;
  double tol = -1.0;
  std::string sigma = "-0.5";
  std::string h = "1";
  double T = 1.0;
  std::string lambda = "10,20,50,100,200";
  std::string mode = "origin";
  double step = 0.25;
  double a0 = 1.0, A = 1.0, B = 1.0;
  std::string sector;
  double disk = -1.0;
  std::string out;
};

struct Report {
  json params = json::object();
  json statistics = json::object();
  json artifacts = json::array();
  bool pass = false;
};

Report verify_buckholtz(const VerifyArgs& a) {
  const auto ns = parse_int_range(a.n.empty() ? "1..100" : a.n);
  const Polyline szego = sample_curve(curve::ExpSzego{});
  std::vector<BuckholtzResult> res(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) { res[i] = buckholtz_check(ns[i], &szego); });
  Report r;
  r.params["n"] = range_text(ns);
  r.pass = true;
  std::vector<double> md, bd;
  std::vector<int> outside;
  for (const auto& b : res) {
    md.push_back(b.maxdist);
    bd.push_back(b.bound);
    outside.push_back(b.all_outside ? 1 : 0);
    if (!b.all_outside || !(b.maxdist <= b.bound)) r.pass = false;
  }
  r.statistics["maxdist"] = strings(md);
  r.statistics["bound"] = strings(bd);
  r.statistics["all_outside"] = strings(outside);
  return r;
}

Report verify_cvw(const VerifyArgs& a) {
  const auto ns = parse_int_range(a.n.empty() ? "20..120:10" : a.n);
  const CvwResult c = cvw_order_check(ns, a.delta);
  Report r;
  r.params["n"] = range_text(ns);
  r.params["delta"] = decimal(a.delta);
  r.statistics["maxdist_D"] = strings(c.maxdist_d);
  r.statistics["maxdist_Dn"] = strings(c.maxdist_dn);
  r.statistics["slope_vs_D"] = decimal(c.slope_vs_D);
  r.statistics["slope_vs_Dn"] = decimal(c.slope_vs_Dn);
  r.statistics["dn_closer_everywhere"] = c.dn_closer_everywhere ? "true" : "false";
  r.pass = std::abs(c.slope_vs_D + 1.0) <= 0.25 && std::abs(c.slope_vs_Dn + 2.0) <= 0.35 && c.dn_closer_everywhere;
  if (!a.out.empty()) {
    // Zeros at n = 17 against D and D_17.
    const int n = 17;
    const ZeroSet zs = find_section_zeros(section(SeriesSpec(family::Exp{}), n, 128), PrecisionPolicy::for_degree(n));
    SvgScene scene;
    SvgPointLayer layer{n, {}};
    for (const auto& z : zs.zeros) layer.points.push_back(z.to_cdouble());
    scene.points.push_back(layer);
    scene.curves.push_back({"exp_szego", strokes_from_polyline(sample_curve(curve::ExpSzego{}, 1024)), true});
    scene.curves.push_back({"intermediate_exp_17", strokes_from_polyline(sample_curve(curve::IntermediateExp{n}, 1024)), false});
    scene.fit_viewport();
    const auto path = std::filesystem::path(a.out).replace_extension("").string() + "_n17.svg";
    write_atomic(path, scene.render());
    r.artifacts.push_back(path);
  }
  return r;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "circle") return Side::Circle;
  throw UsageError("unknown side '" + s + "'");
}

Report verify_rate(const VerifyArgs& a) {
  const SeriesSpec spec = parse_family(a.family.empty() ? "F2" : a.family);
  const bool circle = spec.is<family::RationalSquare>() || spec.is<family::LFT>();
  if (!circle && !spec.is<family::ExpIntegral>() && !spec.is<family::Bessel>()) {
    throw UsageError("rate fits apply to exponential integrals, Bessel, LFT and 1/(1-z)^2");
  }
  std::vector<int> ns = parse_int_range(a.n.empty() ? (spec.is<family::Bessel>() ? "40..120:2" : "40..200") : a.n);
  if (spec.is<family::ExpIntegral>()) {
    const auto keep = subsequence_select(spec.as<family::ExpIntegral>().phi, ns.front(), ns.back(), 1e-6);
    ns.erase(std::remove_if(ns.begin(), ns.end(),
                            [&](int n) { return !std::binary_search(keep.begin(), keep.end(), n); }),
             ns.end());
  }
  if (spec.is<family::Bessel>()) {
    ns.erase(std::remove_if(ns.begin(), ns.end(), [](int n) { return n % 2 != 0; }), ns.end());
  }
  std::vector<Side> sides;
  if (a.side == "auto" || a.side == "both") {
    sides = circle ? std::vector<Side>{Side::Circle} : std::vector<Side>{Side::Left, Side::Right};
  } else {
    sides.push_back(parse_side(a.side));
  }
  const auto zero_sets = section_zero_sets(spec, ns);
  Report r;
  r.params["family"] = json::parse(family_json(spec));
  r.params["n"] = range_text(ns);
  r.pass = true;
  for (Side side : sides) {
    const RateFit fit = fit_rate_from_zeros(spec, zero_sets, side);
    json s;
    std::vector<double> stat;
    for (const auto& x : fit.samples) stat.push_back(x.statistic);
    s["statistic"] = strings(stat);
    s["fitted_c"] = decimal(fit.fitted_c);
    s["fitted_d"] = decimal(fit.fitted_d);
    s["expected_c"] = decimal(fit.expected_c);
    // No approach direction is asserted when the expected constant is zero.
    const bool asserted = fit.expected_c != 0.0;
    const double tol = a.tol > 0.0 ? a.tol : std::max(0.3, 0.25 * std::abs(fit.expected_c));
    s["tolerance"] = asserted ? decimal(tol) : "none";
    const bool ok = !asserted || std::abs(fit.fitted_c - fit.expected_c) <= tol;
    s["pass"] = ok;
    if (!ok) r.pass = false;
    r.statistics[side_name(side)] = s;
  }
  return r;
}

Report verify_watson(const VerifyArgs& a) {
  const auto sigma = parse_complex(a.sigma);
  std::vector<std::complex<double>> h;
  for (double c : parse_double_list(a.h)) h.emplace_back(c, 0.0);
  const auto lams = parse_double_list(a.lambda);
  if (a.mode != "origin" && a.mode != "endpoint") throw UsageError("mode is origin or endpoint");
  const auto errs = watson_check(sigma, h, a.T, lams, a.mode == "origin" ? WatsonMode::Origin : WatsonMode::Endpoint);
  Report r;
  r.params["sigma"] = json::array({decimal(sigma.real()), decimal(sigma.imag())});
  r.params["h"] = strings(parse_double_list(a.h));
  r.params["T"] = decimal(a.T);
  r.params["lambda"] = strings(lams);
  r.params["mode"] = a.mode;
  r.statistics["rel_error"] = strings(errs);
  r.pass = true;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    if (!std::isfinite(errs[i])) r.pass = false;
    if (i > 0 && lams[i] > lams[i - 1] && !(errs[i] < errs[i - 1])) r.pass = false;
  }
  return r;
}

Report verify_annulus(const VerifyArgs& a) {
  const auto ns = parse_int_range(a.n.empty() ? "100,150,200" : a.n);
  for (int n : ns) {
    if (n <= 97) throw UsageError("the annulus bound needs n > 97");
  }
  std::vector<AnnulusResult> res(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) { res[i] = dilcher_rubel_check(ns[i]); });
  Report r;
  r.params["n"] = range_text(ns);
  std::vector<double> lo, hi, inner;
  r.pass = true;
  for (const auto& x : res) {
    lo.push_back(x.min_mod);
    hi.push_back(x.max_mod);
    inner.push_back(x.inner);
    if (!x.all_in_annulus) r.pass = false;
  }
  r.statistics["min_mod"] = strings(lo);
  r.statistics["max_mod"] = strings(hi);
  r.statistics["inner_radius"] = strings(inner);
  return r;
}

Report verify_lft(const VerifyArgs& a) {
  const auto ns = parse_int_range(a.n.empty() ? "60" : a.n);
  if (!(a.a0 > 0.0 && a.A > 0.0 && a.B > 0.0)) throw UsageError("LFT parameters must be positive");
  std::vector<LftResult> res(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) { res[i] = lft_relation_check(ns[i], a.a0, a.A, a.B, 0.3); });
  Report r;
  r.params["n"] = range_text(ns);
  r.params["a0"] = decimal(a.a0);
  r.params["A"] = decimal(a.A);
  r.params["B"] = decimal(a.B);
  std::vector<double> rel, dev;
  r.pass = true;
  for (const auto& x : res) {
    rel.push_back(x.relation_max);
    dev.push_back(x.modulus_dev);
    if (!x.all_inside || !(x.modulus_dev <= 3.0 / x.n)) r.pass = false;
  }
  r.statistics["relation_max"] = strings(rel);
  r.statistics["modulus_dev"] = strings(dev);
  return r;
}

Report verify_nr(const VerifyArgs& a) {
  const auto ns = parse_int_range(a.n.empty() ? "50,100,200,400" : a.n);
  const NrReport nr = nr_limit_check(ns, a.step);
  Report r;
  r.params["n"] = range_text(ns);
  r.params["step"] = decimal(a.step);
  r.statistics["sup"] = strings(nr.sup);
  r.statistics["grid_points"] = std::to_string(nr.grid_points);
  r.pass = nr.decreasing;
  return r;
}

Report verify_counts(const VerifyArgs& a) {
  const SeriesSpec spec = parse_family(a.family.empty() ? "exp" : a.family);
  const auto ns = parse_int_range(a.n.empty() ? "60" : a.n);
  const bool sector = !a.sector.empty();
  if (sector == (a.disk >= 0.0)) throw UsageError("give exactly one of --sector or --disk");
  std::vector<double> bounds;
  if (sector) {
    bounds = parse_double_list(a.sector);
    if (bounds.size() != 2 || !(bounds[0] < bounds[1])) throw UsageError("sector needs theta1 < theta2");
  }
  std::vector<CountReport> res(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const auto pol = default_policy(spec, ns[i]);
    const ZeroSet zs = find_section_zeros(section(spec, ns[i], pol.start_bits), pol);
    res[i] = sector ? count_sector(zs, bounds[0], bounds[1]) : count_disk(zs, a.disk);
  });
  Report r;
  r.params["family"] = json::parse(family_json(spec));
  r.params["n"] = range_text(ns);
  if (sector) {
    r.params["sector"] = strings(bounds);
  } else {
    r.params["disk"] = decimal(a.disk);
  }
  std::vector<int> counts;
  std::vector<double> fractions;
  r.pass = true;
  for (const auto& x : res) {
    counts.push_back(static_cast<int>(x.count));
    fractions.push_back(x.fraction);
    if (!(x.fraction >= 0.0 && x.fraction <= 1.0)) r.pass = false;
  }
  r.statistics["count"] = strings(counts);
  r.statistics["fraction"] = strings(fractions);
  return r;
}

int cmd_verify(const std::string& suite, const VerifyArgs& a, std::ostream& out) {
  static const std::map<std::string, Report (*)(const VerifyArgs&)> suites{
      {"buckholtz", verify_buckholtz}, {"cvw", verify_cvw},         {"rate", verify_rate},
      {"watson", verify_watson},       {"annulus", verify_annulus}, {"lft", verify_lft},
      {"nr", verify_nr},               {"counts", verify_counts},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw UsageError("unknown suite '" + suite + "'");
  const Report r = it->second(a);
  json doc;
  doc["check"] = suite;
  doc["params"] = r.params;
  doc["pass"] = r.pass;
  doc["statistics"] = r.statistics;
  doc["artifacts"] = r.artifacts;
  const std::string text = doc.dump(2) + "\n";
  if (!a.out.empty()) {
    write_atomic(a.out, text);
  } else {
    out << text;
  }
  return r.pass ? kExitOk : kExitFail;
}

std::string log_path_for(const std::string& sub, const RunConfig& cfg, const VerifyArgs& va,
                         const std::string& file_out) {
  if (sub == "zeros") return (std::filesystem::path(cfg.out) / "szego_lab.log").string();
  if (sub == "verify") return va.out.empty() ? std::string() : va.out + ".log";
  return file_out.empty() ? std::string() : file_out + ".log";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of power-series sections and their limit curves", "szego_lab"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  auto* zeros = app.add_subcommand("zeros", "Normalized section zeros as CSV, JSON or SVG");
  zeros->add_option("--config", config_path, "JSON config; flags override its fields");
  auto* o_family = zeros->add_option("--family", cfg.family, "Preset name or JSON family object");
  auto* o_n = zeros->add_option("--n", cfg.n, "Degrees: A..B, A..B:step or a,b,c");
  auto* o_norm = zeros->add_flag("--normalize,!--no-normalize", cfg.normalize, "Plot normalized coordinates");
  auto* o_bits = zeros->add_option("--bits", cfg.bits, "Starting precision in bits");
  auto* o_out = zeros->add_option("--out", cfg.out, "Output directory");
  auto* o_format = zeros->add_option("--format", cfg.format, "Subset of csv,json,svg");

  std::string curve_type = "exp_szego", curve_params, curve_out;
  int samples = 2048;
  auto* curve_cmd = app.add_subcommand("curve", "Sample a limit curve to CSV");
  curve_cmd->add_option("--type", curve_type, "exp_szego, dab, mittag_leffler, intermediate_exp, trig_bessel, unit_circle");
  curve_cmd->add_option("--params", curve_params, "JSON parameters, e.g. {\"a\":2,\"b\":1.5}");
  curve_cmd->add_option("--samples", samples, "Base number of angles");
  curve_cmd->add_option("--out", curve_out, "Output CSV")->required();

  VerifyArgs va;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify->add_option("suite", suite, "buckholtz, cvw, rate, watson, annulus, lft, nr, counts")->required();
  verify->add_option("--n", va.n, "Degrees");
  verify->add_option("--family", va.family, "Family for rate and counts");
  verify->add_option("--side", va.side, "left, right, circle or both");
  verify->add_option("--delta", va.delta, "Exclusion radius around z = 1 (cvw)");
  verify->add_option("--tol", va.tol, "Tolerance on the fitted constant (rate)");
  verify->add_option("--sigma", va.sigma, "Exponent, x or x,y (watson)");
  verify->add_option("--h-poly", va.h, "Ascending coefficients of h (watson)");
  verify->add_option("--T", va.T, "Interval length (watson)");
  verify->add_option("--lambda", va.lambda, "Increasing lambda values (watson)");
  verify->add_option("--mode", va.mode, "origin or endpoint (watson)");
  verify->add_option("--step", va.step, "Grid step (nr)");
  verify->add_option("--a0", va.a0, "LFT a0");
  verify->add_option("--A", va.A, "LFT A");
  verify->add_option("--B", va.B, "LFT B");
  verify->add_option("--sector", va.sector, "theta1,theta2 (counts)");
  verify->add_option("--disk", va.disk, "Radius R (counts)");
  verify->add_option("--out", va.out, "Report path; stdout if omitted");

  std::string plot_zeros, plot_curves, plot_out;
  auto* plot = app.add_subcommand("plot", "Overlay zeros and curves in an SVG");
  plot->add_option("--zeros", plot_zeros, "Zeros CSV files, comma separated");
  plot->add_option("--curve", plot_curves, "Curve CSV files, comma separated");
  plot->add_option("--out", plot_out, "Output SVG")->required();

  std::vector<std::string> argv_store{"szego_lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "szego_lab: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string sub = app.get_subcommands().front()->get_name();
  std::string joined;
  for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
  int code = kExitOk;
  std::string status;
  try {
    if (sub == "zeros") {
      std::set<std::string> given;
      if (o_family->count()) given.insert("family");
      if (o_n->count()) given.insert("n");
      if (o_norm->count()) given.insert("normalize");
      if (o_bits->count()) given.insert("bits");
      if (o_out->count()) given.insert("out");
      if (o_format->count()) given.insert("format");
      if (!config_path.empty()) apply_config_file(config_path, cfg, given);
      try {
        parse_family(cfg.family);
        parse_int_range(cfg.n);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      code = cmd_zeros(cfg, out);
    } else if (sub == "curve") {
      try {
        parse_curve(curve_type, curve_params);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      code = cmd_curve(curve_type, curve_params, samples, curve_out, out);
    } else if (sub == "verify") {
      code = cmd_verify(suite, va, out);
    } else {
      try {
        code = cmd_plot(plot_zeros, plot_curves, plot_out, out);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
    status = code == kExitOk ? "ok" : "fail";
  } catch (const UsageError& e) {
    err << "szego_lab: " << e.what() << '\n';
    code = kExitUsage;
    status = std::string("usage: ") + e.what();
  } catch (const DomainError& e) {
    err << "szego_lab: " << e.what() << '\n';
    code = kExitUsage;
    status = std::string("config: ") + e.what();
  } catch (const ParityError& e) {
    err << "szego_lab: " << e.what() << '\n';
    code = kExitUsage;
    status = std::string("config: ") + e.what();
  } catch (const std::exception& e) {
    err << "szego_lab: " << e.what() << '\n';
    code = kExitFail;
    status = std::string("error: ") + e.what();
  }
  const std::string log = log_path_for(sub, cfg, va, sub == "curve" ? curve_out : plot_out);
  if (!log.empty() && std::filesystem::exists(std::filesystem::path(log).parent_path().empty()
                                                  ? std::filesystem::path(".")
                                                  : std::filesystem::path(log).parent_path())) {
    append_log(log, sub + " [" + joined + "] exit " + std::to_string(code) + " " + status);
  }
  return code;
}

}  // namespace szego
