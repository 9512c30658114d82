#include "szego/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace szego {

using json = nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double to_number(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size()) return out;
  }
  throw DomainError("field '" + key + "' must be a number");
}

std::complex<double> to_complex(const json& v, const std::string& key) {
  if (v.is_array()) {
    if (v.size() != 2) throw DomainError("field '" + key + "' must be [re, im]");
    return {to_number(v[0], key), to_number(v[1], key)};
  }
  if (v.is_string() && v.get<std::string>().find(',') != std::string::npos) {
    return parse_complex(v.get<std::string>());
  }
  return {to_number(v, key), 0.0};
}

double get_or(const json& obj, const std::string& key, double fallback) {
  return obj.contains(key) ? to_number(obj.at(key), key) : fallback;
}

std::complex<double> get_complex_or(const json& obj, const std::string& key, std::complex<double> fallback) {
  return obj.contains(key) ? to_complex(obj.at(key), key) : fallback;
}

json complex_json(std::complex<double> z) { return json::array({decimal(z.real()), decimal(z.imag())}); }

json parse_object(const std::string& text, const std::string& what) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(what + " is not valid JSON: " + e.what());
  }
  if (!obj.is_object()) throw DomainError(what + " must be a JSON object");
  return obj;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& raw) {
  std::string s = raw;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (!s.empty() && ec == std::errc::result_out_of_range && ptr == s.data() + s.size()) {
    // 30-digit CSV values can sit below the double range; they round to zero
    out = std::strtod(s.c_str(), nullptr);
    if (std::isfinite(out)) return out;
  }
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("'" + raw + "' is not a number");
  }
  return out;
}

int parse_int(const std::string& raw) {
  const double v = parse_double(raw);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw DomainError("'" + raw + "' is not an integer");
  return static_cast<int>(v);
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

}  // namespace

SeriesSpec parse_family(const std::string& text) {
  if (text.empty()) throw DomainError("empty family");
  if (text.front() != '{') return SeriesSpec::preset(text);
  const json obj = parse_object(text, "family");
  if (!obj.contains("family") || !obj.at("family").is_string()) {
    throw DomainError("family object needs a \"family\" name");
  }
  const std::string name = obj.at("family").get<std::string>();
  if (name == "exp") return SeriesSpec(family::Exp{});
  if (name == "cos") return SeriesSpec(family::Cos{});
  if (name == "sin") return SeriesSpec(family::Sin{});
  if (name == "divergent") return SeriesSpec(family::Divergent{});
  if (name == "rational_square") return SeriesSpec(family::RationalSquare{});
  if (name == "mittag_leffler") return SeriesSpec(family::MittagLeffler{get_or(obj, "lambda", 1.0)});
  if (name == "confluent") return SeriesSpec(family::Confluent1F1{get_complex_or(obj, "b", {2.0, 0.0})});
  if (name == "bessel") return SeriesSpec(family::Bessel{get_complex_or(obj, "alpha", {0.0, 0.0})});
  if (name == "lft") {
    return SeriesSpec(family::LFT{get_or(obj, "a0", 1.0), get_or(obj, "A", 1.0), get_or(obj, "B", 1.0)});
  }
  if (name == "exp_integral") {
    // Weight parameters live under "phi"; top-level keys are accepted as well.
    const json& src = obj.contains("phi") ? obj.at("phi") : obj;
    if (!src.is_object()) throw DomainError("field 'phi' must be an object");
    PhiSpec phi;
    phi.a = get_or(src, "a", 1.0);
    phi.b = get_or(src, "b", 1.0);
    phi.mu = get_complex_or(src, "mu", {0.0, 0.0});
    phi.nu = get_complex_or(src, "nu", {0.0, 0.0});
    if (src.contains("w")) {
      const json& w = src.at("w");
      if (!w.is_array() || w.empty()) throw DomainError("field 'w' must be a nonempty array");
      phi.w.clear();
      for (const auto& c : w) phi.w.push_back(to_complex(c, "w"));
    }
    return SeriesSpec(family::ExpIntegral{phi});
  }
  throw DomainError("unknown family '" + name + "'");
}

std::string family_json(const SeriesSpec& spec) {
  json obj;
  obj["family"] = spec.family_name();
  std::visit(Overloaded{
                 [&](const family::MittagLeffler& f) { obj["lambda"] = decimal(f.lambda); },
                 [&](const family::Confluent1F1& f) { obj["b"] = complex_json(f.b); },
                 [&](const family::Bessel& f) { obj["alpha"] = complex_json(f.alpha); },
                 [&](const family::LFT& f) {
                   obj["a0"] = decimal(f.a0);
                   obj["A"] = decimal(f.A);
                   obj["B"] = decimal(f.B);
                 },
                 [&](const family::ExpIntegral& f) {
                   json phi;
                   phi["a"] = decimal(f.phi.a);
                   phi["b"] = decimal(f.phi.b);
                   phi["mu"] = complex_json(f.phi.mu);
                   phi["nu"] = complex_json(f.phi.nu);
                   json w = json::array();
                   for (const auto& c : f.phi.w) w.push_back(complex_json(c));
                   phi["w"] = w;
                   obj["phi"] = phi;
                 },
                 [](const auto&) {},
             },
             spec.variant());
  return obj.dump();
}

CurveSpec parse_curve(const std::string& type, const std::string& params_json) {
  const json obj = params_json.empty() ? json::object() : parse_object(params_json, "curve parameters");
  CurveSpec spec;
  if (type == "exp_szego") {
    spec = curve::ExpSzego{};
  } else if (type == "dab") {
    spec = curve::Dab{get_or(obj, "a", 1.0), get_or(obj, "b", 1.0)};
  } else if (type == "mittag_leffler") {
    spec = curve::MLCurve{get_or(obj, "lambda", 1.0)};
  } else if (type == "intermediate_exp") {
    const double n = get_or(obj, "n", 2.0);
    if (n != std::floor(n)) throw DomainError("intermediate curve degree must be an integer");
    spec = curve::IntermediateExp{static_cast<int>(n)};
  } else if (type == "trig_bessel") {
    spec = curve::TrigBessel{};
  } else if (type == "unit_circle") {
    spec = curve::UnitCircle{};
  } else {
    throw DomainError("unknown curve type '" + type + "'");
  }
  validate(spec);
  return spec;
}

bool limit_curve(const SeriesSpec& spec, CurveSpec& out) {
  return std::visit(Overloaded{
                        [&](const family::Exp&) { out = curve::ExpSzego{}; return true; },
                        [&](const family::Cos&) { out = curve::TrigBessel{}; return true; },
                        [&](const family::Sin&) { out = curve::TrigBessel{}; return true; },
                        [&](const family::Bessel&) { out = curve::TrigBessel{}; return true; },
                        [&](const family::MittagLeffler& f) { out = curve::MLCurve{f.lambda}; return true; },
                        [&](const family::Divergent&) { out = curve::UnitCircle{}; return true; },
                        [&](const family::LFT&) { out = curve::UnitCircle{}; return true; },
                        [&](const family::RationalSquare&) { out = curve::UnitCircle{}; return true; },
                        [&](const family::ExpIntegral& f) {
                          out = curve::Dab{f.phi.a, f.phi.b};
                          return true;
                        },
                        [](const family::Confluent1F1&) { return false; },
                    },
                    spec.variant());
}

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::string rest = text.substr(dots + 2);
    int step = 1;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = parse_int(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    if (step < 1) throw DomainError("range step must be positive");
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(rest);
    for (int n = lo; n <= hi; n += step) out.push_back(n);
  } else {
    for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  }
  if (out.empty()) throw DomainError("empty degree range '" + text + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  if (out.empty()) throw DomainError("empty list '" + text + "'");
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw DomainError("'" + text + "' is not a complex number");
}

std::string decimal(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw DomainError("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

void append_log(const std::string& path, const std::string& line) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ofstream out(path, std::ios::app);
  if (!out) return;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << ' ' << line << '\n';
}

std::vector<ZeroRow> read_zeros_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("family,n,k,re,im", 0) != 0) {
    throw DomainError("'" + path + "' is not a zeros CSV");
  }
  std::vector<ZeroRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() < 5) throw DomainError("malformed row in '" + path + "': " + line);
    rows.push_back({f[0], parse_int(f[1]), {parse_double(f[3]), parse_double(f[4])}});
  }
  return rows;
}

std::vector<CurveRow> read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("theta,re,im", 0) != 0) {
    throw DomainError("'" + path + "' is not a curve CSV");
  }
  std::vector<CurveRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() < 3) throw DomainError("malformed row in '" + path + "': " + line);
    rows.push_back({parse_double(f[0]), {parse_double(f[1]), parse_double(f[2])}});
  }
  return rows;
}

std::vector<std::vector<std::complex<double>>> strokes_from_rows(const std::vector<CurveRow>& rows) {
  std::vector<std::vector<std::complex<double>>> strokes;
  if (rows.empty()) return strokes;
  std::vector<double> gaps;
  for (std::size_t i = 1; i < rows.size(); ++i) gaps.push_back(std::abs(rows[i].z - rows[i - 1].z));
  double typical = 0.0;
  if (!gaps.empty()) {
    std::vector<double> sorted = gaps;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2), sorted.end());
    typical = sorted[sorted.size() / 2];
  }
  const double jump = std::max(20.0 * typical, 1e-9);
  strokes.push_back({rows[0].z});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (gaps[i - 1] > jump) strokes.push_back({});
    strokes.back().push_back(rows[i].z);
  }
  auto& first = strokes.front();
  if (first.size() > 2 && std::abs(first.back() - first.front()) <= jump) first.push_back(first.front());
  return strokes;
}

std::vector<std::vector<std::complex<double>>> strokes_from_polyline(const Polyline& curve) {
  std::vector<std::vector<std::complex<double>>> strokes;
  std::vector<std::complex<double>> radial;
  for (const auto& p : curve.points) radial.push_back(p.to_cdouble());
  if (curve.closed && !radial.empty()) radial.push_back(radial.front());
  strokes.push_back(radial);
  for (const auto& piece : curve.pieces) {
    std::vector<std::complex<double>> s;
    for (const auto& p : piece) s.push_back(p.to_cdouble());
    strokes.push_back(s);
  }
  return strokes;
}

void SvgScene::fit_viewport() {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  const auto take = [&](std::complex<double> z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  for (const auto& layer : points) {
    for (const auto& z : layer.points) take(z);
  }
  for (const auto& layer : curves) {
    for (const auto& s : layer.strokes) {
      for (const auto& z : s) take(z);
    }
  }
  if (!(xmin <= xmax)) {
    viewport = SvgViewport{};
    return;
  }
  double dx = xmax - xmin, dy = ymax - ymin;
  if (dx <= 0.0) dx = std::max(1.0, std::abs(xmin));
  if (dy <= 0.0) dy = std::max(1.0, std::abs(ymin));
  viewport = SvgViewport{xmin - 0.05 * dx, xmax + 0.05 * dx, ymin - 0.05 * dy, ymax + 0.05 * dy};
  if (xmax == xmin) viewport.xmin = xmin - 0.05 * dx, viewport.xmax = xmax + 0.05 * dx;
  if (ymax == ymin) viewport.ymin = ymin - 0.05 * dy, viewport.ymax = ymax + 0.05 * dy;
}

std::string SvgScene::render(int width, int height) const {
  const double pad = 40.0;
  const double dx = viewport.xmax - viewport.xmin;
  const double dy = viewport.ymax - viewport.ymin;
  const double scale = std::min((width - 2 * pad) / dx, (height - 2 * pad) / dy);
  const double ox = pad + 0.5 * ((width - 2 * pad) - scale * dx);
  const double oy = pad + 0.5 * ((height - 2 * pad) - scale * dy);
  const auto px = [&](double x) { return ox + (x - viewport.xmin) * scale; };
  const auto py = [&](double y) { return oy + (viewport.ymax - y) * scale; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Axes through the origin when it is in view, plus ticks on the frame.
  s << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
  if (viewport.xmin < 0.0 && viewport.xmax > 0.0) {
    s << "<line x1=\"" << fmt3(px(0)) << "\" y1=\"" << fmt3(py(viewport.ymin)) << "\" x2=\"" << fmt3(px(0))
      << "\" y2=\"" << fmt3(py(viewport.ymax)) << "\"/>\n";
  }
  if (viewport.ymin < 0.0 && viewport.ymax > 0.0) {
    s << "<line x1=\"" << fmt3(px(viewport.xmin)) << "\" y1=\"" << fmt3(py(0)) << "\" x2=\""
      << fmt3(px(viewport.xmax)) << "\" y2=\"" << fmt3(py(0)) << "\"/>\n";
  }
  s << "</g>\n";
  const auto tick_step = [](double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
      if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
  };
  s << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444444\">\n";
  const double xs = tick_step(dx), ys = tick_step(dy);
  for (double t = std::ceil(viewport.xmin / xs) * xs; t <= viewport.xmax; t += xs) {
    const double v = std::abs(t) < 1e-12 * xs ? 0.0 : t;
    s << "<text x=\"" << fmt3(px(v)) << "\" y=\"" << fmt3(py(viewport.ymin) + 14) << "\" text-anchor=\"middle\">"
      << decimal(std::round(v / xs) * xs) << "</text>\n";
  }
  for (double t = std::ceil(viewport.ymin / ys) * ys; t <= viewport.ymax; t += ys) {
    const double v = std::abs(t) < 1e-12 * ys ? 0.0 : t;
    s << "<text x=\"" << fmt3(px(viewport.xmin) - 4) << "\" y=\"" << fmt3(py(v) + 3) << "\" text-anchor=\"end\">"
      << decimal(std::round(v / ys) * ys) << "</text>\n";
  }
  s << "</g>\n";

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& layer = curves[i];
    s << "<g fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"" << (layer.dashed ? " stroke-dasharray=\"4 3\"" : "")
      << "><title>" << layer.label << "</title>\n";
    for (const auto& stroke : layer.strokes) {
      if (stroke.empty()) continue;
      s << "<path d=\"";
      for (std::size_t k = 0; k < stroke.size(); ++k) {
        s << (k == 0 ? 'M' : 'L') << fmt3(px(stroke[k].real())) << ',' << fmt3(py(stroke[k].imag()));
      }
      s << "\"/>\n";
    }
    s << "</g>\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& layer = points[i];
    const double r = std::clamp(60.0 / std::max(layer.n, 1), 1.0, 4.0);
    s << "<g fill=\"" << palette[i % 10] << "\"><title>n=" << layer.n << "</title>\n";
    for (const auto& z : layer.points) {
      s << "<circle cx=\"" << fmt3(px(z.real())) << "\" cy=\"" << fmt3(py(z.imag())) << "\" r=\"" << fmt3(r)
        << "\"/>\n";
    }
    s << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace szego
