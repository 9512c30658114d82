#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <complex>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"
#include "szego/cli.hpp"
#include "szego/io.hpp"

using namespace szego;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("szego_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_svg(const std::string& text) {
  const auto open = text.find("<svg ");
  return open != std::string::npos && open < 64 && text.find("</svg>") != std::string::npos;
}

// Runs a verify suite into a report file; returns (exit code, report).
std::pair<int, json> verify(const fs::path& dir, std::vector<std::string> args) {
  const fs::path report = dir / "report.json";
  args.insert(args.begin(), "verify");
  args.push_back("--out");
  args.push_back(report.string());
  const Run r = cli(args);
  INFO(r.err);
  return {r.code, json::parse(slurp(report))};
}

}  // namespace

TEST_CASE("exponential zeros for degrees 1 to 70") {
  const fs::path dir = scratch("exp70");
  const Run r = cli({"zeros", "--family", "exp", "--n", "1..70", "--out", dir.string(), "--format", "csv,svg"});
  REQUIRE(r.code == kExitOk);
  const auto rows = read_zeros_csv((dir / "zeros_exp.csv").string());
  std::map<int, int> per_n;
  for (const auto& row : rows) per_n[row.n] += 1;
  CHECK(per_n.size() == 70);
  for (const auto& [n, count] : per_n) CHECK(count == n);
  // raw coordinates are n times the normalized ones
  const auto raw = read_zeros_csv((dir / "zeros_exp_raw.csv").string());
  REQUIRE(raw.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::abs(raw[i].z - rows[i].z * double(rows[i].n)) < 1e-12 * rows[i].n);
  }
  CHECK(looks_like_svg(slurp(dir / "zeros_exp.svg")));
  CHECK(fs::exists(dir / "szego_lab.log"));
}

TEST_CASE("divergent series zeros lie inside the unit disk") {
  const fs::path dir = scratch("divergent");
  REQUIRE(cli({"zeros", "--family", "divergent", "--n", "10", "--out", dir.string()}).code == kExitOk);
  const auto rows = read_zeros_csv((dir / "zeros_divergent.csv").string());
  CHECK(rows.size() == 10);
  for (const auto& row : rows) CHECK(std::abs(row.z) < 1.0);
}

TEST_CASE("usage errors exit with code 2") {
  const fs::path dir = scratch("usage");
  CHECK(cli({"zeros", "--family", "exp", "--n", "5..3", "--out", dir.string()}).code == kExitUsage);
  CHECK(cli({"zeros", "--family", "nope", "--n", "1..3", "--out", dir.string()}).code == kExitUsage);
  CHECK(cli({"zeros", "--family", "bessel0", "--n", "3", "--out", dir.string()}).code == kExitUsage);
  CHECK(cli({"zeros", "--family", "exp", "--n", "1..3", "--format", "png", "--out", dir.string()}).code == kExitUsage);
  CHECK(cli({"verify", "nope"}).code == kExitUsage);
  CHECK(cli({"verify", "annulus", "--n", "50"}).code == kExitUsage);
  CHECK(cli({"verify", "counts", "--family", "exp", "--n", "10"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  std::ofstream(dir / "bad.csv") << "not,a,zero,file\n1,2\n";
  CHECK(cli({"plot", "--zeros", (dir / "bad.csv").string(), "--out", (dir / "x.svg").string()}).code == kExitUsage);
}

TEST_CASE("config file with flag overrides") {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"family":{"family":"exp_integral","phi":{"a":1,"b":1,"mu":[0,0],"nu":[0,0],"w":[[1,0]]}},)"
                     << R"("n":"8..12","out":")" << (dir / "from_file").string() << R"(","format":"csv"})";
  REQUIRE(cli({"zeros", "--config", cfg.string()}).code == kExitOk);
  const auto rows = read_zeros_csv((dir / "from_file" / "zeros_exp_integral.csv").string());
  CHECK(rows.front().n == 8);
  CHECK(rows.back().n == 12);
  REQUIRE(cli({"zeros", "--config", cfg.string(), "--n", "20", "--out", (dir / "flag").string()}).code == kExitOk);
  const auto flagged = read_zeros_csv((dir / "flag" / "zeros_exp_integral.csv").string());
  CHECK(flagged.front().n == 20);
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(cli({"zeros", "--config", (dir / "broken.json").string()}).code == kExitUsage);
}

TEST_CASE("reruns are byte identical") {
  const fs::path a = scratch("rerun_a"), b = scratch("rerun_b");
  for (const auto& dir : {a, b}) {
    REQUIRE(cli({"zeros", "--family", "F2", "--n", "10..14", "--out", dir.string(), "--format", "csv,json,svg"}).code == kExitOk);
  }
  for (const char* f : {"zeros_exp_integral.csv", "zeros_exp_integral_raw.csv", "zeros_exp_integral.json",
                        "zeros_exp_integral.svg"}) {
    INFO(f);
    CHECK(slurp(a / f) == slurp(b / f));
    CHECK(!slurp(a / f).empty());
  }
  const auto [c1, r1] = verify(a, {"watson"});
  const auto [c2, r2] = verify(b, {"watson"});
  CHECK(r1.dump() == r2.dump());
}

TEST_CASE("curve sampling") {
  const fs::path dir = scratch("curves");
  REQUIRE(cli({"curve", "--type", "exp_szego", "--samples", "2048", "--out", (dir / "d.csv").string()}).code == kExitOk);
  const auto loop = read_curve_csv((dir / "d.csv").string());
  REQUIRE(loop.size() > 2048);
  CHECK(std::abs(loop.front().z - loop.back().z) < 1e-3);

  REQUIRE(cli({"curve", "--type", "dab", "--params", R"({"a":2,"b":1.5})", "--out", (dir / "dab.csv").string()}).code == kExitOk);
  const auto dab = read_curve_csv((dir / "dab.csv").string());
  const double corner = 1.0 / (2.0 * std::exp(1.0));
  bool top = false, bottom = false;
  for (const auto& row : dab) {
    if (std::abs(row.z - std::complex<double>(0, corner)) < 1e-12) top = true;
    if (std::abs(row.z - std::complex<double>(0, -corner)) < 1e-12) bottom = true;
  }
  CHECK(top);
  CHECK(bottom);

  REQUIRE(cli({"curve", "--type", "intermediate_exp", "--params", R"({"n":17})", "--out", (dir / "d17.csv").string()}).code == kExitOk);
  const double cutoff = std::acos(15.0 / 17.0);
  for (const auto& row : read_curve_csv((dir / "d17.csv").string())) {
    CHECK(std::abs(std::arg(row.z)) >= cutoff - 1e-12);
  }
  CHECK(cli({"curve", "--type", "nope", "--out", (dir / "x.csv").string()}).code == kExitUsage);
}

TEST_CASE("plot overlays") {
  const fs::path dir = scratch("plot");
  REQUIRE(cli({"zeros", "--family", "exp", "--n", "5..25:5", "--out", dir.string()}).code == kExitOk);
  REQUIRE(cli({"curve", "--type", "exp_szego", "--out", (dir / "d.csv").string()}).code == kExitOk);
  REQUIRE(cli({"curve", "--type", "unit_circle", "--params", "{}", "--out", (dir / "c.csv").string()}).code == kExitOk);
  REQUIRE(cli({"plot", "--zeros", (dir / "zeros_exp.csv").string(), "--out", (dir / "only.svg").string()}).code == kExitOk);
  CHECK(looks_like_svg(slurp(dir / "only.svg")));
  REQUIRE(cli({"plot", "--zeros", (dir / "zeros_exp.csv").string(), "--curve",
               (dir / "d.csv").string() + "," + (dir / "c.csv").string(), "--out", (dir / "both.svg").string()})
              .code == kExitOk);
  CHECK(looks_like_svg(slurp(dir / "both.svg")));
}

TEST_CASE("viewport is the union of all layers with a margin") {
  SvgScene scene;
  scene.points.push_back({1, {{0.0, 0.0}, {1.0, 0.5}}});
  scene.curves.push_back({"far", {{{-3.0, -1.0}, {-2.0, 2.0}}}, false});
  scene.fit_viewport();
  CHECK(scene.viewport.xmin < -3.0);
  CHECK(scene.viewport.xmax > 1.0);
  CHECK(scene.viewport.ymin < -1.0);
  CHECK(scene.viewport.ymax > 2.0);
  CHECK(scene.viewport.xmin == doctest::Approx(-3.0 - 0.05 * 4.0));
  CHECK(scene.viewport.ymax == doctest::Approx(2.0 + 0.05 * 3.0));
  CHECK(scene.render() == scene.render());
}

TEST_CASE("verify exit codes match the report") {
  const fs::path dir = scratch("verify");
  const auto [bc, b] = verify(dir, {"buckholtz", "--n", "1..100"});
  CHECK(bc == kExitOk);
  CHECK(b.at("pass") == true);
  CHECK(b.at("check") == "buckholtz");

  const auto [wc, w] = verify(dir, {"watson", "--sigma", "-0.5"});
  CHECK(wc == kExitOk);
  CHECK(w.at("pass") == true);

  const auto [lc, l] = verify(dir, {"lft", "--n", "60"});
  CHECK(lc == kExitOk);
  CHECK(l.at("pass") == true);

  // sigma = 0 with T = 0.01 reaches the roundoff floor, so errors stop decreasing
  const auto [fc, f] = verify(dir, {"watson", "--sigma", "0", "--T", "0.01", "--lambda", "1,2,3"});
  CHECK(fc == (f.at("pass") == true ? kExitOk : kExitFail));

  const auto [cc, c] = verify(dir, {"counts", "--family", "exp", "--n", "30", "--disk", "1.000001"});
  CHECK(cc == kExitOk);
  CHECK(c.at("pass") == true);

  const auto [rc, r] = verify(dir, {"rate", "--family", "F2", "--side", "right", "--n", "40..200:8"});
  INFO(r.dump());
  CHECK(rc == (r.at("pass") == true ? kExitOk : kExitFail));
  const auto& right = r.at("statistics").at("right");
  CHECK(right.at("expected_c") == "-4");
  CHECK(std::abs(std::stod(right.at("fitted_c").get<std::string>()) + 4.0) <= 1.0);
  CHECK(rc == kExitOk);
}

TEST_CASE("io parsers") {
  CHECK(parse_int_range("3..6") == std::vector<int>{3, 4, 5, 6});
  CHECK(parse_int_range("20..50:10") == std::vector<int>{20, 30, 40, 50});
  CHECK(parse_int_range("7,2,9") == std::vector<int>{7, 2, 9});
  CHECK_THROWS_AS(parse_int_range("5..3"), DomainError);
  CHECK_THROWS_AS(parse_int_range("x"), DomainError);
  CHECK(parse_complex("1.5,-2") == std::complex<double>(1.5, -2.0));
  CHECK(decimal(0.1) == "0.1");

  const SeriesSpec f2 = SeriesSpec::preset("F2");
  const SeriesSpec back = parse_family(family_json(f2));
  REQUIRE(back.is<family::ExpIntegral>());
  const PhiSpec& phi = back.as<family::ExpIntegral>().phi;
  CHECK(phi.mu == std::complex<double>(-0.5, -2.0));
  CHECK(phi.nu == std::complex<double>(4.0, 0.0));
  CHECK(parse_family(R"({"family":"lft","a0":2,"A":"0.5","B":3})").as<family::LFT>().A == 0.5);
  CHECK_THROWS_AS(parse_family(R"({"family":"mittag_leffler","lambda":-1})"), DomainError);

  const fs::path dir = scratch("io");
  std::ofstream(dir / "tiny.csv") << "family,n,k,re,im,residual\n"
                                  << "exp,3,0,-1.59607104587416046178587232542,-1.39505880417042402665912309110e-327,0\n";
  const auto rows = read_zeros_csv((dir / "tiny.csv").string());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].z.imag() == 0.0);
  std::ofstream(dir / "huge.csv") << "family,n,k,re,im,residual\nexp,3,0,1e999,0,0\n";
  CHECK_THROWS_AS(read_zeros_csv((dir / "huge.csv").string()), DomainError);
}
