#pragma once

#include <complex>
#include <string>
#include <vector>

#include "szego/curves.hpp"
#include "szego/series.hpp"

namespace szego {

/// A preset name ("exp", "F2", ...) or a JSON object such as
/// {"family":"exp_integral","phi":{"a":1,"b":1,"mu":[-0.5,-2],"nu":[4,0],"w":[[1,0]]}}.
SeriesSpec parse_family(const std::string& text);
/// JSON object text describing a family, with every number as a decimal string.
std::string family_json(const SeriesSpec& spec);

/// Curve by name (exp_szego, dab, mittag_leffler, intermediate_exp, trig_bessel,
/// unit_circle) with optional JSON parameters such as {"a":2,"b":1.5}.
CurveSpec parse_curve(const std::string& type, const std::string& params_json);
/// The curve whose points the normalized zeros of a family approach, if any.
bool limit_curve(const SeriesSpec& spec, CurveSpec& out);

/// "A..B", "A..B:step" or "a,b,c"; DomainError when empty or malformed.
std::vector<int> parse_int_range(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
/// "x" or "x,y".
std::complex<double> parse_complex(const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string decimal(double v);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);
/// Appends a timestamped line to a log file (never part of the payload).
void append_log(const std::string& path, const std::string& line);

struct ZeroRow {
  std::string family;
  int n = 0;
  std::complex<double> z;
};
struct CurveRow {
  double theta = 0.0;
  std::complex<double> z;
};
/// Parsers for the CSV files this library writes; DomainError on malformed input.
std::vector<ZeroRow> read_zeros_csv(const std::string& path);
std::vector<CurveRow> read_curve_csv(const std::string& path);

struct SvgPointLayer {
  int n = 0;
  std::vector<std::complex<double>> points;
};
struct SvgPolylineLayer {
  std::string label;
  /// Separate strokes; a closed stroke repeats its first point at the end.
  std::vector<std::vector<std::complex<double>>> strokes;
  bool dashed = false;
};
struct SvgViewport {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
};

struct SvgScene {
  std::vector<SvgPointLayer> points;
  std::vector<SvgPolylineLayer> curves;
  SvgViewport viewport;

  /// Union of all layer content with a 5% margin on each side.
  void fit_viewport();
  /// Deterministic SVG text.
  std::string render(int width = 640, int height = 640) const;
};

/// Splits curve CSV rows into strokes at jumps much larger than the typical spacing.
std::vector<std::vector<std::complex<double>>> strokes_from_rows(const std::vector<CurveRow>& rows);
/// Strokes of a sampled curve: the radial part (closed if the curve is) and each straight piece.
std::vector<std::vector<std::complex<double>>> strokes_from_polyline(const Polyline& curve);

}  // namespace szego
