#include "mmexp/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmexp/error.hpp"

namespace mmexp {

std::string_view to_string(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::svg: return "svg";
  }
  return "csv";
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "svg") return Format::svg;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected csv, json or svg)");
}

namespace {

std::string fixed6(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

nlohmann::ordered_json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

std::string series_label(const CurveSeries& s) {
  return std::string(to_string(s.op)) + "_n" + std::to_string(s.n);
}

// --- SVG plotting -----------------------------------------------------------

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                         "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Plot {
 public:
  Plot(double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
    if (!(x1_ > x0_)) x1_ = x0_ + 1.0;
    if (!(y1_ > y0_)) y1_ = y0_ + 1.0;
  }

  double px(double x) const { return kLeft + (x - x0_) / (x1_ - x0_) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0_) / (y1_ - y0_) * (kHeight - kTop - kBottom); }

  void axes(std::ostringstream& out, std::string_view xlabel, std::string_view ylabel) const {
    const double xa = kLeft, xb = kWidth - kRight, ya = kHeight - kBottom, yb = kTop;
    out << "  <g class=\"axes\" stroke=\"#333\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << num(xa) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(xb) << "\" y2=\"" << num(ya) << "\"/>\n";
    out << "    <line x1=\"" << num(xa) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(xa) << "\" y2=\"" << num(yb) << "\"/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double x = x0_ + (x1_ - x0_) * i / 5.0;
      const double y = y0_ + (y1_ - y0_) * i / 5.0;
      out << "    <line x1=\"" << num(px(x)) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(px(x)) << "\" y2=\"" << num(ya + 5) << "\"/>\n";
      out << "    <line x1=\"" << num(xa - 5) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(xa) << "\" y2=\"" << num(py(y)) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g class=\"tick-labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
      const double x = x0_ + (x1_ - x0_) * i / 5.0;
      const double y = y0_ + (y1_ - y0_) * i / 5.0;
      out << "    <text x=\"" << num(px(x)) << "\" y=\"" << num(ya + 20) << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
      out << "    <text x=\"" << num(xa - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
    }
    out << "  </g>\n";
    out << "  <text class=\"xlabel\" x=\"" << num((xa + xb) / 2) << "\" y=\"" << num(kHeight - 20)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
    out << "  <text class=\"ylabel\" x=\"20\" y=\"" << num((ya + yb) / 2)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << num((ya + yb) / 2) << ")\">" << escape(ylabel) << "</text>\n";
  }

  void polyline(std::ostringstream& out, std::string_view cls, std::string_view label, std::string_view color,
                std::span<const double> xs, std::span<const double> ys, double width) const {
    out << "  <polyline class=\"" << cls << "\" data-label=\"" << escape(label) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"" << num(width) << "\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(ys[i])) continue;
      if (!first) out << ' ';
      out << num(px(xs[i])) << ',' << num(py(ys[i]));
      first = false;
    }
    out << "\"/>\n";
  }

 private:
  double x0_, x1_, y0_, y1_;
};

void svg_open(std::ostringstream& out, std::string_view title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" width=\"960\" height=\"600\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
  out << "  <text class=\"title\" x=\"480\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
      << escape(title) << "</text>\n";
}

void legend(std::ostringstream& out, const std::vector<std::pair<std::string, std::string_view>>& entries) {
  out << "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  double y = kTop + 10;
  for (const auto& [label, color] : entries) {
    out << "    <rect x=\"" << num(kWidth - kRight - 150) << "\" y=\"" << num(y - 9) << "\" width=\"14\" height=\"4\" fill=\""
        << color << "\"/>\n";
    out << "    <text x=\"" << num(kWidth - kRight - 130) << "\" y=\"" << num(y) << "\">" << escape(label) << "</text>\n";
    y += 16;
  }
  out << "  </g>\n";
}

}  // namespace

std::string table_csv(std::span<const ErrorReportRow> rows) {
  std::string out = "n,gm_l1,mk_l1,gm_sup,mk_sup\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + fixed6(r.gm_l1) + ',' + fixed6(r.mk_l1) + ',' + fixed6(r.gm_sup) + ',' +
           fixed6(r.mk_sup) + '\n';
  }
  return out;
}

std::string table_json(std::span<const ErrorReportRow> rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["gm_l1"] = number_or_null(r.gm_l1);
    j["mk_l1"] = number_or_null(r.mk_l1);
    j["gm_sup"] = number_or_null(r.gm_sup);
    j["mk_sup"] = number_or_null(r.mk_sup);
    if (r.flag) j["flag"] = *r.flag;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string table_svg(std::span<const ErrorReportRow> rows, std::string_view kernel, std::string_view function) {
  std::vector<double> ns, gm, mk;
  double ymax = 0.0;
  for (const auto& r : rows) {
    ns.push_back(r.n);
    gm.push_back(r.gm_l1);
    mk.push_back(r.mk_l1);
    for (double v : {r.gm_l1, r.mk_l1}) {
      if (std::isfinite(v)) ymax = std::max(ymax, v);
    }
  }
  const double x0 = ns.empty() ? 0.0 : ns.front();
  const double x1 = ns.empty() ? 1.0 : ns.back();
  Plot plot(x0, x1, 0.0, ymax * 1.05);
  std::ostringstream out;
  svg_open(out, "L1 approximation error of " + std::string(function) + ", kernel " + std::string(kernel));
  plot.axes(out, "n", "L1 error");
  plot.polyline(out, "curve", "gm", kPalette[0], ns, gm, 2.0);
  plot.polyline(out, "curve", "mk", kPalette[1], ns, mk, 2.0);
  legend(out, {{"max-min (gm)", kPalette[0]}, {"Kantorovich (mk)", kPalette[1]}});
  out << "</svg>\n";
  return out.str();
}

std::string curves_csv(const CurveSet& curves) {
  std::ostringstream out;
  out << "z,target";
  for (const auto& s : curves.series) out << ',' << series_label(s);
  out << '\n';
  for (std::size_t i = 0; i < curves.grid.size(); ++i) {
    out << fixed6(curves.grid[i]) << ',' << fixed6(curves.target[i]);
    for (const auto& s : curves.series) out << ',' << fixed6(s.values[i]);
    out << '\n';
  }
  return out.str();
}

std::string curves_json(const CurveSet& curves) {
  nlohmann::ordered_json j;
  j["function"] = curves.function;
  j["kernel"] = curves.kernel;
  j["z"] = curves.grid;
  j["target"] = curves.target;
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& s : curves.series) {
    j["series"].push_back({{"operator", std::string(to_string(s.op))}, {"n", s.n}, {"values", s.values}});
  }
  return j.dump(2) + "\n";
}

std::string curves_svg(const CurveSet& curves) {
  double lo = 0.0, hi = 1.0;
  auto widen = [&](std::span<const double> v) {
    for (double x : v) {
      if (!std::isfinite(x)) continue;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  };
  widen(curves.target);
  for (const auto& s : curves.series) widen(s.values);
  const double x0 = curves.grid.empty() ? 0.0 : curves.grid.front();
  const double x1 = curves.grid.empty() ? 1.0 : curves.grid.back();
  Plot plot(x0, x1, lo, hi);

  std::string ns;
  std::vector<int> seen;
  for (const auto& s : curves.series) {
    if (std::find(seen.begin(), seen.end(), s.n) != seen.end()) continue;
    seen.push_back(s.n);
    ns += (ns.empty() ? "" : ", ") + std::to_string(s.n);
  }
  std::ostringstream out;
  svg_open(out, curves.function + " with kernel " + curves.kernel + (ns.empty() ? "" : ", n = " + ns));
  plot.axes(out, "z", "value");
  plot.polyline(out, "target", "target", "#000000", curves.grid, curves.target, 2.5);
  std::vector<std::pair<std::string, std::string_view>> entries{{"target", "#000000"}};
  for (std::size_t i = 0; i < curves.series.size(); ++i) {
    const auto& s = curves.series[i];
    const auto color = kPalette[i % std::size(kPalette)];
    plot.polyline(out, "curve", series_label(s), color, curves.grid, s.values, 1.5);
    entries.emplace_back(series_label(s), color);
  }
  legend(out, entries);
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void emit(std::span<const ErrorReportRow> rows, Format format, const std::filesystem::path& path,
          std::string_view kernel, std::string_view function) {
  switch (format) {
    case Format::csv: write_file(path, table_csv(rows)); return;
    case Format::json: write_file(path, table_json(rows)); return;
    case Format::svg: write_file(path, table_svg(rows, kernel, function)); return;
  }
}

void emit(const CurveSet& curves, Format format, const std::filesystem::path& path) {
  switch (format) {
    case Format::csv: write_file(path, curves_csv(curves)); return;
    case Format::json: write_file(path, curves_json(curves)); return;
    case Format::svg: write_file(path, curves_svg(curves)); return;
  }
}

}  // namespace mmexp
