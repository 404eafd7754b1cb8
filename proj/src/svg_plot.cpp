#include "quadgait/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace quadgait {
namespace {

constexpr double kWidth = 900.0;
constexpr double kPanelHeight = 260.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr std::size_t kMaxPoints = 4000;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

std::string num(double v) { return format_number(std::round(v * 100.0) / 100.0); }

std::string tick_label(double v, double step) {
  if (std::abs(v) < step * 1e-9) v = 0.0;
  char buf[64];
  const int digits = std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

struct Range {
  double lo{std::numeric_limits<double>::infinity()};
  double hi{-std::numeric_limits<double>::infinity()};
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      const double d = std::max(std::abs(lo) * 0.1, 0.5);
      lo -= d;
      hi += d;
    } else {
      const double d = 0.05 * (hi - lo);
      lo -= d;
      hi += d;
    }
  }
};

void render_panel(std::string& out, const PlotPanel& panel, double y0) {
  Range xr, yr;
  for (const auto& s : panel.series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.pad();
  yr.pad();
  const double w = kWidth - kLeft - kRight;
  const double h = kPanelHeight - kTop - kBottom;
  const double top = y0 + kTop;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * w; };
  auto py = [&](double y) { return top + h - (y - yr.lo) / (yr.hi - yr.lo) * h; };

  out += "<g class=\"panel\">\n";
  out += "<text x=\"" + num(kLeft + w / 2) + "\" y=\"" + num(y0 + 24) +
         "\" text-anchor=\"middle\" font-size=\"15\">" + escape(panel.title) + "</text>\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(top) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";

  const auto xt = nice_ticks(xr.lo, xr.hi);
  const double xs = xt.size() > 1 ? xt[1] - xt[0] : 1.0;
  for (double v : xt) {
    const double x = px(v);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(top + h) + "\" x2=\"" + num(x) + "\" y2=\"" + num(top + h + 5) +
           "\" stroke=\"#333\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(top + h + 18) + "\" text-anchor=\"middle\" font-size=\"11\">" +
           tick_label(v, xs) + "</text>\n";
  }
  const auto yt = nice_ticks(yr.lo, yr.hi);
  const double ys = yt.size() > 1 ? yt[1] - yt[0] : 1.0;
  for (double v : yt) {
    const double y = py(v);
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + w) + "\" y2=\"" + num(y) +
           "\" stroke=\"#ddd\"/>\n";
    out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\" font-size=\"11\">" +
           tick_label(v, ys) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + w / 2) + "\" y=\"" + num(top + h + 38) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + escape(panel.x_label) + "</text>\n";
  out += "<text transform=\"translate(" + num(kLeft - 55) + "," + num(top + h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" + escape(panel.y_label) + "</text>\n";

  double legend_y = top + 10;
  for (const auto& s : panel.series) {
    Range sr;
    for (double v : s.y) sr.add(v);
    out += "<g class=\"series\" data-label=\"" + escape(s.label) + "\" data-min=\"" + format_number(sr.lo) +
           "\" data-max=\"" + format_number(sr.hi) + "\">\n";
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i : decimate(s.y, kMaxPoints)) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) out += ' ';
      out += num(px(s.x[i])) + "," + num(py(s.y[i]));
      first = false;
    }
    out += "\"/>\n</g>\n";
    out += "<line x1=\"" + num(kLeft + w + 12) + "\" y1=\"" + num(legend_y) + "\" x2=\"" + num(kLeft + w + 32) +
           "\" y2=\"" + num(legend_y) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(kLeft + w + 38) + "\" y=\"" + num(legend_y + 4) + "\" font-size=\"12\">" +
           escape(s.label) + "</text>\n";
    legend_y += 18;
  }
  out += "</g>\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::vector<std::size_t> decimate(const std::vector<double>& y, std::size_t max_points) {
  std::vector<std::size_t> idx;
  const std::size_t n = y.size();
  if (n <= max_points || max_points < 6) {
    idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
  }
  const std::size_t buckets = max_points / 3;
  for (std::size_t b = 0; b < buckets; ++b) {
    const std::size_t lo = b * n / buckets;
    const std::size_t hi = (b + 1) * n / buckets;
    std::size_t imin = lo, imax = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (y[i] < y[imin]) imin = i;
      if (y[i] > y[imax]) imax = i;
    }
    idx.push_back(lo);
    idx.push_back(imin);
    idx.push_back(imax);
  }
  idx.push_back(n - 1);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
  std::vector<double> out;
  if (!(hi > lo) || target < 1) return out;
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) out.push_back(v);
  return out;
}

std::string render_svg(const std::vector<PlotPanel>& panels, const std::string& title) {
  const double height = kPanelHeight * static_cast<double>(panels.size()) + 30.0;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) + "\" font-family=\"sans-serif\">\n";
  out += "<title>" + escape(title) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) render_panel(out, panels[i], 15.0 + kPanelHeight * i);
  out += "</svg>\n";
  return out;
}

PlotFiles write_plots_svg(const TraceTable& table, const std::filesystem::path& prefix) {
  if (table.rows.empty()) throw std::invalid_argument("cannot plot an empty trace");
  const auto t = table.column("t");

  std::vector<PlotPanel> traj;
  for (const char* axis : {"x", "y", "z"}) {
    PlotPanel p;
    p.title = std::string(axis) + " position";
    p.x_label = "time [s]";
    p.y_label = std::string(axis) + " [m]";
    p.series.push_back({"body", "#1f77b4", t, table.column(std::string("body_") + axis)});
    p.series.push_back({"leg 1", "#d62728", t, table.column(std::string("leg1_") + axis)});
    p.series.push_back({"leg 2", "#2ca02c", t, table.column(std::string("leg2_") + axis)});
    traj.push_back(std::move(p));
  }
  PlotPanel margin;
  margin.title = "Static stability margin";
  margin.x_label = "time [s]";
  margin.y_label = "margin [m]";
  margin.series.push_back({"margin", "#1f77b4", t, table.column("margin")});

  PlotFiles files;
  files.trajectories = prefix;
  files.trajectories += "_trajectories.svg";
  files.margin = prefix;
  files.margin += "_margin.svg";
  write_file(files.trajectories, render_svg(traj, "Trajectories of the body, leg 1 and leg 2"));
  write_file(files.margin, render_svg({margin}, "Static stability margin versus time"));
  return files;
}

PlotFiles write_plots_svg(const SimTrace& trace, const std::filesystem::path& prefix) {
  return write_plots_svg(trace_table(trace), prefix);
}

}  // namespace quadgait
