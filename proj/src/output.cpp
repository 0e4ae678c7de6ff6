#include "fuzzycurve/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double v, int decimals) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  std::string s(buf.data(), res.ptr);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::vector<NamedPolyline> named_band(const CurveBand& band) {
  std::vector<NamedPolyline> out;
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    out.push_back({std::string(label(kComponents[c])), band.curves[c]});
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::span<const NamedPolyline> series, std::ostream& out) {
  if (series.empty()) throw Error(ErrorKind::SizeMismatch, "no series to write");
  const auto& params = series.front().curve.params;
  for (const auto& s : series) {
    if (s.curve.params != params || s.curve.points.size() != params.size()) {
      throw Error(ErrorKind::SampleMismatch, "series \"" + s.label + "\" is sampled differently");
    }
  }
  std::string text = "t";
  for (const auto& s : series) text += "," + csv_field(s.label + "_x") + "," + csv_field(s.label + "_y");
  text += "\r\n";
  for (std::size_t i = 0; i < params.size(); ++i) {
    text += format_number(params[i]);
    for (const auto& s : series) {
      text += ',';
      text += format_number(s.curve.points[i].x);
      text += ',';
      text += format_number(s.curve.points[i].y);
    }
    text += "\r\n";
  }
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "failed writing CSV");
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

}  // namespace

void write_csv(std::span<const NamedPolyline> series, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csv(series, out); });
}

void write_csv(const CurveBand& band, const std::filesystem::path& path) {
  const auto series = named_band(band);
  write_csv(series, path);
}

SeriesStyle style_for(std::string_view label) {
  struct Entry {
    std::string_view label;
    SeriesStyle style;
  };
  static const std::array<Entry, 18> kPalette{{
      {"ll", {"#9aa5b1", 1.0, true, Mark::Line}},
      {"l", {"#2ca02c", 1.25, false, Mark::Line}},
      {"rl", {"#ff7f0e", 1.0, true, Mark::Line}},
      {"crisp", {"#d62728", 2.0, false, Mark::Line}},
      {"lr", {"#ff7f0e", 1.0, true, Mark::Line}},
      {"r", {"#2ca02c", 1.25, false, Mark::Line}},
      {"rr", {"#9aa5b1", 1.0, true, Mark::Line}},
      {"tr_left", {"#9467bd", 1.5, true, Mark::Line}},
      {"tr_right", {"#9467bd", 1.5, true, Mark::Line}},
      {"defuzzified", {"#1f4fd8", 2.0, false, Mark::Line}},
      {"crisp controls", {"#d62728", 1.0, false, Mark::Points}},
      {"solution controls", {"#1f4fd8", 1.0, false, Mark::Points}},
      {"ll controls", {"#9aa5b1", 1.0, false, Mark::Points}},
      {"l controls", {"#2ca02c", 1.0, false, Mark::Points}},
      {"rl controls", {"#ff7f0e", 1.0, false, Mark::Points}},
      {"lr controls", {"#ff7f0e", 1.0, false, Mark::Points}},
      {"r controls", {"#2ca02c", 1.0, false, Mark::Points}},
      {"rr controls", {"#9aa5b1", 1.0, false, Mark::Points}},
  }};
  for (const auto& e : kPalette) {
    if (e.label == label) return e.style;
  }
  const bool points = label.size() > 9 && label.substr(label.size() - 9) == " controls";
  return {"#555555", 1.0, false, points ? Mark::Points : Mark::Line};
}

void Scene::add(std::string label, std::vector<Point2> points) {
  auto style = style_for(label);
  series.push_back({std::move(label), std::move(points), std::move(style)});
}

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string px(double v) { return format_fixed(v, 2); }

struct Box {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
};

// Plot area in canvas pixels; the legend column sits to its right.
constexpr double kPlotLeft = 70.0;
constexpr double kPlotTop = 40.0;
constexpr double kPlotRight = 600.0;
constexpr double kPlotBottom = 550.0;

Box data_box(const Scene& scene) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const auto& s : scene.series) {
    for (const auto& p : s.points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  if (!(x0 <= x1)) return {};
  if (x1 - x0 == 0.0) {
    x0 -= 0.5;
    x1 += 0.5;
  }
  if (y1 - y0 == 0.0) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double pad_x = 0.05 * (x1 - x0);
  const double pad_y = 0.05 * (y1 - y0);
  return {x0 - pad_x, y0 - pad_y, x1 + pad_x, y1 + pad_y};
}

// Uniform scale, data box centered in the plot area, y pointing up.
struct Transform {
  double scale, offset_x, offset_y;

  explicit Transform(Box& box) {
    const double w = kPlotRight - kPlotLeft;
    const double h = kPlotBottom - kPlotTop;
    scale = std::min(w / (box.x1 - box.x0), h / (box.y1 - box.y0));
    const double cx = 0.5 * (box.x0 + box.x1);
    const double cy = 0.5 * (box.y0 + box.y1);
    offset_x = 0.5 * (kPlotLeft + kPlotRight) - scale * cx;
    offset_y = 0.5 * (kPlotTop + kPlotBottom) + scale * cy;
    // Widen the box to the full plot area so ticks span the frame.
    box = {(kPlotLeft - offset_x) / scale, (offset_y - kPlotBottom) / scale, (kPlotRight - offset_x) / scale,
           (offset_y - kPlotTop) / scale};
  }
  double x(double v) const { return offset_x + scale * v; }
  double y(double v) const { return offset_y - scale * v; }
};

}  // namespace

std::string render_svg(const Scene& scene) {
  Box box = data_box(scene);
  const Transform tf(box);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(kCanvasWidth) << "\" height=\""
      << px(kCanvasHeight) << "\" viewBox=\"0 0 " << px(kCanvasWidth) << " " << px(kCanvasHeight) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << px(kCanvasWidth) << "\" height=\"" << px(kCanvasHeight)
      << "\" fill=\"#ffffff\"/>\n";
  if (!scene.title.empty()) {
    svg << "<text x=\"" << px(0.5 * (kPlotLeft + kPlotRight)) << "\" y=\"24.00\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(scene.title) << "</text>\n";
  }

  svg << "<g id=\"axes\" stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "<rect x=\"" << px(kPlotLeft) << "\" y=\"" << px(kPlotTop) << "\" width=\"" << px(kPlotRight - kPlotLeft)
      << "\" height=\"" << px(kPlotBottom - kPlotTop) << "\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double f = static_cast<double>(i) / kTicks;
    const double gx = kPlotLeft + f * (kPlotRight - kPlotLeft);
    const double gy = kPlotBottom - f * (kPlotBottom - kPlotTop);
    svg << "<line x1=\"" << px(gx) << "\" y1=\"" << px(kPlotBottom) << "\" x2=\"" << px(gx) << "\" y2=\""
        << px(kPlotBottom + 5) << "\"/>\n";
    svg << "<line x1=\"" << px(kPlotLeft - 5) << "\" y1=\"" << px(gy) << "\" x2=\"" << px(kPlotLeft) << "\" y2=\""
        << px(gy) << "\"/>\n";
  }
  svg << "</g>\n<g id=\"tick-labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double f = static_cast<double>(i) / kTicks;
    const double gx = kPlotLeft + f * (kPlotRight - kPlotLeft);
    const double gy = kPlotBottom - f * (kPlotBottom - kPlotTop);
    svg << "<text x=\"" << px(gx) << "\" y=\"" << px(kPlotBottom + 18) << "\" text-anchor=\"middle\">"
        << format_fixed(box.x0 + f * (box.x1 - box.x0), 2) << "</text>\n";
    svg << "<text x=\"" << px(kPlotLeft - 8) << "\" y=\"" << px(gy + 4) << "\" text-anchor=\"end\">"
        << format_fixed(box.y0 + f * (box.y1 - box.y0), 2) << "</text>\n";
  }
  svg << "</g>\n";

  for (std::size_t i = 0; i < scene.series.size(); ++i) {
    const auto& s = scene.series[i];
    svg << "<g id=\"series-" << i << "\" data-label=\"" << xml_escape(s.label) << "\">\n";
    if (s.style.mark == Mark::Line) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.style.color << "\" stroke-width=\""
          << format_fixed(s.style.stroke_width, 2) << "\"";
      if (s.style.dashed) svg << " stroke-dasharray=\"6,4\"";
      svg << " points=\"";
      for (std::size_t j = 0; j < s.points.size(); ++j) {
        if (j > 0) svg << ' ';
        svg << px(tf.x(s.points[j].x)) << ',' << px(tf.y(s.points[j].y));
      }
      svg << "\"/>\n";
    } else {
      for (const auto& p : s.points) {
        svg << "<circle cx=\"" << px(tf.x(p.x)) << "\" cy=\"" << px(tf.y(p.y)) << "\" r=\"3.00\" fill=\""
            << s.style.color << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }

  svg << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = kPlotRight + 20.0;
  for (std::size_t i = 0; i < scene.series.size(); ++i) {
    const auto& s = scene.series[i];
    const double ly = kPlotTop + 10.0 + 20.0 * static_cast<double>(i);
    if (s.style.mark == Mark::Line) {
      svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\"" << px(lx + 24) << "\" y2=\"" << px(ly)
          << "\" stroke=\"" << s.style.color << "\" stroke-width=\"" << format_fixed(s.style.stroke_width, 2)
          << "\"" << (s.style.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    } else {
      svg << "<circle cx=\"" << px(lx + 12) << "\" cy=\"" << px(ly) << "\" r=\"3.00\" fill=\"" << s.style.color
          << "\"/>\n";
    }
    svg << "<text x=\"" << px(lx + 32) << "\" y=\"" << px(ly + 4) << "\">" << xml_escape(s.label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_svg(const Scene& scene, const std::filesystem::path& path) {
  const auto text = render_svg(scene);
  write_file(path, [&](std::ostream& out) { out << text; });
}

Scene band_scene(const FuzzyCurveModel& model, int samples) {
  Scene scene;
  scene.title = "Fuzzy rational B-spline band";
  const auto band = fuzzy_curve_band(model, samples);
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    scene.add(std::string(label(kComponents[c])), band.curves[c].points);
  }
  const auto polygons = component_polygons(model);
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    scene.add(std::string(label(kComponents[c])) + " controls", polygons[c]);
  }
  return scene;
}

Scene solution_scene(const FuzzyCurveModel& model, int samples) {
  Scene scene;
  scene.title = "Crisp solution curve";
  scene.add("defuzzified", defuzzified_curve(model, samples).points);
  scene.add("crisp", crisp_curve(model, samples).points);
  scene.add("solution controls", solution_polygon(model));
  const auto polygons = component_polygons(model);
  scene.add("crisp controls", polygons[static_cast<std::size_t>(Component::Crisp)]);
  return scene;
}

}  // namespace fuzzycurve
