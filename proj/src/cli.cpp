#include "fuzzycurve/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzycurve/document.hpp"
#include "fuzzycurve/error.hpp"
#include "fuzzycurve/output.hpp"

namespace fuzzycurve::cli {

namespace {

struct ModelOptions {
  std::string document;
  std::optional<double> alpha;
  std::optional<int> order;
  std::optional<int> samples;
  std::string out;
  std::vector<std::string> series;
  std::string format = "json";
};

void add_model_options(CLI::App& cmd, ModelOptions& opts) {
  cmd.add_option("document", opts.document, "Model document (JSON)")->required();
  cmd.add_option("--alpha", opts.alpha, "Cut level in [0, 1), overrides the document");
  cmd.add_option("--order", opts.order, "B-spline order k, overrides the document");
  cmd.add_option("--samples", opts.samples, "Samples per curve, overrides the document");
  cmd.add_option("--out", opts.out, "Output file (default: standard output)");
}

void add_series_option(CLI::App& cmd, ModelOptions& opts, std::vector<std::string> defaults) {
  opts.series = std::move(defaults);
  cmd.add_option("--series", opts.series, "Comma-separated: band, tr, defuzzified, crisp, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"band", "tr", "defuzzified", "crisp", "all"}))
      ->capture_default_str();
}

struct Loaded {
  FuzzyCurveModel model;
  int samples;
};

Loaded load(const ModelOptions& opts) {
  auto doc = load_document(opts.document);
  if (opts.alpha) doc.alpha = *opts.alpha;
  if (opts.order) doc.order = *opts.order;
  if (opts.samples) doc.samples = *opts.samples;
  auto model = build_model(doc);
  return {std::move(model), doc.samples};
}

bool wants(const std::vector<std::string>& series, std::string_view name) {
  return std::any_of(series.begin(), series.end(), [&](const std::string& s) { return s == name || s == "all"; });
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  file << text;
  file.flush();
  if (!file) throw Error(ErrorKind::IoError, "failed writing " + path);
}

std::string_view regime_name(CutRegime r) { return r == CutRegime::Below ? "below" : "between"; }

std::string pipeline_report(const FuzzyCurveModel& model, const std::string& format) {
  using nlohmann::json;
  const auto controls = model.controls();
  if (format == "csv") {
    std::string text =
        "index,crisp_x,crisp_y,tr_left_x,tr_right_x,tr_left_y,tr_right_y,solution_x,solution_y,regime_x,regime_y\r\n";
    for (std::size_t i = 0; i < controls.size(); ++i) {
      const auto& p = controls[i];
      const auto [tx, ty] = reduce_point(p, model.alpha());
      const auto sol = pipeline_point(p, model.alpha());
      const std::vector<std::string> fields{
          std::to_string(i + 1),      format_number(p.x.c),     format_number(p.y.c),
          format_number(tx.left),     format_number(tx.right),  format_number(ty.left),
          format_number(ty.right),    format_number(sol.x),     format_number(sol.y),
          std::string(regime_name(regime_for(model.alpha(), p.x.h))),
          std::string(regime_name(regime_for(model.alpha(), p.y.h)))};
      for (std::size_t f = 0; f < fields.size(); ++f) text += (f == 0 ? "" : ",") + fields[f];
      text += "\r\n";
    }
    return text;
  }
  json points = json::array();
  for (std::size_t i = 0; i < controls.size(); ++i) {
    const auto& p = controls[i];
    const auto [tx, ty] = reduce_point(p, model.alpha());
    const auto sol = pipeline_point(p, model.alpha());
    points.push_back({
        {"index", i + 1},
        {"crisp", {{"x", p.x.c}, {"y", p.y.c}}},
        {"regime", {{"x", regime_name(regime_for(model.alpha(), p.x.h))},
                    {"y", regime_name(regime_for(model.alpha(), p.y.h))}}},
        {"reduced", {{"x", {{"left", tx.left}, {"c", tx.c}, {"right", tx.right}}},
                     {"y", {{"left", ty.left}, {"c", ty.c}, {"right", ty.right}}}}},
        {"solution", {{"x", sol.x}, {"y", sol.y}}},
    });
  }
  json root{{"alpha", model.alpha()}, {"points", std::move(points)}};
  return root.dump(2) + "\n";
}

std::vector<NamedPolyline> curve_series(const FuzzyCurveModel& model, int samples,
                                        const std::vector<std::string>& series) {
  std::vector<NamedPolyline> out;
  auto push = [&](std::string label, Polyline curve) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const NamedPolyline& s) { return s.label == label; });
    if (!seen) out.push_back({std::move(label), std::move(curve)});
  };
  if (wants(series, "band")) {
    for (auto& s : named_band(fuzzy_curve_band(model, samples))) push(std::move(s.label), std::move(s.curve));
  }
  if (wants(series, "tr")) {
    auto tr = reduced_curves(model, samples);
    push("tr_left", std::move(tr.left));
    push("crisp", std::move(tr.crisp));
    push("tr_right", std::move(tr.right));
  }
  if (wants(series, "defuzzified")) push("defuzzified", defuzzified_curve(model, samples));
  if (wants(series, "crisp")) push("crisp", crisp_curve(model, samples));
  return out;
}

Scene plot_scene(const FuzzyCurveModel& model, int samples, const std::vector<std::string>& series) {
  Scene scene;
  auto merge = [&](const Scene& part) {
    for (const auto& s : part.series) {
      const bool seen = std::any_of(scene.series.begin(), scene.series.end(),
                                    [&](const SceneSeries& existing) { return existing.label == s.label; });
      if (!seen) scene.series.push_back(s);
    }
  };
  if (wants(series, "band")) {
    const auto band = band_scene(model, samples);
    scene.title = band.title;
    merge(band);
  }
  if (wants(series, "tr")) {
    const auto tr = reduced_curves(model, samples);
    Scene part;
    part.add("tr_left", tr.left.points);
    part.add("crisp", tr.crisp.points);
    part.add("tr_right", tr.right.points);
    merge(part);
  }
  const bool solution = wants(series, "defuzzified");
  const bool crisp = wants(series, "crisp");
  if (solution || crisp) {
    const auto sol = solution_scene(model, samples);
    if (scene.title.empty()) scene.title = solution ? sol.title : "Crisp rational B-spline curve";
    Scene part;
    for (const auto& s : sol.series) {
      const bool is_solution = s.label == "defuzzified" || s.label == "solution controls";
      if (is_solution ? solution : crisp) part.series.push_back(s);
    }
    merge(part);
  }
  return scene;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal type-2 fuzzy rational B-spline curves", "fuzzycurve"};
  app.require_subcommand(1);

  ModelOptions pipeline_opts;
  auto* pipeline = app.add_subcommand("pipeline", "Per-point type-reduced intervals and crisp solutions");
  add_model_options(*pipeline, pipeline_opts);
  pipeline->add_option("--format", pipeline_opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  ModelOptions curve_opts;
  auto* curve = app.add_subcommand("curve", "Sample curves to CSV");
  add_model_options(*curve, curve_opts);
  add_series_option(*curve, curve_opts, {"all"});

  ModelOptions plot_opts;
  auto* plot = app.add_subcommand("plot", "Render curves to SVG");
  add_model_options(*plot, plot_opts);
  add_series_option(*plot, plot_opts, {"band"});

  ModelOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model document");
  add_model_options(*validate_cmd, validate_opts);

  std::string demo_out;
  auto* demo = app.add_subcommand("demo", "Write the built-in four-point demo document");
  demo->add_option("--out", demo_out, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*demo) {
      emit(serialize_document(demo_document()), demo_out, out);
    } else if (*validate_cmd) {
      const auto loaded = load(validate_opts);
      std::ostringstream msg;
      msg << "valid: " << loaded.model.size() << " points, order " << loaded.model.order() << ", alpha "
          << format_number(loaded.model.alpha()) << "\n";
      emit(msg.str(), validate_opts.out, out);
    } else if (*pipeline) {
      const auto loaded = load(pipeline_opts);
      emit(pipeline_report(loaded.model, pipeline_opts.format), pipeline_opts.out, out);
    } else if (*curve) {
      const auto loaded = load(curve_opts);
      const auto series = curve_series(loaded.model, loaded.samples, curve_opts.series);
      std::ostringstream csv;
      write_csv(series, csv);
      emit(csv.str(), curve_opts.out, out);
    } else if (*plot) {
      const auto loaded = load(plot_opts);
      emit(render_svg(plot_scene(loaded.model, loaded.samples, plot_opts.series)), plot_opts.out, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_validation() ? kExitValidation : kExitIo;
  }
  return kExitOk;
}

}  // namespace fuzzycurve::cli
