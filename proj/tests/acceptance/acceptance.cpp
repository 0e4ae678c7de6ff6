#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzycurve/cli.hpp"
#include "fuzzycurve/curve_model.hpp"
#include "fuzzycurve/document.hpp"
#include "fuzzycurve/pipeline.hpp"
#include "fuzzycurve/spline.hpp"
#include "oracles.hpp"

using namespace fuzzycurve;

namespace {

// Collects the first failure of a criterion; later checks still run.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failures_;
  }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    if (passed()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed, first: " + first_failure_;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

FuzzyCurveModel demo_model() { return build_model(demo_document()); }

Outcome basis_correctness() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= std::min(4, n); ++k) {
      const auto kv = clamped_uniform_knots(n, k);
      for (int s = 0; s < 1000; ++s) {
        const double t = s / 999.0;
        const auto values = basis_all(kv, k, t);
        double sum = 0.0;
        bool nonnegative = true;
        bool support = true;
        for (std::size_t i = 0; i < values.size(); ++i) {
          sum += values[i];
          nonnegative = nonnegative && values[i] >= 0.0;
          const bool outside = t < kv[i] || t > kv[i + static_cast<std::size_t>(k)];
          if (outside) support = support && values[i] == 0.0;
        }
        const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + fmt(t);
        o.require(std::abs(sum - 1.0) <= 1e-12, "partition of unity at " + at);
        o.require(nonnegative, "non-negativity at " + at);
        o.require(support, "support containment at " + at);
      }
    }
  }
  return o;
}

Outcome endpoint_interpolation() {
  Outcome o;
  const auto model = demo_model();
  o.require(model.order() == 3 && model.size() == 4, "demo model is order 3 with 4 controls");
  const auto curve = crisp_curve(model, kDefaultSamples);
  const auto first = Point2{model.controls().front().x.c, model.controls().front().y.c};
  const auto last = Point2{model.controls().back().x.c, model.controls().back().y.c};
  o.require(distance(curve.points.front(), first) <= 1e-12, "curve(0) equals the first control");
  o.require(distance(curve.points.back(), last) <= 1e-12, "curve(1) equals the last control");
  return o;
}

Outcome rational_oracle() {
  Outcome o;
  const auto model = demo_model();
  const auto polygon = component_polygons(model)[static_cast<std::size_t>(Component::Crisp)];
  const auto curve = model.curve_for(polygon);
  const std::array<Point2, 4> controls{polygon[0], polygon[1], polygon[2], polygon[3]};
  const std::array<double, 4> weights{model.weights()[0], model.weights()[1], model.weights()[2], model.weights()[3]};
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    const auto p = rational_point(curve, t);
    const auto q = testing::brute_force_rational_n4(controls, weights, t);
    o.require(std::abs(p.x - q.x) <= 1e-10 && std::abs(p.y - q.y) <= 1e-10, "oracle mismatch at t=" + fmt(t));
  }
  return o;
}

Outcome weight_homogeneity() {
  Outcome o;
  const auto model = demo_model();
  const auto kv = model.knots();
  const int k = model.order();
  for (const auto& polygon : component_polygons(model)) {
    std::vector<double> weights(model.weights().begin(), model.weights().end());
    auto scaled = weights;
    for (auto& w : scaled) w *= 7.3;
    const auto a = sample_curve(RationalCurveModel(polygon, weights, k, kv), kDefaultSamples);
    const auto b = sample_curve(RationalCurveModel(polygon, scaled, k, kv), kDefaultSamples);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      o.require(distance(a.points[i], b.points[i]) <= 1e-10, "scaling changed sample " + std::to_string(i));
    }

    auto low = weights;
    auto high = weights;
    low[2] = 1.0;
    high[2] = 3.0;
    const auto lo = sample_curve(RationalCurveModel(polygon, low, k, kv), kDefaultSamples);
    const auto hi = sample_curve(RationalCurveModel(polygon, high, k, kv), kDefaultSamples);
    for (std::size_t i = 1; i + 1 < lo.points.size(); ++i) {
      if (basis(kv, 2, k, lo.params[i]) > 0.0) {
        o.require(distance(hi.points[i], polygon[2]) < distance(lo.points[i], polygon[2]),
                  "raising w3 did not pull sample " + std::to_string(i));
      }
    }
  }
  return o;
}

Outcome pipeline_symmetry() {
  Outcome o;
  testing::Generator gen(20260501);
  double worst_symmetric = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(3, 8);
    std::vector<FuzzyPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({gen.symmetric_scalar(), gen.symmetric_scalar()});
    const FuzzyCurveModel model(pts, gen.weights(n), gen.integer(2, std::min(4, n)), gen.uniform(0.0, 0.99));
    const auto dev = deviation(defuzzified_curve(model, kDefaultSamples), crisp_curve(model, kDefaultSamples));
    worst_symmetric = std::max(worst_symmetric, dev.max_distance);
    o.require(dev.max_distance <= 1e-9, "symmetric trial " + std::to_string(trial) + " deviates by " +
                                            fmt(dev.max_distance));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(3, 8);
    std::vector<FuzzyPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({gen.scalar(), gen.scalar()});
    const FuzzyCurveModel model(pts, gen.weights(n), gen.integer(2, std::min(4, n)), gen.uniform(0.0, 0.99));
    const auto dev = deviation(defuzzified_curve(model, kDefaultSamples), crisp_curve(model, kDefaultSamples));
    o.require(dev.max_distance > 0.0, "asymmetric trial " + std::to_string(trial) + " shows no deviation");
  }
  return o;
}

Outcome alpha_cut_laws() {
  Outcome o;
  testing::Generator gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen.scalar(gen.uniform(0.1, 10.0));
    std::optional<AlphaCutScalar> previous;
    for (int g = 0; g <= 100; ++g) {
      const double alpha = g / 101.0;
      const auto cut = alpha_cut_scalar(s, alpha);
      const bool below = alpha <= s.h;
      o.require(cut.regime == (below ? CutRegime::Below : CutRegime::Between), "regime selection");
      o.require(cut.left.inner.has_value() == below && cut.right.inner.has_value() == below,
                "inner components present iff Below");
      if (previous && previous->regime == cut.regime) {
        bool nested = cut.left.outer >= previous->left.outer && cut.left.principal >= previous->left.principal &&
                      cut.right.principal <= previous->right.principal && cut.right.outer <= previous->right.outer;
        if (below) {
          nested = nested && *cut.left.inner >= *previous->left.inner && *cut.right.inner <= *previous->right.inner;
        }
        o.require(nested, "nesting at alpha=" + fmt(alpha));
      }
      previous = cut;
    }
    const auto top = alpha_cut_scalar(s, std::nextafter(1.0, 0.0));
    const double spread = std::max({top.c - top.left.outer, top.c - top.left.principal, top.right.principal - top.c,
                                    top.right.outer - top.c});
    o.require(spread <= 1e-9, "upper cuts converge to c, residual " + fmt(spread));
    o.require(!top.left.inner && !top.right.inner, "no inner components near alpha = 1");
  }
  return o;
}

Outcome type_reduction_regimes() {
  Outcome o;
  testing::Generator gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = gen.scalar(gen.uniform(0.1, 10.0));
    const auto cut = alpha_cut_scalar(s, gen.uniform(0.0, 0.999));
    const auto tr = type_reduce(cut);
    double left = 0.0;
    double right = 0.0;
    if (cut.regime == CutRegime::Below) {
      left = (cut.left.outer + cut.left.principal + *cut.left.inner) / 3.0;
      right = (*cut.right.inner + cut.right.principal + cut.right.outer) / 3.0;
    } else {
      left = (cut.left.outer + cut.left.principal) / 2.0;
      right = (cut.right.principal + cut.right.outer) / 2.0;
    }
    o.require(tr.left == left && tr.right == right && tr.c == s.c && tr.alpha == cut.alpha,
              "reduction formula at trial " + std::to_string(trial));
  }
  return o;
}

Outcome degeneracy() {
  Outcome o;
  testing::Generator gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(3, 8);
    std::vector<FuzzyPoint> pts;
    for (int i = 0; i < n; ++i) {
      const double x = gen.uniform(-10, 10);
      const double y = gen.uniform(-10, 10);
      const double h = gen.height();
      pts.push_back({make_scalar(x, x, x, x, x, x, x, h), make_scalar(y, y, y, y, y, y, y, h)});
    }
    const FuzzyCurveModel model(pts, gen.weights(n), gen.integer(2, std::min(4, n)), gen.uniform(0.0, 0.99));
    const int samples = 61;
    const auto crisp = crisp_curve(model, samples);
    std::vector<Polyline> others;
    for (const auto& c : fuzzy_curve_band(model, samples).curves) others.push_back(c);
    const auto tr = reduced_curves(model, samples);
    others.push_back(tr.left);
    others.push_back(tr.crisp);
    others.push_back(tr.right);
    others.push_back(defuzzified_curve(model, samples));
    for (const auto& curve : others) {
      o.require(deviation(curve, crisp).max_distance <= 1e-12, "degenerate curves diverge at trial " +
                                                                    std::to_string(trial));
    }
  }
  return o;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("fuzzycurve_acceptance_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_bytes(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome io_round_trip() {
  Outcome o;
  TempDir dir;
  const auto doc = dir.file("demo.json");
  o.require(run_cli({"demo", "--out", doc}) == cli::kExitOk, "demo writes a document");
  const auto text = read_bytes(doc);
  o.require(build_model(parse_document(text)) == demo_model(), "demo document round-trips to the same model");
  o.require(serialize_document(parse_document(text)) == text, "demo document re-serializes byte-identically");
  o.require(run_cli({"validate", doc}) == cli::kExitOk, "validate accepts the demo");

  const std::vector<std::pair<std::string, std::string>> swaps{{"ll", "l"}, {"l", "rl"}, {"rl", "c"},
                                                               {"c", "lr"}, {"lr", "r"}, {"r", "rr"}};
  std::vector<nlohmann::json> mutations;
  for (const auto& [a, b] : swaps) {
    auto j = nlohmann::json::parse(text);
    auto& x = j["points"][1]["x"];
    std::swap(x[a], x[b]);
    mutations.push_back(std::move(j));
  }
  auto height = nlohmann::json::parse(text);
  height["points"][1]["x"]["h"] = 1.5;
  mutations.push_back(std::move(height));

  for (std::size_t m = 0; m < mutations.size(); ++m) {
    const auto path = dir.file("mutation" + std::to_string(m) + ".json");
    write_bytes(path, mutations[m].dump(2));
    o.require(run_cli({"validate", path}) == cli::kExitValidation, "mutation " + std::to_string(m) + " not rejected");
  }

  const std::vector<std::vector<std::string>> outputs{{"curve", doc, "--series", "all"},
                                                      {"plot", doc, "--series", "band"},
                                                      {"plot", doc, "--series", "defuzzified,crisp"}};
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = dir.file("out" + std::to_string(i) + "_" + std::to_string(rep));
      auto args = outputs[i];
      args.insert(args.end(), {"--out", path});
      o.require(run_cli(args) == cli::kExitOk, outputs[i][0] + " succeeds");
      const auto bytes = read_bytes(path);
      o.require(!bytes.empty(), outputs[i][0] + " writes output");
      if (rep == 0) first = bytes;
      if (rep == 1) o.require(bytes == first, outputs[i][0] + " output differs between runs");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"basis partition of unity, non-negativity and support", basis_correctness},
      {"endpoint interpolation of the demo model", endpoint_interpolation},
      {"rational evaluation matches brute-force summation", rational_oracle},
      {"weight homogeneity and weight pull", weight_homogeneity},
      {"defuzzified curve symmetry and asymmetry sign test", pipeline_symmetry},
      {"alpha-cut regimes, nesting and convergence", alpha_cut_laws},
      {"type-reduction three-term and two-term means", type_reduction_regimes},
      {"degenerate controls collapse every curve", degeneracy},
      {"document round-trip, validation exits and deterministic output", io_round_trip},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("unexpected exception: ") + e.what());
    }
    if (!outcome.passed()) ++failed;
    std::cout << (outcome.passed() ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << outcome.summary() << ")\n";
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const bool fast = elapsed.count() < 5.0;
  std::cout << (fast ? "[PASS]" : "[FAIL]") << " runtime " << fmt(elapsed.count()) << " s (limit 5 s)\n";
  return failed == 0 && fast ? 0 : 1;
}
