#include "fuzzycurve/document.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "fuzzycurve/error.hpp"

namespace fuzzycurve {

using nlohmann::json;

namespace {

constexpr std::initializer_list<const char*> kExplicitKeys{"ll", "l", "rl", "c", "lr", "r", "rr", "h"};

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_error(where, "unknown field \"" + key + "\"");
  }
}

double number_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) schema_error(where, std::string("missing field \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number()) schema_error(where + "." + key, "expected a number");
  return v.get<double>();
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) schema_error(where + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

FuzzyScalar parse_scalar(const json& obj, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  if (obj.contains("spreads")) {
    reject_unknown_keys(obj, {"c", "h", "spreads"}, where);
    const double c = number_at(obj, "c", where);
    const double h = number_at(obj, "h", where);
    const auto& sp = obj.at("spreads");
    if (!sp.is_object()) schema_error(where + ".spreads", "expected an object");
    reject_unknown_keys(sp, {"left", "right"}, where + ".spreads");
    if (!sp.contains("left") || !sp.contains("right")) {
      schema_error(where + ".spreads", "needs both \"left\" and \"right\"");
    }
    const auto left = number_array(sp.at("left"), where + ".spreads.left");
    const auto right = number_array(sp.at("right"), where + ".spreads.right");
    if (left.size() != 3 || right.size() != 3) schema_error(where + ".spreads", "each side takes three values");
    return make_scalar_from_spreads(c, {left[0], left[1], left[2], right[0], right[1], right[2]}, h);
  }
  reject_unknown_keys(obj, kExplicitKeys, where);
  return make_scalar(number_at(obj, "ll", where), number_at(obj, "l", where), number_at(obj, "rl", where),
                     number_at(obj, "c", where), number_at(obj, "lr", where), number_at(obj, "r", where),
                     number_at(obj, "rr", where), number_at(obj, "h", where));
}

int integer_at(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) schema_error(key, "expected an integer");
  return v.get<int>();
}

json scalar_json(const FuzzyScalar& s) {
  return json{{"ll", s.ll}, {"l", s.l}, {"rl", s.rl}, {"c", s.c},
              {"lr", s.lr}, {"r", s.r}, {"rr", s.rr}, {"h", s.h}};
}

ModelDocument parse_json(const json& root) {
  if (!root.is_object()) schema_error("document", "expected a top-level object");
  reject_unknown_keys(root, {"points", "weights", "order", "alpha", "samples", "knots"}, "document");

  ModelDocument doc;
  if (root.contains("order")) doc.order = integer_at(root, "order");
  if (root.contains("samples")) doc.samples = integer_at(root, "samples");
  if (root.contains("alpha")) doc.alpha = number_at(root, "alpha", "document");
  if (root.contains("weights")) doc.weights = number_array(root.at("weights"), "weights");
  if (root.contains("knots")) doc.knots = number_array(root.at("knots"), "knots");

  if (!root.contains("points")) schema_error("document", "missing field \"points\"");
  const auto& points = root.at("points");
  if (!points.is_array()) schema_error("points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const auto& rec = points[i];
    if (!rec.is_object()) schema_error(where, "expected an object");
    reject_unknown_keys(rec, {"x", "y"}, where);
    if (!rec.contains("x") || !rec.contains("y")) schema_error(where, "needs both \"x\" and \"y\"");
    FuzzyPoint p;
    for (const char* axis : {"x", "y"}) {
      try {
        (axis[0] == 'x' ? p.x : p.y) = parse_scalar(rec.at(axis), where + "." + axis);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ValidationError, "point " + std::to_string(i + 1) + ", " + axis + ": " +
                                                    std::string(to_string(e.kind())) + ": " + e.detail());
      }
    }
    doc.points.push_back(p);
  }
  return doc;
}

}  // namespace

ModelDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return parse_json(root);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

ModelDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "failed reading " + path.string());
  try {
    return parse_document(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

FuzzyCurveModel build_model(const ModelDocument& doc) {
  try {
    if (doc.samples < 2) throw Error(ErrorKind::TooFewSamples, "samples must be at least 2");
    auto weights = doc.weights.empty() ? std::vector<double>(doc.points.size(), 1.0) : doc.weights;
    if (doc.knots) {
      return FuzzyCurveModel(doc.points, std::move(weights), doc.order, KnotVector(*doc.knots), doc.alpha);
    }
    return FuzzyCurveModel(doc.points, std::move(weights), doc.order, doc.alpha);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    throw Error(ErrorKind::ValidationError, std::string(to_string(e.kind())) + ": " + e.detail());
  }
}

FuzzyCurveModel load_model(const std::filesystem::path& path) { return build_model(load_document(path)); }

std::string serialize_document(const ModelDocument& doc) {
  json root;
  root["order"] = doc.order;
  root["alpha"] = doc.alpha;
  root["samples"] = doc.samples;
  if (!doc.weights.empty()) root["weights"] = doc.weights;
  if (doc.knots) root["knots"] = *doc.knots;
  json points = json::array();
  for (const auto& p : doc.points) points.push_back(json{{"x", scalar_json(p.x)}, {"y", scalar_json(p.y)}});
  root["points"] = std::move(points);
  return root.dump(2) + "\n";
}

ModelDocument document_from_model(const FuzzyCurveModel& model, int samples) {
  ModelDocument doc;
  doc.points.assign(model.controls().begin(), model.controls().end());
  doc.weights.assign(model.weights().begin(), model.weights().end());
  doc.order = model.order();
  doc.alpha = model.alpha();
  doc.samples = samples;
  doc.knots = std::vector<double>(model.knots().values().begin(), model.knots().values().end());
  return doc;
}

ModelDocument demo_document() {
  constexpr double h = 0.6;
  auto scalar = [](double c, Spreads sp) { return make_scalar_from_spreads(c, sp, h); };
  ModelDocument doc;
  doc.points = {
      {scalar(1.0, {0.6, 0.4, 0.2, 0.15, 0.3, 0.45}), scalar(1.0, {0.5, 0.3, 0.2, 0.1, 0.2, 0.4})},
      {scalar(2.0, {0.5, 0.35, 0.15, 0.2, 0.4, 0.6}), scalar(4.0, {0.6, 0.4, 0.2, 0.15, 0.35, 0.5})},
      {scalar(5.0, {0.4, 0.3, 0.1, 0.25, 0.45, 0.7}), scalar(5.0, {0.7, 0.5, 0.25, 0.1, 0.3, 0.45})},
      {scalar(6.0, {0.55, 0.35, 0.2, 0.1, 0.25, 0.4}), scalar(1.0, {0.45, 0.3, 0.1, 0.2, 0.35, 0.6})},
  };
  doc.weights = {1.0, 1.0, 3.0, 1.0};
  doc.order = kDefaultOrder;
  doc.alpha = kDefaultAlpha;
  doc.samples = kDefaultSamples;
  return doc;
}

}  // namespace fuzzycurve
