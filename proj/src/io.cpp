#include "circact/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace circact {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, "schema: " + what);
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) schema_error("unknown key \"" + key + "\" in " + where);
  }
}

std::int64_t as_int64(const json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error(where + " must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    schema_error(where + " exceeds the 64-bit range");
  }
  return value.get<std::int64_t>();
}

std::uint64_t as_count(const json& value, const std::string& where) {
  const auto v = as_int64(value, where);
  if (v < 0) schema_error(where + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

bool as_bool(const json& value, const std::string& where) {
  if (!value.is_boolean()) schema_error(where + " must be a boolean");
  return value.get<bool>();
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) schema_error("missing \"" + std::string(key) + "\" in " + where);
  return *it;
}

HomologyProfile parse_profile(const json& doc) {
  if (!doc.is_object()) schema_error("homology must be an object");
  reject_unknown_keys(doc, {"simply_connected", "b2", "b3", "torsion_free"}, "homology");
  HomologyProfile p;
  p.simply_connected = as_bool(require(doc, "simply_connected", "homology"), "simply_connected");
  p.b2 = as_count(require(doc, "b2", "homology"), "b2");
  p.b3 = as_count(require(doc, "b3", "homology"), "b3");
  p.torsion_free = as_bool(require(doc, "torsion_free", "homology"), "torsion_free");
  return p;
}

Dataset from_document(const json& doc) {
  if (!doc.is_object()) schema_error("document must be an object");
  reject_unknown_keys(doc, {"n", "fixed_points", "homology", "labels"}, "document");

  Dataset out;
  const auto n = as_int64(require(doc, "n", "document"), "n");
  if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min()) {
    schema_error("n out of range");
  }
  out.data.n = static_cast<int>(n);

  const auto& points = require(doc, "fixed_points", "document");
  if (!points.is_array()) schema_error("fixed_points must be an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& entry = points[i];
    const std::string where = "fixed_points[" + std::to_string(i) + "]";
    if (!entry.is_object()) schema_error(where + " must be an object");
    reject_unknown_keys(entry, {"name", "weights"}, where);
    const auto& name = require(entry, "name", where);
    if (!name.is_string()) schema_error(where + ".name must be a string");
    const auto& weights = require(entry, "weights", where);
    if (!weights.is_array()) schema_error(where + ".weights must be an array");
    std::vector<Weight> ws;
    ws.reserve(weights.size());
    for (const auto& w : weights) ws.push_back(as_int64(w, where + ".weights"));
    out.data.points.push_back({name.get<std::string>(), WeightVector(std::move(ws))});
  }

  if (auto it = doc.find("homology"); it != doc.end()) out.homology = parse_profile(*it);

  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) schema_error("labels must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) schema_error("label \"" + key + "\" must be a string");
      out.labels.emplace(key, value.get<std::string>());
    }
  }
  return out;
}

}  // namespace

Dataset parse_dataset(std::string_view text, LoadMode mode) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  Dataset out = from_document(doc);
  if (mode == LoadMode::Strict) {
    auto violations = validate(out);
    if (!violations.empty()) {
      throw Error(ErrorKind::ValidationError, "dataset violates invariants", std::move(violations));
    }
  }
  return out;
}

Dataset load(std::istream& in, LoadMode mode) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), mode);
}

Dataset load(const std::filesystem::path& path, LoadMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return load(in, mode);
}

json to_json(const HomologyProfile& profile) {
  return json{{"simply_connected", profile.simply_connected},
              {"b2", profile.b2},
              {"b3", profile.b3},
              {"torsion_free", profile.torsion_free}};
}

json to_json(const Dataset& dataset) {
  json points = json::array();
  for (const auto& p : dataset.data.points) {
    points.push_back({{"name", p.name},
                      {"weights", std::vector<Weight>(p.weights.begin(), p.weights.end())}});
  }
  json doc{{"n", dataset.data.n}, {"fixed_points", std::move(points)}};
  if (dataset.homology) doc["homology"] = to_json(*dataset.homology);
  if (!dataset.labels.empty()) doc["labels"] = dataset.labels;
  return doc;
}

std::string save(const Dataset& dataset) { return to_json(dataset).dump(2) + "\n"; }

void save(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << save(dataset);
}

}  // namespace circact
