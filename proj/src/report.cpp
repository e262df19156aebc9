#include "circact/report.hpp"

#include "circact/io.hpp"

namespace circact {

using nlohmann::json;

json to_json(const ChernReport& report) {
  return json{{"c1_cubed", to_string(report.c1_cubed)},
              {"todd", report.todd},
              {"c1c2", report.c1c2},
              {"euler", report.euler},
              {"chi_y", report.chi_y}};
}

json to_json(const JangCase& kase) {
  return json{{"case", to_string(kase.tag)}, {"params", kase.params}};
}

json to_json(const Match& match, const FixedPointData& data) {
  json assignment = json::object();
  for (std::size_t i = 0; i < data.size() && i < match.slot_of_point.size(); ++i) {
    assignment[data.points[i].name] = match.slot_of_point[i];
  }
  json out = to_json(match.kase);
  out["reversed"] = match.reversed;
  out["assignment"] = std::move(assignment);
  return out;
}

json to_json(const ClassificationResult& result, const FixedPointData& data) {
  json out = json::array();
  for (const auto& m : result.matches) out.push_back(to_json(m, data));
  return out;
}

json to_json(const Multigraph& graph) {
  json edges = json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"u", graph.vertices[e.u]}, {"v", graph.vertices[e.v]}, {"label", e.label}});
  }
  json components = json::array();
  for (const auto& c : graph.components) {
    json names = json::array();
    for (auto i : c) names.push_back(graph.vertices[i]);
    components.push_back(std::move(names));
  }
  return json{{"vertices", graph.vertices},
              {"edges", std::move(edges)},
              {"components", std::move(components)},
              {"connected", graph.connected()}};
}

json to_json(std::span<const Multigraph> graphs) {
  json out = json::array();
  for (const auto& g : graphs) out.push_back(to_json(g));
  return out;
}

json to_json(const Violation& violation) {
  return json{{"point", violation.point},
              {"rule", to_string(violation.rule)},
              {"detail", violation.detail}};
}

json to_json(const SumReport& report) {
  return json{{"n", report.dims.n},
              {"k", report.dims.k},
              {"exists", report.admissibility.exists},
              {"unique", report.admissibility.unique},
              {"diffeotype", report.diffeotype ? json(*report.diffeotype) : json(nullptr)}};
}

json to_json(const GluingCheck& check) {
  return json{{"passed", check.passed},
              {"samples", check.samples},
              {"worst_deviation", check.worst_deviation}};
}

}  // namespace circact
