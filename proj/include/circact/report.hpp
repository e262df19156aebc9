#pragma once

// JSON renderings shared by the command-line tool and the Python module.
// Exact rationals appear as "p/q" strings.

#include "circact/classifier.hpp"
#include "circact/localization.hpp"
#include "circact/multigraph.hpp"
#include "circact/surgery.hpp"

#include <nlohmann/json.hpp>

#include <span>

namespace circact {

nlohmann::json to_json(const ChernReport& report);
nlohmann::json to_json(const JangCase& kase);
nlohmann::json to_json(const Match& match, const FixedPointData& data);
nlohmann::json to_json(const ClassificationResult& result, const FixedPointData& data);
nlohmann::json to_json(const Multigraph& graph);
nlohmann::json to_json(std::span<const Multigraph> graphs);
nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const SumReport& report);
nlohmann::json to_json(const GluingCheck& check);

}  // namespace circact
