#pragma once

#include "circact/core.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

namespace circact {

enum class LoadMode {
  Strict,     // reject invariant violations with Error(ValidationError)
  Unchecked,  // structural parsing only; caller runs validate()
};

/// Parses a dataset document. Malformed JSON or schema mismatch throws
/// Error(ParseError).
Dataset parse_dataset(std::string_view text, LoadMode mode = LoadMode::Strict);
Dataset load(std::istream& in, LoadMode mode = LoadMode::Strict);
Dataset load(const std::filesystem::path& path, LoadMode mode = LoadMode::Strict);

nlohmann::json to_json(const Dataset& dataset);
nlohmann::json to_json(const HomologyProfile& profile);

/// Pretty-printed document with sorted keys and a trailing newline.
std::string save(const Dataset& dataset);
void save(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace circact
