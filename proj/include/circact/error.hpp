#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circact {

enum class ErrorKind {
  ParseError,
  ValidationError,
  InvalidData,
  WrongDimension,
  NonIntegralChernNumber,
  BadParams,
  WrongPointCount,
  MissingProfile,
  UnpairableWeights,
  CapExceeded,
  BadWeights,
  BadDimensions,
  NotAdmissible,
  NotSimplyConnected,
};

std::string_view to_string(ErrorKind kind);

/// Rule identifiers reported by validate().
enum class Rule {
  NonPositiveDimension,
  EmptyName,
  DuplicateName,
  WrongArity,
  ZeroWeight,
  WeightOutOfRange,
  OddThirdBetti,
  EulerMismatch,
};

std::string_view to_string(Rule rule);

struct Violation {
  std::string point;  // empty for dataset-level rules
  Rule rule;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<Violation> violations = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  ErrorKind kind_;
  std::vector<Violation> violations_;
};

}  // namespace circact
