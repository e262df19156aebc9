#include "circact/error.hpp"

namespace circact {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NonIntegralChernNumber: return "NonIntegralChernNumber";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::WrongPointCount: return "WrongPointCount";
    case ErrorKind::MissingProfile: return "MissingProfile";
    case ErrorKind::UnpairableWeights: return "UnpairableWeights";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
  }
  return "Unknown";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::NonPositiveDimension: return "NonPositiveDimension";
    case Rule::EmptyName: return "EmptyName";
    case Rule::DuplicateName: return "DuplicateName";
    case Rule::WrongArity: return "WrongArity";
    case Rule::ZeroWeight: return "ZeroWeight";
    case Rule::WeightOutOfRange: return "WeightOutOfRange";
    case Rule::OddThirdBetti: return "OddThirdBetti";
    case Rule::EulerMismatch: return "EulerMismatch";
  }
  return "Unknown";
}

namespace {

std::string compose_message(const std::string& message, const std::vector<Violation>& violations) {
  if (violations.empty()) return message;
  std::string out = message + ":";
  for (const auto& v : violations) {
    out += " [";
    out += to_string(v.rule);
    if (!v.point.empty()) out += " at " + v.point;
    out += "]";
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::vector<Violation> violations)
    : std::runtime_error(compose_message(message, violations)),
      kind_(kind),
      violations_(std::move(violations)) {}

}  // namespace circact
