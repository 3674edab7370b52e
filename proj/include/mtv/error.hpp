#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace mtv {

// Machine-readable error kinds, one per failure class the tools report.
enum class ErrorKind {
  SchemaError,
  NotAGroup,
  DomainMismatch,
  ReversalViolation,
  CocycleViolation,
  NotAPath,
  SurfaceMismatch,
  EmptyComponent,
  NotComposable,
  InvariantViolation,
  DegreeInBadSet,
  BadDegreeSample,
  NoValidH,
  BadBFunction,
  IndexOutOfRange,
  InadmissibleLabel,
  InadmissibleState,
  SingularGram,
  NotClosed,
  NotOrientable,
  BadLink,
  NotQuasiRegular,
  NotHamiltonian,
  InadmissibleEdge,
  GuardFailed,
  HamiltonicityLost,
  NotFound,
  UnsupportedDecoration,
  IoError,
};

const char* to_string(ErrorKind k);

// All library failures throw this; `witness` carries structured context
// (offending triangle, triple, edge, ...) for the CLI's JSON error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, nlohmann::json witness = {})
      : std::runtime_error(message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"error", to_string(kind_)}, {"message", what()}};
    if (!witness_.is_null() && !witness_.empty()) j["witness"] = witness_;
    return j;
  }

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg,
                              nlohmann::json witness = {}) {
  throw Error(kind, msg, std::move(witness));
}

}  // namespace mtv
