#include "pnt/error.hpp"

namespace pnt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::missing_local_data: return "MissingLocalData";
    case ErrorKind::capacity_exceeded: return "CapacityExceeded";
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::invariant_violation: return "InvariantViolation";
    case ErrorKind::incomplete_dataset: return "IncompleteDataset";
    case ErrorKind::io: return "IOError";
    case ErrorKind::contract: return "ContractFailure";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace pnt
