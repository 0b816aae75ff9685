#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnt {

enum class ErrorKind {
  missing_local_data,
  capacity_exceeded,
  domain,
  parse,
  invariant_violation,
  incomplete_dataset,
  io,
  contract,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace pnt
