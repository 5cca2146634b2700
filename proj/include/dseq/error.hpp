#pragma once

#include <stdexcept>
#include <string>

namespace dseq {

enum class ErrorCode {
  InvalidModulus,
  InvalidPrime,
  NotCoprime,
  EmptyInput,
  NotMaximumLength,
  InvalidArguments,
  Overflow,
  Decode,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported as a dseq::Error carrying a code the CLI
// maps to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dseq
