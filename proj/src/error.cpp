#include "dseq/error.hpp"

namespace dseq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModulus: return "invalid-modulus";
    case ErrorCode::InvalidPrime: return "invalid-prime";
    case ErrorCode::NotCoprime: return "not-coprime";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::NotMaximumLength: return "not-maximum-length";
    case ErrorCode::InvalidArguments: return "invalid-arguments";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Decode: return "decode";
  }
  return "unknown";
}

}  // namespace dseq
