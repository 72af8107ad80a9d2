#pragma once

#include <stdexcept>
#include <string>

namespace anderson {

/// Two operands belong to different rings.
struct RingMismatchError : std::invalid_argument {
  RingMismatchError() : std::invalid_argument("ring mismatch") {}
};

struct NotAUnitError : std::domain_error {
  NotAUnitError() : std::domain_error("not a unit") {}
};

/// Ring cardinality exceeds the configured cap. Operations fail loudly
/// instead of truncating.
struct CapExceededError : std::runtime_error {
  CapExceededError() : std::runtime_error("ring too large") {}
};

/// Two localized elements have different multiplicative-set kinds.
struct KindMismatchError : std::invalid_argument {
  KindMismatchError() : std::invalid_argument("kind mismatch") {}
};

struct DimensionMismatchError : std::invalid_argument {
  DimensionMismatchError() : std::invalid_argument("dimension mismatch") {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what, int line = -1)
      : std::invalid_argument(what), line_number(line) {}
  int line_number;
};

}  // namespace anderson
