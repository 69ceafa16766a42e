#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

/// Result of a sampled check. On failure `witness` holds the violating
/// arguments in the order the check documents, and `value` the nonzero
/// quantity that should have vanished.
struct CheckOutcome {
  bool passed = true;
  std::string reason;
  std::vector<RatFunc> witness;
  std::optional<RatFunc> value;

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(std::string why, std::vector<RatFunc> args, std::optional<RatFunc> v = std::nullopt) {
    return {false, std::move(why), std::move(args), std::move(v)};
  }
  explicit operator bool() const { return passed; }
};

}  // namespace derivcalc
