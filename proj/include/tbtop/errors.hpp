#pragma once

#include <stdexcept>
#include <string>

namespace tbtop {

/// Invalid or malformed input: bad JSON, violated preconditions, ambient
/// mismatches. The CLI maps this to exit code 1.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A well-formed operation that could not produce a positive result:
/// enumeration budget exceeded, no separating index below the search bound,
/// precision budget exhausted. The CLI maps this to exit code 2.
struct OpError : std::runtime_error {
  explicit OpError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tbtop
