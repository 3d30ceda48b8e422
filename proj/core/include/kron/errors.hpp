#pragma once

#include <stdexcept>
#include <string>

namespace kron {

/// Raised when every available pathway for a value would exceed desk scale
/// (oracle cap, tableau-rule hypotheses).
class ScaleExceeded : public std::runtime_error {
 public:
  explicit ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the two-row Kronecker tableau rule is asked to evaluate a
/// multiplicity outside both of its hypotheses.
class RuleNotApplicable : public std::invalid_argument {
 public:
  explicit RuleNotApplicable(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace kron
