#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wzs/modarith.hpp"

namespace wzs {

/// A computation was refused because its input lies outside the
/// hypotheses under which the result is guaranteed.
class HypothesisError : public std::domain_error {
 public:
  explicit HypothesisError(const std::string& hypothesis)
      : std::domain_error("hypothesis violated: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// An internal construction or verification contract was broken.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A checked structural statement failed on a concrete input. Carries the
/// offending data in what().
class TheoremViolation : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Returns the first failed hypothesis of the cubic-weight theorems (n odd,
/// 3 does not divide n, square-free, 7 and 13 do not divide n), or nullopt.
std::optional<std::string> cubic_hypothesis_failure(const ModulusProfile& profile);

inline void require_cubic_hypotheses(const ModulusProfile& profile) {
  if (auto failed = cubic_hypothesis_failure(profile)) throw HypothesisError(*failed);
}

}  // namespace wzs
