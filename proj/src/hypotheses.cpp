#include "wzs/hypotheses.hpp"

namespace wzs {

std::optional<std::string> cubic_hypothesis_failure(const ModulusProfile& profile) {
  if (profile.n % 2 == 0) return "n is odd";
  if (profile.n % 3 == 0) return "3 does not divide n";
  if (!profile.is_squarefree()) return "n is square-free";
  if (profile.n % 7 == 0) return "7 does not divide n";
  if (profile.n % 13 == 0) return "13 does not divide n";
  return std::nullopt;
}

}  // namespace wzs
