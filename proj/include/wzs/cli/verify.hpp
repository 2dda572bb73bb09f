#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wzs/modarith.hpp"
#include "wzs/search.hpp"

namespace wzs::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t rng_seed = 0;
  std::size_t trials = 200;
  SearchBudget budget{};
};

/// Runs every structural check that applies to Z_n with cubic weights.
/// Checks whose hypotheses n fails are reported as skipped.
std::vector<CheckOutcome> run_verify(residue_t n, const VerifyOptions& options);

std::string_view to_string(CheckStatus status);

}  // namespace wzs::cli
