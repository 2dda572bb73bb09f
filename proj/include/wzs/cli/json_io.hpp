#pragma once

#include "json.hpp"

#include "wzs/extremal.hpp"
#include "wzs/invariants.hpp"
#include "wzs/sequence.hpp"
#include "wzs/weightsets.hpp"

namespace wzs::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

json to_json(const WeightSet& weights);
json to_json(const Sequence& seq);
json to_json(const Certificate& cert, const Sequence& seq);
json to_json(const SearchStats& stats);
/// Drops wall time when `with_timing` is false so payloads are reproducible.
json to_json(const InvariantResult& result, bool with_timing = true);
json to_json(const StructureReport& report);
json to_json(const CanonicalSequence& c);

std::string_view to_string(StructureCase kind);

/// "3,17,40" -> {3, 17, 40}. Throws std::invalid_argument on junk.
std::vector<residue_t> parse_list(const std::string& text);
std::string join(const std::vector<residue_t>& values, char sep = ' ');

}  // namespace wzs::cli
