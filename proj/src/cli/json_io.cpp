#include "wzs/cli/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace wzs::cli {

json to_json(const WeightSet& weights) {
  return {{"n", weights.modulus()},
          {"kind", std::string(to_string(weights.kind()))},
          {"elements", weights.elements()},
          {"is_subgroup", weights.is_subgroup()}};
}

json to_json(const Sequence& seq) { return seq.terms(); }

json to_json(const Certificate& cert, const Sequence& seq) {
  json picked = json::array();
  for (const auto& p : cert.picked) {
    picked.push_back({{"index", p.index}, {"term", seq[p.index]}, {"weight", p.weight}});
  }
  return {{"picked", picked}, {"claimed_sum", cert.claimed_sum}};
}

json to_json(const SearchStats& stats) {
  return {{"nodes", stats.nodes}, {"wall_ms", stats.wall_ms}};
}

json to_json(const InvariantResult& result, bool with_timing) {
  json j = {{"n", result.n},
            {"weights", std::string(to_string(result.kind))},
            {"value", result.value},
            {"method", std::string(to_string(result.method))},
            {"conclusive", result.conclusive},
            {"lower", result.lower},
            {"upper", result.upper},
            {"witness", result.witness ? to_json(*result.witness) : json(nullptr)}};
  if (with_timing) {
    j["stats"] = to_json(result.stats);
  } else {
    j["stats"] = {{"nodes", result.stats.nodes}};
  }
  return j;
}

std::string_view to_string(StructureCase kind) {
  switch (kind) {
    case StructureCase::case1: return "case1";
    case StructureCase::case2: return "case2";
    case StructureCase::base: return "base";
  }
  return "base";
}

json to_json(const StructureReport& report) {
  // Nested outermost-first, mirroring the recursion.
  json child = nullptr;
  for (auto it = report.steps.rbegin(); it != report.steps.rend(); ++it) {
    json node = {{"case", std::string(to_string(it->kind))}, {"n", it->modulus}};
    if (it->kind != StructureCase::base) {
      node["p"] = it->prime;
      node["coprime_terms"] = it->coprime_terms;
      node["remainder"] = to_json(it->remainder);
      node["qualifying_primes"] = it->qualifying_primes;
      node["child"] = child;
    }
    child = std::move(node);
  }
  return child;
}

json to_json(const CanonicalSequence& c) {
  return {{"canonical", to_json(c.canonical)}, {"orbit_size", c.orbit_size}};
}

std::vector<residue_t> parse_list(const std::string& text) {
  std::vector<residue_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      if (text.empty()) break;
      throw std::invalid_argument("empty entry in list '" + text + "'");
    }
    token = token.substr(first, last - first + 1);
    residue_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::string join(const std::vector<residue_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace wzs::cli
