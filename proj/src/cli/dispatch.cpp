#include "wzs/cli/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "wzs/cli/cache.hpp"
#include "wzs/cli/json_io.hpp"
#include "wzs/cli/verify.hpp"
#include "wzs/extremal.hpp"
#include "wzs/hypotheses.hpp"
#include "wzs/invariants.hpp"
#include "wzs/zerosum.hpp"

namespace wzs::cli {

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t rng_seed = 0;
  unsigned jobs = 1;
  std::optional<std::int64_t> budget_ms;
  std::uint64_t budget_nodes = 100'000'000;
  bool no_cache = false;
};

struct WeightOptions {
  residue_t n = 0;
  std::string kind = "cubes";
  std::string elems;
};

class Runner {
 public:
  Runner(const GlobalOptions& global, std::ostream& out, std::ostream& err)
      : global_(global), out_(out), err_(err), cache_(Cache::default_path(), &err) {}

  int weights(const WeightOptions& w);
  int check(const WeightOptions& w, const std::string& seq, std::optional<std::size_t> length);
  int davenport(const WeightOptions& w, const std::string& method);
  int table(const std::string& kind, residue_t from, residue_t to);
  int extremal(const WeightOptions& w, const std::string& action, const std::string& seq);
  int verify(residue_t n, std::size_t trials);
  int cache(const std::string& action);

 private:
  SearchBudget budget() const {
    SearchBudget b;
    b.jobs = global_.jobs;
    b.max_nodes = global_.budget_nodes;
    std::int64_t ms = 60'000;
    if (const char* env = std::getenv("WZS_BUDGET_MS"); env != nullptr && *env != '\0') {
      ms = std::stoll(env);
    }
    if (global_.budget_ms) ms = *global_.budget_ms;
    b.max_time = std::chrono::milliseconds(ms);
    return b;
  }

  bool csv() const { return global_.format == "csv"; }

  void emit(const json& payload) { out_ << payload.dump(2) << "\n"; }

  WeightSet make(const WeightOptions& w) const {
    const WeightKind kind = parse_weight_kind(w.kind);
    if (kind == WeightKind::custom) {
      if (w.elems.empty()) throw std::invalid_argument("--kind custom needs --elems");
      return custom(w.n, parse_list(w.elems));
    }
    return make_weights(kind, w.n);
  }

  // Cached computation: `compute` returns the payload and whether it may be stored.
  template <typename F>
  json cached(const std::string& command, const json& params, F compute) {
    if (!global_.no_cache) {
      if (auto hit = cache_.lookup(command, params)) return hit->result;
    }
    const auto start = std::chrono::steady_clock::now();
    auto [payload, storable] = compute();
    if (!global_.no_cache && storable) {
      RunRecord record;
      record.command = command;
      record.parameters = params;
      record.result = payload;
      record.timestamp = now_timestamp();
      record.duration_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      cache_.append(record);
    }
    return payload;
  }

  std::optional<Sequence> incumbent_for(const WeightSet& weights) const {
    const ModulusProfile profile = factor(weights.modulus());
    if (weights.kind() == WeightKind::units) return lower_bound_witness(profile, WeightKind::units);
    if (weights.kind() == WeightKind::cubes && !cubic_hypothesis_failure(profile)) {
      return lower_bound_witness(profile, WeightKind::cubes);
    }
    return std::nullopt;
  }

  json search_payload(const WeightSet& weights) {
    const json params = {{"n", weights.modulus()},
                         {"weights", std::string(to_string(weights.kind()))},
                         {"elements", weights.elements()}};
    return cached("davenport-search", params, [&] {
      const auto r = davenport_search(weights.modulus(), weights, budget(), incumbent_for(weights));
      return std::pair{to_json(r), r.conclusive};
    });
  }

  const GlobalOptions& global_;
  std::ostream& out_;
  std::ostream& err_;
  Cache cache_;
};

int Runner::weights(const WeightOptions& w) {
  const WeightSet a = make(w);
  if (csv()) {
    out_ << "n,kind,elements,is_subgroup\n"
         << a.modulus() << "," << to_string(a.kind()) << "," << join(a.elements()) << ","
         << (a.is_subgroup() ? "true" : "false") << "\n";
  } else {
    emit(to_json(a));
  }
  return kOk;
}

int Runner::check(const WeightOptions& w, const std::string& seq_text,
                  std::optional<std::size_t> length) {
  const WeightSet a = make(w);
  const Sequence s(w.n, parse_list(seq_text));
  const auto cert = length ? has_fixed_length_zero_subseq(s, a, *length)
                           : has_weighted_zero_subseq(s, a);
  if (csv()) {
    out_ << "zero_sum_subseq,indices,weights\n" << (cert ? "true" : "false") << ",";
    if (cert) {
      std::vector<residue_t> idx, wts;
      for (const auto& p : cert->picked) {
        idx.push_back(static_cast<residue_t>(p.index));
        wts.push_back(p.weight);
      }
      out_ << join(idx) << "," << join(wts);
    } else {
      out_ << ",";
    }
    out_ << "\n";
    return kOk;
  }
  json j = {{"n", w.n},
            {"weights", std::string(to_string(a.kind()))},
            {"sequence", to_json(s)},
            {"zero_sum_subseq", cert.has_value()},
            {"certificate", cert ? to_json(*cert, s) : json(nullptr)}};
  if (length) j["length"] = *length;
  emit(j);
  return kOk;
}

int Runner::davenport(const WeightOptions& w, const std::string& method) {
  const WeightSet a = make(w);
  const ModulusProfile profile = factor(w.n);
  json payload = {{"n", w.n}, {"weights", std::string(to_string(a.kind()))}, {"method", method}};

  std::optional<residue_t> formula;
  if (method == "formula" || method == "both") {
    try {
      if (a.kind() != WeightKind::cubes) throw HypothesisError("weights are the cubes T_n");
      formula = davenport_formula(profile).value;
      payload["formula"] = *formula;
      payload["E_formula"] = e_formula(profile).value;
    } catch (const HypothesisError& e) {
      if (method == "formula") throw;
      payload["formula"] = nullptr;
      payload["formula_refusal"] = e.hypothesis();
    }
  }
  bool conclusive = true;
  if (method == "search" || method == "both") {
    const json result = search_payload(a);
    conclusive = result.at("conclusive").get<bool>();
    payload["search"] = result.at("value");
    payload["search_result"] = result;
  }
  if (method == "both") {
    payload["agrees"] = formula && conclusive ? json(*formula == payload["search"].get<residue_t>())
                                              : json(nullptr);
  }
  if (csv()) {
    out_ << "n,weights,formula,search,conclusive,agrees\n"
         << w.n << "," << to_string(a.kind()) << ","
         << (formula ? std::to_string(*formula) : "") << ","
         << (payload.contains("search") ? payload["search"].dump() : "") << ","
         << (conclusive ? "true" : "false") << ","
         << (payload.contains("agrees") && !payload["agrees"].is_null() ? payload["agrees"].dump()
                                                                         : "")
         << "\n";
  } else {
    emit(payload);
  }
  if (payload.contains("agrees") && payload["agrees"] == false) return kInternal;
  return conclusive ? kOk : kInconclusive;
}

int Runner::table(const std::string& kind_name, residue_t from, residue_t to) {
  const WeightKind kind = parse_weight_kind(kind_name);
  if (kind == WeightKind::custom) throw std::invalid_argument("table needs a built-in weight family");
  json rows = json::array();
  bool all_conclusive = true;
  for (residue_t n = std::max<residue_t>(from, 2); n <= to; ++n) {
    const json params = {{"n", n}, {"weights", std::string(to_string(kind))}};
    const json row = cached("table-row", params, [&] {
      const ModulusProfile profile = factor(n);
      const WeightSet a = make_weights(kind, n);
      json r = {{"n", n},
                {"n1", profile.n1},
                {"n2", profile.n2},
                {"Omega_n1", profile.big_omega_n1},
                {"Omega_n2", profile.big_omega_n2},
                {"D_formula", nullptr},
                {"E_formula", nullptr},
                {"agrees", nullptr}};
      if (kind == WeightKind::cubes && !cubic_hypothesis_failure(profile)) {
        r["D_formula"] = davenport_formula(profile).value;
        r["E_formula"] = e_formula(profile).value;
      }
      const auto s = davenport_search(n, a, budget(), incumbent_for(a));
      r["D_search"] = s.value;
      r["conclusive"] = s.conclusive;
      r["witness"] = s.witness ? to_json(*s.witness) : json::array();
      if (!r["D_formula"].is_null() && s.conclusive) r["agrees"] = r["D_formula"] == s.value;
      return std::pair{r, s.conclusive};
    });
    all_conclusive = all_conclusive && row["conclusive"].get<bool>();
    rows.push_back(row);
  }
  if (csv()) {
    out_ << "n,n1,n2,Omega_n1,Omega_n2,D_formula,D_search,E_formula,agrees,witness\n";
    auto cell = [](const json& v) { return v.is_null() ? std::string() : v.dump(); };
    for (const auto& r : rows) {
      std::string d_search = r["D_search"].dump();
      if (!r["conclusive"].get<bool>()) d_search = ">=" + d_search;
      out_ << cell(r["n"]) << "," << cell(r["n1"]) << "," << cell(r["n2"]) << ","
           << cell(r["Omega_n1"]) << "," << cell(r["Omega_n2"]) << "," << cell(r["D_formula"])
           << "," << d_search << "," << cell(r["E_formula"]) << "," << cell(r["agrees"]) << ","
           << join(r["witness"].get<std::vector<residue_t>>()) << "\n";
    }
  } else {
    emit(rows);
  }
  for (const auto& r : rows)
    if (r["agrees"] == false) return kInternal;
  return all_conclusive ? kOk : kInconclusive;
}

int Runner::extremal(const WeightOptions& w, const std::string& action,
                     const std::string& seq_text) {
  const WeightSet a = make(w);
  const ModulusProfile profile = factor(w.n);
  const bool structured = a.kind() == WeightKind::cubes && !cubic_hypothesis_failure(profile);

  if (action == "enumerate") {
    const json params = {{"n", w.n},
                         {"weights", std::string(to_string(a.kind()))},
                         {"elements", a.elements()}};
    const json payload = cached("extremal-enumerate", params, [&] {
      residue_t d = 0;
      if (structured) {
        d = davenport_formula(profile).value;
      } else {
        const auto s = davenport_search(w.n, a, budget(), incumbent_for(a));
        if (!s.conclusive) throw std::runtime_error("inconclusive");
        d = s.value;
      }
      const auto e = enumerate_extremal(a, d, budget());
      json classes = json::array();
      for (const auto& c : e.classes) {
        json entry = to_json(c);
        entry["structure"] = structured ? to_json(classify_structure(c.canonical, profile))
                                        : json(nullptr);
        classes.push_back(entry);
      }
      json p = {{"n", w.n},
                {"weights", std::string(to_string(a.kind()))},
                {"davenport", d},
                {"complete", e.complete},
                {"class_count", e.classes.size()},
                {"classes", classes},
                {"stats", to_json(e.stats)}};
      return std::pair{p, e.complete};
    });
    if (csv()) {
      out_ << "canonical,orbit_size\n";
      for (const auto& c : payload["classes"]) {
        out_ << join(c["canonical"].get<std::vector<residue_t>>()) << "," << c["orbit_size"]
             << "\n";
      }
    } else {
      emit(payload);
    }
    return payload["complete"].get<bool>() ? kOk : kInconclusive;
  }

  if (a.kind() != WeightKind::cubes) throw HypothesisError("weights are the cubes T_n");
  if (action == "construct") {
    const Sequence s = construct_extremal(profile);
    const json payload = {{"n", w.n},
                          {"sequence", to_json(s)},
                          {"structure", to_json(classify_structure(s, profile))}};
    if (csv()) {
      out_ << "n,sequence\n" << w.n << "," << join(s.terms()) << "\n";
    } else {
      emit(payload);
    }
    return kOk;
  }

  // classify
  if (seq_text.empty()) throw std::invalid_argument("classify needs --seq");
  const Sequence s(w.n, parse_list(seq_text));
  const auto report = classify_structure(s, profile);
  const Sequence back = reconstruct(report);
  const json payload = {{"n", w.n},
                        {"sequence", to_json(s)},
                        {"structure", to_json(report)},
                        {"reconstructed", to_json(back)},
                        {"equivalent", equivalent(back, s, a)}};
  if (csv()) {
    out_ << "n,sequence,first_case,equivalent\n"
         << w.n << "," << join(s.terms()) << "," << to_string(report.steps.front().kind) << ","
         << (payload["equivalent"].get<bool>() ? "true" : "false") << "\n";
  } else {
    emit(payload);
  }
  return kOk;
}

int Runner::verify(residue_t n, std::size_t trials) {
  VerifyOptions options;
  options.rng_seed = global_.rng_seed;
  options.trials = trials;
  options.budget = budget();
  const auto checks = run_verify(n, options);
  bool passed = true;
  json rows = json::array();
  for (const auto& c : checks) {
    passed = passed && c.status != CheckStatus::fail;
    rows.push_back(
        {{"check", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  if (csv()) {
    out_ << "check,status\n";
    for (const auto& c : checks) out_ << c.name << "," << to_string(c.status) << "\n";
  } else {
    emit({{"n", n}, {"checks", rows}, {"passed", passed}});
  }
  return passed ? kOk : kInternal;
}

int Runner::cache(const std::string& action) {
  if (action == "clear") {
    cache_.clear();
    emit({{"path", cache_.path().string()}, {"cleared", true}});
    return kOk;
  }
  const auto scan = cache_.scan();
  if (action == "list") {
    json keys = json::array();
    for (const auto& r : scan.records)
      keys.push_back({{"command", r.command}, {"parameters", r.parameters}, {"timestamp", r.timestamp}});
    emit(keys);
    return kOk;
  }
  emit({{"path", cache_.path().string()},
        {"entries", scan.records.size()},
        {"bad_lines", scan.bad_lines}});
  return kOk;
}

void add_weight_options(CLI::App* cmd, WeightOptions& w, bool need_n = true) {
  auto* n = cmd->add_option("--n", w.n, "modulus n")->check(CLI::Range(residue_t{2}, residue_t{1'000'000}));
  if (need_n) n->required();
  cmd->add_option("--weights,--kind", w.kind, "cubes|squares|units|pm1|one|custom");
  cmd->add_option("--elems", w.elems, "comma-separated weights for --kind custom");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted zero-sum invariants of Z_n", "wzs"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  GlobalOptions global;
  app.add_option("--format", global.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--rng-seed", global.rng_seed, "seed for randomized checks");
  app.add_option("--jobs", global.jobs, "search worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--budget-ms", global.budget_ms, "search time budget (default $WZS_BUDGET_MS or 60000)");
  app.add_option("--budget-nodes", global.budget_nodes, "search node budget");
  app.add_flag("--no-cache", global.no_cache, "bypass the result cache");

  WeightOptions w;
  std::string seq;
  std::optional<std::size_t> length;
  std::string method = "search";
  std::string table_kind = "cubes";
  residue_t from = 2, to = 50;
  std::size_t trials = 200;

  auto* weights_cmd = app.add_subcommand("weights", "print a weight set");
  add_weight_options(weights_cmd, w);

  auto* check_cmd = app.add_subcommand("check", "look for a weighted zero-sum subsequence");
  add_weight_options(check_cmd, w);
  check_cmd->add_option("--seq", seq, "comma-separated terms")->required();
  check_cmd->add_option("--length", length, "require exactly this many terms");

  auto* dav_cmd = app.add_subcommand("davenport", "weighted Davenport constant");
  add_weight_options(dav_cmd, w);
  dav_cmd->add_option("--method", method)->check(CLI::IsMember({"search", "formula", "both"}));

  auto* table_cmd = app.add_subcommand("table", "formula vs search over a range of n");
  table_cmd->add_option("--weights,--kind", table_kind);
  table_cmd->add_option("--from", from)->check(CLI::Range(residue_t{1}, residue_t{1'000'000}));
  table_cmd->add_option("--to", to)->check(CLI::Range(residue_t{1}, residue_t{1'000'000}));
  table_cmd->add_option("--out", global.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* ext_cmd = app.add_subcommand("extremal", "extremal sequences");
  add_weight_options(ext_cmd, w);
  ext_cmd->add_option("--seq", seq, "comma-separated terms (classify)");
  ext_cmd->require_subcommand(1, 1);
  auto* ext_enum = ext_cmd->add_subcommand("enumerate", "all classes up to equivalence");
  auto* ext_construct = ext_cmd->add_subcommand("construct", "recursive construction");
  auto* ext_classify = ext_cmd->add_subcommand("classify", "structural decomposition of --seq");

  auto* verify_cmd = app.add_subcommand("verify", "run every structural check for n");
  verify_cmd->add_option("--n", w.n)->required()->check(CLI::Range(residue_t{2}, residue_t{1'000'000}));
  verify_cmd->add_option("--trials", trials, "random trials per property");

  auto* cache_cmd = app.add_subcommand("cache", "inspect the result cache");
  cache_cmd->require_subcommand(0, 1);
  auto* cache_stats = cache_cmd->add_subcommand("stats", "entry counts");
  auto* cache_list = cache_cmd->add_subcommand("list", "cached keys");
  auto* cache_clear = cache_cmd->add_subcommand("clear", "truncate the cache");
  (void)cache_stats;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner run(global, out, err);
  try {
    if (*weights_cmd) return run.weights(w);
    if (*check_cmd) return run.check(w, seq, length);
    if (*dav_cmd) return run.davenport(w, method);
    if (*table_cmd) return run.table(table_kind, from, to);
    if (*ext_cmd) {
      const std::string action = *ext_enum ? "enumerate" : *ext_construct ? "construct" : "classify";
      (void)ext_classify;
      return run.extremal(w, action, seq);
    }
    if (*verify_cmd) return run.verify(w.n, trials);
    if (*cache_cmd) return run.cache(*cache_list ? "list" : *cache_clear ? "clear" : "stats");
  } catch (const HypothesisError& e) {
    err << "refused: " << e.what() << "\n";
    out << json{{"error", "refused"}, {"hypothesis", e.hypothesis()}}.dump(2) << "\n";
    return kRefused;
  } catch (const ContractError& e) {
    err << "internal: " << e.what() << "\n";
    out << json{{"error", "internal"}, {"detail", e.what()}}.dump(2) << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
  return kUsage;
}

}  // namespace wzs::cli
