#include "wzs/cli/verify.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "wzs/extremal.hpp"
#include "wzs/generators.hpp"
#include "wzs/hypotheses.hpp"
#include "wzs/invariants.hpp"
#include "wzs/zerosum.hpp"

namespace wzs::cli {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "skip";
}

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Skipped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CheckOutcome run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    return {name, CheckStatus::pass, std::move(detail)};
  } catch (const Failed& f) {
    return {name, CheckStatus::fail, f.what()};
  } catch (const Skipped& s) {
    return {name, CheckStatus::skip, s.what()};
  } catch (const HypothesisError& e) {
    return {name, CheckStatus::skip, e.what()};
  } catch (const std::exception& e) {
    return {name, CheckStatus::fail, e.what()};
  }
}

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failed(detail);
}

}  // namespace

std::vector<CheckOutcome> run_verify(residue_t n, const VerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("verify: n must be >= 2");
  const ModulusProfile profile = factor(n);
  const WeightSet t = cubes(n);
  const auto hypothesis_gap = cubic_hypothesis_failure(profile);
  auto need_hypotheses = [&] {
    if (hypothesis_gap) throw Skipped("outside range: " + *hypothesis_gap);
  };
  Rng rng(options.rng_seed);
  std::vector<CheckOutcome> out;

  out.push_back(run_check("cube_residue_crt", [&] {
    std::set<residue_t> cube_values;
    for (residue_t x = 0; x < n; ++x) cube_values.insert(pow_mod(x, 3, n));
    for (residue_t a = 0; a < n; ++a) {
      expect(is_kth_power_residue(a, 3, n) == cube_values.contains(a),
             "mismatch at a = " + std::to_string(a));
    }
    return "all " + std::to_string(n) + " residues agree with enumeration";
  }));

  out.push_back(run_check("cube_projection", [&] {
    std::size_t count = 0;
    for (residue_t m : divisors(profile)) {
      if (m < 2) continue;
      expect(project(t, m) == cubes(m), "projection onto Z_" + std::to_string(m) + " differs");
      ++count;
    }
    return std::to_string(count) + " divisors";
  }));

  out.push_back(run_check("crt_observation", [&] {
    std::uniform_int_distribution<std::size_t> len(0, 6);
    for (std::size_t i = 0; i < options.trials; ++i) {
      const Sequence s = random_sequence(n, len(rng), rng);
      expect(crt_zero_check(s) == full_sequence_zero_sum(s, t).has_value(),
             "disagreement on " + s.to_string());
    }
    return std::to_string(options.trials) + " random sequences";
  }));

  // The search value feeds several checks below.
  std::optional<Sequence> incumbent;
  if (!hypothesis_gap) incumbent = lower_bound_witness(profile, WeightKind::cubes);
  const InvariantResult searched = davenport_search(n, t, options.budget, incumbent);

  out.push_back(run_check("davenport_formula_vs_search", [&] {
    need_hypotheses();
    const auto formula = davenport_formula(profile);
    expect(searched.conclusive, "search inconclusive, D >= " + std::to_string(searched.lower));
    expect(searched.value == formula.value, "formula " + std::to_string(formula.value) +
                                                " vs search " + std::to_string(searched.value));
    expect(!has_weighted_zero_subseq(*searched.witness, t), "search witness has a zero sum");
    return "D = " + std::to_string(formula.value);
  }));

  out.push_back(run_check("e_formula", [&] {
    need_hypotheses();
    const auto e = e_formula(profile);
    expect(e.value == gao_E(davenport_formula(profile).value, n), "E != D + n - 1");
    if (searched.conclusive) {
      expect(e.value == gao_E(searched.value, n), "E formula disagrees with searched D");
    }
    std::string detail = "E = " + std::to_string(e.value);
    if (n <= 8) {
      const auto direct = e_direct(n, t, {.budget = options.budget});
      expect(direct.conclusive && direct.value == e.value,
             "direct E = " + std::to_string(direct.value));
      detail += " (direct enumeration agrees)";
    }
    return detail;
  }));

  out.push_back(run_check("lower_bound_construction", [&] {
    need_hypotheses();
    const Sequence w = lower_bound_witness(profile, WeightKind::cubes);
    const residue_t d = davenport_formula(profile).value;
    expect(static_cast<residue_t>(w.length()) == d - 1,
           "witness length " + std::to_string(w.length()));
    return "witness " + w.to_string();
  }));

  out.push_back(run_check("length_m_extraction", [&] {
    need_hypotheses();
    const std::size_t m =
        static_cast<std::size_t>(3 * profile.small_omega_n1 + 2 * profile.small_omega_n2);
    const std::size_t len = m + static_cast<std::size_t>(2 * profile.big_omega_n1 +
                                                         profile.big_omega_n2);
    for (std::size_t i = 0; i < options.trials; ++i) {
      const Sequence s = random_sequence(n, len, rng);
      const Certificate c = extract_length_m(s, profile, m);
      expect(c.picked.size() == m && validates_zero_sum(c, s, t), "bad certificate");
    }
    return std::to_string(options.trials) + " sequences, m = " + std::to_string(m);
  }));

  out.push_back(run_check("extremal_construction", [&] {
    need_hypotheses();
    const Sequence s = construct_extremal(profile);
    const auto report = classify_structure(s, profile);
    expect(reconstruct(report) == s, "reconstruction differs");
    return "constructed " + s.to_string();
  }));

  std::optional<ExtremalEnumeration> classes;
  if (!hypothesis_gap) classes = enumerate_extremal(t, davenport_formula(profile).value, options.budget);

  out.push_back(run_check("coprimality_minima", [&] {
    need_hypotheses();
    expect(classes->complete, "enumeration incomplete");
    for (const auto& c : classes->classes) {
      for (residue_t p : profile.primes()) {
        std::size_t coprime = 0;
        for (residue_t x : c.canonical.terms())
          if (x % p != 0) ++coprime;
        const std::size_t need = p % 3 == 1 ? 2 : 1;
        expect(coprime >= need, c.canonical.to_string() + " has too few terms coprime to " +
                                    std::to_string(p));
      }
    }
    return std::to_string(classes->classes.size()) + " classes";
  }));

  out.push_back(run_check("coprimality_violators_zero_sum", [&] {
    need_hypotheses();
    const auto len = static_cast<std::size_t>(davenport_formula(profile).value - 1);
    for (std::size_t i = 0; i < options.trials; ++i) {
      const Sequence s = coprimality_violator(profile, len, rng);
      const auto c = has_weighted_zero_subseq(s, t);
      expect(c && validates_zero_sum(*c, s, t), "no zero sum in " + s.to_string());
    }
    return std::to_string(options.trials) + " violating sequences";
  }));

  out.push_back(run_check("structure_classification", [&] {
    need_hypotheses();
    expect(classes->complete, "enumeration incomplete");
    for (const auto& c : classes->classes) {
      const auto report = classify_structure(c.canonical, profile);
      expect(equivalent(reconstruct(report), c.canonical, t),
             "round trip failed for " + c.canonical.to_string());
    }
    return std::to_string(classes->classes.size()) + " classes classified";
  }));

  out.push_back(run_check("equivalence_invariance", [&] {
    std::uniform_int_distribution<std::size_t> len(1, 5);
    for (std::size_t i = 0; i < options.trials; ++i) {
      const Sequence s = random_sequence(n, len(rng), rng);
      const Sequence y = apply(random_transform(s.length(), t, rng), s);
      expect(canonicalize(s, t).canonical == canonicalize(y, t).canonical,
             "canonical forms differ for " + s.to_string());
      expect(has_weighted_zero_subseq(s, t).has_value() ==
                 has_weighted_zero_subseq(y, t).has_value(),
             "zero-sum-freeness not preserved for " + s.to_string());
    }
    return std::to_string(options.trials) + " transformations";
  }));

  out.push_back(run_check("prior_upper_bound", [&] {
    const auto bound = prior_upper_bound(profile);
    expect(searched.lower <= bound.davenport, "search lower bound " +
                                                  std::to_string(searched.lower) +
                                                  " exceeds " + std::to_string(bound.davenport));
    return "D <= " + std::to_string(bound.davenport);
  }));

  return out;
}

}  // namespace wzs::cli
