#include "wzs/zerosum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wzs/hypotheses.hpp"

namespace wzs {

namespace {

void require_same_modulus(const Sequence& seq, const WeightSet& weights) {
  if (seq.modulus() != weights.modulus()) {
    throw std::invalid_argument("modulus mismatch: sequence over Z_" +
                                std::to_string(seq.modulus()) + ", weights over Z_" +
                                std::to_string(weights.modulus()));
  }
}

// Smallest a in A with target - a*x in `allowed`, or with target = a*x when
// `accept_exact` is set.
std::optional<residue_t> pick_weight(residue_t target, residue_t x, const WeightSet& weights,
                                     const ResidueSet* allowed, bool accept_exact) {
  const residue_t n = weights.modulus();
  for (residue_t a : weights.elements()) {
    const residue_t rest = mod(target - mul_mod(a, x, n), n);
    if (accept_exact && rest == 0) return a;
    if (allowed != nullptr && allowed->contains(rest)) return a;
  }
  return std::nullopt;
}

// layers[j] = nonempty weighted sums over the first j terms.
std::vector<ResidueSet> subsequence_layers(const Sequence& seq, const WeightSet& weights) {
  const residue_t n = seq.modulus();
  std::vector<ResidueSet> layers;
  layers.reserve(seq.length() + 1);
  layers.emplace_back(n);
  for (residue_t x : seq.terms()) {
    const ResidueSet& prev = layers.back();
    ResidueSet next = prev;
    for (residue_t w : weighted_multiples(x, weights).elements()) {
      next.insert(w);
      next.or_rotated(prev, w);
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

ResidueSet weighted_multiples(residue_t x, const WeightSet& weights) {
  const residue_t n = weights.modulus();
  ResidueSet out(n);
  for (residue_t a : weights.elements()) out.insert(mul_mod(a, mod(x, n), n));
  return out;
}

ResidueSet reachable_sums(const Sequence& seq, const WeightSet& weights) {
  require_same_modulus(seq, weights);
  return subsequence_layers(seq, weights).back();
}

std::optional<Certificate> has_weighted_zero_subseq(const Sequence& seq,
                                                    const WeightSet& weights) {
  require_same_modulus(seq, weights);
  const auto layers = subsequence_layers(seq, weights);
  if (!layers.back().contains(0)) return std::nullopt;

  Certificate cert;
  residue_t target = 0;
  std::size_t limit = seq.length();
  for (;;) {
    // The first layer holding the target pins down the last term used.
    std::size_t j = 1;
    while (j <= limit && !layers[j].contains(target)) ++j;
    if (j > limit) throw ContractError("zero-sum backtrack lost its target");
    const residue_t x = seq[j - 1];
    const auto a = pick_weight(target, x, weights, &layers[j - 1], true);
    if (!a) throw ContractError("zero-sum backtrack found no weight");
    cert.picked.push_back({j - 1, *a});
    target = mod(target - mul_mod(*a, x, seq.modulus()), seq.modulus());
    if (target == 0) break;
    limit = j - 1;
  }
  std::reverse(cert.picked.begin(), cert.picked.end());
  return cert;
}

std::optional<Certificate> has_fixed_length_zero_subseq(const Sequence& seq,
                                                        const WeightSet& weights,
                                                        std::size_t length, EmptySum empty) {
  require_same_modulus(seq, weights);
  if (length > seq.length()) return std::nullopt;
  if (length == 0) {
    if (empty == EmptySum::include) return Certificate{};
    return std::nullopt;
  }
  const residue_t n = seq.modulus();
  const std::size_t ell = seq.length();
  // layers[j][c]: sums of exactly c weighted terms among the first j.
  std::vector<std::vector<ResidueSet>> layers(ell + 1,
                                              std::vector<ResidueSet>(length + 1, ResidueSet(n)));
  layers[0][0].insert(0);
  for (std::size_t j = 1; j <= ell; ++j) {
    const auto mults = weighted_multiples(seq[j - 1], weights).elements();
    layers[j][0] = layers[j - 1][0];
    for (std::size_t c = 1; c <= std::min(j, length); ++c) {
      ResidueSet& cur = layers[j][c];
      cur = layers[j - 1][c];
      const ResidueSet& prev = layers[j - 1][c - 1];
      if (prev.empty()) continue;
      for (residue_t w : mults) cur.or_rotated(prev, w);
    }
  }
  if (!layers[ell][length].contains(0)) return std::nullopt;

  Certificate cert;
  residue_t target = 0;
  std::size_t c = length;
  for (std::size_t j = ell; j > 0 && c > 0; --j) {
    if (layers[j - 1][c].contains(target)) continue;
    const residue_t x = seq[j - 1];
    const auto a = pick_weight(target, x, weights, &layers[j - 1][c - 1], false);
    if (!a) throw ContractError("fixed-length backtrack lost its target");
    cert.picked.push_back({j - 1, *a});
    target = mod(target - mul_mod(*a, x, n), n);
    --c;
  }
  std::reverse(cert.picked.begin(), cert.picked.end());
  return cert;
}

std::optional<Certificate> full_sequence_zero_sum(const Sequence& seq, const WeightSet& weights) {
  require_same_modulus(seq, weights);
  const residue_t n = seq.modulus();
  std::vector<ResidueSet> layers;
  layers.reserve(seq.length() + 1);
  layers.emplace_back(n);
  layers.back().insert(0);
  for (residue_t x : seq.terms()) {
    ResidueSet next(n);
    for (residue_t w : weighted_multiples(x, weights).elements()) next.or_rotated(layers.back(), w);
    layers.push_back(std::move(next));
  }
  if (!layers.back().contains(0)) return std::nullopt;

  Certificate cert;
  residue_t target = 0;
  for (std::size_t j = seq.length(); j > 0; --j) {
    const residue_t x = seq[j - 1];
    const auto a = pick_weight(target, x, weights, &layers[j - 1], false);
    if (!a) throw ContractError("full-sequence backtrack lost its target");
    cert.picked.push_back({j - 1, *a});
    target = mod(target - mul_mod(*a, x, n), n);
  }
  std::reverse(cert.picked.begin(), cert.picked.end());
  return cert;
}

bool crt_zero_check(const Sequence& seq) {
  const ModulusProfile profile = factor(seq.modulus());
  for (const auto& f : profile.factors) {
    const residue_t q = f.power();
    if (!full_sequence_zero_sum(seq.project(q), cubes(q))) return false;
  }
  return true;
}

namespace {

struct IndexedTerm {
  std::size_t index;  // position in the caller's sorted sequence
  residue_t value;
};

struct ExtractPick {
  std::size_t index;
  residue_t weight;
};

// Smallest element of T_n above each residue class mod n/p.
std::map<residue_t, residue_t> cube_lifts(residue_t n, residue_t coarse) {
  std::map<residue_t, residue_t> lifts;
  const WeightSet t = cubes(n);
  for (residue_t a : t.elements()) lifts.emplace(a % coarse, a);
  return lifts;
}

std::vector<ExtractPick> extract_rec(const std::vector<IndexedTerm>& terms,
                                     const ModulusProfile& profile, std::size_t m) {
  const residue_t n = profile.n;
  if (n == 1) {
    // Every term vanishes; any m of them with any weight will do. Weight 0
    // is the residue of every lift target mod 1.
    std::vector<ExtractPick> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back({terms[i].index, 0});
    return out;
  }

  auto count_coprime = [&](residue_t p) {
    return static_cast<std::size_t>(std::count_if(
        terms.begin(), terms.end(), [&](const IndexedTerm& t) { return t.value % p != 0; }));
  };

  auto peel = [&](residue_t p) {
    std::vector<IndexedTerm> rest;
    for (const auto& t : terms)
      if (t.value % p == 0) rest.push_back({t.index, t.value / p});
    const residue_t coarse = n / p;
    const auto inner = extract_rec(rest, factor(coarse), m);
    const auto lifts = cube_lifts(n, coarse);
    std::vector<ExtractPick> out;
    for (const auto& pick : inner) {
      const auto it = lifts.find(pick.weight % coarse);
      if (it == lifts.end()) throw ContractError("cube weight has no lift");
      out.push_back({pick.index, it->second});
    }
    return out;
  };

  for (residue_t p : profile.primes_n1())
    if (count_coprime(p) <= 2) return peel(p);
  for (residue_t q : profile.primes_n2())
    if (count_coprime(q) <= 1) return peel(q);

  // Every p | n1 sees >= 3 coprime terms, every q | n2 sees >= 2. Pick a
  // core meeting those counts, pad it to m terms, solve prime by prime.
  std::vector<bool> chosen(terms.size(), false);
  std::vector<std::size_t> selection;
  auto need = [&](residue_t p, std::size_t required) {
    std::size_t have = 0;
    for (std::size_t i : selection)
      if (terms[i].value % p != 0) ++have;
    for (std::size_t i = 0; i < terms.size() && have < required; ++i) {
      if (!chosen[i] && terms[i].value % p != 0) {
        chosen[i] = true;
        selection.push_back(i);
        ++have;
      }
    }
  };
  for (residue_t p : profile.primes_n1()) need(p, 3);
  for (residue_t q : profile.primes_n2()) need(q, 2);
  for (std::size_t i = 0; i < terms.size() && selection.size() < m; ++i) {
    if (!chosen[i]) {
      chosen[i] = true;
      selection.push_back(i);
    }
  }
  if (selection.size() != m) throw ContractError("core selection exceeded m terms");
  std::sort(selection.begin(), selection.end());

  std::vector<residue_t> values;
  for (std::size_t i : selection) values.push_back(terms[i].value);

  // Per-prime weights, glued coordinate-wise by CRT.
  std::vector<std::vector<CrtPart>> parts(m);
  for (residue_t p : profile.primes()) {
    // Keep the selection order: Sequence sorts, so solve on the sorted image
    // and map back through a stable permutation.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] % p < values[b] % p; });
    std::vector<residue_t> image;
    for (std::size_t k : order) image.push_back(values[k] % p);
    const Sequence local(p, image);
    const auto sol = full_sequence_zero_sum(local, cubes(p));
    if (!sol) {
      throw TheoremViolation("no full T_" + std::to_string(p) + "-weighted zero sum for " +
                             local.to_string() + " despite enough units");
    }
    for (const auto& pick : sol->picked) parts[order[pick.index]].push_back({pick.weight, p});
  }
  std::vector<ExtractPick> out;
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back({terms[selection[k]].index, crt_combine(parts[k])});
  }
  return out;
}

}  // namespace

Certificate extract_length_m(const Sequence& seq, const ModulusProfile& profile, std::size_t m) {
  if (seq.modulus() != profile.n) throw std::invalid_argument("extract_length_m: modulus mismatch");
  if (profile.n < 2) throw HypothesisError("n > 1");
  require_cubic_hypotheses(profile);
  const auto min_m =
      static_cast<std::size_t>(3 * profile.small_omega_n1 + 2 * profile.small_omega_n2);
  if (m < min_m) {
    throw HypothesisError("m >= 3*omega(n1) + 2*omega(n2) = " + std::to_string(min_m));
  }
  const std::size_t min_len =
      m + static_cast<std::size_t>(2 * profile.big_omega_n1 + profile.big_omega_n2);
  if (seq.length() < min_len) {
    throw HypothesisError("length >= m + 2*Omega(n1) + Omega(n2) = " + std::to_string(min_len));
  }

  std::vector<IndexedTerm> terms;
  for (std::size_t i = 0; i < seq.length(); ++i) terms.push_back({i, seq[i]});
  const auto picks = extract_rec(terms, profile, m);

  Certificate cert;
  for (const auto& p : picks) cert.picked.push_back({p.index, p.weight});
  std::sort(cert.picked.begin(), cert.picked.end(),
            [](const WeightedPick& a, const WeightedPick& b) { return a.index < b.index; });
  if (cert.picked.size() != m || !validates_zero_sum(cert, seq, cubes(profile.n))) {
    throw ContractError("extract_length_m produced an invalid certificate for " +
                        seq.to_string());
  }
  return cert;
}

}  // namespace wzs
