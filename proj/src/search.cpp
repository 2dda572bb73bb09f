#include "wzs/search.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace wzs {

struct ZeroSumFreeSearch::Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t max_nodes = 0;
  std::chrono::steady_clock::time_point deadline;

  // Returns false once the budget is spent.
  bool tick() {
    const std::uint64_t k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > max_nodes) stop.store(true, std::memory_order_relaxed);
    if ((k & 1023U) == 0 && std::chrono::steady_clock::now() > deadline) {
      stop.store(true, std::memory_order_relaxed);
    }
    return !stop.load(std::memory_order_relaxed);
  }
};

ZeroSumFreeSearch::ZeroSumFreeSearch(const WeightSet& weights)
    : weights_(weights), n_(weights.modulus()) {
  if (weights_.is_subgroup() && weights_.all_units()) {
    const WeightOrbits orbits(weights_);
    for (residue_t r : orbits.representatives())
      if (r != 0) alphabet_.push_back(r);
  } else {
    for (residue_t x = 1; x < n_; ++x) alphabet_.push_back(x);
  }
  for (residue_t x : alphabet_) {
    Candidate c{x, std::gcd(x, n_), {}, ResidueSet(n_), false};
    ResidueSet mults(n_);
    for (residue_t a : weights_.elements()) mults.insert(mul_mod(a, x, n_));
    c.multiples = mults.elements();
    for (residue_t w : c.multiples) {
      if (w == 0) c.kills = true;
      c.negated.insert(mod(-w, n_));
    }
    if (n_ % x == 0) roots_.push_back(candidates_.size());
    candidates_.push_back(std::move(c));
  }
}

bool ZeroSumFreeSearch::extend(const ResidueSet& reach, std::size_t index, ResidueSet& out) const {
  const Candidate& c = candidates_[index];
  if (c.kills || reach.intersects(c.negated)) return false;
  out = reach;
  for (residue_t w : c.multiples) {
    out.insert(w);
    out.or_rotated(reach, w);
  }
  return true;
}

Sequence ZeroSumFreeSearch::to_sequence(const std::vector<std::size_t>& path) const {
  std::vector<residue_t> terms;
  for (std::size_t i : path) terms.push_back(candidates_[i].value);
  return Sequence(n_, std::move(terms));
}

std::vector<std::vector<std::size_t>> ZeroSumFreeSearch::prefixes(std::size_t depth) const {
  std::vector<std::vector<std::size_t>> out;
  const ResidueSet empty(n_);
  ResidueSet r1(n_), r2(n_);
  for (std::size_t root : roots_) {
    if (!extend(empty, root, r1)) continue;
    if (depth <= 1) {
      out.push_back({root});
      continue;
    }
    for (std::size_t i = root; i < candidates_.size(); ++i) {
      if (candidates_[i].gcd < candidates_[root].gcd) continue;
      if (extend(r1, i, r2)) out.push_back({root, i});
    }
  }
  return out;
}

void ZeroSumFreeSearch::descend(Shared& shared, std::vector<std::size_t>& path,
                                const ResidueSet& reach, residue_t root_gcd,
                                std::size_t max_depth, Branch& best,
                                const std::function<void(const Sequence&)>* visit) const {
  if (path.size() > best.length) {
    best.length = path.size();
    best.witness.clear();
    for (std::size_t i : path) best.witness.push_back(candidates_[i].value);
  }
  if (path.size() == max_depth) {
    if (visit != nullptr) (*visit)(to_sequence(path));
    return;
  }
  ResidueSet next(n_);
  for (std::size_t i = path.back(); i < candidates_.size(); ++i) {
    if (candidates_[i].gcd < root_gcd) continue;
    if (!shared.tick()) return;
    if (!extend(reach, i, next)) continue;
    path.push_back(i);
    descend(shared, path, next, root_gcd, max_depth, best, visit);
    path.pop_back();
    if (shared.stop.load(std::memory_order_relaxed)) return;
  }
}

namespace {

// Runs body(k) for k in [0, count) on `jobs` threads, rethrowing the first
// exception after all workers join.
template <typename Body>
void run_parallel(std::size_t count, unsigned jobs, Body body) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        try {
          body(k);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

ZeroSumFreeSearch::Longest ZeroSumFreeSearch::longest(const SearchBudget& budget) const {
  const auto start = std::chrono::steady_clock::now();
  Shared shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = start + budget.max_time;

  Longest result;
  // Length-one sequences come straight from the roots.
  for (const auto& p : prefixes(1)) {
    if (result.length == 0) {
      result.length = 1;
      result.witness = to_sequence(p);
    }
  }

  const auto tasks = prefixes(2);
  std::vector<Branch> branches(tasks.size());
  run_parallel(tasks.size(), budget.jobs, [&](std::size_t k) {
    std::vector<std::size_t> path = tasks[k];
    ResidueSet r1(n_), r2(n_);
    extend(ResidueSet(n_), path[0], r1);
    extend(r1, path[1], r2);
    descend(shared, path, r2, candidates_[path[0]].gcd, n_, branches[k], nullptr);
  });

  for (const auto& b : branches) {
    if (b.length > result.length) {
      result.length = b.length;
      result.witness = Sequence(n_, b.witness);
    }
  }
  result.complete = !shared.stop.load();
  result.stats.nodes = shared.nodes.load();
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool ZeroSumFreeSearch::for_each_of_length(std::size_t length, const SearchBudget& budget,
                                           const std::function<void(const Sequence&)>& visit,
                                           SearchStats* stats) const {
  const auto start = std::chrono::steady_clock::now();
  Shared shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = start + budget.max_time;

  if (length == 0) {
    visit(Sequence(n_));
  } else if (length == 1) {
    for (const auto& p : prefixes(1)) visit(to_sequence(p));
  } else {
    const auto tasks = prefixes(2);
    run_parallel(tasks.size(), budget.jobs, [&](std::size_t k) {
      std::vector<std::size_t> path = tasks[k];
      ResidueSet r1(n_), r2(n_);
      extend(ResidueSet(n_), path[0], r1);
      extend(r1, path[1], r2);
      Branch scratch;
      descend(shared, path, r2, candidates_[path[0]].gcd, length, scratch, &visit);
    });
  }
  if (stats != nullptr) {
    stats->nodes = shared.nodes.load();
    stats->wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return !shared.stop.load();
}

}  // namespace wzs
