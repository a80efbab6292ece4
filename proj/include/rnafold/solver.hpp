#ifndef RNAFOLD_SOLVER_HPP
#define RNAFOLD_SOLVER_HPP

// Exact optimal folding by depth-first search over canonical walks.
//
// The search tree is split into a fixed set of prefix tasks. Each task keeps
// its own incumbent, seeded with a score known to be achievable, so the
// report (including node counters) does not depend on the worker count.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "rnafold/enumerate.hpp"
#include "rnafold/error.hpp"
#include "rnafold/lattice.hpp"

namespace rnafold {

struct SolveOptions {
  std::size_t max_length = 20;
  /// Representatives kept; 0 keeps every optimal folding.
  std::size_t representative_cap = 16;
  std::size_t workers = 1;
  bool prune = true;
  /// Nodes placed before the tree is split into independent tasks.
  std::size_t split_depth = 7;
};

struct SolveReport {
  std::size_t optimal_score = 0;
  /// Optimal foldings counted once per symmetry orbit.
  std::size_t optimal_count = 0;
  std::vector<Folding> representatives;
  std::size_t nodes_explored = 0;
  std::size_t pruned = 0;
};

namespace detail {

// Index of the (base, parity) class used by the partial-walk bound; -1 for X.
inline int bound_class(Base b, std::size_t index) {
  const int parity = static_cast<int>(index % 2);  // 1 = odd
  switch (b) {
    case Base::G: return 0 + parity;
    case Base::C: return 2 + parity;
    case Base::A: return 4 + parity;
    case Base::U: return 6 + parity;
    case Base::X: return -1;
  }
  return -1;
}

// Complementary class pairs with opposite parity: (odd G, even C), (even G, odd C), ...
constexpr std::array<std::array<int, 2>, 4> kBondPairs{
    {{1, 2}, {0, 3}, {5, 6}, {4, 7}}};

struct TaskResult {
  std::ptrdiff_t best = -1;
  std::size_t count = 0;
  std::vector<std::vector<Point>> reps;
  std::size_t nodes = 0;
  std::size_t pruned = 0;
};

class FoldSearch {
 public:
  FoldSearch(const Chain& chain, const SolveOptions& options, std::size_t seed)
      : chain_(chain),
        n_(chain.size()),
        options_(options),
        seed_(seed),
        grid_(chain.size()),
        cells_(chain.size() + 1, 0),
        mate_(chain.size() + 1, 0),
        snapshots_((chain.size() + 1) * (chain.size() + 1), 0),
        adj_(chain.size() + 1),
        adj_size_(chain.size() + 1, 0),
        visited_(chain.size() + 1, 0),
        suffix_(chain.size() + 2) {
    classes_.assign(n_ + 1, -1);
    for (std::size_t i = 1; i <= n_; ++i) classes_[i] = bound_class(chain_[i], i);
    // suffix_[i] = class counts over indices i..n
    for (std::size_t i = n_; i >= 1; --i) {
      suffix_[i] = suffix_[i + 1];
      if (classes_[i] >= 0) ++suffix_[i][static_cast<std::size_t>(classes_[i])];
    }
  }

  /// Runs the subtree below `prefix` (grid cells of the first nodes).
  TaskResult run(std::span<const int> prefix) {
    result_ = TaskResult{};
    for (std::size_t i = 0; i < prefix.size(); ++i) place(i + 1, prefix[i]);
    ++result_.nodes;
    bool turned = false;
    for (std::size_t i = 2; i < prefix.size(); ++i) {
      if (prefix[i] - prefix[i - 1] != 1) turned = true;
    }
    if (prefix.size() == n_) {
      leaf();
    } else if (!should_prune(prefix.size())) {
      descend(prefix.size(), turned);
    }
    for (std::size_t i = prefix.size(); i >= 1; --i) unplace(i);
    return std::move(result_);
  }

 private:
  std::size_t incumbent() const {
    const std::size_t found = result_.best < 0 ? 0 : static_cast<std::size_t>(result_.best);
    return std::max(found, seed_);
  }

  void place(std::size_t m, int cell) {
    cells_[m] = cell;
    grid_[cell] = static_cast<std::uint32_t>(m);
    adj_size_[m] = 0;
    std::copy_n(mate_.begin(), n_ + 1, snapshots_.begin() + static_cast<std::ptrdiff_t>(m * (n_ + 1)));
    if (chain_[m] == Base::X) return;
    for (int step : grid_.steps()) {
      const std::uint32_t j = grid_[cell + step];
      if (j == 0 || j + 1 == m) continue;
      if (!complementary(chain_[m], chain_[j])) continue;
      adj_[m][adj_size_[m]++] = j;
      adj_[j][adj_size_[j]++] = static_cast<std::uint32_t>(m);
    }
    if (adj_size_[m] == 0) return;
    ++stamp_;
    if (augment(static_cast<std::uint32_t>(m))) ++matched_;
  }

  void unplace(std::size_t m) {
    const int cell = cells_[m];
    for (std::uint8_t k = 0; k < adj_size_[m]; ++k) --adj_size_[adj_[m][k]];
    adj_size_[m] = 0;
    grid_[cell] = 0;
    const auto* snap = snapshots_.data() + m * (n_ + 1);
    if (mate_[m] != 0) --matched_;
    std::copy_n(snap, n_ + 1, mate_.begin());
  }

  bool augment(std::uint32_t v) {
    for (std::uint8_t k = 0; k < adj_size_[v]; ++k) {
      const std::uint32_t u = adj_[v][k];
      if (visited_[u] == stamp_) continue;
      visited_[u] = stamp_;
      if (mate_[u] == 0 || augment(mate_[u])) {
        mate_[u] = v;
        mate_[v] = u;
        return true;
      }
    }
    return false;
  }

  // Upper bound on the final score of any completion of the first m nodes.
  std::size_t bound(std::size_t m) const {
    std::array<std::size_t, 8> open{};
    for (std::size_t i = 1; i <= m; ++i) {
      if (classes_[i] < 0) continue;
      for (int step : grid_.steps()) {
        if (grid_[cells_[i] + step] == 0) {
          ++open[static_cast<std::size_t>(classes_[i])];
          break;
        }
      }
    }
    const auto& rest = suffix_[m + 1];
    std::size_t extra = 0;
    std::size_t rest_total = 0;
    for (std::size_t c : rest) rest_total += c;
    for (const auto& [p, q] : kBondPairs) {
      const auto ps = rest[static_cast<std::size_t>(p)];
      const auto qs = rest[static_cast<std::size_t>(q)];
      const auto po = open[static_cast<std::size_t>(p)];
      const auto qo = open[static_cast<std::size_t>(q)];
      extra += std::min({ps + po, qs + qo, ps + qs});
    }
    return matched_ + std::min(extra, rest_total);
  }

  bool should_prune(std::size_t m) {
    if (!options_.prune) return false;
    if (bound(m) < incumbent()) {
      ++result_.pruned;
      return true;
    }
    return false;
  }

  void leaf() {
    const auto s = static_cast<std::ptrdiff_t>(matched_);
    if (s > result_.best) {
      result_.best = s;
      result_.count = 0;
      result_.reps.clear();
    }
    if (s == result_.best) {
      ++result_.count;
      if (options_.representative_cap == 0 || result_.reps.size() < options_.representative_cap) {
        std::vector<Point> pts;
        pts.reserve(n_);
        for (std::size_t i = 1; i <= n_; ++i) pts.push_back(grid_.point(cells_[i]));
        result_.reps.push_back(std::move(pts));
      }
    }
  }

  void descend(std::size_t m, bool turned) {
    const int here = cells_[m];
    const auto steps = grid_.steps();
    for (std::size_t d = 0; d < 4; ++d) {
      if (!turned && d >= 2) break;
      const int next = here + steps[d];
      if (grid_[next] != 0) continue;
      place(m + 1, next);
      ++result_.nodes;
      if (m + 1 == n_) {
        leaf();
      } else if (!should_prune(m + 1)) {
        descend(m + 1, turned || d == 1);
      }
      unplace(m + 1);
    }
  }

  const Chain& chain_;
  std::size_t n_;
  const SolveOptions& options_;
  std::size_t seed_;
  WalkGrid grid_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> mate_;
  std::vector<std::uint32_t> snapshots_;
  std::vector<std::array<std::uint32_t, 4>> adj_;
  std::vector<std::uint8_t> adj_size_;
  std::vector<std::uint32_t> visited_;
  std::uint32_t stamp_ = 0;
  std::size_t matched_ = 0;
  std::vector<int> classes_;
  std::vector<std::array<std::size_t, 8>> suffix_;
  TaskResult result_;
};

/// Canonical prefixes of `depth` nodes, in depth-first order.
inline std::vector<std::vector<int>> split_prefixes(std::size_t length, std::size_t depth) {
  WalkGrid grid(length);
  std::vector<std::vector<int>> out;
  std::vector<int> cells{grid.origin()};
  grid[grid.origin()] = 1;
  if (depth <= 1 || length == 1) return {cells};
  cells.push_back(grid.origin() + 1);
  grid[grid.origin() + 1] = 2;
  auto collect = [&](std::span<const int> walk) { out.emplace_back(walk.begin(), walk.end()); };
  extend_walk(grid, cells, depth, false, collect);
  return out;
}

/// Best score over the straight walk and every two-row hairpin.
inline std::size_t heuristic_lower_bound(const Chain& chain) {
  std::size_t best = score(chain, straight_folding(chain.size())).size;
  for (std::size_t fold = 1; fold < chain.size(); ++fold) {
    best = std::max(best, score(chain, hairpin_folding(chain.size(), fold)).size);
  }
  return best;
}

}  // namespace detail

inline SolveReport exact_solve(const Chain& chain, const SolveOptions& options = {}) {
  if (chain.empty()) throw PreconditionError("exact_solve requires a nonempty chain");
  if (chain.size() > options.max_length) {
    throw LimitError("chain length " + std::to_string(chain.size()) +
                     " exceeds the exhaustive-search limit of " +
                     std::to_string(options.max_length));
  }
  const std::size_t n = chain.size();
  const std::size_t seed = options.prune ? detail::heuristic_lower_bound(chain) : 0;
  const auto prefixes = detail::split_prefixes(n, std::min(n, std::max<std::size_t>(options.split_depth, 2)));

  std::vector<detail::TaskResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    detail::FoldSearch search(chain, options, seed);
    for (std::size_t t = next++; t < prefixes.size(); t = next++) {
      results[t] = search.run(prefixes[t]);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, prefixes.size());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::ptrdiff_t best = -1;
  for (const auto& r : results) best = std::max(best, r.best);
  SolveReport report;
  report.optimal_score = static_cast<std::size_t>(std::max<std::ptrdiff_t>(best, 0));
  for (auto& r : results) {
    report.nodes_explored += r.nodes;
    report.pruned += r.pruned;
    if (r.best != best) continue;
    report.optimal_count += r.count;
    for (auto& pts : r.reps) {
      if (options.representative_cap != 0 &&
          report.representatives.size() >= options.representative_cap) {
        break;
      }
      report.representatives.push_back(Folding::from_points(std::move(pts)));
    }
  }
  return report;
}

inline bool is_unique_optimal(const Chain& chain, const SolveOptions& options = {}) {
  return exact_solve(chain, options).optimal_count == 1;
}

}  // namespace rnafold

#endif  // RNAFOLD_SOLVER_HPP
