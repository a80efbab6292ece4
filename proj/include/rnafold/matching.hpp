#ifndef RNAFOLD_MATCHING_HPP
#define RNAFOLD_MATCHING_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace rnafold {

/// Maximum-cardinality matching on a bipartite graph (Hopcroft-Karp).
///
/// Left vertices are 0..left_size-1, right vertices 0..right_size-1.
class BipartiteMatcher {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  BipartiteMatcher(std::size_t left_size, std::size_t right_size)
      : adj_(left_size), mate_left_(left_size, npos), mate_right_(right_size, npos),
        dist_(left_size) {}

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  std::size_t solve() {
    std::size_t size = 0;
    while (layer()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (mate_left_[u] == npos && augment(u)) ++size;
      }
    }
    return size;
  }

  std::size_t mate_of_left(std::size_t u) const { return mate_left_[u]; }
  std::size_t mate_of_right(std::size_t v) const { return mate_right_[v]; }

 private:
  // BFS from all free left vertices; true if some free right vertex is reachable.
  bool layer() {
    std::queue<std::size_t> frontier;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (mate_left_[u] == npos) {
        dist_[u] = 0;
        frontier.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = mate_right_[v];
        if (w == npos) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          frontier.push(w);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = mate_right_[v];
      if (w == npos || (dist_[w] == dist_[u] + 1 && augment(w))) {
        mate_left_[u] = v;
        mate_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace rnafold

#endif  // RNAFOLD_MATCHING_HPP
