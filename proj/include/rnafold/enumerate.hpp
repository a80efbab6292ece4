#ifndef RNAFOLD_ENUMERATE_HPP
#define RNAFOLD_ENUMERATE_HPP

// Self-avoiding walks on the square lattice, one per symmetry orbit.
//
// A walk is canonical when its first step is +x and its first non-straight
// step turns left (+y). Every orbit of the 8 lattice symmetries has exactly
// one canonical member; the straight walk is its own mirror image.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rnafold/lattice.hpp"

namespace rnafold {

namespace detail {

/// Dense occupancy grid large enough for any walk of `length` nodes from the origin.
class WalkGrid {
 public:
  explicit WalkGrid(std::size_t length)
      : radius_(static_cast<int>(length) + 1),
        width_(2 * radius_ + 1),
        cells_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(width_), 0) {}

  int width() const noexcept { return width_; }
  int origin() const noexcept { return radius_ * width_ + radius_; }

  /// Offsets in the fixed exploration order: +x, +y, -x, -y.
  std::array<int, 4> steps() const noexcept { return {1, width_, -1, -width_}; }

  std::uint32_t& operator[](int cell) { return cells_[static_cast<std::size_t>(cell)]; }
  std::uint32_t operator[](int cell) const { return cells_[static_cast<std::size_t>(cell)]; }

  Point point(int cell) const noexcept {
    return {cell % width_ - radius_, cell / width_ - radius_};
  }

 private:
  int radius_;
  int width_;
  std::vector<std::uint32_t> cells_;
};

template <class Visitor>
void extend_walk(WalkGrid& grid, std::vector<int>& cells, std::size_t length, bool turned,
                 Visitor& visit) {
  if (cells.size() == length) {
    visit(std::span<const int>(cells));
    return;
  }
  const int here = cells.back();
  const auto steps = grid.steps();
  for (std::size_t d = 0; d < 4; ++d) {
    if (!turned && d >= 2) break;  // before the first turn only +x or +y
    const int next = here + steps[d];
    if (grid[next] != 0) continue;
    grid[next] = static_cast<std::uint32_t>(cells.size() + 1);
    cells.push_back(next);
    extend_walk(grid, cells, length, turned || d == 1, visit);
    cells.pop_back();
    grid[next] = 0;
  }
}

}  // namespace detail

/// Calls `visit(const Folding&)` for every canonical walk of `length` nodes in
/// deterministic depth-first order (step order +x, +y, -x, -y).
template <class Visitor>
void enumerate_foldings(std::size_t length, Visitor&& visit) {
  if (length == 0) return;
  detail::WalkGrid grid(length);
  std::vector<int> cells{grid.origin()};
  grid[grid.origin()] = 1;
  if (length == 1) {
    visit(Folding::from_points({{0, 0}}));
    return;
  }
  cells.push_back(grid.origin() + 1);
  grid[grid.origin() + 1] = 2;
  auto emit = [&](std::span<const int> walk) {
    std::vector<Point> pts;
    pts.reserve(walk.size());
    for (int c : walk) pts.push_back(grid.point(c));
    visit(Folding::from_points(std::move(pts)));
  };
  detail::extend_walk(grid, cells, length, false, emit);
}

inline std::vector<Folding> all_foldings(std::size_t length) {
  std::vector<Folding> out;
  enumerate_foldings(length, [&](const Folding& f) { out.push_back(f); });
  return out;
}

/// Number of canonical walks with `length` nodes.
inline std::size_t count_canonical_walks(std::size_t length) {
  if (length == 0) return 0;
  if (length <= 2) return 1;
  detail::WalkGrid grid(length);
  std::vector<int> cells{grid.origin(), grid.origin() + 1};
  grid[grid.origin()] = 1;
  grid[grid.origin() + 1] = 2;
  std::size_t count = 0;
  auto tally = [&](std::span<const int>) { ++count; };
  detail::extend_walk(grid, cells, length, false, tally);
  return count;
}

}  // namespace rnafold

#endif  // RNAFOLD_ENUMERATE_HPP
