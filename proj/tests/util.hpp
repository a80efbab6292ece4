#ifndef RNAFOLD_TESTS_UTIL_HPP
#define RNAFOLD_TESTS_UTIL_HPP

#include <vector>

#include "oracle.hpp"
#include "rnafold/lattice.hpp"

namespace testutil {

inline rnafold::Folding to_folding(const oracle::Walk& w) {
  std::vector<rnafold::Point> pts;
  for (auto [x, y] : w) pts.push_back({x, y});
  return rnafold::Folding::from_points(std::move(pts));
}

inline oracle::Walk to_walk(const rnafold::Folding& f) {
  oracle::Walk w;
  for (auto p : f.points()) w.emplace_back(static_cast<long>(p.x), static_cast<long>(p.y));
  return w;
}

}  // namespace testutil

#endif  // RNAFOLD_TESTS_UTIL_HPP
