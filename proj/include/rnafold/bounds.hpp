#ifndef RNAFOLD_BOUNDS_HPP
#define RNAFOLD_BOUNDS_HPP

// Closed-form upper bounds on bond counts and the uniquely foldable families.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "rnafold/error.hpp"
#include "rnafold/lattice.hpp"

namespace rnafold {

struct BboxBound {
  std::size_t value = 0;
  /// Odd lengths are outside the proven range and use floor(L/2) - 1.
  bool extension = false;
};

/// Bounding-box bound: a chain of length 2n has at most n - 1 bonds.
inline BboxBound bound_bbox(std::size_t length) {
  const std::size_t half = length / 2;
  return {half == 0 ? 0 : half - 1, length % 2 == 1};
}

/// Per-base counts split by the parity of the 1-based index. X is not counted.
struct ParityCensus {
  std::size_t odd_G = 0, even_G = 0, odd_C = 0, even_C = 0;
  std::size_t odd_A = 0, even_A = 0, odd_U = 0, even_U = 0;

  std::size_t total() const noexcept {
    return odd_G + even_G + odd_C + even_C + odd_A + even_A + odd_U + even_U;
  }
  friend bool operator==(const ParityCensus&, const ParityCensus&) = default;
};

inline ParityCensus parity_census(const Chain& chain) {
  ParityCensus c;
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    const bool odd = i % 2 == 1;
    switch (chain[i]) {
      case Base::G: ++(odd ? c.odd_G : c.even_G); break;
      case Base::C: ++(odd ? c.odd_C : c.even_C); break;
      case Base::A: ++(odd ? c.odd_A : c.even_A); break;
      case Base::U: ++(odd ? c.odd_U : c.even_U); break;
      case Base::X: break;
    }
  }
  return c;
}

struct ParityBound {
  std::size_t value = 0;
  /// True when A/U terms contributed, i.e. the bound goes beyond the G/C case.
  bool extension = false;
};

/// Bonds only join opposite index parities, so each complementary pair type
/// contributes at most min(odd X, even Y) + min(even X, odd Y).
inline ParityBound bound_parity(const Chain& chain) {
  const ParityCensus c = parity_census(chain);
  const std::size_t gc = std::min(c.odd_G, c.even_C) + std::min(c.even_G, c.odd_C);
  const std::size_t au = std::min(c.odd_A, c.even_U) + std::min(c.even_A, c.odd_U);
  const bool has_au = c.odd_A + c.even_A + c.odd_U + c.even_U > 0;
  return {gc + au, has_au};
}

/// G^n C^n.
inline Chain make_Sn(std::size_t n) {
  if (n < 1) throw PreconditionError("make_Sn requires n >= 1");
  std::vector<Base> bases(2 * n, Base::C);
  std::fill_n(bases.begin(), n, Base::G);
  return Chain(std::move(bases));
}

/// The 2 x n hairpin: indices 1..n on y=0 left to right, n+1..2n on y=1 right to left.
inline Folding make_Fn(std::size_t n) {
  if (n < 2) throw PreconditionError("make_Fn requires n >= 2");
  return hairpin_folding(2 * n, n);
}

/// True when the uniqueness theorem covers S_n (n > 3).
constexpr bool sn_uniqueness_applies(std::size_t n) noexcept { return n > 3; }

struct MixedChain {
  Chain chain;
  /// (m + n) / 2 > 3, so the G/C block argument applies.
  bool uniqueness_applies = false;
};

/// G^(m/2) A^(n/2) U^(n/2) C^(m/2) for a G/C : A/U ratio of m : n.
inline MixedChain make_mixed(std::size_t m, std::size_t n) {
  if (m % 2 != 0 || n % 2 != 0) throw PreconditionError("make_mixed requires even m and n");
  if (m + n < 2) throw PreconditionError("make_mixed requires m + n >= 2");
  std::vector<Base> bases;
  bases.reserve(m + n);
  bases.insert(bases.end(), m / 2, Base::G);
  bases.insert(bases.end(), n / 2, Base::A);
  bases.insert(bases.end(), n / 2, Base::U);
  bases.insert(bases.end(), m / 2, Base::C);
  return {Chain(std::move(bases)), (m + n) / 2 > 3};
}

}  // namespace rnafold

#endif  // RNAFOLD_BOUNDS_HPP
