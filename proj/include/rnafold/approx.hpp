#ifndef RNAFOLD_APPROX_HPP
#define RNAFOLD_APPROX_HPP

// Linear-time approximate folding of G/C chains.
//
// The chain is relabelled by the dominant parity pairing into "odd-1",
// "even-1" and "0" nodes, a fold point is chosen to split the 1-nodes across
// two arms, and the arms are laid along adjacent rows so that each matched
// pair of 1-nodes faces across the interface. Stretches between consecutive
// matched nodes on an arm are tucked into U-shaped loops pointing away from
// the interface.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rnafold/bounds.hpp"
#include "rnafold/error.hpp"
#include "rnafold/lattice.hpp"

namespace rnafold {

enum class Label : std::uint8_t { Zero, Odd1, Even1 };

enum class Branch : std::uint8_t {
  OddGEvenC,  ///< odd G -> odd-1, even C -> even-1
  EvenGOddC,  ///< even G -> even-1, odd C -> odd-1
};

struct RelabeledChain {
  std::vector<Label> labels;  ///< labels[i-1] for chain index i
  Branch branch = Branch::OddGEvenC;

  std::size_t count(Label l) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
  }
  /// min(#odd-1, #even-1)
  std::size_t available() const { return std::min(count(Label::Odd1), count(Label::Even1)); }
};

inline void require_gc(const Chain& chain) {
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (chain[i] != Base::G && chain[i] != Base::C) {
      throw ScopeError("approximation is defined for G/C chains only; base '" +
                       std::string(1, to_char(chain[i])) + "' at position " +
                       std::to_string(i));
    }
  }
}

/// Relabels with the given branch's pairing.
inline RelabeledChain relabel(const Chain& chain, Branch branch) {
  require_gc(chain);
  RelabeledChain out;
  out.branch = branch;
  out.labels.reserve(chain.size());
  const Base odd_one = out.branch == Branch::OddGEvenC ? Base::G : Base::C;
  const Base even_one = complement(odd_one);
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    const bool odd = i % 2 == 1;
    if (odd && chain[i] == odd_one) {
      out.labels.push_back(Label::Odd1);
    } else if (!odd && chain[i] == even_one) {
      out.labels.push_back(Label::Even1);
    } else {
      out.labels.push_back(Label::Zero);
    }
  }
  return out;
}

/// Branch with more complementary opposite-parity pairs; ties go to odd-G/even-C.
inline Branch dominant_branch(const Chain& chain) {
  const ParityCensus c = parity_census(chain);
  return std::min(c.odd_G, c.even_C) >= std::min(c.even_G, c.odd_C) ? Branch::OddGEvenC
                                                                    : Branch::EvenGOddC;
}

inline RelabeledChain relabel(const Chain& chain) {
  require_gc(chain);
  return relabel(chain, dominant_branch(chain));
}

struct FoldPlan {
  /// Edge between chain indices fold_index and fold_index + 1; 0 when unused.
  std::size_t fold_index = 0;
  /// Label taken by the first-arm member of each pair.
  Label left_role = Label::Odd1;
  /// Outside-in: pairs[0] holds the smallest left index and the largest right index.
  std::vector<std::pair<std::size_t, std::size_t>> matched_pairs;
};

namespace detail {

// Pairs realizable for fold f with the given left-arm role: min of the two
// counts, less one when the innermost pair would be chain neighbours (only
// possible when both counts are equal and the pair straddles the fold).
inline std::size_t plan_value(const std::vector<std::size_t>& left_prefix,
                              const std::vector<std::size_t>& right_prefix,
                              const std::vector<std::size_t>& last_left,
                              const std::vector<std::size_t>& first_right, std::size_t n,
                              std::size_t f) {
  const std::size_t l = left_prefix[f];
  const std::size_t r = right_prefix[n] - right_prefix[f];
  std::size_t k = std::min(l, r);
  if (k > 0 && l == r && last_left[f] == f && first_right[f + 1] == f + 1) --k;
  return k;
}

}  // namespace detail

/// Chooses the fold point and side roles maximizing realizable pairs; ties go
/// to the fold closest to the middle of the chain, then the odd-1-on-the-left
/// role, then the smaller index.
inline FoldPlan choose_fold_point(const RelabeledChain& relabeled) {
  const std::size_t n = relabeled.labels.size();
  FoldPlan best;
  if (n < 2) return best;
  std::size_t best_value = 0;
  std::size_t best_distance = 0;
  bool have = false;

  for (Label left_role : {Label::Odd1, Label::Even1}) {
    const Label right_role = left_role == Label::Odd1 ? Label::Even1 : Label::Odd1;
    std::vector<std::size_t> left_prefix(n + 1, 0), right_prefix(n + 1, 0);
    std::vector<std::size_t> last_left(n + 1, 0), first_right(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const Label l = relabeled.labels[i - 1];
      left_prefix[i] = left_prefix[i - 1] + (l == left_role);
      right_prefix[i] = right_prefix[i - 1] + (l == right_role);
      last_left[i] = l == left_role ? i : last_left[i - 1];
    }
    for (std::size_t i = n; i >= 1; --i) {
      first_right[i] = relabeled.labels[i - 1] == right_role ? i : first_right[i + 1];
    }
    for (std::size_t f = 1; f < n; ++f) {
      const std::size_t value =
          detail::plan_value(left_prefix, right_prefix, last_left, first_right, n, f);
      const std::size_t distance = 2 * f > n ? 2 * f - n : n - 2 * f;
      const bool better = !have || value > best_value ||
                          (value == best_value && distance < best_distance);
      if (better) {
        have = true;
        best_value = value;
        best_distance = distance;
        best.fold_index = f;
        best.left_role = left_role;
      }
    }
  }
  if (best_value == 0) return FoldPlan{best.fold_index, best.left_role, {}};

  const Label right_role = best.left_role == Label::Odd1 ? Label::Even1 : Label::Odd1;
  std::vector<std::size_t> lefts, rights;
  for (std::size_t i = 1; i <= best.fold_index; ++i) {
    if (relabeled.labels[i - 1] == best.left_role) lefts.push_back(i);
  }
  for (std::size_t i = n; i > best.fold_index; --i) {
    if (relabeled.labels[i - 1] == right_role) rights.push_back(i);
  }
  const std::size_t k = std::min(lefts.size(), rights.size());
  for (std::size_t p = 0; p < k; ++p) best.matched_pairs.emplace_back(lefts[p], rights[p]);
  // Drop the innermost pair if it is chain-adjacent; it cannot bond.
  if (!best.matched_pairs.empty() &&
      best.matched_pairs.back().second == best.matched_pairs.back().first + 1) {
    best.matched_pairs.pop_back();
  }
  return best;
}

struct ApproxResult {
  Folding folding = straight_folding(1);
  std::size_t achieved = 0;
  FoldPlan plan;
  /// Labels of the branch the plan was built on.
  RelabeledChain relabeled;
  /// floor(min(#odd-1, #even-1) / 2) for the dominant branch.
  std::size_t guarantee = 0;
  /// Lattice points emitted by the construction; grows linearly with length.
  std::size_t operations = 0;
};

namespace detail {

// Lays out the plan. The first arm runs along y=0 and the second along y=1;
// pair p sits in column 2p. Loops between consecutive bottom pairs go down
// their left column and up the middle column; loops between consecutive top
// pairs go up the right column and down the middle column.
inline std::vector<Point> lay_out(std::size_t n, const FoldPlan& plan, std::size_t& ops) {
  std::vector<Point> pts(n);
  const auto& pairs = plan.matched_pairs;
  const std::size_t p = pairs.size();
  auto put = [&](std::size_t index, std::int64_t x, std::int64_t y) {
    pts[index - 1] = {x, y};
    ++ops;
  };

  // Prefix before the first bottom pair runs left along y=0.
  const std::size_t a1 = pairs[0].first;
  for (std::size_t i = 1; i <= a1; ++i) put(i, -static_cast<std::int64_t>(a1 - i), 0);

  for (std::size_t q = 0; q + 1 < p; ++q) {
    const std::size_t a = pairs[q].first, a_next = pairs[q + 1].first;
    const auto x = static_cast<std::int64_t>(2 * q);
    const auto h = static_cast<std::int64_t>((a_next - a - 2) / 2);  // s = 2h + 1
    std::size_t i = a + 1;
    for (std::int64_t y = -1; y >= -h; --y) put(i++, x, y);
    for (std::int64_t y = -h; y <= 0; ++y) put(i++, x + 1, y);
    put(a_next, x + 2, 0);
  }

  // Connector around the open end: right along y=0, back along y=1.
  const std::size_t ap = pairs[p - 1].first, bp = pairs[p - 1].second;
  const auto xp = static_cast<std::int64_t>(2 * (p - 1));
  const auto w = static_cast<std::int64_t>((bp - ap - 1) / 2);
  std::size_t i = ap + 1;
  for (std::int64_t x = xp + 1; x <= xp + w; ++x) put(i++, x, 0);
  for (std::int64_t x = xp + w; x >= xp + 1; --x) put(i++, x, 1);
  put(bp, xp, 1);

  for (std::size_t q = p - 1; q >= 1; --q) {
    const std::size_t b = pairs[q].second, b_prev = pairs[q - 1].second;
    const auto x = static_cast<std::int64_t>(2 * q);
    const auto h = static_cast<std::int64_t>((b_prev - b - 2) / 2);
    std::size_t j = b + 1;
    for (std::int64_t y = 2; y <= 1 + h; ++y) put(j++, x, y);
    for (std::int64_t y = 1 + h; y >= 1; --y) put(j++, x - 1, y);
    put(b_prev, x - 2, 1);
  }

  // Suffix after the outermost top pair runs left along y=1.
  const std::size_t b1 = pairs[0].second;
  for (std::size_t j = b1 + 1; j <= n; ++j) put(j, -static_cast<std::int64_t>(j - b1), 1);
  return pts;
}

}  // namespace detail

inline ApproxResult approx_fold(const Chain& chain) {
  if (chain.empty()) throw PreconditionError("approx_fold requires a nonempty chain");
  ApproxResult out;
  // Plan on both branches and keep the one with more realizable pairs; the
  // dominant branch wins ties, so the guarantee carries over.
  const Branch dominant = dominant_branch(chain);
  out.relabeled = relabel(chain, dominant);
  out.guarantee = out.relabeled.available() / 2;
  out.plan = choose_fold_point(out.relabeled);
  const Branch other = dominant == Branch::OddGEvenC ? Branch::EvenGOddC : Branch::OddGEvenC;
  RelabeledChain alt = relabel(chain, other);
  FoldPlan alt_plan = choose_fold_point(alt);
  if (alt_plan.matched_pairs.size() > out.plan.matched_pairs.size()) {
    out.relabeled = std::move(alt);
    out.plan = std::move(alt_plan);
  }
  if (out.plan.matched_pairs.empty()) {
    out.folding = straight_folding(chain.size());
    out.operations = chain.size();
  } else {
    out.folding = validate_folding(chain, detail::lay_out(chain.size(), out.plan, out.operations));
  }
  out.achieved = score(chain, out.folding).size;
  return out;
}

}  // namespace rnafold

#endif  // RNAFOLD_APPROX_HPP
