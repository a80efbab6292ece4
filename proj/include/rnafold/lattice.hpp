#ifndef RNAFOLD_LATTICE_HPP
#define RNAFOLD_LATTICE_HPP

// Chains, foldings on the square lattice and bond scoring.
//
// Chain indices are 1-based everywhere in the public interface so that
// "odd" and "even" refer to positions in the written sequence.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rnafold/error.hpp"
#include "rnafold/matching.hpp"

namespace rnafold {

enum class Base : std::uint8_t { A, U, G, C, X };

constexpr char to_char(Base b) noexcept {
  constexpr std::array<char, 5> glyphs{'A', 'U', 'G', 'C', 'X'};
  return glyphs[static_cast<std::size_t>(b)];
}

/// Watson-Crick pairing only: G-C and A-U. X pairs with nothing.
constexpr bool complementary(Base a, Base b) noexcept {
  switch (a) {
    case Base::A: return b == Base::U;
    case Base::U: return b == Base::A;
    case Base::G: return b == Base::C;
    case Base::C: return b == Base::G;
    case Base::X: return false;
  }
  return false;
}

constexpr Base complement(Base b) noexcept {
  switch (b) {
    case Base::A: return Base::U;
    case Base::U: return Base::A;
    case Base::G: return Base::C;
    case Base::C: return Base::G;
    case Base::X: return Base::X;
  }
  return Base::X;
}

/// An ordered, nonempty sequence of bases, indexed from 1.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Base> bases) : bases_(std::move(bases)) {}

  std::size_t size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }

  /// 1-based access.
  Base operator[](std::size_t index) const { return bases_[index - 1]; }

  std::span<const Base> bases() const noexcept { return bases_; }

  std::string str() const {
    std::string out;
    out.reserve(bases_.size());
    for (Base b : bases_) out.push_back(to_char(b));
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Base> bases_;
};

/// Parse a sequence over {A,U,G,C,X}, case-insensitive. Surrounding whitespace
/// is ignored; interior whitespace is an error.
inline Chain parse_chain(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty sequence", 0);
  const auto last = text.find_last_not_of(" \t\r\n");
  std::vector<Base> bases;
  bases.reserve(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    const std::size_t pos = i - first + 1;
    switch (c) {
      case 'A': bases.push_back(Base::A); break;
      case 'U': bases.push_back(Base::U); break;
      case 'G': bases.push_back(Base::G); break;
      case 'C': bases.push_back(Base::C); break;
      case 'X': bases.push_back(Base::X); break;
      default:
        throw ParseError("invalid base '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(pos),
                         pos);
    }
  }
  return Chain(std::move(bases));
}

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline bool lattice_adjacent(Point a, Point b) noexcept {
  const auto dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const auto dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy == 1;
}

namespace detail {
inline std::uint64_t pack(Point p) noexcept {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}
}  // namespace detail

/// A self-avoiding unit-step embedding. Only constructible through validation.
class Folding {
 public:
  /// Validates injectivity and unit steps.
  static Folding from_points(std::vector<Point> points) {
    if (points.empty()) {
      throw FoldingError(FoldingError::Kind::LengthMismatch, 0, "folding has no points");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (!lattice_adjacent(points[i - 1], points[i])) {
        throw FoldingError(FoldingError::Kind::NonUnitStep, i + 1,
                           "non-unit step at index " + std::to_string(i + 1));
      }
    }
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(points.size() * 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [it, inserted] = seen.emplace(detail::pack(points[i]), i + 1);
      if (!inserted) {
        throw FoldingError(FoldingError::Kind::SelfIntersection, i + 1,
                           "self-intersection at index " + std::to_string(i + 1) +
                               ": point (" + std::to_string(points[i].x) + "," +
                               std::to_string(points[i].y) + ") already used by index " +
                               std::to_string(it->second));
      }
    }
    return Folding(std::move(points));
  }

  std::size_t size() const noexcept { return points_.size(); }
  /// 1-based access.
  Point operator[](std::size_t index) const { return points_[index - 1]; }
  std::span<const Point> points() const noexcept { return points_; }

  friend bool operator==(const Folding&, const Folding&) = default;

 private:
  explicit Folding(std::vector<Point> points) : points_(std::move(points)) {}
  std::vector<Point> points_;
};

inline Folding validate_folding(const Chain& chain, std::vector<Point> points) {
  if (points.size() != chain.size()) {
    throw FoldingError(FoldingError::Kind::LengthMismatch, points.size(),
                       "folding has " + std::to_string(points.size()) +
                           " points but chain has length " + std::to_string(chain.size()));
  }
  return Folding::from_points(std::move(points));
}

/// Absolute move letters: R=+x, L=-x, U=+y, D=-y. The first node sits at the origin.
inline Folding folding_from_moves(std::string_view moves) {
  std::vector<Point> pts{{0, 0}};
  pts.reserve(moves.size() + 1);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Point step;
    switch (std::toupper(static_cast<unsigned char>(moves[i]))) {
      case 'R': step = {1, 0}; break;
      case 'L': step = {-1, 0}; break;
      case 'U': step = {0, 1}; break;
      case 'D': step = {0, -1}; break;
      default:
        throw ParseError("invalid move '" + std::string(1, moves[i]) + "' at position " +
                             std::to_string(i + 1),
                         i + 1);
    }
    pts.push_back(pts.back() + step);
  }
  return Folding::from_points(std::move(pts));
}

inline std::string to_moves(const Folding& folding) {
  std::string out;
  const auto pts = folding.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point d = pts[i] - pts[i - 1];
    out.push_back(d.x == 1 ? 'R' : d.x == -1 ? 'L' : d.y == 1 ? 'U' : 'D');
  }
  return out;
}

/// One of the 8 lattice isometries fixing the origin: `rotation` quarter turns
/// counter-clockwise, preceded by a reflection across the x axis when `reflect`.
struct Symmetry {
  int rotation = 0;
  bool reflect = false;

  Point apply(Point p) const noexcept {
    if (reflect) p.y = -p.y;
    for (int r = 0; r < rotation; ++r) p = {-p.y, p.x};
    return p;
  }

  static std::array<Symmetry, 8> all() {
    return {Symmetry{0, false}, Symmetry{1, false}, Symmetry{2, false}, Symmetry{3, false},
            Symmetry{0, true},  Symmetry{1, true},  Symmetry{2, true},  Symmetry{3, true}};
  }
};

inline Folding transformed(const Folding& folding, Symmetry sym, Point offset = {}) {
  std::vector<Point> pts;
  pts.reserve(folding.size());
  for (Point p : folding.points()) pts.push_back(sym.apply(p) + offset);
  return Folding::from_points(std::move(pts));
}

/// The representative of the folding's orbit under translation and the 8
/// lattice symmetries: first node at the origin, first step +x, first
/// non-straight step a left turn.
inline Folding canonical_form(const Folding& folding) {
  const auto pts = folding.points();
  std::vector<Point> out(pts.size());
  if (pts.size() == 1) return Folding::from_points({{0, 0}});
  for (Symmetry sym : Symmetry::all()) {
    const Point origin = sym.apply(pts[0]);
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = sym.apply(pts[i]) - origin;
    if (out[1] != Point{1, 0}) continue;
    bool ok = true;
    for (std::size_t i = 2; i < out.size(); ++i) {
      const Point d = out[i] - out[i - 1];
      if (d == Point{1, 0}) continue;
      ok = d == Point{0, 1};
      break;
    }
    if (ok) return Folding::from_points(out);
  }
  return Folding::from_points(out);  // unreachable for a valid folding
}

struct ContactEdge {
  std::size_t i = 0;  ///< 1-based, i < j
  std::size_t j = 0;

  friend auto operator<=>(const ContactEdge&, const ContactEdge&) = default;
};

/// A matching on the contact graph; no index appears twice.
struct BondSet {
  std::vector<ContactEdge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const BondSet&, const BondSet&) = default;
};

/// Complementary, lattice-adjacent, non-chain-adjacent pairs, sorted by (i, j).
inline std::vector<ContactEdge> contact_graph(const Chain& chain, const Folding& folding) {
  std::unordered_map<std::uint64_t, std::size_t> where;
  where.reserve(folding.size() * 2);
  const auto pts = folding.points();
  for (std::size_t i = 0; i < pts.size(); ++i) where.emplace(detail::pack(pts[i]), i + 1);

  constexpr std::array<Point, 2> forward{Point{1, 0}, Point{0, 1}};
  std::vector<ContactEdge> edges;
  for (std::size_t i = 1; i <= pts.size(); ++i) {
    if (chain[i] == Base::X) continue;
    for (Point d : forward) {
      for (Point q : {pts[i - 1] + d, pts[i - 1] - d}) {
        const auto it = where.find(detail::pack(q));
        if (it == where.end()) continue;
        const std::size_t j = it->second;
        if (j <= i + 1) continue;  // counts each pair once, skips chain neighbours
        if (complementary(chain[i], chain[j])) edges.push_back({i, j});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

struct ScoreResult {
  std::size_t size = 0;
  BondSet witness;
};

/// Maximum number of simultaneous bonds: a maximum matching of the contact
/// graph. Contacts always join an odd index to an even one, so the graph is
/// bipartite.
inline ScoreResult score(const Chain& chain, const Folding& folding) {
  const auto edges = contact_graph(chain, folding);
  const std::size_t n = chain.size();
  // odd index i -> slot (i-1)/2, even index j -> slot j/2 - 1
  BipartiteMatcher matcher((n + 1) / 2, n / 2);
  for (const auto& e : edges) {
    const bool i_odd = e.i % 2 == 1;
    const std::size_t odd = i_odd ? e.i : e.j;
    const std::size_t even = i_odd ? e.j : e.i;
    matcher.add_edge((odd - 1) / 2, even / 2 - 1);
  }
  ScoreResult result;
  result.size = matcher.solve();
  for (std::size_t slot = 0; slot < (n + 1) / 2; ++slot) {
    const std::size_t mate = matcher.mate_of_left(slot);
    if (mate == BipartiteMatcher::npos) continue;
    const std::size_t odd = 2 * slot + 1;
    const std::size_t even = 2 * (mate + 1);
    result.witness.edges.push_back({std::min(odd, even), std::max(odd, even)});
  }
  std::sort(result.witness.edges.begin(), result.witness.edges.end());
  return result;
}

/// Straight folding along +x.
inline Folding straight_folding(std::size_t length) {
  std::vector<Point> pts;
  pts.reserve(length);
  for (std::size_t i = 0; i < length; ++i) pts.push_back({static_cast<std::int64_t>(i), 0});
  return Folding::from_points(std::move(pts));
}

/// Two-row hairpin: indices 1..fold run along y=0, the rest return along y=1
/// starting above index `fold`. Requires 1 <= fold < length.
inline Folding hairpin_folding(std::size_t length, std::size_t fold) {
  std::vector<Point> pts;
  pts.reserve(length);
  const auto top = static_cast<std::int64_t>(fold) - 1;
  for (std::size_t i = 0; i < fold; ++i) pts.push_back({static_cast<std::int64_t>(i), 0});
  for (std::size_t i = fold; i < length; ++i) {
    pts.push_back({top - static_cast<std::int64_t>(i - fold), 1});
  }
  return Folding::from_points(std::move(pts));
}

}  // namespace rnafold

#endif  // RNAFOLD_LATTICE_HPP
