#ifndef RNAFOLD_REDUCTION_HPP
#define RNAFOLD_REDUCTION_HPP

// Compiles a routed rectilinear monotone 3-SAT layout into a chain, a bond
// target k and the folding intended for each variable assignment.
//
// The whole chain is one hairpin: an outgoing strand A and a returning strand
// B zip together along the layout route as a two-wide ribbon, with X tails at
// both endpoints and a two-X cap at the far end. Strand A carries the gadget
// patterns (C and A bases, X at fixed-turn corners), strand B the complements
// (G and U bases). A turn puts two extra nodes on the outer strand and shifts
// the strand alignment by two; variable-turn extras are bondable, so each
// variable turn costs one bond and k = bondable/2 - t.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "rnafold/error.hpp"
#include "rnafold/lattice.hpp"
#include "rnafold/solver.hpp"

namespace rnafold {

// ---------------------------------------------------------------- gadgets

enum class GadgetKind { Flex, Rigid };

struct StrandPair {
  std::string strand_a;
  std::string strand_b;
};

inline const std::string& gadget_period_a(GadgetKind kind) {
  static const std::string flex = "CCCA";
  static const std::string rigid = "CCCCCCCA";
  return kind == GadgetKind::Flex ? flex : rigid;
}

inline std::size_t gadget_period_length(GadgetKind kind) {
  return gadget_period_a(kind).size();
}

namespace detail {
inline StrandPair repeat_gadget(GadgetKind kind, std::size_t periods) {
  if (periods == 0) throw PreconditionError("gadget requires at least one period");
  const std::string& a = gadget_period_a(kind);
  std::string b;
  for (char c : a) b.push_back(to_char(complement(parse_chain(std::string(1, c))[1])));
  StrandPair out;
  for (std::size_t i = 0; i < periods; ++i) {
    out.strand_a += a;
    out.strand_b += b;
  }
  return out;
}
}  // namespace detail

/// (CCCA)^p / (GGGU)^p: straight double strand whose direction may flip.
inline StrandPair gadget_flex(std::size_t periods) {
  return detail::repeat_gadget(GadgetKind::Flex, periods);
}

/// (CCCCCCCA)^p / (GGGGGGGU)^p: straight double strand that may not flip.
inline StrandPair gadget_rigid(std::size_t periods) {
  return detail::repeat_gadget(GadgetKind::Rigid, periods);
}

inline Chain gadget_tail(std::size_t length) {
  if (length == 0) throw PreconditionError("tail requires length >= 1");
  return Chain(std::vector<Base>(length, Base::X));
}

/// Smallest tail length with at least (N/2)^2 nodes.
inline std::size_t required_tail_length(std::size_t non_tail_nodes) {
  return (non_tail_nodes * non_tail_nodes + 3) / 4;
}

// ---------------------------------------------------------------- layout

enum class Heading : int { E = 0, N = 1, W = 2, S = 3 };
enum class Side { Left, Right };

inline Point unit(Heading h) {
  constexpr std::array<Point, 4> u{Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}};
  return u[static_cast<std::size_t>(h)];
}
inline Heading turned(Heading h, Side s) {
  const int delta = s == Side::Left ? 1 : 3;
  return static_cast<Heading>((static_cast<int>(h) + delta) % 4);
}
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline char heading_char(Heading h) { return "ENWS"[static_cast<int>(h)]; }
inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

enum class TurnKind { FixedLeft, FixedRight, Variable };

struct Segment {
  Heading heading = Heading::E;  ///< heading in the declared embedding
  GadgetKind rigidity = GadgetKind::Flex;
  std::size_t periods = 1;
  std::size_t line = 0;

  std::size_t rungs() const { return periods * gadget_period_length(rigidity); }
};

struct Turn {
  std::string id;
  TurnKind kind = TurnKind::FixedLeft;
  std::string variable;  ///< variable turns only
  Side when_true = Side::Left;
  std::string partner;
  std::size_t line = 0;

  /// Direction in the declared embedding.
  Side declared() const {
    switch (kind) {
      case TurnKind::FixedLeft: return Side::Left;
      case TurnKind::FixedRight: return Side::Right;
      case TurnKind::Variable: return when_true;
    }
    return Side::Left;
  }
};

using RouteItem = std::variant<Segment, Turn>;

struct Variable {
  std::string name;
  std::int64_t placement = 0;
};

struct Clause {
  std::string name;
  bool positive = true;
  std::vector<std::string> variables;
};

struct SatLayout {
  std::string name;
  std::int64_t spacing = 0;
  Heading heading = Heading::E;
  std::vector<Variable> variables;
  std::vector<Clause> clauses;
  std::vector<RouteItem> route;

  std::size_t variable_turns() const {
    std::size_t t = 0;
    for (const auto& item : route) {
      if (const auto* turn = std::get_if<Turn>(&item); turn && turn->kind == TurnKind::Variable) ++t;
    }
    return t;
  }
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline std::int64_t parse_int(const std::string& word, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw LayoutError("expected integer, got '" + word + "'", line);
  return value;
}

inline Heading parse_heading(const std::string& word, std::size_t line) {
  if (word == "E") return Heading::E;
  if (word == "N") return Heading::N;
  if (word == "W") return Heading::W;
  if (word == "S") return Heading::S;
  throw LayoutError("expected heading E/N/W/S, got '" + word + "'", line);
}

inline Side parse_side(const std::string& word, std::size_t line) {
  if (word == "L") return Side::Left;
  if (word == "R") return Side::Right;
  throw LayoutError("expected turn side L/R, got '" + word + "'", line);
}

struct PendingLength {
  bool relative_to_spacing = false;
  std::int64_t offset = 0;
};

inline PendingLength parse_length(const std::string& word, std::size_t line) {
  if (word.rfind("@spacing", 0) == 0) {
    const std::string rest = word.substr(8);
    if (rest.empty()) return {true, 0};
    if (rest[0] != '+' && rest[0] != '-') throw LayoutError("bad length '" + word + "'", line);
    const std::int64_t k = parse_int(rest.substr(1), line);
    return {true, rest[0] == '-' ? -k : k};
  }
  return {false, parse_int(word, line)};
}

}  // namespace detail

/// Parses the line-oriented layout format:
///
///   name <text>
///   spacing <lattice units>
///   heading E|N|W|S
///   variable <name> <placement>
///   clause <name> +|- <var>...
///   route
///     seg <heading> flex|rigid <periods | @spacing[+-k]>
///     turn <id> fixed-left|fixed-right
///     turn <id> variable <var> L|R <partner-id>
///   end
///
/// `@spacing` is the number of periods needed to cover `spacing` lattice units.
inline SatLayout parse_layout(std::string_view text) {
  SatLayout layout;
  std::vector<std::pair<std::size_t, detail::PendingLength>> pending;
  bool in_route = false, route_seen = false, route_closed = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto w = detail::split_words(raw);
    if (w.empty()) continue;
    const std::string& key = w[0];
    auto need = [&](std::size_t n) {
      if (w.size() != n) {
        throw LayoutError("'" + key + "' expects " + std::to_string(n - 1) + " argument(s)", line_no);
      }
    };
    if (in_route) {
      if (key == "end") {
        need(1);
        in_route = false;
        route_closed = true;
      } else if (key == "seg") {
        need(4);
        Segment seg;
        seg.heading = detail::parse_heading(w[1], line_no);
        if (w[2] == "flex") {
          seg.rigidity = GadgetKind::Flex;
        } else if (w[2] == "rigid") {
          seg.rigidity = GadgetKind::Rigid;
        } else {
          throw LayoutError("expected flex or rigid, got '" + w[2] + "'", line_no);
        }
        seg.line = line_no;
        pending.emplace_back(layout.route.size(), detail::parse_length(w[3], line_no));
        layout.route.emplace_back(seg);
      } else if (key == "turn") {
        if (w.size() < 3) throw LayoutError("'turn' expects an id and a kind", line_no);
        Turn turn;
        turn.id = w[1];
        turn.line = line_no;
        if (w[2] == "fixed-left" || w[2] == "fixed-right") {
          need(3);
          turn.kind = w[2] == "fixed-left" ? TurnKind::FixedLeft : TurnKind::FixedRight;
        } else if (w[2] == "variable") {
          need(6);
          turn.kind = TurnKind::Variable;
          turn.variable = w[3];
          turn.when_true = detail::parse_side(w[4], line_no);
          turn.partner = w[5];
        } else {
          throw LayoutError("unknown turn kind '" + w[2] + "'", line_no);
        }
        layout.route.emplace_back(turn);
      } else {
        throw LayoutError("unexpected '" + key + "' inside route", line_no);
      }
      continue;
    }
    if (key == "name") {
      if (w.size() < 2) throw LayoutError("'name' expects a value", line_no);
      layout.name = w[1];
    } else if (key == "spacing") {
      need(2);
      layout.spacing = detail::parse_int(w[1], line_no);
    } else if (key == "heading") {
      need(2);
      layout.heading = detail::parse_heading(w[1], line_no);
    } else if (key == "variable") {
      need(3);
      layout.variables.push_back({w[1], detail::parse_int(w[2], line_no)});
    } else if (key == "clause") {
      if (w.size() < 4) throw LayoutError("'clause' expects a name, a sign and variables", line_no);
      if (w[2] != "+" && w[2] != "-") throw LayoutError("clause sign must be + or -", line_no);
      if (w.size() > 6) throw LayoutError("clause has more than three literals", line_no);
      layout.clauses.push_back({w[1], w[2] == "+", {w.begin() + 3, w.end()}});
    } else if (key == "route") {
      need(1);
      if (route_seen) throw LayoutError("duplicate route block", line_no);
      in_route = route_seen = true;
    } else {
      throw LayoutError("unknown keyword '" + key + "'", line_no);
    }
  }
  if (!route_seen) throw LayoutError("layout has no route block");
  if (!route_closed) throw LayoutError("route block is not closed with 'end'");

  for (const auto& [at, len] : pending) {
    auto& seg = std::get<Segment>(layout.route[at]);
    std::int64_t periods = len.offset;
    if (len.relative_to_spacing) {
      const auto per = static_cast<std::int64_t>(gadget_period_length(seg.rigidity));
      periods += (layout.spacing + per - 1) / per;
    }
    if (periods < 1) throw LayoutError("segment length must be at least one period", seg.line);
    seg.periods = static_cast<std::size_t>(periods);
  }
  return layout;
}

using Assignment = std::map<std::string, bool>;

/// "x1=1,x2=false" style; also accepts whitespace separators.
inline Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("bad assignment '" + token + "'", 0);
    const std::string name = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (value == "1" || value == "true" || value == "T") {
      out[name] = true;
    } else if (value == "0" || value == "false" || value == "F") {
      out[name] = false;
    } else {
      throw ParseError("bad truth value '" + value + "' for " + name, 0);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\n' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

inline bool satisfies(const SatLayout& layout, const Assignment& assignment) {
  for (const auto& clause : layout.clauses) {
    bool sat = false;
    for (const auto& v : clause.variables) {
      if (assignment.at(v) == clause.positive) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

// ---------------------------------------------------------------- assembly

struct TurnRecord {
  std::string id;  ///< empty for detours
  Side side = Side::Left;
  int shift = 0;  ///< change in strand alignment, +2 left / -2 right
  bool detour = false;
};

struct Realization {
  Folding folding = straight_folding(1);
  std::vector<TurnRecord> turns;
  std::size_t detours = 0;
};

namespace detail {

enum class NodeRole : std::uint8_t { Rung, VariableExtra, FixedExtra };

struct RibbonNode {
  Point at;
  NodeRole role = NodeRole::Rung;
  std::size_t segment = 0;  ///< route index of the segment whose pattern applies
  long offset = 0;          ///< kA - kB alignment when emitted (strand B)
};

struct RibbonWalk {
  std::vector<RibbonNode> a;  ///< strand A in path order
  std::vector<RibbonNode> b;  ///< strand B in path order
  std::vector<TurnRecord> turns;
  std::size_t detours = 0;
  Point a_end, b_end;
  Heading heading_end = Heading::E;
};

class PointSet {
 public:
  bool contains(Point p) const { return cells_.count(pack(p)) != 0; }
  void insert(Point p) { cells_.insert(pack(p)); }
  void reserve(std::size_t n) { cells_.reserve(n); }

 private:
  std::unordered_set<std::uint64_t> cells_;
};

// Walks the route as a two-wide ribbon. With `sides` empty the declared
// embedding is used; otherwise `sides` gives each variable turn's direction in
// route order. Limits cap the strand lengths (realization mode); when either
// strand runs out the walk stops and the caller closes the hairpin tip.
class RibbonWalker {
 public:
  RibbonWalker(const SatLayout& layout, std::vector<Side> variable_sides, bool detours,
               std::size_t a_limit, std::size_t b_limit, PointSet& occupied)
      : layout_(layout),
        sides_(std::move(variable_sides)),
        allow_detours_(detours),
        a_limit_(a_limit),
        b_limit_(b_limit),
        occupied_(occupied) {}

  RibbonWalk walk() {
    heading_ = layout_.heading;
    a_ = {0, 0};
    b_ = a_ + unit(turned(heading_, Side::Left));
    std::size_t var_index = 0;
    bool first = true;
    for (std::size_t i = 0; i < layout_.route.size() && !stopped_; ++i) {
      if (const auto* seg = std::get_if<Segment>(&layout_.route[i])) {
        std::size_t steps = seg->rungs();
        if (first) {
          if (!emit_a(a_, NodeRole::Rung, i) || !emit_b(b_, NodeRole::Rung, i)) break;
          --steps;
          first = false;
        }
        segment_ = i;
        for (std::size_t s = 0; s < steps && !stopped_; ++s) straight(i);
      } else {
        const auto& turn = std::get<Turn>(layout_.route[i]);
        Side side = turn.declared();
        if (turn.kind == TurnKind::Variable && !sides_.empty()) side = sides_[var_index];
        if (turn.kind == TurnKind::Variable) ++var_index;
        const NodeRole role =
            turn.kind == TurnKind::Variable ? NodeRole::VariableExtra : NodeRole::FixedExtra;
        corner(side, role, turn.id, turn.line);
      }
    }
    out_.a_end = a_;
    out_.b_end = b_;
    out_.heading_end = heading_;
    return std::move(out_);
  }

 private:
  bool emit_a(Point p, NodeRole role, std::size_t segment) {
    if (out_.a.size() >= a_limit_) {
      stopped_ = true;
      return false;
    }
    claim(p);
    out_.a.push_back({p, role, segment, 0});
    return true;
  }

  bool emit_b(Point p, NodeRole role, std::size_t segment) {
    if (out_.b.size() >= b_limit_) {
      stopped_ = true;
      return false;
    }
    claim(p);
    out_.b.push_back({p, role, segment, offset()});
    return true;
  }

  long offset() const {
    return static_cast<long>(out_.a.size()) - static_cast<long>(out_.b.size()) - 1;
  }

  void claim(Point p) {
    if (occupied_.contains(p)) {
      throw LayoutError("ribbon collides with itself at (" + std::to_string(p.x) + "," +
                        std::to_string(p.y) + ")");
    }
    occupied_.insert(p);
  }

  bool clear_ahead(Point a, Point b, Heading h) const {
    for (std::int64_t k = 1; k <= kLookahead; ++k) {
      const Point step{unit(h).x * k, unit(h).y * k};
      if (occupied_.contains(a + step) || occupied_.contains(b + step)) return false;
    }
    return true;
  }

  bool can_turn(Side side) const {
    const Heading next = turned(heading_, side);
    const Point h = unit(heading_), n = unit(next);
    if (side == Side::Left) {
      const Point c1 = a_ + h, c2 = a_ + h + n;
      return !occupied_.contains(c1) && !occupied_.contains(c2) && clear_ahead(c2, b_, next);
    }
    const Point c1 = b_ + h, c2 = b_ + h + n;
    return !occupied_.contains(c1) && !occupied_.contains(c2) && clear_ahead(a_, c2, next);
  }

  void straight(std::size_t segment) {
    if (allow_detours_ && !clear_ahead(a_, b_, heading_)) {
      Side side = Side::Left;
      if (!can_turn(side)) side = Side::Right;
      if (!can_turn(side)) throw LayoutError("no collision-free realization near a blocked run");
      ++out_.detours;
      corner(side, NodeRole::VariableExtra, "", 0, true);
      if (stopped_) return;
    }
    const Point h = unit(heading_);
    if (!emit_a(a_ + h, NodeRole::Rung, segment)) return;
    if (!emit_b(b_ + h, NodeRole::Rung, segment)) return;
    a_ = a_ + h;
    b_ = b_ + h;
  }

  void corner(Side side, NodeRole role, const std::string& id, std::size_t line,
              bool detour = false) {
    const Heading next = turned(heading_, side);
    const Point h = unit(heading_), n = unit(next);
    const Point first = (side == Side::Left ? a_ : b_) + h;
    const Point second = first + n;
    if (occupied_.contains(first) || occupied_.contains(second)) {
      throw LayoutError("ribbon collides at turn " + (id.empty() ? std::string("(detour)") : id),
                        line);
    }
    if (side == Side::Left) {
      if (!emit_a(first, role, segment_) || !emit_a(second, role, segment_)) return;
      a_ = second;
    } else {
      if (!emit_b(first, role, segment_) || !emit_b(second, role, segment_)) return;
      b_ = second;
    }
    heading_ = next;
    out_.turns.push_back({id, side, side == Side::Left ? 2 : -2, detour});
  }

  static constexpr std::int64_t kLookahead = 3;

  const SatLayout& layout_;
  std::vector<Side> sides_;
  bool allow_detours_;
  std::size_t a_limit_, b_limit_;
  PointSet& occupied_;
  RibbonWalk out_;
  Point a_, b_;
  Heading heading_ = Heading::E;
  std::size_t segment_ = 0;
  bool stopped_ = false;
};

inline void validate_layout(const SatLayout& layout) {
  std::set<std::string> vars;
  for (const auto& v : layout.variables) {
    if (!vars.insert(v.name).second) throw LayoutError("duplicate variable " + v.name);
  }
  for (const auto& c : layout.clauses) {
    for (const auto& v : c.variables) {
      if (!vars.count(v)) throw LayoutError("clause " + c.name + " uses undeclared variable " + v);
    }
  }
  const auto& route = layout.route;
  if (route.empty() || !std::holds_alternative<Segment>(route.front()) ||
      !std::holds_alternative<Segment>(route.back())) {
    throw LayoutError("route must start and end with a segment");
  }
  std::map<std::string, std::size_t> turn_at;
  Heading h = layout.heading;
  for (std::size_t i = 0; i < route.size(); ++i) {
    const bool want_segment = i % 2 == 0;
    if (want_segment != std::holds_alternative<Segment>(route[i])) {
      throw LayoutError("route must alternate segments and turns");
    }
    if (const auto* seg = std::get_if<Segment>(&route[i])) {
      if (seg->heading != h) {
        throw LayoutError(std::string("segment heading ") + heading_char(seg->heading) +
                              " disagrees with the declared turns (expected " + heading_char(h) + ")",
                          seg->line);
      }
    } else {
      const auto& turn = std::get<Turn>(route[i]);
      if (!turn_at.emplace(turn.id, i).second) throw LayoutError("duplicate turn id " + turn.id, turn.line);
      if (turn.kind == TurnKind::Variable && !vars.count(turn.variable)) {
        throw LayoutError("turn " + turn.id + " uses undeclared variable " + turn.variable, turn.line);
      }
      h = turned(h, turn.declared());
    }
  }

  // Variable turns come in complementary pairs; everything inside or next to
  // a pair must tolerate an alignment change of four.
  std::vector<bool> inside(route.size(), false);
  for (std::size_t i = 1; i < route.size(); i += 2) {
    const auto& turn = std::get<Turn>(route[i]);
    if (turn.kind != TurnKind::Variable) continue;
    const auto it = turn_at.find(turn.partner);
    if (it == turn_at.end()) throw LayoutError("variable turn " + turn.id + " has no partner", turn.line);
    const auto& partner = std::get<Turn>(route[it->second]);
    if (partner.kind != TurnKind::Variable || partner.partner != turn.id) {
      throw LayoutError("variable turn " + turn.id + " is not paired back by " + partner.id, turn.line);
    }
    if (partner.variable != turn.variable || partner.when_true == turn.when_true) {
      throw LayoutError("paired turns " + turn.id + "/" + partner.id +
                            " must share a variable and turn opposite ways",
                        turn.line);
    }
    const std::size_t lo = std::min(i, it->second), hi = std::max(i, it->second);
    for (std::size_t k = lo + 1; k < hi; ++k) inside[k] = true;
    for (std::size_t k : {i - 1, i + 1}) {
      const auto& seg = std::get<Segment>(route[k]);
      if (seg.rigidity != GadgetKind::Flex || seg.periods < 2) {
        throw LayoutError("segments next to variable turn " + turn.id +
                              " must be flex with at least two periods",
                          seg.line);
      }
    }
  }
  for (std::size_t k = 0; k < route.size(); ++k) {
    if (!inside[k]) continue;
    if (const auto* seg = std::get_if<Segment>(&route[k]); seg && seg->rigidity != GadgetKind::Flex) {
      throw LayoutError("rigid segment between paired variable turns", seg->line);
    }
    if (const auto* turn = std::get_if<Turn>(&route[k]); turn && turn->kind != TurnKind::Variable) {
      throw LayoutError("fixed turn " + turn->id + " between paired variable turns", turn->line);
    }
  }

  const std::size_t t = layout.variable_turns();
  if (layout.spacing <= static_cast<std::int64_t>(40 * t)) {
    throw LayoutError("spacing " + std::to_string(layout.spacing) + " must exceed 40t = " +
                      std::to_string(40 * t));
  }
}

}  // namespace detail

class ReductionInstance;
ReductionInstance assemble(const SatLayout& layout);

class ReductionInstance {
 public:
  const SatLayout& layout() const { return layout_; }
  const Chain& chain() const { return chain_; }
  /// Bond target bondable/2 - t.
  std::size_t k() const { return k_; }
  std::size_t variable_turns() const { return t_; }
  /// Non-X nodes.
  std::size_t bondable() const { return bondable_; }
  std::size_t tail_length() const { return tail_; }
  /// Nodes outside the two tails.
  std::size_t non_tail_nodes() const { return strand_a_ + 2 + strand_b_; }
  std::size_t strand_a_length() const { return strand_a_; }
  std::size_t strand_b_length() const { return strand_b_; }
  /// How each turn corner was realized.
  const std::vector<std::string>& corner_notes() const { return notes_; }

  /// 1-based chain index ranges of the two strands.
  std::pair<std::size_t, std::size_t> strand_a_range() const { return {tail_ + 1, tail_ + strand_a_}; }
  std::pair<std::size_t, std::size_t> strand_b_range() const {
    return {tail_ + strand_a_ + 3, tail_ + strand_a_ + 2 + strand_b_};
  }

  /// The folding the assignment induces: variable turns follow their
  /// variable, and a run blocked by another part of the ribbon is bent away
  /// with an undesignated turn (a detour).
  Realization intended_folding(const Assignment& assignment) const {
    std::vector<Side> sides;
    for (const auto& item : layout_.route) {
      const auto* turn = std::get_if<Turn>(&item);
      if (!turn || turn->kind != TurnKind::Variable) continue;
      const auto it = assignment.find(turn->variable);
      if (it == assignment.end()) {
        throw PreconditionError("assignment does not cover variable " + turn->variable);
      }
      sides.push_back(it->second ? turn->when_true : opposite(turn->when_true));
    }
    for (const auto& v : layout_.variables) {
      if (!assignment.count(v.name)) {
        throw PreconditionError("assignment does not cover variable " + v.name);
      }
    }

    detail::PointSet occupied;
    occupied.reserve(chain_.size() * 2);
    const Heading h0 = layout_.heading;
    const Point back{-unit(h0).x, -unit(h0).y};
    const Point a0{0, 0};
    const Point b0 = a0 + unit(turned(h0, Side::Left));
    for (std::size_t k = 1; k <= tail_; ++k) {
      const auto s = static_cast<std::int64_t>(k);
      occupied.insert({a0.x + back.x * s, a0.y + back.y * s});
      occupied.insert({b0.x + back.x * s, b0.y + back.y * s});
    }

    detail::RibbonWalker walker(layout_, sides, true, strand_a_, strand_b_, occupied);
    detail::RibbonWalk walk = walker.walk();

    std::vector<Point> pts(chain_.size());
    for (std::size_t k = 1; k <= tail_; ++k) {
      const auto s = static_cast<std::int64_t>(tail_ - k + 1);
      pts[k - 1] = {a0.x + back.x * s, a0.y + back.y * s};
    }
    for (std::size_t k = 0; k < walk.a.size(); ++k) pts[tail_ + k] = walk.a[k].at;
    const std::size_t last = tail_ + strand_a_ + 2 + strand_b_;  // index of B_0
    for (std::size_t k = 0; k < walk.b.size(); ++k) pts[last - k - 1] = walk.b[k].at;
    for (std::size_t k = 1; k <= tail_; ++k) {
      const auto s = static_cast<std::int64_t>(k);
      pts[last + k - 1] = {b0.x + back.x * s, b0.y + back.y * s};
    }

    // Close the hairpin: everything not yet placed runs out along the A lane
    // and back along the B lane.
    const std::size_t first_free = tail_ + walk.a.size() + 1;
    const std::size_t last_free = last - walk.b.size();
    const std::size_t rest = last_free - first_free + 1;
    if (rest % 2 != 0) throw LayoutError("internal: odd hairpin tip");
    const auto width = static_cast<std::int64_t>(rest / 2);
    const Point h = unit(walk.heading_end);
    std::size_t idx = first_free;
    for (std::int64_t s = 1; s <= width; ++s) {
      const Point p{walk.a_end.x + h.x * s, walk.a_end.y + h.y * s};
      if (occupied.contains(p)) throw LayoutError("hairpin tip collides");
      occupied.insert(p);
      pts[idx++ - 1] = p;
    }
    for (std::int64_t s = width; s >= 1; --s) {
      const Point p{walk.b_end.x + h.x * s, walk.b_end.y + h.y * s};
      if (occupied.contains(p)) throw LayoutError("hairpin tip collides");
      occupied.insert(p);
      pts[idx++ - 1] = p;
    }

    Realization out;
    out.folding = validate_folding(chain_, std::move(pts));
    out.turns = std::move(walk.turns);
    out.detours = walk.detours;
    return out;
  }

 private:
  friend ReductionInstance assemble(const SatLayout& layout);

  SatLayout layout_;
  Chain chain_;
  std::size_t k_ = 0, t_ = 0, bondable_ = 0, tail_ = 0, strand_a_ = 0, strand_b_ = 0;
  std::vector<std::string> notes_;
};

inline ReductionInstance assemble(const SatLayout& layout) {
  detail::validate_layout(layout);

  detail::PointSet occupied;
  detail::RibbonWalk walk;
  try {
    walk = detail::RibbonWalker(layout, {}, false, std::numeric_limits<std::size_t>::max(),
                                std::numeric_limits<std::size_t>::max(), occupied)
               .walk();
  } catch (const LayoutError& e) {
    throw LayoutError(std::string("declared route crosses itself: ") + e.what());
  }

  // Strand A: gadget pattern per segment, continuing its phase across
  // variable-turn extras; X at fixed-turn corners.
  std::vector<Base> a_bases;
  a_bases.reserve(walk.a.size());
  std::size_t phase = 0;
  const std::string* pattern = nullptr;
  for (const auto& node : walk.a) {
    if (node.role == detail::NodeRole::FixedExtra) {
      a_bases.push_back(Base::X);
      continue;
    }
    const auto& seg = std::get<Segment>(layout.route[node.segment]);
    const std::string* want = &gadget_period_a(seg.rigidity);
    if (want != pattern) {
      pattern = want;
      phase = 0;
    }
    a_bases.push_back(parse_chain(std::string(1, (*pattern)[phase % pattern->size()]))[1]);
    ++phase;
  }
  // Strand B: complement of the strand-A node it faces, k_B + offset.
  std::vector<Base> b_bases;
  b_bases.reserve(walk.b.size());
  for (std::size_t k = 0; k < walk.b.size(); ++k) {
    const auto& node = walk.b[k];
    if (node.role == detail::NodeRole::FixedExtra) {
      b_bases.push_back(Base::X);
      continue;
    }
    const long partner = static_cast<long>(k) + node.offset;
    if (partner < 0 || partner >= static_cast<long>(a_bases.size()) ||
        a_bases[static_cast<std::size_t>(partner)] == Base::X) {
      throw LayoutError("internal: strand B node without a strand A partner");
    }
    b_bases.push_back(complement(a_bases[static_cast<std::size_t>(partner)]));
  }

  ReductionInstance inst;
  inst.layout_ = layout;
  inst.strand_a_ = a_bases.size();
  inst.strand_b_ = b_bases.size();
  inst.tail_ = required_tail_length(inst.non_tail_nodes());
  inst.t_ = layout.variable_turns();

  std::vector<Base> bases;
  bases.reserve(2 * inst.tail_ + inst.non_tail_nodes());
  bases.insert(bases.end(), inst.tail_, Base::X);
  bases.insert(bases.end(), a_bases.begin(), a_bases.end());
  bases.insert(bases.end(), 2, Base::X);
  bases.insert(bases.end(), b_bases.rbegin(), b_bases.rend());
  bases.insert(bases.end(), inst.tail_, Base::X);
  inst.chain_ = Chain(std::move(bases));

  inst.bondable_ = static_cast<std::size_t>(
      std::count_if(inst.chain_.bases().begin(), inst.chain_.bases().end(),
                    [](Base b) { return b != Base::X; }));
  inst.k_ = inst.bondable_ / 2 - inst.t_;

  // The declared embedding, tails included, must realize without collisions
  // or detours.
  Assignment declared;
  for (const auto& v : layout.variables) declared[v.name] = true;
  try {
    if (inst.intended_folding(declared).detours != 0) {
      throw LayoutError("a run passes too close to another part of the route");
    }
  } catch (const LayoutError& e) {
    throw LayoutError(std::string("declared route crosses itself: ") + e.what());
  } catch (const FoldingError& e) {
    throw LayoutError(std::string("declared route crosses itself: ") + e.what());
  }

  for (const auto& item : layout.route) {
    const auto* turn = std::get_if<Turn>(&item);
    if (!turn) continue;
    const Side side = turn->declared();
    const char* strand = side == Side::Left ? "A" : "B";
    if (turn->kind == TurnKind::Variable) {
      inst.notes_.push_back(turn->id + ": variable (" + turn->variable + " true -> " +
                            side_char(side) + "), two bondable extras on the outer strand (" +
                            strand + " when declared), pattern phase continued");
    } else {
      inst.notes_.push_back(turn->id + ": fixed-" + (side == Side::Left ? "left" : "right") +
                            ", two X extras on outer strand " + strand);
    }
  }
  return inst;
}

struct InstanceCheck {
  std::size_t bonds = 0;
  bool meets_k = false;
  std::size_t detours = 0;
};

inline InstanceCheck verify_instance(const ReductionInstance& instance, const Assignment& assignment) {
  const Realization r = instance.intended_folding(assignment);
  InstanceCheck out;
  out.bonds = score(instance.chain(), r.folding).size;
  out.meets_k = out.bonds >= instance.k();
  out.detours = r.detours;
  return out;
}

// ---------------------------------------------------------------- straightness

struct StraightnessReport {
  Chain chain;
  std::size_t optimal_score = 0;
  std::size_t optimal_count = 0;
  std::size_t straight_score = 0;
  bool straight_unique = false;
};

/// Hairpinned double strand: strand A, a two-X cap, then strand B reversed.
inline Chain straightness_chain(GadgetKind kind, std::size_t periods) {
  const StrandPair g = detail::repeat_gadget(kind, periods);
  std::string b(g.strand_b.rbegin(), g.strand_b.rend());
  return parse_chain(g.strand_a + "XX" + b);
}

/// Exhaustively checks that the straight antiparallel embedding of the
/// gadget's double strand is its unique optimal folding.
inline StraightnessReport check_straightness(GadgetKind kind, std::size_t periods,
                                             SolveOptions options = {}) {
  StraightnessReport out;
  out.chain = straightness_chain(kind, periods);
  options.max_length = std::max(options.max_length, out.chain.size());
  if (options.representative_cap != 0) options.representative_cap = std::max<std::size_t>(options.representative_cap, 2);
  const SolveReport report = exact_solve(out.chain, options);
  const Folding straight = hairpin_folding(out.chain.size(), out.chain.size() / 2);
  out.optimal_score = report.optimal_score;
  out.optimal_count = report.optimal_count;
  out.straight_score = score(out.chain, straight).size;
  out.straight_unique = report.optimal_count == 1 && out.straight_score == report.optimal_score &&
                        canonical_form(report.representatives.front()) == canonical_form(straight);
  return out;
}

inline bool verify_straightness(GadgetKind kind, std::size_t periods, SolveOptions options = {}) {
  return check_straightness(kind, periods, options).straight_unique;
}

}  // namespace rnafold

#endif  // RNAFOLD_REDUCTION_HPP
