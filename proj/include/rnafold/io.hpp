#ifndef RNAFOLD_IO_HPP
#define RNAFOLD_IO_HPP

// Folding files and result documents.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rnafold/error.hpp"
#include "rnafold/lattice.hpp"
#include "rnafold/solver.hpp"

namespace rnafold {

// ---------------------------------------------------------------- folding files

/// One "x y" line per node in chain order.
inline std::string write_folding(const Folding& folding) {
  std::string out = "# folding, " + std::to_string(folding.size()) + " nodes\n";
  for (const Point& p : folding.points()) {
    out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
  }
  return out;
}

/// Accepts "x y" lines or a single move string (R/L/U/D). '#' starts a comment.
inline Folding read_folding(std::string_view text) {
  std::vector<Point> pts;
  std::string moves;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> w;
    for (std::string f; fields >> f;) w.push_back(f);
    if (w.empty()) continue;
    if (w.size() == 1) {
      if (!pts.empty()) throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'", line_no);
      moves += w[0];
      continue;
    }
    if (w.size() != 2 || !moves.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'", line_no);
    }
    Point p;
    try {
      std::size_t used_x = 0, used_y = 0;
      p.x = std::stoll(w[0], &used_x);
      p.y = std::stoll(w[1], &used_y);
      if (used_x != w[0].size() || used_y != w[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad coordinate", line_no);
    }
    pts.push_back(p);
  }
  if (!moves.empty()) return folding_from_moves(moves);
  if (pts.empty()) throw ParseError("folding file is empty", 0);
  return Folding::from_points(std::move(pts));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------- result documents

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Ordered key/value record. Text form is one "key: value" line per field.
class ResultDocument {
 public:
  ResultDocument() = default;
  ResultDocument(std::string command, std::string_view input) {
    set("command", std::move(command));
    set("input-digest", hex64(fnv1a64(input)));
  }

  /// Replaces the value of an existing key in place, otherwise appends.
  void set(const std::string& key, std::string value) {
    if (key.empty() || key.find_first_of(":\n") != std::string::npos) {
      throw PreconditionError("bad result key '" + key + "'");
    }
    for (auto& [k, v] : fields_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    fields_.emplace_back(key, std::move(value));
  }
  void set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }
  void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }

  std::optional<std::string> get(std::string_view key) const {
    for (const auto& [k, v] : fields_) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  std::string to_text() const {
    std::string out;
    for (const auto& [k, v] : fields_) out += k + ": " + escape(v) + "\n";
    return out;
  }

  static ResultDocument from_text(std::string_view text) {
    ResultDocument doc;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (line.empty()) continue;
      const auto colon = line.find(": ");
      if (colon == std::string::npos || colon == 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'", line_no);
      }
      doc.set(line.substr(0, colon), unescape(line.substr(colon + 2)));
    }
    return doc;
  }

  std::string to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields_) j[k] = v;
    return j.dump(2) + "\n";
  }

  static ResultDocument from_json(std::string_view text) {
    ResultDocument doc;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("result document must be an object", 0);
    for (const auto& [k, v] : j.items()) {
      if (!v.is_string()) throw ParseError("field '" + k + "' is not a string", 0);
      doc.set(k, v.get<std::string>());
    }
    return doc;
  }

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;

 private:
  static std::string escape(const std::string& v) {
    std::string out;
    for (char c : v) {
      if (c == '\\') {
        out += "\\\\";
      } else if (c == '\n') {
        out += "\\n";
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  static std::string unescape(const std::string& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == '\\' && i + 1 < v.size()) {
        ++i;
        out.push_back(v[i] == 'n' ? '\n' : v[i]);
      } else {
        out.push_back(v[i]);
      }
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Result document for an exact solve. Worker count is deliberately absent.
inline ResultDocument solve_document(const Chain& chain, const SolveReport& report) {
  ResultDocument doc("solve", chain.str());
  doc.set("sequence", chain.str());
  doc.set("length", chain.size());
  doc.set("optimal-score", report.optimal_score);
  doc.set("optimal-count", report.optimal_count);
  doc.set("unique", report.optimal_count == 1);
  doc.set("nodes-explored", report.nodes_explored);
  doc.set("pruned", report.pruned);
  doc.set("representatives", report.representatives.size());
  for (std::size_t i = 0; i < report.representatives.size(); ++i) {
    doc.set("representative." + std::to_string(i + 1), to_moves(report.representatives[i]));
  }
  return doc;
}

}  // namespace rnafold

#endif  // RNAFOLD_IO_HPP
