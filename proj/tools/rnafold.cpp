// rnafold: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 search limit, 3 verification failed.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rnafold/rnafold.hpp"

namespace {

using namespace rnafold;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;
constexpr int kExitVerify = 3;

struct Common {
  std::string format = "text";
  std::string render;
  std::string out;
  bool timing = false;
};

struct Input {
  std::string text;  // what the digest covers
  Chain chain;
};

// A positional argument is a file path when such a file exists, else literal text.
std::string load_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

Input load_sequence(const std::string& arg) {
  std::string text = load_arg(arg);
  std::string seq;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(start, nl - start);
    start = nl + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line[0] == '>') continue;  // FASTA header
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) seq.push_back(c);
    }
  }
  Chain chain = parse_chain(seq);
  return {chain.str(), std::move(chain)};
}

RenderFormat parse_render(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  throw ParseError("unknown render format '" + name + "'", 0);
}

void emit(const ResultDocument& doc, const Common& common) {
  std::cout << (common.format == "structured" ? doc.to_json() : doc.to_text());
}

// Writes the folding (or its picture with --render) to --out and records the
// reference; without --out a requested picture goes to stdout after the document.
void emit_with_folding(ResultDocument& doc, const Common& common, const Chain& chain,
                       const Folding& folding) {
  std::string picture;
  if (!common.render.empty()) picture = render(chain, folding, {parse_render(common.render)});
  if (!common.out.empty()) {
    write_file(common.out, picture.empty() ? write_folding(folding) : picture);
    doc.set(picture.empty() ? "folding-file" : "render-file", common.out);
  }
  emit(doc, common);
  if (common.out.empty() && !picture.empty()) std::cout << picture;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_timing(ResultDocument& doc, const Common& common, const Stopwatch& clock) {
  if (common.timing) doc.set("elapsed-ms", std::to_string(static_cast<long long>(clock.ms())));
}

// ---------------------------------------------------------------- subcommands

int run_solve(const std::string& arg, const SolveOptions& options, const Common& common) {
  const Stopwatch clock;
  const Input in = load_sequence(arg);
  const SolveReport report = exact_solve(in.chain, options);
  ResultDocument doc = solve_document(in.chain, report);
  add_timing(doc, common, clock);
  emit_with_folding(doc, common, in.chain, report.representatives.front());
  return kExitOk;
}

int run_bound(const std::string& arg, bool parity_only, bool bbox_only, const Common& common) {
  const Input in = load_sequence(arg);
  ResultDocument doc("bound", in.text);
  doc.set("sequence", in.chain.str());
  doc.set("length", in.chain.size());
  if (!bbox_only) {
    const ParityBound p = bound_parity(in.chain);
    doc.set("parity-bound", p.value);
    doc.set("parity-bound-extension", p.extension);
  }
  if (!parity_only) {
    const BboxBound b = bound_bbox(in.chain.size());
    doc.set("bbox-bound", b.value);
    doc.set("bbox-bound-extension", b.extension);
  }
  emit(doc, common);
  return kExitOk;
}

int run_gen(const std::string& family, const std::vector<std::size_t>& params, const Common& common) {
  std::string echo = family;
  for (auto p : params) echo += " " + std::to_string(p);
  ResultDocument doc("gen", echo);
  doc.set("family", family);
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw ParseError("family '" + family + "' takes " + std::to_string(n) + " parameter(s)", 0);
    }
  };
  if (family == "sn") {
    need(1);
    const Chain c = make_Sn(params[0]);
    doc.set("sequence", c.str());
    doc.set("uniqueness-applies", sn_uniqueness_applies(params[0]));
    emit(doc, common);
  } else if (family == "fn") {
    need(1);
    const Chain c = make_Sn(params[0]);
    const Folding f = make_Fn(params[0]);
    doc.set("sequence", c.str());
    doc.set("folding", to_moves(f));
    doc.set("bonds", score(c, f).size);
    emit_with_folding(doc, common, c, f);
  } else if (family == "mixed") {
    need(2);
    const MixedChain m = make_mixed(params[0], params[1]);
    doc.set("sequence", m.chain.str());
    doc.set("uniqueness-applies", m.uniqueness_applies);
    emit(doc, common);
  } else {
    throw ParseError("unknown family '" + family + "' (expected sn, fn or mixed)", 0);
  }
  return kExitOk;
}

int run_approx(const std::string& arg, const SolveOptions& options, bool exact, const Common& common) {
  const Stopwatch clock;
  const Input in = load_sequence(arg);
  const ApproxResult r = approx_fold(in.chain);
  ResultDocument doc("approx", in.text);
  doc.set("sequence", in.chain.str());
  doc.set("length", in.chain.size());
  doc.set("achieved", r.achieved);
  doc.set("guarantee", r.guarantee);
  doc.set("branch", r.relabeled.branch == Branch::OddGEvenC ? "odd-G/even-C" : "even-G/odd-C");
  doc.set("fold-index", r.plan.fold_index);
  doc.set("matched-pairs", r.plan.matched_pairs.size());
  doc.set("parity-bound", bound_parity(in.chain).value);
  if (exact) doc.set("optimal", exact_solve(in.chain, options).optimal_score);
  doc.set("folding", to_moves(r.folding));
  add_timing(doc, common, clock);
  emit_with_folding(doc, common, in.chain, r.folding);
  return kExitOk;
}

std::string assignment_text(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) out += (out.empty() ? "" : ",") + name + "=" + (value ? "1" : "0");
  return out;
}

int run_reduce(const std::string& path, const std::vector<std::string>& assignments,
               const Common& common) {
  const std::string text = read_file(path);
  const ReductionInstance inst = assemble(parse_layout(text));
  ResultDocument doc("reduce", text);
  doc.set("name", inst.layout().name);
  doc.set("length", inst.chain().size());
  doc.set("tail-length", inst.tail_length());
  doc.set("non-tail-nodes", inst.non_tail_nodes());
  doc.set("bondable", inst.bondable());
  doc.set("variable-turns", inst.variable_turns());
  doc.set("k", inst.k());
  doc.set("sequence-digest", hex64(fnv1a64(inst.chain().str())));
  for (std::size_t i = 0; i < inst.corner_notes().size(); ++i) {
    doc.set("corner." + std::to_string(i + 1), inst.corner_notes()[i]);
  }
  if (!common.out.empty()) {
    write_file(common.out + ".seq", inst.chain().str() + "\n");
    doc.set("sequence-file", common.out + ".seq");
  }
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const Assignment a = parse_assignment(assignments[i]);
    const Realization r = inst.intended_folding(a);
    const std::string key = "assignment." + std::to_string(i + 1);
    doc.set(key, assignment_text(a));
    doc.set(key + ".bonds", score(inst.chain(), r.folding).size);
    doc.set(key + ".detours", r.detours);
    if (!common.out.empty()) {
      const std::string file = common.out + "." + std::to_string(i + 1) + ".fold";
      write_file(file, write_folding(r.folding));
      doc.set(key + ".folding-file", file);
    }
  }
  if (!common.out.empty()) write_file(common.out + ".meta", doc.to_text());
  emit(doc, common);
  return kExitOk;
}

int run_verify_instance(const std::string& path, const std::string& assignment, const Common& common) {
  const std::string text = read_file(path);
  const ReductionInstance inst = assemble(parse_layout(text));
  const Assignment a = parse_assignment(assignment);
  const InstanceCheck check = verify_instance(inst, a);
  ResultDocument doc("verify", text + "\n" + assignment_text(a));
  doc.set("name", inst.layout().name);
  doc.set("assignment", assignment_text(a));
  doc.set("satisfies", satisfies(inst.layout(), a));
  doc.set("k", inst.k());
  doc.set("bonds", check.bonds);
  doc.set("detours", check.detours);
  doc.set("meets-k", check.meets_k);
  emit(doc, common);
  return check.meets_k ? kExitOk : kExitVerify;
}

int run_verify_gadget(const std::string& kind, std::size_t periods, SolveOptions options,
                      const Common& common) {
  GadgetKind g;
  if (kind == "flex") {
    g = GadgetKind::Flex;
  } else if (kind == "rigid") {
    g = GadgetKind::Rigid;
  } else {
    throw ParseError("gadget must be flex or rigid", 0);
  }
  const StraightnessReport r = check_straightness(g, periods, options);
  ResultDocument doc("verify", kind + " " + std::to_string(periods));
  doc.set("gadget", kind);
  doc.set("periods", periods);
  doc.set("sequence", r.chain.str());
  doc.set("optimal-score", r.optimal_score);
  doc.set("optimal-count", r.optimal_count);
  doc.set("straight-score", r.straight_score);
  doc.set("straight-unique", r.straight_unique);
  emit(doc, common);
  return r.straight_unique ? kExitOk : kExitVerify;
}

int run_render(const std::string& seq_arg, const std::string& folding_arg, Common common) {
  const Input in = load_sequence(seq_arg);
  const Folding parsed = read_folding(load_arg(folding_arg));
  const Folding f = validate_folding(
      in.chain, std::vector<Point>(parsed.points().begin(), parsed.points().end()));
  if (common.render.empty()) common.render = "ascii";
  const std::string picture = render(in.chain, f, {parse_render(common.render)});
  if (common.out.empty()) {
    std::cout << picture;
  } else {
    write_file(common.out, picture);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate RNA folding on the square lattice"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rnafold 1.0.0");

  Common common;
  SolveOptions options;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output encoding")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--timing", common.timing, "Include elapsed time in the result");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--workers", options.workers, "Solver threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-length", options.max_length, "Exhaustive search length limit");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--render", common.render, "Draw the folding")
        ->check(CLI::IsMember({"ascii", "svg"}));
    sub->add_option("--out", common.out, "Write the folding (or drawing) to FILE");
  };

  std::string input;
  auto* solve = app.add_subcommand("solve", "Exact optimal folding");
  solve->add_option("sequence", input, "Sequence or file")->required();
  add_common(solve);
  add_solver(solve);
  add_output(solve);
  bool all_optima = false, no_prune = false;
  solve->add_option("--representatives", options.representative_cap, "Optimal foldings to list");
  solve->add_flag("--all-optima", all_optima, "List every optimal folding");
  solve->add_flag("--no-prune", no_prune, "Disable bound pruning");

  auto* bound = app.add_subcommand("bound", "Closed-form upper bounds");
  bound->add_option("sequence", input, "Sequence or file")->required();
  bool parity_only = false, bbox_only = false;
  auto* parity_flag = bound->add_flag("--parity", parity_only, "Parity bound only");
  bound->add_flag("--bbox", bbox_only, "Bounding-box bound only")->excludes(parity_flag);
  add_common(bound);

  std::string family;
  std::vector<std::size_t> params;
  auto* gen = app.add_subcommand("gen", "Generate sn N, fn N or mixed M N");
  gen->add_option("family", family, "sn, fn or mixed")->required();
  gen->add_option("params", params, "Family parameters")->required();
  add_common(gen);
  add_output(gen);

  bool exact = false;
  auto* approx = app.add_subcommand("approx", "Approximate folding of a G/C chain");
  approx->add_option("sequence", input, "Sequence or file")->required();
  approx->add_flag("--exact", exact, "Also report the exact optimum");
  add_common(approx);
  add_solver(approx);
  add_output(approx);

  std::vector<std::string> assignments;
  auto* reduce = app.add_subcommand("reduce", "Compile a routed SAT layout");
  reduce->add_option("layout", input, "Layout file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--assignment", assignments, "Realize this assignment, e.g. x1=1,x2=0");
  reduce->add_option("--out", common.out, "Prefix for .seq, .meta and .fold files");
  add_common(reduce);

  std::string assignment, gadget;
  std::size_t periods = 0;
  auto* verify = app.add_subcommand("verify", "Check an instance assignment or a gadget");
  verify->add_option("layout", input, "Layout file");
  verify->add_option("assignment", assignment, "e.g. x1=1,x2=0");
  verify->add_option("--gadget", gadget, "flex or rigid straightness check");
  verify->add_option("--periods", periods, "Gadget periods");
  add_common(verify);
  add_solver(verify);

  std::string folding_arg;
  auto* draw = app.add_subcommand("render", "Draw a folding");
  draw->add_option("sequence", input, "Sequence or file")->required();
  draw->add_option("folding", folding_arg, "Folding file or move string")->required();
  draw->add_option("--render", common.render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  draw->add_option("--out", common.out, "Write the drawing to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      if (all_optima) options.representative_cap = 0;
      options.prune = !no_prune;
      return run_solve(input, options, common);
    }
    if (*bound) return run_bound(input, parity_only, bbox_only, common);
    if (*gen) return run_gen(family, params, common);
    if (*approx) return run_approx(input, options, exact, common);
    if (*reduce) return run_reduce(input, assignments, common);
    if (*verify) {
      if (!gadget.empty()) return run_verify_gadget(gadget, periods, options, common);
      if (input.empty() || assignment.empty()) {
        std::cerr << "verify: expected LAYOUT ASSIGNMENT or --gadget KIND --periods N\n";
        return kExitUsage;
      }
      return run_verify_instance(input, assignment, common);
    }
    if (*draw) return run_render(input, folding_arg, common);
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
