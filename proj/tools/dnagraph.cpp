// Copyright 2026 The dnagraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every verb parses, calls the library and formats.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnagraph/acceptance.hpp"
#include "dnagraph/constructions.hpp"
#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/io.hpp"
#include "dnagraph/isomorphism.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/lift.hpp"
#include "dnagraph/search.hpp"
#include "dnagraph/sequencing.hpp"
#include "dnagraph/verify.hpp"

namespace {

using namespace dnagraph;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open " + path);
  return read_digraph(in);
}

Labeling load_labeling(const std::string& path, const Digraph& d) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open " + path);
  return read_labeling(in, d);
}

// Writes via fn to path, or to stdout when path is "-" or empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kInvalidInput, "cannot write " + path);
  fn(out);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DNAGRAPH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      fail(ErrorKind::kInvalidParameter, "DNAGRAPH_BUDGET must be a positive integer");
    }
    return value;
  }
  return kDefaultNodeBudget;
}

ConstructionResult construct(const std::string& theorem, std::size_t n,
                             std::optional<std::size_t> p, std::optional<std::size_t> q) {
  auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (!v) fail(ErrorKind::kInvalidParameter, theorem + " needs " + flag);
    return *v;
  };
  if (theorem == tags::kChordedTable) return label_chorded_cycle(n);
  if (theorem == tags::kInfinityEven) return label_infinity_even(n, need(p, "--p"));
  if (theorem == tags::kInfinityOdd) return label_infinity_odd(n, need(p, "--p"));
  if (theorem == tags::kInfinityC3) return label_infinity_c3(need(p, "--p"));
  if (theorem == tags::kDoubleCycle) return label_double_cycle(n);
  if (theorem == tags::kWindmill) return label_windmill(n);
  if (theorem == tags::kPropeller) return label_propeller(n, need(p, "--p"), need(q, "--q"));
  fail(ErrorKind::kInvalidParameter, "unknown theorem '" + theorem + "'");
}

std::string padded(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph labelings, line-digraph lifts and DNA-graph certificates"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family digraph");
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> p, q;
  std::string out_path, dot_path, graph_out;
  gen->add_option("--family", family, "dipath|dicycle|chorded-cycle|infinity|propeller3|windmill|ladder")
      ->required();
  gen->add_option("--n", n, "main size parameter")->required();
  gen->add_option("--p", p, "second cycle length");
  gen->add_option("--q", q, "third cycle length");
  gen->add_option("--out", out_path, "digraph file (default stdout)");
  gen->add_option("--dot", dot_path, "also write DOT");

  // label
  auto* label = app.add_subcommand("label", "apply a closed-form quasi-labeling");
  std::string theorem;
  label->add_option("--theorem", theorem, "table1|thm6|thm8|thm9|thm10|thm11|thm12")->required();
  label->add_option("--n", n, "main size parameter");
  label->add_option("--p", p, "second cycle length");
  label->add_option("--q", q, "third cycle length");
  label->add_option("--out", out_path, "labeling file (default stdout)");
  label->add_option("--graph-out", graph_out, "write the labeled digraph");
  label->add_option("--dot", dot_path, "also write DOT");

  // lift
  auto* lift = app.add_subcommand("lift", "lift a quasi-labeling through m line digraphs");
  std::string graph_path, labeling_path;
  std::size_t m = 1;
  lift->add_option("--graph", graph_path, "digraph file")->required();
  lift->add_option("--labeling", labeling_path, "labeling file")->required();
  lift->add_option("--m", m, "number of lifts")->check(CLI::PositiveNumber);
  lift->add_option("--out", out_path, "lifted labeling file (default stdout)");
  lift->add_option("--graph-out", graph_out, "write L^m(D)");
  lift->add_option("--dot", dot_path, "also write DOT");

  // verify
  auto* verify = app.add_subcommand("verify", "check a labeling");
  std::string mode = "quasi";
  verify->add_option("--graph", graph_path, "digraph file")->required();
  verify->add_option("--labeling", labeling_path, "labeling file")->required();
  verify->add_option("--mode", mode, "quasi|full|dna")
      ->check(CLI::IsMember({"quasi", "full", "dna"}));

  // search
  auto* search = app.add_subcommand("search", "backtracking search for a labeling");
  std::size_t alpha = 4, k = 3;
  std::optional<std::uint64_t> budget;
  std::string order = "dfs";
  std::size_t cap = kDefaultSearchCap;
  search->add_option("--graph", graph_path, "digraph file")->required();
  search->add_option("--alpha", alpha, "alphabet size");
  search->add_option("--k", k, "label length");
  search->add_option("--mode", mode, "quasi|full")->check(CLI::IsMember({"quasi", "full"}));
  search->add_option("--budget", budget, "node budget (default DNAGRAPH_BUDGET or 1e8)");
  search->add_option("--order", order, "dfs|input")->check(CLI::IsMember({"dfs", "input"}));
  search->add_option("--cap", cap, "vertex cap");
  search->add_option("--out", out_path, "write the certificate when SAT");

  // iso
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two digraphs");
  std::string other_path;
  std::size_t iso_cap = kDefaultIsomorphismCap;
  iso->add_option("first", graph_path, "digraph file")->required();
  iso->add_option("second", other_path, "digraph file")->required();
  iso->add_option("--cap", iso_cap, "vertex cap");

  // sequence
  auto* sequence = app.add_subcommand("sequence", "reconstruct the spectrum of a labeled digraph");
  std::string start_name;
  sequence->add_option("--graph", graph_path, "digraph file")->required();
  sequence->add_option("--labeling", labeling_path, "labeling file")->required();
  sequence->add_option("--start", start_name, "start vertex name");
  sequence->add_option("--dot", dot_path, "write the nucleotide graph as DOT");

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "search full labelings of ladders");
  std::size_t from = 2, to = 6;
  conjecture->add_option("--from", from, "smallest n")->check(CLI::Range(2, 1000));
  conjecture->add_option("--to", to, "largest n")->check(CLI::Range(2, 1000));
  conjecture->add_option("--budget", budget, "node budget per attempt");

  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const auto kind = parse_family_kind(family);
      if (!kind) fail(ErrorKind::kInvalidParameter, "unknown family '" + family + "'");
      const Digraph d = make_family({*kind, n, p, q});
      emit(out_path, [&](std::ostream& out) { write_digraph(out, d); });
      if (!dot_path.empty()) emit(dot_path, [&](std::ostream& out) { write_dot(out, d); });
      return kExitOk;
    }

    if (*label) {
      const ConstructionResult r = construct(theorem, n, p, q);
      emit(out_path, [&](std::ostream& out) { write_labeling(out, r.digraph, r.labeling); });
      if (!graph_out.empty()) {
        emit(graph_out, [&](std::ostream& out) { write_digraph(out, r.digraph); });
      }
      if (!dot_path.empty()) {
        emit(dot_path, [&](std::ostream& out) { write_dot(out, r.digraph, &r.labeling); });
      }
      return kExitOk;
    }

    if (*lift) {
      const Digraph d = load_digraph(graph_path);
      const Labeling lab = load_labeling(labeling_path, d);
      const LiftedLabeling lifted = lift_m(d, lab, m);
      const auto& [ld, llab] = lifted.result;
      emit(out_path, [&](std::ostream& out) { write_labeling(out, ld, llab); });
      if (!graph_out.empty()) emit(graph_out, [&](std::ostream& out) { write_digraph(out, ld); });
      if (!dot_path.empty()) emit(dot_path, [&](std::ostream& out) { write_dot(out, ld, &llab); });
      return kExitOk;
    }

    if (*verify) {
      const Digraph d = load_digraph(graph_path);
      const Labeling lab = load_labeling(labeling_path, d);
      Verdict v = mode == "quasi" ? check_quasi(d, lab) : check_full(d, lab);
      if (v && mode == "dna" && lab.alpha() > kDnaAlphabet) {
        v = Verdict::violation("alphabet " + std::to_string(lab.alpha()) + " exceeds 4");
      }
      if (!v) {
        std::cout << "FAIL " << mode << ": " << v.detail << '\n';
        return kExitFailure;
      }
      std::cout << "OK " << mode << " (" << lab.alpha() << ',' << lab.k() << ")\n";
      return kExitOk;
    }

    if (*search) {
      const Digraph d = load_digraph(graph_path);
      SearchConfig cfg;
      cfg.alpha = alpha;
      cfg.k = k;
      cfg.mode = mode == "full" ? SearchMode::kFull : SearchMode::kQuasi;
      cfg.node_budget = budget ? *budget : default_budget();
      cfg.order = order == "input" ? VertexOrder::kInput : VertexOrder::kArcDepthFirst;
      cfg.size_cap = cap;
      const SearchOutcome outcome = find_labeling(d, cfg);
      ConjectureRow row{d.vertex_count(), alpha, k, outcome.verdict, outcome.nodes_explored,
                        cfg.node_budget, outcome.certificate};
      std::cout << format_conjecture_report({row});
      if (outcome.certificate && !out_path.empty()) {
        emit(out_path, [&](std::ostream& out) { write_labeling(out, d, *outcome.certificate); });
      }
      return kExitOk;
    }

    if (*iso) {
      const Digraph a = load_digraph(graph_path);
      const Digraph b = load_digraph(other_path);
      const auto mapping = find_isomorphism(a, b, iso_cap);
      if (!mapping) {
        std::cout << "not isomorphic\n";
        return kExitFailure;
      }
      std::cout << "isomorphic\n";
      for (VertexIndex v = 0; v < a.vertex_count(); ++v) {
        std::cout << a.name(v) << '\t' << b.name((*mapping)[v]) << '\n';
      }
      return kExitOk;
    }

    if (*sequence) {
      const Digraph d = load_digraph(graph_path);
      const Labeling lab = load_labeling(labeling_path, d);
      const auto bases = to_nucleotides(lab);
      const auto arc_labels = pevzner_arc_labels(d, lab);
      std::optional<VertexIndex> start;
      if (!start_name.empty()) start = d.index_of(start_name);
      std::size_t width = 6;
      for (const auto& name : d.names()) width = std::max(width, name.size() + 2);
      std::cout << "vertices\n";
      for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        std::cout << "  " << padded(d.name(v), width) << bases[v] << '\n';
      }
      std::cout << "arcs\n";
      for (ArcIndex a = 0; a < d.arc_count(); ++a) {
        std::cout << "  " << padded(bases[d.arc(a).tail] + " -> " + bases[d.arc(a).head], width + 8)
                  << arc_labels[a] << '\n';
      }
      const auto spectrum = hamiltonian_via_line(d, lab, start);
      if (!spectrum) {
        std::cout << "no Eulerian path\n";
        return kExitFailure;
      }
      std::cout << "path\n  ";
      for (std::size_t i = 0; i < spectrum->source_path.size(); ++i) {
        std::cout << (i ? " " : "") << arc_labels[spectrum->source_path[i]];
      }
      std::cout << "\nEulerian paths from this start (capped at 64): "
                << count_eulerian_paths(d, start) << '\n';
      std::cout << "spectrum " << spectrum->sequence << '\n';
      if (!dot_path.empty()) {
        const Digraph nucleotide = pevzner_graph(d, lab);
        emit(dot_path, [&](std::ostream& out) { write_dot(out, nucleotide); });
      }
      return kExitOk;
    }

    if (*conjecture) {
      if (from > to) fail(ErrorKind::kInvalidParameter, "--from exceeds --to");
      std::vector<std::size_t> range;
      for (std::size_t i = from; i <= to; ++i) range.push_back(i);
      SearchConfig cfg;
      cfg.node_budget = budget ? *budget : default_budget();
      std::cout << format_conjecture_report(explore_conjecture(range, cfg));
      return kExitOk;
    }

    if (*acceptance) {
      bool all = true;
      for (const auto& criterion : acceptance::criteria()) {
        const auto result = acceptance::run_criterion(criterion);
        std::cout << acceptance::format_line(result) << std::endl;
        all = all && result.pass;
      }
      return all ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    std::cerr << "dnagraph: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::kInvalidParameter ||
                       e.kind() == ErrorKind::kUnsupportedParameter;
    return usage ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
