#include "leafage/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "leafage/errors.hpp"
#include "leafage/gadget.hpp"
#include "leafage/leafage.hpp"
#include "leafage/oracle.hpp"
#include "leafage/samples.hpp"
#include "leafage/serialize.hpp"
#include "leafage/vertex_leafage.hpp"

namespace leafage {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::size_t oracle_limit(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LEAFAGE_ORACLE_LIMIT")) {
    try {
      std::size_t pos = 0;
      const auto value = std::stoull(env, &pos);
      if (pos == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw InputError("LEAFAGE_ORACLE_LIMIT must be a positive integer");
  }
  return kDefaultOracleLimit;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string tree_text(const Graph& g, const CliqueTree& t) {
  std::string out;
  for (const auto& [a, b] : t.edges()) {
    if (!out.empty()) out += ' ';
    out += g.label(t.node(a)) + "-" + g.label(t.node(b));
  }
  return out;
}

std::string path_text(const Graph& g, const CliqueGraph& cg, const AugmentingPath& p) {
  std::string out;
  for (const auto& mv : p.moves) {
    if (!out.empty()) out += ", ";
    out += "(" + g.label(cg.clique(mv.from)) + " -> " + g.label(cg.clique(mv.to)) + ", {" + clique_label(g, mv.token) + "})";
  }
  return out;
}

int replay_worked_example(std::ostream& out, Execution execution) {
  const auto g = samples::worked_example_graph();
  const auto cg = clique_graph(g);
  const LeafageOptions options{execution, nullptr};
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "maximal cliques:";
  for (int c = 0; c < cg.size(); ++c) out << ' ' << g.label(cg.clique(c));
  out << '\n';

  const auto initial = samples::worked_example_initial_tree(g);
  out << "initial clique tree (" << initial.leaf_count() << " leaves): " << tree_text(g, initial) << '\n';
  const auto tau = epsilon_of_tree(initial);
  out << "tokens:\n";
  for (int c = 0; c < cg.size(); ++c) {
    out << "  " << g.label(cg.clique(c)) << ':';
    for (const auto& tok : tau.tokens(c)) out << " {" << clique_label(g, tok) << '}';
    out << '\n';
  }

  const int abc = cg.find_clique(g.set_of({"a", "b", "c"}));
  const int adf = cg.find_clique(g.set_of({"a", "d", "f"}));
  const int cdk = cg.find_clique(g.set_of({"c", "d", "k"}));
  const AugmentingPath worked{{TokenMove{abc, adf, g.set_of({"a"})}, TokenMove{adf, cdk, g.set_of({"d"})}}};
  const bool admissible = is_augmenting_path(cg, tau, worked, options);
  out << "worked augmentation: " << path_text(g, cg, worked) << '\n';
  out << "  augmenting path: " << (admissible ? "yes" : "no") << '\n';
  TokenAssignment moved = tau;
  for (const auto& mv : worked.moves) moved = apply_move(moved, mv);
  const auto augmented = is_realizable(cg, moved);
  const auto reference = samples::worked_example_augmented_tree(g);
  if (augmented) {
    const auto before = subtree_leaf_counts(initial, g.vertex_count());
    const auto after = subtree_leaf_counts(*augmented, g.vertex_count());
    out << "  realized tree (" << augmented->leaf_count() << " leaves): " << tree_text(g, *augmented) << '\n';
    out << "  tokens match the reference tree: " << (epsilon_of_tree(reference) == moved ? "yes" : "no") << '\n';
    out << "  subtree leaves of a: " << before[static_cast<std::size_t>(g.id("a"))] << " -> "
        << after[static_cast<std::size_t>(g.id("a"))] << '\n';
  } else {
    out << "  realized tree: none\n";
  }

  const auto first = shortest_augmenting_path(cg, tau, options);
  out << "shortest augmenting path: " << (first ? path_text(g, cg, *first) : "none") << '\n';
  const auto run = minimize_leafage(cg, initial, options);
  out << "minimize_leafage from the initial tree:\n";
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    const auto& it = run.trace[i];
    out << "  iteration " << i + 1 << ": " << path_text(g, cg, it.path) << "; leaves " << it.leaves_before << " -> "
        << it.leaves_after << '\n';
  }
  out << "final clique tree (" << run.tree.leaf_count() << " leaves): " << tree_text(g, run.tree) << '\n';
  out << "leafage: " << run.tree.leaf_count() << '\n';
  return admissible && augmented && epsilon_of_tree(reference) == moved ? kExitOk : kExitNegative;
}

Graph load_graph(const std::string& path, std::istream& in) { return parse_graph(read_input(path, in)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leafage and vertex leafage of chordal graphs"};
  app.name("leafage");
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels instead of OpenMP");

  std::string input;
  auto* check = app.add_subcommand("check", "Chordality test: perfect elimination order or induced cycle");
  check->add_option("graph", input, "Edge-list file, - for stdin")->required();

  auto* leaf = app.add_subcommand("leafage", "Minimum-leaf clique tree via augmenting paths");
  leaf->add_option("graph", input, "Edge-list file, - for stdin")->required();

  std::optional<int> ell;
  std::string budget = "safe";
  auto* vl = app.add_subcommand("vertex-leafage", "Vertex leafage with a certificate");
  vl->add_option("graph", input, "Edge-list file, - for stdin")->required();
  vl->add_option("--ell", ell, "Upper bound on the leafage (default: computed)")->check(CLI::NonNegativeNumber);
  vl->add_option("--budget-mode", budget, "Branch edge set budget: safe, or tight (alias paper)")
      ->check(CLI::IsMember({"tight", "paper", "safe"}));

  bool dot = false;
  auto* model = app.add_subcommand("model", "Tree model optimal for leafage and vertex leafage at once");
  model->add_option("graph", input, "Edge-list file, - for stdin")->required();
  model->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");
  model->add_option("--budget-mode", budget, "Branch edge set budget: safe, or tight (alias paper)")
      ->check(CLI::IsMember({"tight", "paper", "safe"}));

  std::optional<std::size_t> limit;
  auto* gadget = app.add_subcommand("gadget", "NOT-ALL-EQUAL-SAT reduction to split graphs");
  gadget->require_subcommand(1);
  bool normalize = false;
  bool allow_dominated = false;
  auto* gbuild = gadget->add_subcommand("build", "Print the gadget graph as an edge list");
  gbuild->add_option("clauses", input, "Clause file, - for stdin")->required();
  gbuild->add_flag("--normalize", normalize, "Remove dominated variables first");
  gbuild->add_flag("--allow-dominated", allow_dominated, "Build even if a variable is dominated");
  auto* gverify = gadget->add_subcommand("verify", "Compare brute-force solvability with exact vertex leafage");
  gverify->add_option("clauses", input, "Clause file, - for stdin")->required();
  gverify->add_flag("--normalize", normalize, "Remove dominated variables first");
  gverify->add_option("--limit", limit, "Clique-tree enumeration cap")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Exact leafage and vertex leafage by enumerating clique trees");
  oracle->add_option("graph", input, "Edge-list file, - for stdin")->required();
  oracle->add_option("--limit", limit, "Clique-tree enumeration cap")->check(CLI::PositiveNumber);

  auto* repro = app.add_subcommand("repro-figure1", "Replay the worked example with a printed trace");

  int n = 8;
  double density = 0.3;
  std::uint64_t seed = 1;
  auto* random = app.add_subcommand("random", "Random connected chordal graph as an edge list");
  random->add_option("--n", n, "Vertices")->check(CLI::PositiveNumber);
  random->add_option("--density", density, "Subtree growth probability")->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", seed, "Generator seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "leafage: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto execution = serial ? Execution::serial : Execution::parallel;
  const LeafageOptions options{execution, nullptr};
  const VertexLeafageOptions vl_options{budget == "safe" ? BudgetMode::safe : BudgetMode::tight, execution};

  try {
    if (*check) {
      const auto g = load_graph(input, in);
      const auto r = check_chordal(g);
      print(out, chordality_json(g, r));
      return r.chordal() ? kExitOk : kExitNegative;
    }
    if (*leaf) {
      const auto g = load_graph(input, in);
      const auto cg = clique_graph(g);
      if (!is_connected(g)) throw PreconditionError("graph is not connected");
      print(out, leafage_json(g, cg, minimize_leafage(cg, build_clique_tree(cg), options)));
      return kExitOk;
    }
    if (*vl) {
      const auto g = load_graph(input, in);
      const auto cert = vertex_leafage_bounded(g, ell, vl_options);
      if (!cert) {
        Json j;
        j["vertex_leafage"] = nullptr;
        j["reason"] = "no clique tree found within the leafage bound and branch edge budget";
        print(out, j);
        return kExitNegative;
      }
      print(out, certificate_json(g, *cert));
      return kExitOk;
    }
    if (*model) {
      const auto g = load_graph(input, in);
      const auto s = simultaneous_optimum(g, vl_options);
      if (dot) {
        out << model_dot(g, s.model);
      } else {
        print(out, simultaneous_json(g, s));
      }
      return kExitOk;
    }
    if (*gbuild || *gverify) {
      auto inst = parse_clauses(read_input(input, in));
      if (normalize) inst = normalize_star(inst);
      if (*gbuild) {
        const auto gg = build_gadget(inst, !allow_dominated);
        out << "# NOT-ALL-EQUAL-" << inst.k << "-SAT gadget: " << inst.variable_count() << " variables, "
            << inst.clause_count() << " clauses\n";
        for (int c = 0; c < gg.cliques.size(); ++c) {
          out << "# clique " << gg.clique_name(c) << ": " << clique_label(gg.graph, gg.cliques.clique(c)) << '\n';
        }
        out << to_edge_list(gg.graph);
        return kExitOk;
      }
      const auto report = verify_reduction(inst, oracle_limit(limit));
      print(out, reduction_json(inst, report));
      return report.holds() ? kExitOk : kExitNegative;
    }
    if (*oracle) {
      const auto g = load_graph(input, in);
      print(out, oracle_json(g, oracle_optima(g, oracle_limit(limit))));
      return kExitOk;
    }
    if (*repro) return replay_worked_example(out, execution);
    if (*random) {
      out << to_edge_list(random_chordal(n, density, seed));
      return kExitOk;
    }
  } catch (const OracleLimitExceeded& e) {
    err << "leafage: " << e.what() << '\n';
    return kExitOracleLimit;
  } catch (const InvariantViolation& e) {
    err << "leafage: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "leafage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leafage
