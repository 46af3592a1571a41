// copsurvey: solve single graphs, survey graph classes, verify m3 = 10.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "copnum/canonical.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/graph6.hpp"
#include "copnum/properties.hpp"
#include "copnum/report.hpp"
#include "copnum/solver.hpp"
#include "copnum/structure.hpp"
#include "copnum/survey.hpp"

namespace {

using namespace copnum;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdict = 2;

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

void install_signal_handlers() {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
}

#ifdef COPNUM_FAULT_INJECTION
// Mutation build: overstates every cop number of 2.
int faulty_cop_number(const Graph& g, int k_max, SolveStats* stats) {
  const int c = cop_number(g, k_max, stats);
  return c == 2 ? 3 : c;
}
#endif

CopNumberFn solver_fn() {
#ifdef COPNUM_FAULT_INJECTION
  return faulty_cop_number;
#else
  return {};
#endif
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

struct SolveArgs {
  std::string graph6;
  std::string edges;
  int max_k = 4;
  bool trace = false;
  bool lemmas = false;
  bool json = false;
};

int cmd_solve(const SolveArgs& a) {
  Graph g{1};
  if (!a.graph6.empty()) {
    g = parse_graph6(a.graph6);
  } else {
    std::ifstream in(a.edges);
    if (!in) throw Error("cannot open " + a.edges);
    g = read_edge_list(in);
  }
  if (!is_connected(g)) throw DisconnectedGraph();

  const LowerBound lb = lower_bound(g);
  const PruneVerdict pv = prune_c_at_most_2(g);

  std::optional<int> c;
  SolveStats stats;
  try {
    c = cop_number(g, a.max_k, &stats);
  } catch (const ExceedsKMax&) {
  }

  if (a.json) {
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["canonical"] = canonical_form(g).bytes;
    if (c) j["cop_number"] = *c;
    else j["cop_number"] = nullptr;
    j["lower_bound"] = lb.value;
    j["prune"] = to_json(pv);
    j["states_explored"] = stats.states;
    if (c && a.trace) j["transcript"] = to_json(trace_game(g, *c, GreedyRobber{}));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "graph6 = " << to_graph6(g) << "  (n = " << g.order() << ", m = " << g.edge_count()
              << ")\n";
    if (c) std::cout << "cop_number = " << *c << '\n';
    else std::cout << "cop_number > " << a.max_k << '\n';
    std::cout << "lower_bound = " << lb.value << "  (" << to_string(lb.reason) << ")\n";
    if (pv.proved()) {
      std::cout << "prune = " << to_string(*pv.rule) << "  witness [" << join(pv.witness) << "]\n";
    } else {
      std::cout << "prune = unknown\n";
    }
    std::cout << "states_explored = " << stats.states << '\n';
    if (a.lemmas) {
      const Girth gi = girth(g);
      std::cout << "min_degree = " << g.min_degree() << "  max_degree = " << g.max_degree()
                << "  girth = " << (gi ? std::to_string(*gi) : std::string("inf")) << '\n';
      std::cout << "dismantleable = " << (dismantling_order(g) ? "yes" : "no") << '\n';
      if (pv.proved()) {
        std::cout << "certificate re-check = " << (certificate_holds(g, pv) ? "holds" : "FAILS")
                  << '\n';
      }
      std::cout << "petersen property = " << (is_petersen_by_property(g) ? "yes" : "no") << '\n';
    }
    if (c && a.trace) std::cout << trace_game(g, *c, GreedyRobber{}).render();
  }
  return c ? kExitOk : kExitVerdict;
}

struct SurveyArgs {
  SurveyOptions o;
  std::string mode = "full";
  std::string in, out, summary, checkpoint;
  int jobs = 0;
};

void print_summary(const SurveySummary& s) {
  std::cout << "n = " << s.n << "  mode = " << to_string(s.mode) << "  classes = " << s.classes
            << '\n';
  for (const auto& [k, count] : s.by_cop_number) {
    std::cout << "  cop_number " << k << ": " << count << '\n';
  }
  for (const auto& [tag, count] : s.by_certificate) {
    std::cout << "  pruned by " << tag << ": " << count << '\n';
  }
  std::cout << "cop_number >= " << s.threshold << ": " << s.at_or_above_threshold.size() << '\n';
  for (const auto& g6 : s.at_or_above_threshold) std::cout << "  " << g6 << '\n';
  if (s.lower_bound_violations != 0) {
    std::cout << "lower bound violations: " << s.lower_bound_violations << '\n';
  }
  if (s.mode == SurveyMode::Audit) {
    std::cout << "audited " << s.audited << " pruned classes, contradictions: "
              << s.audit_contradictions.size() << '\n';
    for (const auto& g6 : s.audit_contradictions) std::cout << "  " << g6 << '\n';
  }
  std::cout << "seconds = " << s.seconds << '\n';
}

int cmd_survey(SurveyArgs& a) {
  SurveyOptions& o = a.o;
  o.mode = *survey_mode_from_string(a.mode);
  o.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  if (!a.in.empty()) o.input = a.in;
  if (!a.out.empty()) o.out = a.out;
  if (!a.summary.empty()) o.summary = a.summary;
  if (!a.checkpoint.empty()) o.checkpoint = a.checkpoint;
  o.solver = solver_fn();
  o.stop = &g_stop;

  const SurveyResult r = run_survey(o);
  if (r.resumed) std::cerr << "resumed from " << a.checkpoint << '\n';
  if (!r.complete) {
    std::cerr << "interrupted after " << r.summary.classes << " classes";
    if (o.checkpoint) std::cerr << "; rerun with the same flags to resume";
    std::cerr << '\n';
    return kExitError;
  }
  print_summary(r.summary);
  if (!r.summary.audit_contradictions.empty()) {
    std::cerr << "audit found pruned classes needing more than two cops\n";
    return kExitVerdict;
  }
  return kExitOk;
}

int cmd_verify(const std::string& mode, int jobs, int max_n) {
  VerifyOptions v;
  v.mode = *survey_mode_from_string(mode);
  v.jobs = jobs > 0 ? jobs : default_jobs();
  v.max_n = max_n;
  v.solver = solver_fn();
  v.log = &std::cout;
  v.stop = &g_stop;
  const VerifyResult r = verify_m3(v);
  if (g_stop.load()) {
    std::cerr << "interrupted\n";
    return kExitError;
  }
  if (!r.ok) {
    std::cout << "FAILED: " << r.message << '\n';
    if (!r.offending.empty()) std::cout << "offending graph6: " << r.offending << '\n';
    return kExitVerdict;
  }
  std::cout << "verified: " << r.message << '\n';
  if (!r.three_cop_graph.empty()) {
    std::cout << "m3 = 10, attained by " << r.three_cop_graph << '\n';
  }
  std::cout << "certificate:\n";
  for (const auto& s : r.surveys) {
    std::cout << "  n=" << s.n << " classes=" << s.classes << " solved=" << s.solved()
              << " pruned=" << s.pruned() << " c>=3=" << s.c3plus() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const GenSpec& spec, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::trunc);
    if (!file) throw Error("cannot open " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  std::uint64_t count = 0;
  generate(spec, [&](const Graph& g) {
    out << to_graph6(g) << '\n';
    ++count;
  });
  out.flush();
  if (!out) throw Error("write failed");
  std::cerr << count << " graphs generated\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cop numbers of small connected graphs"};
  app.require_subcommand(1);

  const std::vector<std::string> survey_modes{"full", "pruned", "audit"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Cop number of one graph");
  auto* g6_opt = solve_cmd->add_option("--graph6", solve.graph6, "graph6 string");
  auto* edges_opt = solve_cmd->add_option("--edges", solve.edges, "edge list file: \"n m\" then m pairs");
  g6_opt->excludes(edges_opt);
  solve_cmd->add_option("--max-k", solve.max_k, "largest cop count tried")
      ->check(CLI::Range(1, 6));
  solve_cmd->add_flag("--trace", solve.trace, "play the optimal strategy against a greedy robber");
  solve_cmd->add_flag("--lemmas", solve.lemmas, "report structural facts and re-check certificates");
  solve_cmd->add_flag("--json", solve.json, "machine-readable output");

  SurveyArgs survey;
  auto* survey_cmd = app.add_subcommand("survey", "Survey every connected class of one order");
  survey_cmd->add_option("--n", survey.o.n, "order")->required()->check(CLI::Range(1, 16));
  survey_cmd->add_option("--mode", survey.mode)->check(CLI::IsMember(survey_modes));
  survey_cmd->add_option("--jobs", survey.jobs, "worker threads (default: COPNUM_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("--out", survey.out, "JSONL report");
  survey_cmd->add_option("--summary", survey.summary, "CSV summary");
  survey_cmd->add_option("--checkpoint", survey.checkpoint, "resume file");
  survey_cmd->add_option("--threshold", survey.o.threshold, "list classes at or above this cop number");
  survey_cmd->add_option("--in", survey.in, "graph6 stream to survey instead of the generator");
  survey_cmd->add_option("--sample", survey.o.sample, "audit sample size")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--seed", survey.o.seed, "audit sample seed");
  survey_cmd->add_option("--max-k", survey.o.k_max, "largest cop count tried")->check(CLI::Range(1, 6));
  survey_cmd->add_flag("--stable-output", survey.o.stable_output, "write 0 for timing fields");

  std::string verify_mode = "pruned";
  int verify_jobs = 0;
  int verify_max_n = 10;
  auto* verify_cmd = app.add_subcommand("verify-m3", "Check that 10 vertices are needed for 3 cops");
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"full", "pruned"}));
  verify_cmd->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify_max_n, "stop after this order (smoke runs)")
      ->check(CLI::Range(1, 10));

  GenSpec gen;
  std::string gen_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "Print connected classes as graph6");
  enum_cmd->add_option("--n", gen.n)->required()->check(CLI::Range(1, 16));
  enum_cmd->add_option("--min-degree", gen.min_degree);
  enum_cmd->add_option("--max-degree", gen.max_degree);
  enum_cmd->add_option("--out", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve_cmd) {
      if (solve.graph6.empty() && solve.edges.empty()) {
        std::cerr << "solve needs --graph6 or --edges\n";
        return kExitError;
      }
      return cmd_solve(solve);
    }
    install_signal_handlers();
    if (*survey_cmd) return cmd_survey(survey);
    if (*verify_cmd) return cmd_verify(verify_mode, verify_jobs, verify_max_n);
    if (*enum_cmd) return cmd_enumerate(gen, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
