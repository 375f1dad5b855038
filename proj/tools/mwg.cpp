// Copyright 2026 The mwg authors
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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mwg/engine.hpp"
#include "mwg/gates.hpp"
#include "mwg/io.hpp"
#include "mwg/paths.hpp"
#include "mwg/smatrix.hpp"
#include "mwg/stats.hpp"
#include "mwg/strcore.hpp"

namespace {

constexpr const char* kVersion = "mwg 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;  // also truncation under --strict

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

mwg::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  mwg::Json j;
  in >> j;
  return j;
}

std::string precise(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string word;
  std::string alphabet = "AB";
  std::string format = "text";
  bool linear_pairs = false;
  std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
  const mwg::Alphabet alphabet(args.alphabet);
  const mwg::CyclicString s(args.word, alphabet);
  const bool leibnizian = mwg::is_leibnizian(s);
  // Single letters have no position pairs; report the sentinel directly.
  const std::vector<std::size_t> a =
      s.size() < 2 ? std::vector<std::size_t>{0} : mwg::indifference_profile(s).a;
  const auto var = mwg::variety(s);
  const double shannon = mwg::shannon_entropy(s);
  const auto topology =
      args.linear_pairs ? mwg::PairTopology::linear : mwg::PairTopology::cyclic;
  const double conditional =
      s.size() < 2 ? 0.0 : mwg::conditional_entropy(s, topology);

  if (args.format == "json") {
    mwg::Json j;
    j["config"] = mwg::Json{{"command", "analyze"},
                            {"string", args.word},
                            {"alphabet", args.alphabet},
                            {"linear_pairs", args.linear_pairs}};
    j["version"] = kVersion;
    j["string"] = args.word;
    j["leibnizian"] = leibnizian;
    j["a"] = prof.a;
    j["variety"] = mwg::rational_to_json(var);
    j["shannon_entropy"] = shannon;
    j["conditional_entropy"] = conditional;
    write_output(j.dump(2), args.output);
  } else {
    std::ostringstream out;
    out << "string: " << args.word << "\n";
    out << "leibnizian: " << (leibnizian ? "true" : "false") << "\n";
    out << "a:";
    for (auto a : prof.a) out << " " << a;
    out << "\n";
    out << "variety: " << mwg::to_string(var) << "\n";
    out << "shannon_entropy: " << precise(shannon) << "\n";
    out << "conditional_entropy: " << precise(conditional) << "\n";
    write_output(out.str(), args.output);
  }
  return kExitOk;
}

// --- fractal ----------------------------------------------------------------

struct FractalArgs {
  std::size_t n = 1;
  std::string alphabet = "AB";
  std::string format = "text";
  std::string output;
};

int run_fractal(const FractalArgs& args) {
  const auto word = mwg::fractal_word(mwg::Alphabet(args.alphabet), args.n);
  if (args.format == "json") {
    mwg::Json j;
    j["config"] = mwg::Json{{"command", "fractal"},
                            {"n", args.n},
                            {"alphabet", args.alphabet}};
    j["version"] = kVersion;
    j["word"] = word.str();
    j["leibnizian"] = mwg::is_leibnizian(word);
    j["variety"] = mwg::rational_to_json(mwg::variety(word));
    write_output(j.dump(2), args.output);
  } else {
    write_output(word.str(), args.output);
  }
  return kExitOk;
}

// --- multiway ---------------------------------------------------------------

struct MultiwayArgs {
  std::vector<std::string> inits;
  std::vector<std::string> rules;
  std::string alphabet = "AB";
  std::size_t depth = mwg::MultiwayOptions::kUnbounded;
  std::string match = "linear";
  std::string canon = "literal";
  std::size_t max_width = 1u << 16;
  std::size_t max_nodes = 1u << 20;
  std::string format = "json";
  std::string output;
  bool strict = false;
};

mwg::Json session_config(const MultiwayArgs& args) {
  return mwg::Json{{"command", "multiway"},
                   {"init", args.inits},
                   {"rules", args.rules},
                   {"alphabet", args.alphabet},
                   {"depth", args.depth == mwg::MultiwayOptions::kUnbounded
                                 ? mwg::Json(nullptr)
                                 : mwg::Json(args.depth)},
                   {"match", args.match},
                   {"canon", args.canon},
                   {"max_width", args.max_width},
                   {"max_nodes", args.max_nodes}};
}

int run_multiway(const MultiwayArgs& args) {
  const mwg::Alphabet alphabet(args.alphabet);
  std::vector<mwg::CyclicString> seeds;
  for (const auto& w : args.inits) seeds.emplace_back(w, alphabet);
  std::vector<mwg::RewriteRule> rules;
  for (const auto& text : args.rules) {
    std::size_t from = 0;
    while (true) {
      const std::size_t to = text.find(',', from);
      rules.push_back(mwg::parse_rule(
          text.substr(from, to == std::string::npos ? to : to - from)));
      if (to == std::string::npos) break;
      from = to + 1;
    }
  }
  mwg::MultiwayOptions opt;
  opt.match_mode = mwg::match_mode_from_string(args.match);
  opt.canon_mode = mwg::canon_mode_from_string(args.canon);
  opt.max_depth = args.depth;
  opt.max_layer_width = args.max_width;
  opt.max_total_nodes = args.max_nodes;

  const auto g = mwg::build_multiway(seeds, std::move(rules), opt);

  if (args.format == "dot") {
    write_output(mwg::graph_to_dot(g), args.output);
  } else {
    mwg::Json j;
    j["config"] = session_config(args);
    j["version"] = kVersion;
    j["graph"] = mwg::graph_to_json(g);
    j["physical"] = mwg::graph_to_json(mwg::physical_subgraph(g));
    mwg::Json maxima = mwg::Json::array();
    for (const auto& p : mwg::maximal_variety_paths(g, g.depth())) {
      auto jp = mwg::path_to_json(p, g);
      jp["words"] = mwg::path_to_text(p, g);
      maxima.push_back(std::move(jp));
    }
    j["maximal_variety_paths"] = std::move(maxima);
    write_output(j.dump(2), args.output);
  }
  if (g.truncated) {
    std::cerr << "warning: expansion truncated by resource caps\n";
    if (args.strict) return kExitInfeasible;
  }
  return kExitOk;
}

// --- paths ------------------------------------------------------------------

struct PathsArgs {
  std::string graph_file;
  std::size_t from = 0;
  std::size_t to = 0;
  bool maximal = false;
  std::size_t max_paths = 1u << 20;
  std::string format = "json";
  std::string output;
};

int run_paths(const PathsArgs& args) {
  const auto g = mwg::graph_from_artifact(load_json(args.graph_file));
  const auto found = args.maximal
                         ? mwg::maximal_variety_paths(g, args.to, args.max_paths)
                         : mwg::enumerate_physical_paths(g, args.from, args.to,
                                                         args.max_paths);
  if (args.format == "text") {
    std::ostringstream out;
    for (const auto& p : found) {
      out << mwg::path_to_text(p, g) << "  action=" << mwg::to_string(action(p, g))
          << " score=" << mwg::to_string(path_score(p, g)) << "\n";
    }
    write_output(out.str(), args.output);
  } else {
    mwg::Json j;
    j["config"] = mwg::Json{{"command", "paths"},
                            {"graph", args.graph_file},
                            {"from", args.from},
                            {"to", args.to},
                            {"maximal", args.maximal}};
    j["version"] = kVersion;
    mwg::Json paths = mwg::Json::array();
    for (const auto& p : found) paths.push_back(mwg::path_to_json(p, g));
    j["paths"] = std::move(paths);
    write_output(j.dump(2), args.output);
  }
  return kExitOk;
}

// --- smatrix ----------------------------------------------------------------

struct SmatrixArgs {
  std::string graph_file;
  std::size_t from = 0;
  std::size_t to = 1;
  double k = 1.0;
  double gamma = 1.0;
  double tol = 1e-9;
  int restarts = 32;
  std::uint64_t seed = 0x6d7767;
  bool recognize = false;
  bool extend = false;
  bool normalize_columns = false;
  bool strict = false;
  std::string output;
};

int run_smatrix(const SmatrixArgs& args) {
  const auto g = mwg::graph_from_artifact(load_json(args.graph_file));
  const auto ls = mwg::layer_system(g, args.from, args.to);

  mwg::SolveOptions sopt;
  sopt.restarts = args.restarts;
  sopt.feasibility_residual = args.tol;
  sopt.seed = args.seed;
  auto solved = mwg::solve_unitary_weights(ls.connected, sopt);

  if (args.normalize_columns) {
    for (Eigen::Index i = 0; i < solved.weights.entries.cols(); ++i) {
      const double norm = solved.weights.entries.col(i).norm();
      if (norm > 0.0) solved.weights.entries.col(i) /= norm;
    }
  }

  const auto dense = mwg::build_smatrix(ls, solved.weights, args.k, args.gamma);
  Eigen::VectorXcd phases = Eigen::VectorXcd::Ones(ls.n_in());
  bool factored = true;
  try {
    phases = mwg::make_smatrix_spec(ls, solved.weights, args.k, args.gamma).phases;
  } catch (const std::domain_error&) {
    factored = false;  // per-entry phases (non-adjacent layers, mixed actions)
  }

  std::vector<mwg::GateMatch> matches;
  if (args.recognize) {
    matches = mwg::recognize_gate(dense, mwg::gate_catalog(), args.tol);
  }

  auto j = mwg::smatrix_to_json(ls, solved, dense, phases, args.k, matches);
  j["config"] = mwg::Json{{"command", "smatrix"},
                          {"graph", args.graph_file},
                          {"from", args.from},
                          {"to", args.to},
                          {"k", args.k},
                          {"gamma", args.gamma},
                          {"tol", args.tol},
                          {"restarts", args.restarts},
                          {"seed", args.seed},
                          {"recognize", args.recognize},
                          {"extend", args.extend},
                          {"normalize_columns", args.normalize_columns}};
  j["version"] = kVersion;
  j["column_phases_uniform"] = factored;
  mwg::Json in_words = mwg::Json::array(), out_words = mwg::Json::array();
  for (auto id : ls.in_words) in_words.push_back(g.node(id).word);
  for (auto id : ls.out_words) out_words.push_back(g.node(id).word);
  j["in_strings"] = std::move(in_words);
  j["out_strings"] = std::move(out_words);

  if (ls.connected.rows() == ls.connected.cols() &&
      !mwg::mutual_interaction_check(ls.connected)) {
    j["mutual_interaction"] = false;
    std::cerr << "warning: one-sided interaction pattern; unitary solutions "
                 "force the unpaired entries to zero\n";
  }

  const auto blocks = mwg::tensor_components(ls.connected);
  if (blocks.size() > 1) {
    mwg::Json jb = mwg::Json::array();
    for (const auto& b : blocks) {
      jb.push_back(mwg::Json{{"in", b.in_indices}, {"out", b.out_indices}});
    }
    j["tensor_blocks"] = std::move(jb);
  }

  if (args.extend) {
    const long long dm = mwg::delta_m(static_cast<long long>(ls.n_in()),
                                      static_cast<long long>(ls.m_out()));
    const auto ext = mwg::extend_for_unitarity(solved.weights, dm, args.tol);
    mwg::Json stacked = mwg::Json::array();
    for (Eigen::Index r = 0; r < ext.stacked.rows(); ++r) {
      mwg::Json row = mwg::Json::array();
      for (Eigen::Index c = 0; c < ext.stacked.cols(); ++c) {
        row.push_back(ext.stacked(r, c));
      }
      stacked.push_back(std::move(row));
    }
    j["extension"] = mwg::Json{{"dm", dm},
                               {"feasible", ext.feasible},
                               {"residual", ext.residual},
                               {"min_rows_needed", ext.min_rows_needed},
                               {"stacked", std::move(stacked)}};
  }

  write_output(j.dump(2), args.output);
  if (!solved.feasible && args.strict) return kExitInfeasible;
  return kExitOk;
}

// --- stats ------------------------------------------------------------------

struct StatsArgs {
  std::string alphabet = "AB";
  std::size_t length = 8;
  double beta = 1.0;
  double gamma = 1.0;
  std::string canon = "literal";
  std::string format = "csv";
  std::string output;
};

int run_stats(const StatsArgs& args) {
  const auto rep = mwg::ensemble_report(mwg::Alphabet(args.alphabet), args.length,
                                        args.beta, args.gamma,
                                        mwg::canon_mode_from_string(args.canon));
  if (args.format == "json") {
    mwg::Json j;
    j["config"] = mwg::Json{{"command", "stats"},    {"alphabet", args.alphabet},
                            {"length", args.length}, {"beta", args.beta},
                            {"gamma", args.gamma},   {"canon", args.canon}};
    j["version"] = kVersion;
    j["z_n"] = rep.z_n;
    if (rep.z_nminus1) j["z_nminus1"] = *rep.z_nminus1;
    if (rep.mu) j["mu"] = *rep.mu;
    mwg::Json rows = mwg::Json::array();
    for (const auto& row : rep.rows) {
      rows.push_back(mwg::Json{{"view", row.view.sequence},
                               {"radius", row.view.radius},
                               {"n_expected", row.n_expected},
                               {"fd_predicted", row.fd_predicted}});
    }
    j["rows"] = std::move(rows);
    write_output(j.dump(2), args.output);
  } else {
    std::ostringstream out;
    out << "# " << kVersion << " stats alphabet=" << args.alphabet
        << " length=" << args.length << " beta=" << precise(args.beta)
        << " gamma=" << precise(args.gamma) << " canon=" << args.canon << "\n";
    out << mwg::ensemble_report_to_csv(rep);
    write_output(out.str(), args.output);
  }
  return kExitOk;
}

// --- corr -------------------------------------------------------------------

struct CorrArgs {
  std::string alphabet = "AB";
  std::size_t samples = 200;
  std::size_t len_min = 8;
  std::size_t len_max = 20;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string output;
};

int run_corr(const CorrArgs& args) {
  const auto sample = mwg::sample_leibnizian(mwg::Alphabet(args.alphabet),
                                             args.len_min, args.len_max,
                                             args.samples, args.seed);
  const auto rep = mwg::entropy_variety_scan(sample);
  if (args.format == "json") {
    mwg::Json j;
    j["config"] = mwg::Json{{"command", "corr"},       {"alphabet", args.alphabet},
                            {"samples", args.samples}, {"len_min", args.len_min},
                            {"len_max", args.len_max}, {"seed", args.seed}};
    j["version"] = kVersion;
    if (rep.pearson_r) j["pearson_r"] = *rep.pearson_r;
    mwg::Json rows = mwg::Json::array();
    for (const auto& row : rep.rows) {
      rows.push_back(mwg::Json{{"string", row.word},
                               {"cond_entropy", row.cond_entropy},
                               {"variety", mwg::rational_to_json(row.variety)}});
    }
    j["rows"] = std::move(rows);
    write_output(j.dump(2), args.output);
  } else {
    std::ostringstream out;
    out << "# " << kVersion << " corr alphabet=" << args.alphabet
        << " samples=" << args.samples << " len_min=" << args.len_min
        << " len_max=" << args.len_max << " seed=" << args.seed << "\n";
    out << mwg::correlation_report_to_csv(rep);
    write_output(out.str(), args.output);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic-string analysis, multiway rewriting graphs and "
               "quantum-gate synthesis"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Analyze one cyclic string");
  analyze->add_option("string", analyze_args.word, "The word to analyze")->required();
  analyze->add_option("--alphabet", analyze_args.alphabet, "Alphabet symbols");
  analyze->add_option("--format", analyze_args.format)
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--linear-pairs", analyze_args.linear_pairs,
                    "Use the n-1 linear pair list for the conditional entropy");
  analyze->add_option("--output,-o", analyze_args.output);

  FractalArgs fractal_args;
  auto* fractal = app.add_subcommand("fractal", "Emit a fractal word");
  fractal->add_option("--n", fractal_args.n, "Block repetition parameter")->required();
  fractal->add_option("--alphabet", fractal_args.alphabet);
  fractal->add_option("--format", fractal_args.format)
      ->check(CLI::IsMember({"text", "json"}));
  fractal->add_option("--output,-o", fractal_args.output);

  MultiwayArgs multiway_args;
  auto* multiway = app.add_subcommand("multiway", "Expand a multiway graph");
  multiway->add_option("--init", multiway_args.inits, "Initial word (repeatable)")
      ->required();
  multiway->add_option("--rule", multiway_args.rules,
                       "Rewrite rule LHS->RHS (repeatable or comma-separated)");
  multiway->add_option("--alphabet", multiway_args.alphabet);
  multiway->add_option("--depth", multiway_args.depth, "Layer budget");
  multiway->add_option("--match", multiway_args.match)
      ->check(CLI::IsMember({"linear", "cyclic"}));
  multiway->add_option("--canon", multiway_args.canon)
      ->check(CLI::IsMember({"literal", "rotation", "rotation_mirror"}));
  multiway->add_option("--max-width", multiway_args.max_width);
  multiway->add_option("--max-nodes", multiway_args.max_nodes);
  multiway->add_option("--format", multiway_args.format)
      ->check(CLI::IsMember({"json", "dot"}));
  multiway->add_option("--output,-o", multiway_args.output);
  multiway->add_flag("--strict", multiway_args.strict,
                     "Exit 3 when the expansion is truncated");

  PathsArgs paths_args;
  auto* paths = app.add_subcommand("paths", "Enumerate physical paths");
  paths->add_option("--graph", paths_args.graph_file, "Graph JSON file")->required();
  paths->add_option("--from", paths_args.from);
  paths->add_option("--to", paths_args.to)->required();
  paths->add_flag("--maximal", paths_args.maximal,
                  "Only paths maximizing the variety score from layer 0");
  paths->add_option("--max-paths", paths_args.max_paths);
  paths->add_option("--format", paths_args.format)
      ->check(CLI::IsMember({"json", "text"}));
  paths->add_option("--output,-o", paths_args.output);

  SmatrixArgs smatrix_args;
  auto* smatrix = app.add_subcommand("smatrix", "Synthesize a transition matrix");
  smatrix->add_option("--graph", smatrix_args.graph_file, "Graph JSON file")
      ->required();
  smatrix->add_option("--from", smatrix_args.from)->required();
  smatrix->add_option("--to", smatrix_args.to)->required();
  smatrix->add_option("--k", smatrix_args.k, "Coupling constant");
  smatrix->add_option("--gamma", smatrix_args.gamma, "Variety-to-action scale");
  smatrix->add_option("--tol", smatrix_args.tol, "Feasibility and match tolerance");
  smatrix->add_option("--restarts", smatrix_args.restarts);
  smatrix->add_option("--seed", smatrix_args.seed);
  smatrix->add_flag("--recognize", smatrix_args.recognize,
                    "Match the dense matrix against the gate catalog");
  smatrix->add_flag("--extend", smatrix_args.extend,
                    "Report the stacked auxiliary-row extension");
  smatrix->add_flag("--normalize-columns", smatrix_args.normalize_columns);
  smatrix->add_flag("--strict", smatrix_args.strict,
                    "Exit 3 when no semi-unitary weights exist");
  smatrix->add_option("--output,-o", smatrix_args.output);

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Ensemble occupation report");
  stats->add_option("--alphabet", stats_args.alphabet);
  stats->add_option("--length", stats_args.length)->required();
  stats->add_option("--beta", stats_args.beta);
  stats->add_option("--gamma", stats_args.gamma);
  stats->add_option("--canon", stats_args.canon)
      ->check(CLI::IsMember({"literal", "rotation", "rotation_mirror"}));
  stats->add_option("--format", stats_args.format)
      ->check(CLI::IsMember({"csv", "json"}));
  stats->add_option("--output,-o", stats_args.output);

  CorrArgs corr_args;
  auto* corr = app.add_subcommand("corr", "Entropy-variety correlation scan");
  corr->add_option("--alphabet", corr_args.alphabet);
  corr->add_option("--samples", corr_args.samples);
  corr->add_option("--len-min", corr_args.len_min);
  corr->add_option("--len-max", corr_args.len_max);
  corr->add_option("--seed", corr_args.seed);
  corr->add_option("--format", corr_args.format)->check(CLI::IsMember({"csv", "json"}));
  corr->add_option("--output,-o", corr_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*fractal) return run_fractal(fractal_args);
    if (*multiway) return run_multiway(multiway_args);
    if (*paths) return run_paths(paths_args);
    if (*smatrix) return run_smatrix(smatrix_args);
    if (*stats) return run_stats(stats_args);
    if (*corr) return run_corr(corr_args);
  } catch (const mwg::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
