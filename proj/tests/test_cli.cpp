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

// End-to-end checks driving the installed binary (path injected by CMake).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mwg/gates.hpp"
#include "mwg/io.hpp"
#include "mwg/smatrix.hpp"

#ifndef MWG_CLI_PATH
#error "MWG_CLI_PATH must point at the mwg binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                            : "/tmp") +
                          "/mwg_cli_out.txt";
  const std::string cmd =
      std::string(MWG_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

}  // namespace

TEST_CASE("cli: analyze") {
  auto r = run("analyze AABABB");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("leibnizian: true") != std::string::npos);
  CHECK(r.out.find("variety: 4/1") != std::string::npos);
  CHECK(r.out.find("a: 2 2 1 1 2 2") != std::string::npos);

  r = run("analyze AAABBB");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("leibnizian: false") != std::string::npos);
  CHECK(r.out.find("variety: 0/1") != std::string::npos);

  CHECK(run("analyze \"\"").exit_code == 2);
  CHECK(run("analyze AXB").exit_code == 2);
  CHECK(run("analyze").exit_code == 2);
}

TEST_CASE("cli: fractal") {
  const auto r = run("fractal --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ABAABBAAABBB\n");
}

TEST_CASE("cli: multiway artifact and determinism") {
  const std::string cmd =
      "multiway --alphabet ABC --init BBBAAACC --rule 'BA->AB' --rule 'CB->BC'";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto j = mwg::Json::parse(a.out);
  CHECK(j.at("graph").at("layers").size() == 10);
  CHECK(j.at("graph").at("truncated").get<bool>() == false);
  CHECK(j.at("version").get<std::string>() == "mwg 0.1.0");
  CHECK(j.at("config").at("command").get<std::string>() == "multiway");
  // All words of this system are Leibnizian, so the physical layers match.
  CHECK(j.at("physical").at("layers").size() == 10);

  const auto dot = run(cmd + " --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph multiway", 0) == 0);
}

TEST_CASE("cli: multiway honors depth zero") {
  const auto r = run("multiway --init AABABB --rule 'BA->AB' --depth 0");
  CHECK(r.exit_code == 0);
  CHECK(mwg::Json::parse(r.out).at("graph").at("layers").size() == 1);
}

TEST_CASE("cli: smatrix round trip equals the in-process pipeline") {
  const std::string graph_file = "/tmp/mwg_cli_fig7.json";
  auto r = run("multiway --alphabet ABCD --init AABBDCABABDC --init ABABCDABABDC "
               "--rule 'BA->AB' --rule 'DC->CD' --depth 1 --canon rotation -o " +
               graph_file);
  REQUIRE(r.exit_code == 0);

  r = run("smatrix --graph " + graph_file + " --from 0 --to 1 --recognize --k 2.5");
  REQUIRE(r.exit_code == 0);
  const auto j = mwg::Json::parse(r.out);

  // In-process reference run on the re-ingested artifact.
  std::ifstream in(graph_file);
  mwg::Json artifact;
  in >> artifact;
  const auto g = mwg::graph_from_artifact(artifact);
  const auto ls = mwg::layer_system(g, 0, 1);
  const auto solved = mwg::solve_unitary_weights(ls.connected);
  const auto dense = mwg::build_smatrix(ls, solved.weights, 2.5);
  const auto matches = mwg::recognize_gate(dense, mwg::gate_catalog(), 1e-9);

  REQUIRE(j.at("feasible").get<bool>() == solved.feasible);
  for (Eigen::Index row = 0; row < dense.rows(); ++row) {
    for (Eigen::Index col = 0; col < dense.cols(); ++col) {
      const auto& cell = j.at("dense")[row][col];
      CHECK(cell.at("re").get<double>() == dense(row, col).real());
      CHECK(cell.at("im").get<double>() == dense(row, col).imag());
    }
  }
  REQUIRE(matches.size() == j.at("matches").size());
  CHECK(j.at("matches")[0].at("gate").get<std::string>() == matches[0].gate);
  CHECK(j.at("matches")[0].at("gate").get<std::string>() == "H");
}

TEST_CASE("cli: smatrix reports infeasibility and exits 3 under --strict") {
  // A 3-in/2-out fully connected synthetic graph.
  mwg::MultiwayGraph g;
  g.alphabet = "AB";
  g.nodes[0] = {"AABABB", mwg::Rational(4), true};
  g.nodes[1] = {"AABBAB", mwg::Rational(4), true};
  g.nodes[2] = {"ABAABB", mwg::Rational(4), true};
  g.nodes[3] = {"AABABABB", mwg::Rational(5), true};
  g.nodes[4] = {"AABABBAB", mwg::Rational(5), true};
  g.layers = {{0, 1, 2}, {3, 4}};
  for (mwg::NodeId src : {0, 1, 2}) {
    for (mwg::NodeId dst : {3, 4}) {
      g.events.push_back({src, dst, 0, 1});
    }
  }
  const std::string graph_file = "/tmp/mwg_cli_32.json";
  std::ofstream out(graph_file);
  out << mwg::graph_to_json(g).dump();
  out.close();

  auto r = run("smatrix --graph " + graph_file + " --from 0 --to 1");
  CHECK(r.exit_code == 0);
  const auto j = mwg::Json::parse(r.out);
  CHECK(j.at("feasible").get<bool>() == false);
  CHECK(j.at("weights").is_null());
  CHECK(j.at("infeasible").at("residual").get<double>() >= 1e-3);

  r = run("smatrix --graph " + graph_file + " --from 0 --to 1 --strict");
  CHECK(r.exit_code == 3);

  // The reverse orientation is feasible and extendable.
  mwg::MultiwayGraph rev;
  rev.alphabet = g.alphabet;
  rev.nodes = g.nodes;
  rev.layers = {{3, 4}, {0, 1, 2}};
  for (mwg::NodeId src : {3, 4}) {
    for (mwg::NodeId dst : {0, 1, 2}) {
      rev.events.push_back({src, dst, 0, 1});
    }
  }
  const std::string rev_file = "/tmp/mwg_cli_23.json";
  std::ofstream rout(rev_file);
  rout << mwg::graph_to_json(rev).dump();
  rout.close();

  r = run("smatrix --graph " + rev_file + " --from 0 --to 1 --extend");
  CHECK(r.exit_code == 0);
  const auto jr = mwg::Json::parse(r.out);
  CHECK(jr.at("feasible").get<bool>() == true);
  CHECK(jr.at("residual").get<double>() <= 1e-9);
  CHECK(jr.at("extension").at("dm").get<long long>() == 0);
}

TEST_CASE("cli: permutation-connectivity graph recognizes CNOT") {
  // Four equal-variety in-words wired 1->1, 2->2, 3->4, 4->3.
  mwg::MultiwayGraph g;
  g.alphabet = "ABCD";
  const char* words[] = {"ABDCBADC", "BACDBADC", "BADCABDC", "BADCBACD",
                         "ABCDBADC", "ABDCBACD", "BADCABCD", "BACDABDC"};
  for (mwg::NodeId id = 0; id < 8; ++id) {
    g.nodes[id] = {words[id], mwg::Rational(8), true};
  }
  g.layers = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  g.events = {{0, 4, 0, 1}, {1, 5, 0, 1}, {2, 7, 0, 1}, {3, 6, 0, 1}};
  const std::string graph_file = "/tmp/mwg_cli_cnot.json";
  std::ofstream out(graph_file);
  out << mwg::graph_to_json(g).dump();
  out.close();

  const auto r = run("smatrix --graph " + graph_file + " --from 0 --to 1 --recognize");
  REQUIRE(r.exit_code == 0);
  const auto j = mwg::Json::parse(r.out);
  bool cnot = false;
  for (const auto& m : j.at("matches")) {
    if (m.at("gate").get<std::string>() == "CNOT") cnot = true;
  }
  CHECK(cnot);
}

TEST_CASE("cli: maximal variety path annotation is unique for the chain") {
  const auto r = run("multiway --init AABAABBABAB --rule 'BA->AB' --depth 4");
  REQUIRE(r.exit_code == 0);
  const auto j = mwg::Json::parse(r.out);
  REQUIRE(j.at("maximal_variety_paths").size() == 1);
  CHECK(j.at("maximal_variety_paths")[0].at("words").get<std::string>() ==
        "AABAABBABAB -> AAABABBABAB -> AAABABBAABB -> AAABABABABB -> AAABABAABBB");
  CHECK(mwg::rational_from_json(j.at("maximal_variety_paths")[0].at("score")) ==
        mwg::Rational(27));
}

TEST_CASE("cli: stats emits the sum rule and csv header") {
  const auto r = run("stats --length 8");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("view,radius,n_expected,fd_predicted,abs_dev") != std::string::npos);

  double sum = 0.0;
  std::istringstream lines(r.out);
  std::string line;
  bool in_rows = false;
  while (std::getline(lines, line)) {
    if (line.rfind("view,", 0) == 0) {
      in_rows = true;
      continue;
    }
    if (!in_rows || line.empty() || line[0] == '#') continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    sum += std::stod(line.substr(c2 + 1, c3 - c2 - 1));
  }
  CHECK(sum == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("cli: corr reports a positive correlation") {
  const auto r = run("corr --samples 200 --seed 1");
  REQUIRE(r.exit_code == 0);
  const auto pos = r.out.find("# pearson_r=");
  REQUIRE(pos != std::string::npos);
  const double rr = std::stod(r.out.substr(pos + 12));
  CHECK(rr > 0.1);

  // Same seed, same artifact.
  CHECK(run("corr --samples 200 --seed 1").out == r.out);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run("multiway").exit_code == 2);
  CHECK(run("paths --graph /nonexistent.json --to 1").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("stats --length 8 --format yaml").exit_code == 2);
}
