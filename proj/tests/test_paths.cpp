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

#include <doctest.h>

#include <set>

#include "mwg/paths.hpp"
#include "oracles.hpp"

using namespace mwg;

namespace {

const Alphabet kAB{"AB"};
const Alphabet kABC{"ABC"};

MultiwayGraph fig_chain() {
  return build_multiway(CyclicString("AABAABBABAB", kAB), {parse_rule("BA->AB")},
                        MultiwayOptions{.max_depth = 4});
}

std::vector<std::string> words_of(const Path& p, const MultiwayGraph& g) {
  std::vector<std::string> out;
  for (NodeId id : p.nodes) out.push_back(g.node(id).word);
  return out;
}

}  // namespace

TEST_CASE("action is the negated variety sum over all but the last node") {
  const auto g = fig_chain();
  const auto paths = enumerate_physical_paths(g, 0, 2);
  REQUIRE(!paths.empty());
  for (const auto& p : paths) {
    Rational expect(0);
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
      expect += g.node(p.nodes[i]).variety;
    }
    CHECK(action(p, g) == -expect);
    CHECK(path_score(p, g) == -action(p, g) + g.node(p.nodes.back()).variety);
  }

  // Two- and three-node prefixes directly.
  const auto two = enumerate_physical_paths(g, 0, 1).front();
  CHECK(action(two, g) == -g.node(two.nodes[0]).variety);
  const auto three = enumerate_physical_paths(g, 0, 2).front();
  CHECK(action(three, g) ==
        -(g.node(three.nodes[0]).variety + g.node(three.nodes[1]).variety));

  // Single-node path: empty sum.
  const Path solo{{g.layers[0][0]}};
  CHECK(action(solo, g) == Rational(0));
  CHECK(action(solo, g) <= Rational(0));
}

TEST_CASE("actions of physical paths with n > 1 are negative") {
  const auto g = fig_chain();
  for (const auto& p : enumerate_physical_paths(g, 0, 4)) {
    CHECK(action(p, g) < Rational(0));
  }
}

TEST_CASE("path validation") {
  const auto g = fig_chain();
  CHECK_THROWS_AS(action(Path{{}}, g), std::invalid_argument);
  CHECK_THROWS_AS(action(Path{{9999}}, g), std::invalid_argument);
  // Skipping a layer is rejected.
  const NodeId root = g.layers[0][0];
  const NodeId far = g.layers[2][0];
  CHECK_THROWS_AS(action(Path{{root, far}}, g), std::invalid_argument);
}

TEST_CASE("physical path enumeration matches the DFS oracle") {
  const auto g = fig_chain();
  const auto ref = oracle::expand("AABAABBABAB", {{"BA", "AB"}}, 4);
  const auto oracle_paths =
      oracle::dfs_paths(ref, 0, 4, [](const std::string& w) {
        return oracle::leibnizian_full_scan(w);
      });
  const auto got = enumerate_physical_paths(g, 0, 4);
  REQUIRE(got.size() == oracle_paths.size());
  CHECK(got.size() == 5);

  std::set<std::vector<std::string>> ours, theirs;
  for (const auto& p : got) ours.insert(words_of(p, g));
  for (const auto& idxs : oracle_paths) {
    std::vector<std::string> w;
    for (std::size_t d = 0; d < idxs.size(); ++d) w.push_back(ref.layers[d][idxs[d]]);
    theirs.insert(std::move(w));
  }
  CHECK(ours == theirs);
}

TEST_CASE("root-to-final count of the sorting system matches the oracle") {
  const auto g = build_multiway(CyclicString("BBBAAACC", kABC),
                                {parse_rule("BA->AB"), parse_rule("CB->BC")});
  const auto ref = oracle::expand("BBBAAACC", {{"BA", "AB"}, {"CB", "BC"}}, 64);
  const auto oracle_paths = oracle::dfs_paths(
      ref, 0, ref.layers.size() - 1,
      [](const std::string& w) { return oracle::leibnizian_full_scan(w); });
  const auto got = enumerate_physical_paths(g, 0, g.depth());
  CHECK(got.size() == oracle_paths.size());
  CHECK(got.size() == 42);
}

TEST_CASE("depth-zero request returns single-node paths") {
  const auto g = fig_chain();
  const auto paths = enumerate_physical_paths(g, 1, 1);
  std::size_t leib = 0;
  for (NodeId id : g.layers[1]) {
    if (g.node(id).leibnizian) ++leib;
  }
  CHECK(paths.size() == leib);
  for (const auto& p : paths) CHECK(p.nodes.size() == 1);
}

TEST_CASE("non-Leibnizian start layer yields nothing") {
  const auto g = build_multiway(CyclicString("BADCBADC", Alphabet("ABCD")),
                                {parse_rule("BA->AB"), parse_rule("DC->CD")},
                                MultiwayOptions{.max_depth = 2});
  CHECK_FALSE(g.node(g.layers[0][0]).leibnizian);
  CHECK(enumerate_physical_paths(g, 0, 2).empty());
  CHECK(maximal_variety_paths(g, 2).empty());
  // Starting below the root the paths exist.
  CHECK(enumerate_physical_paths(g, 1, 2).size() == 8);
}

TEST_CASE("physical paths are additive across depth") {
  const auto g = fig_chain();
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto longer = enumerate_physical_paths(g, 0, d);
    const auto shorter = enumerate_physical_paths(g, 0, d - 1);
    std::set<Path> shorter_set(shorter.begin(), shorter.end());
    // Every longer path restricted to its prefix is a shorter physical path.
    std::set<Path> prefixes;
    for (const auto& p : longer) {
      Path pre{std::vector<NodeId>(p.nodes.begin(), p.nodes.end() - 1)};
      CHECK(shorter_set.count(pre));
      prefixes.insert(std::move(pre));
    }
    // Every shorter path with a Leibnizian successor extends.
    std::set<std::pair<NodeId, NodeId>> edges;
    for (const auto& ev : g.events) edges.emplace(ev.src, ev.dst);
    for (const auto& p : shorter) {
      bool has_successor = false;
      for (NodeId nxt : g.layers[d]) {
        if (g.node(nxt).leibnizian && edges.count({p.nodes.back(), nxt})) {
          has_successor = true;
          break;
        }
      }
      if (has_successor) CHECK(prefixes.count(p));
    }
  }
}

TEST_CASE("maximal variety path of the reference chain is unique") {
  const auto g = fig_chain();
  const auto maxima = maximal_variety_paths(g, 4);
  REQUIRE(maxima.size() == 1);
  CHECK(path_score(maxima.front(), g) == Rational(27));
  CHECK(words_of(maxima.front(), g) ==
        std::vector<std::string>{"AABAABBABAB", "AAABABBABAB", "AAABABBAABB",
                                 "AAABABABABB", "AAABABAABBB"});

  // Exhaustive scoring oracle over all physical paths.
  const auto all = enumerate_physical_paths(g, 0, 4);
  for (const auto& p : all) {
    if (!(p == maxima.front())) {
      CHECK(path_score(p, g) < Rational(27));
    }
  }
}

TEST_CASE("maximal paths are physical; full ties return every path") {
  const auto g = build_multiway(CyclicString("BADCBADC", Alphabet("ABCD")),
                                {parse_rule("BA->AB"), parse_rule("DC->CD")},
                                MultiwayOptions{.max_depth = 2});
  // All Leibnizian words here share variety 8, so every layer-1 to layer-2
  // physical path ties at score 16.
  const auto paths12 = enumerate_physical_paths(g, 1, 2);
  CHECK(paths12.size() == 8);
  for (const auto& p : paths12) {
    CHECK(path_score(p, g) == Rational(16));
  }
}

TEST_CASE("maximal variety paths are not additive") {
  // Hand-built graph: the depth-1 maximum goes through a dead branch, so no
  // depth-2 maximum extends it.
  MultiwayGraph g;
  g.alphabet = "AB";
  auto add = [&](NodeId id, const std::string& w, Rational v) {
    g.nodes[id] = MultiwayNode{w, v, true};
  };
  add(0, "A", Rational(1));
  add(1, "AA", Rational(10));
  add(2, "AB", Rational(1));
  add(3, "BB", Rational(3));
  g.layers = {{0}, {1, 2}, {3}};
  g.events = {{0, 1, 0, 1}, {0, 2, 0, 2}, {2, 3, 0, 1}};

  const auto depth1 = maximal_variety_paths(g, 1);
  REQUIRE(depth1.size() == 1);
  CHECK(depth1.front().nodes == std::vector<NodeId>{0, 1});

  const auto depth2 = maximal_variety_paths(g, 2);
  REQUIRE(depth2.size() == 1);
  CHECK(depth2.front().nodes == std::vector<NodeId>{0, 2, 3});
}

TEST_CASE("single-chain graph returns the chain") {
  const auto g = build_multiway(CyclicString("BBAABB", kAB), {parse_rule("BA->AB")},
                                MultiwayOptions{.max_depth = 1});
  // One rewrite site only: BA at position 2.
  REQUIRE(g.layers.size() == 2);
  REQUIRE(g.layers[1].size() == 1);
}

TEST_CASE("enumeration cap throws an explicit truncation error") {
  const auto g = fig_chain();
  CHECK_THROWS_AS(enumerate_physical_paths(g, 0, 4, 2), TruncationError);
}
