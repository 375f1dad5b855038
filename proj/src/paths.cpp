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

#include "mwg/paths.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mwg {

namespace {

// Deduplicated successor lists, ascending by id.
std::map<NodeId, std::vector<NodeId>> successors(const MultiwayGraph& g) {
  std::map<NodeId, std::set<NodeId>> adj;
  for (const auto& ev : g.events) adj[ev.src].insert(ev.dst);
  std::map<NodeId, std::vector<NodeId>> out;
  for (auto& [src, dsts] : adj) out.emplace(src, std::vector<NodeId>(dsts.begin(), dsts.end()));
  return out;
}

}  // namespace

void validate_path(const Path& p, const MultiwayGraph& g) {
  if (p.nodes.empty()) throw std::invalid_argument("path must have at least one node");
  const auto layer_of = g.layer_index();
  std::set<std::pair<NodeId, NodeId>> edges;
  for (const auto& ev : g.events) edges.emplace(ev.src, ev.dst);
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    auto it = layer_of.find(p.nodes[i]);
    if (it == layer_of.end()) throw std::invalid_argument("path node not in graph");
    if (i > 0) {
      if (it->second != layer_of.at(p.nodes[i - 1]) + 1) {
        throw std::invalid_argument("path nodes must lie in consecutive layers");
      }
      if (!edges.count({p.nodes[i - 1], p.nodes[i]})) {
        throw std::invalid_argument("consecutive path nodes must be joined by an event");
      }
    }
  }
}

Rational action(const Path& p, const MultiwayGraph& g) {
  validate_path(p, g);
  Rational sum(0);
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    sum += g.node(p.nodes[i]).variety;
  }
  return -sum;
}

Rational path_score(const Path& p, const MultiwayGraph& g) {
  validate_path(p, g);
  Rational sum(0);
  for (NodeId id : p.nodes) sum += g.node(id).variety;
  return sum;
}

std::vector<Path> enumerate_physical_paths(const MultiwayGraph& g,
                                           std::size_t from_layer,
                                           std::size_t to_layer,
                                           std::size_t max_paths) {
  if (from_layer > to_layer) {
    throw std::invalid_argument("from_layer must not exceed to_layer");
  }
  if (to_layer >= g.layers.size()) {
    throw std::invalid_argument("layer out of range");
  }
  const auto adj = successors(g);
  const auto layer_of = g.layer_index();
  std::vector<Path> result;
  std::vector<NodeId> stack;

  auto leib = [&](NodeId id) { return g.node(id).leibnizian; };

  auto dfs = [&](auto&& self, NodeId node) -> void {
    if (!leib(node)) return;
    stack.push_back(node);
    if (layer_of.at(node) == to_layer) {
      if (result.size() >= max_paths) {
        throw TruncationError("physical path enumeration exceeded cap of " +
                              std::to_string(max_paths));
      }
      result.push_back(Path{stack});
    } else {
      auto it = adj.find(node);
      if (it != adj.end()) {
        for (NodeId nxt : it->second) {
          if (layer_of.at(nxt) == layer_of.at(node) + 1) self(self, nxt);
        }
      }
    }
    stack.pop_back();
  };

  for (NodeId start : g.layers[from_layer]) dfs(dfs, start);
  return result;
}

std::vector<Path> maximal_variety_paths(const MultiwayGraph& g, std::size_t depth,
                                        std::size_t max_paths) {
  auto all = enumerate_physical_paths(g, 0, depth, max_paths);
  if (all.empty()) return {};
  std::vector<Rational> scores;
  scores.reserve(all.size());
  for (const auto& p : all) scores.push_back(path_score(p, g));
  const Rational best = *std::max_element(scores.begin(), scores.end());
  std::vector<Path> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (scores[i] == best) out.push_back(all[i]);
  }
  return out;
}

}  // namespace mwg
