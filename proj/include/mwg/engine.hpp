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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwg/alphabet.hpp"
#include "mwg/rational.hpp"
#include "mwg/strcore.hpp"

namespace mwg {

// Nondeterministic string-substitution engine: rule matching, event
// application and layered multiway-graph construction.

struct RewriteRule {
  std::string lhs;
  std::string rhs;

  RewriteRule(std::string l, std::string r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.empty() || rhs.empty()) {
      throw std::invalid_argument("rewrite rule sides must be non-empty");
    }
  }

  bool operator==(const RewriteRule&) const = default;
};

// Parses the "LHS->RHS" rule syntax.
RewriteRule parse_rule(std::string_view text);

enum class MatchMode { linear, cyclic };

const char* to_string(MatchMode mode);
MatchMode match_mode_from_string(std::string_view name);

// 1-based start positions of rule.lhs in s, ascending. Linear mode scans
// positions 1..n-|lhs|+1 without wraparound; cyclic mode scans 1..n with
// wraparound. Patterns longer than the string never match.
std::vector<std::size_t> find_matches(const CyclicString& s, const RewriteRule& rule,
                                      MatchMode mode);

// Replaces the lhs span at the 1-based match position with rhs. A wrapping
// match (cyclic mode only) is rewritten in rotated coordinates, i.e. the
// result is anchored at the match start, and then re-anchored by
// canonicalize(result, canon). Throws when position is not a match.
CyclicString apply_rule(const CyclicString& s, const RewriteRule& rule,
                        std::size_t pos, MatchMode mode = MatchMode::linear,
                        CanonMode canon = CanonMode::literal);

using NodeId = std::size_t;

struct MultiwayNode {
  std::string word;
  Rational variety;
  bool leibnizian = false;
};

struct RewriteEvent {
  NodeId src = 0;
  NodeId dst = 0;
  std::size_t rule = 0;
  std::size_t pos = 0;  // 1-based position in the source word

  bool operator==(const RewriteEvent&) const = default;
};

struct MultiwayOptions {
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  MatchMode match_mode = MatchMode::linear;
  CanonMode canon_mode = CanonMode::literal;
  std::size_t max_depth = kUnbounded;
  std::size_t max_layer_width = 1u << 16;
  std::size_t max_total_nodes = 1u << 20;
};

// Layered DAG of rewriting events. Node ids are assigned layer by layer, in
// ascending word order within each layer, so identical inputs and options
// always produce identical graphs. A subgraph keeps the ids of its parent
// graph; `layers` lists the members.
struct MultiwayGraph {
  MultiwayOptions options;
  std::string alphabet;
  std::vector<RewriteRule> rules;
  std::vector<std::vector<NodeId>> layers;
  std::map<NodeId, MultiwayNode> nodes;
  std::vector<RewriteEvent> events;
  bool truncated = false;

  const MultiwayNode& node(NodeId id) const {
    auto it = nodes.find(id);
    if (it == nodes.end()) throw std::out_of_range("unknown node id");
    return it->second;
  }

  CyclicString word_of(NodeId id) const {
    return CyclicString(node(id).word, Alphabet(alphabet));
  }

  // Layer index of every node listed in `layers`.
  std::map<NodeId, std::size_t> layer_index() const;

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
};

// Breadth-first layer expansion from an initial layer of words (the usual
// case is a single root). Each node spawns one child per (rule, position)
// match; children are deduplicated within their layer under the canon mode;
// every (parent, rule, position) event is recorded, including those landing
// on deduplicated nodes. Expansion stops at options.max_depth, when a layer
// is empty (termination), or when a resource cap trips (truncated flag).
MultiwayGraph build_multiway(const std::vector<CyclicString>& initial,
                             std::vector<RewriteRule> rules,
                             const MultiwayOptions& options = {});

MultiwayGraph build_multiway(const CyclicString& root, std::vector<RewriteRule> rules,
                             const MultiwayOptions& options = {});

// Nodes filtered to the Leibnizian ones; events kept iff both endpoints
// survive. Idempotent.
MultiwayGraph physical_subgraph(const MultiwayGraph& g);

}  // namespace mwg
