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

#include "mwg/engine.hpp"

#include <algorithm>
#include <set>

namespace mwg {

RewriteRule parse_rule(std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) {
    throw std::invalid_argument("rule must have the form LHS->RHS: " + std::string(text));
  }
  return RewriteRule(std::string(text.substr(0, arrow)),
                     std::string(text.substr(arrow + 2)));
}

const char* to_string(MatchMode mode) {
  return mode == MatchMode::linear ? "linear" : "cyclic";
}

MatchMode match_mode_from_string(std::string_view name) {
  if (name == "linear") return MatchMode::linear;
  if (name == "cyclic") return MatchMode::cyclic;
  throw std::invalid_argument("unknown match mode: " + std::string(name));
}

std::vector<std::size_t> find_matches(const CyclicString& s, const RewriteRule& rule,
                                      MatchMode mode) {
  const std::size_t n = s.size();
  const std::size_t len = rule.lhs.size();
  std::vector<std::size_t> out;
  if (len > n) return out;
  const std::size_t last = mode == MatchMode::linear ? n - len + 1 : n;
  for (std::size_t pos = 1; pos <= last; ++pos) {
    bool hit = true;
    for (std::size_t d = 0; d < len; ++d) {
      if (s.at_wrapped(static_cast<long long>(pos + d)) != rule.lhs[d]) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back(pos);
  }
  return out;
}

CyclicString apply_rule(const CyclicString& s, const RewriteRule& rule,
                        std::size_t pos, MatchMode mode, CanonMode canon) {
  const auto matches = find_matches(s, rule, mode);
  if (std::find(matches.begin(), matches.end(), pos) == matches.end()) {
    throw std::invalid_argument("position " + std::to_string(pos) +
                                " is not a match of " + rule.lhs);
  }
  const std::size_t n = s.size();
  const std::size_t len = rule.lhs.size();
  const std::string& w = s.str();
  if (pos + len - 1 <= n) {
    std::string result = w.substr(0, pos - 1) + rule.rhs + w.substr(pos - 1 + len);
    return CyclicString(result, s.alphabet());
  }
  // Wrapping match: rewrite in coordinates rotated so the match starts the
  // word, then re-anchor per canon mode.
  std::string rotated = w.substr(pos - 1) + w.substr(0, pos - 1);
  std::string result = rule.rhs + rotated.substr(len);
  return canonicalize(CyclicString(result, s.alphabet()), canon);
}

std::map<NodeId, std::size_t> MultiwayGraph::layer_index() const {
  std::map<NodeId, std::size_t> idx;
  for (std::size_t d = 0; d < layers.size(); ++d) {
    for (NodeId id : layers[d]) idx[id] = d;
  }
  return idx;
}

namespace {

MultiwayNode make_node(const CyclicString& s) {
  return MultiwayNode{s.str(), variety(s), is_leibnizian(s)};
}

}  // namespace

MultiwayGraph build_multiway(const std::vector<CyclicString>& initial,
                             std::vector<RewriteRule> rules,
                             const MultiwayOptions& options) {
  if (initial.empty()) {
    throw std::invalid_argument("at least one initial word is required");
  }
  const Alphabet& alphabet = initial.front().alphabet();
  for (const auto& w : initial) {
    if (!(w.alphabet() == alphabet)) {
      throw std::invalid_argument("initial words must share one alphabet");
    }
  }

  MultiwayGraph g;
  g.options = options;
  g.alphabet = alphabet.letters();
  g.rules = std::move(rules);

  std::set<std::string> seed;
  for (const auto& w : initial) {
    seed.insert(canonicalize(w, options.canon_mode).str());
  }
  NodeId next_id = 0;
  g.layers.emplace_back();
  for (const auto& word : seed) {
    g.nodes.emplace(next_id, make_node(CyclicString(word, alphabet)));
    g.layers.back().push_back(next_id++);
  }

  std::size_t depth = 0;
  while (depth != options.max_depth) {
    struct PendingEvent {
      NodeId src;
      std::size_t rule;
      std::size_t pos;
      std::string child;
    };
    std::vector<PendingEvent> pending;
    std::set<std::string> children;
    for (NodeId src : g.layers[depth]) {
      const CyclicString word(g.nodes.at(src).word, alphabet);
      for (std::size_t ri = 0; ri < g.rules.size(); ++ri) {
        for (std::size_t pos : find_matches(word, g.rules[ri], options.match_mode)) {
          CyclicString raw =
              apply_rule(word, g.rules[ri], pos, options.match_mode, options.canon_mode);
          std::string canon = canonicalize(raw, options.canon_mode).str();
          pending.push_back({src, ri, pos, canon});
          children.insert(std::move(canon));
        }
      }
    }
    if (children.empty()) break;  // terminated: empty frontier
    if (children.size() > options.max_layer_width ||
        g.nodes.size() + children.size() > options.max_total_nodes) {
      g.truncated = true;
      break;
    }
    std::map<std::string, NodeId> ids;
    g.layers.emplace_back();
    for (const auto& word : children) {
      ids.emplace(word, next_id);
      g.nodes.emplace(next_id, make_node(CyclicString(word, alphabet)));
      g.layers.back().push_back(next_id++);
    }
    for (const auto& ev : pending) {
      g.events.push_back({ev.src, ids.at(ev.child), ev.rule, ev.pos});
    }
    ++depth;
  }
  return g;
}

MultiwayGraph build_multiway(const CyclicString& root, std::vector<RewriteRule> rules,
                             const MultiwayOptions& options) {
  return build_multiway(std::vector<CyclicString>{root}, std::move(rules), options);
}

MultiwayGraph physical_subgraph(const MultiwayGraph& g) {
  MultiwayGraph sub;
  sub.options = g.options;
  sub.alphabet = g.alphabet;
  sub.rules = g.rules;
  sub.truncated = g.truncated;

  std::set<NodeId> kept;
  sub.layers.reserve(g.layers.size());
  for (const auto& layer : g.layers) {
    std::vector<NodeId> filtered;
    for (NodeId id : layer) {
      if (g.nodes.at(id).leibnizian) {
        filtered.push_back(id);
        kept.insert(id);
      }
    }
    sub.layers.push_back(std::move(filtered));
  }
  for (NodeId id : kept) sub.nodes.emplace(id, g.nodes.at(id));
  for (const auto& ev : g.events) {
    if (kept.count(ev.src) && kept.count(ev.dst)) sub.events.push_back(ev);
  }
  return sub;
}

}  // namespace mwg
