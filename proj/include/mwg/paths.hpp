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
#include <stdexcept>
#include <vector>

#include "mwg/engine.hpp"
#include "mwg/rational.hpp"

namespace mwg {

// Enumeration and scoring of multiway paths. A path is a node sequence
// through strictly increasing consecutive layers; parallel events between
// the same node pair do not multiply paths.

struct Path {
  std::vector<NodeId> nodes;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument when p is not a valid path in g.
void validate_path(const Path& p, const MultiwayGraph& g);

// Negated variety sum over all but the last vertex; a single-node path has
// action 0 (empty sum).
Rational action(const Path& p, const MultiwayGraph& g);

// Variety sum over all vertices, terminal one included. For any path,
// score(p) == -action(p) + variety(last node).
Rational path_score(const Path& p, const MultiwayGraph& g);

// Every path with all vertices Leibnizian, from any node of from_layer to
// any node of to_layer, in deterministic (node-id lexicographic) order.
// from_layer == to_layer yields single-node paths. Throws TruncationError
// when more than max_paths paths exist.
std::vector<Path> enumerate_physical_paths(const MultiwayGraph& g,
                                           std::size_t from_layer,
                                           std::size_t to_layer,
                                           std::size_t max_paths = 1u << 20);

// All physical paths from layer 0 to layer `depth` attaining the maximum
// score; ties are all returned, in the enumeration order.
std::vector<Path> maximal_variety_paths(const MultiwayGraph& g, std::size_t depth,
                                        std::size_t max_paths = 1u << 20);

}  // namespace mwg
