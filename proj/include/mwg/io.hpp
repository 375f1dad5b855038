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

#include <string>
#include <vector>

#include <json.hpp>

#include "mwg/engine.hpp"
#include "mwg/gates.hpp"
#include "mwg/paths.hpp"
#include "mwg/smatrix.hpp"
#include "mwg/stats.hpp"

namespace mwg {

using Json = nlohmann::ordered_json;

// Stable serialization formats. Graph JSON:
//   { "options": {...}, "layers": [[{"id","string","variety":{"num","den"},
//     "leibnizian"}...]...], "events": [{"src","dst","rule","pos"}...],
//     "truncated": bool }

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json graph_to_json(const MultiwayGraph& g);
MultiwayGraph graph_from_json(const Json& j);

// Accepts either a bare graph object or a wrapping artifact with a "graph"
// key, so multiway command output re-ingests directly.
MultiwayGraph graph_from_artifact(const Json& j);

// DOT rendering with Leibnizian nodes styled distinctly and grouped in a
// "physical" subgraph cluster.
std::string graph_to_dot(const MultiwayGraph& g);

Json path_to_json(const Path& p, const MultiwayGraph& g);

// Arrow-joined node words.
std::string path_to_text(const Path& p, const MultiwayGraph& g);

Json smatrix_to_json(const LayerSystem& ls, const SolveResult& solved,
                     const ComplexMatrix& dense, const Eigen::VectorXcd& phases,
                     double k, const std::vector<GateMatch>& matches);

Json complex_to_json(const Complex& c);

std::string ensemble_report_to_csv(const EnsembleReport& rep);
std::string correlation_report_to_csv(const CorrelationReport& rep);

}  // namespace mwg
