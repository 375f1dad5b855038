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

#include "mwg/io.hpp"

#include <cmath>
#include <sstream>

namespace mwg {

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from_json(const Json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json graph_to_json(const MultiwayGraph& g) {
  Json options;
  options["match_mode"] = to_string(g.options.match_mode);
  options["canon_mode"] = to_string(g.options.canon_mode);
  if (g.options.max_depth == MultiwayOptions::kUnbounded) {
    options["max_depth"] = nullptr;
  } else {
    options["max_depth"] = g.options.max_depth;
  }
  options["max_layer_width"] = g.options.max_layer_width;
  options["max_total_nodes"] = g.options.max_total_nodes;
  options["alphabet"] = g.alphabet;
  Json rules = Json::array();
  for (const auto& r : g.rules) rules.push_back(r.lhs + "->" + r.rhs);
  options["rules"] = rules;

  Json layers = Json::array();
  for (const auto& layer : g.layers) {
    Json jl = Json::array();
    for (NodeId id : layer) {
      const auto& node = g.node(id);
      jl.push_back(Json{{"id", id},
                        {"string", node.word},
                        {"variety", rational_to_json(node.variety)},
                        {"leibnizian", node.leibnizian}});
    }
    layers.push_back(std::move(jl));
  }

  Json events = Json::array();
  for (const auto& ev : g.events) {
    events.push_back(
        Json{{"src", ev.src}, {"dst", ev.dst}, {"rule", ev.rule}, {"pos", ev.pos}});
  }

  return Json{{"options", std::move(options)},
              {"layers", std::move(layers)},
              {"events", std::move(events)},
              {"truncated", g.truncated}};
}

MultiwayGraph graph_from_json(const Json& j) {
  MultiwayGraph g;
  const Json& options = j.at("options");
  g.options.match_mode = match_mode_from_string(options.at("match_mode").get<std::string>());
  g.options.canon_mode = canon_mode_from_string(options.at("canon_mode").get<std::string>());
  if (options.at("max_depth").is_null()) {
    g.options.max_depth = MultiwayOptions::kUnbounded;
  } else {
    g.options.max_depth = options.at("max_depth").get<std::size_t>();
  }
  g.options.max_layer_width = options.at("max_layer_width").get<std::size_t>();
  g.options.max_total_nodes = options.at("max_total_nodes").get<std::size_t>();
  g.alphabet = options.at("alphabet").get<std::string>();
  for (const auto& r : options.at("rules")) {
    g.rules.push_back(parse_rule(r.get<std::string>()));
  }

  for (const auto& jl : j.at("layers")) {
    std::vector<NodeId> layer;
    for (const auto& jn : jl) {
      const NodeId id = jn.at("id").get<NodeId>();
      MultiwayNode node;
      node.word = jn.at("string").get<std::string>();
      node.variety = rational_from_json(jn.at("variety"));
      node.leibnizian = jn.at("leibnizian").get<bool>();
      if (!g.nodes.emplace(id, std::move(node)).second) {
        throw std::invalid_argument("duplicate node id " + std::to_string(id));
      }
      layer.push_back(id);
    }
    g.layers.push_back(std::move(layer));
  }

  const auto layer_of = g.layer_index();
  for (const auto& je : j.at("events")) {
    RewriteEvent ev{je.at("src").get<NodeId>(), je.at("dst").get<NodeId>(),
                    je.at("rule").get<std::size_t>(), je.at("pos").get<std::size_t>()};
    if (!layer_of.count(ev.src) || !layer_of.count(ev.dst)) {
      throw std::invalid_argument("event references an unknown node");
    }
    if (layer_of.at(ev.dst) != layer_of.at(ev.src) + 1) {
      throw std::invalid_argument("event must connect consecutive layers");
    }
    g.events.push_back(ev);
  }
  g.truncated = j.at("truncated").get<bool>();
  return g;
}

MultiwayGraph graph_from_artifact(const Json& j) {
  return graph_from_json(j.contains("graph") ? j.at("graph") : j);
}

std::string graph_to_dot(const MultiwayGraph& g) {
  std::ostringstream out;
  out << "digraph multiway {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  out << "  subgraph cluster_physical {\n";
  out << "    label=\"physical\";\n";
  out << "    color=red;\n";
  for (const auto& layer : g.layers) {
    for (NodeId id : layer) {
      const auto& node = g.node(id);
      if (node.leibnizian) {
        out << "    n" << id << " [label=\"" << node.word << "\\nV="
            << to_string(node.variety) << "\", color=red];\n";
      }
    }
  }
  out << "  }\n";
  for (const auto& layer : g.layers) {
    for (NodeId id : layer) {
      const auto& node = g.node(id);
      if (!node.leibnizian) {
        out << "  n" << id << " [label=\"" << node.word
            << "\", color=gray, style=dashed];\n";
      }
    }
  }
  for (const auto& ev : g.events) {
    out << "  n" << ev.src << " -> n" << ev.dst << " [label=\"r" << ev.rule << "@"
        << ev.pos << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json path_to_json(const Path& p, const MultiwayGraph& g) {
  Json nodes = Json::array();
  for (NodeId id : p.nodes) nodes.push_back(id);
  return Json{{"nodes", std::move(nodes)},
              {"action", rational_to_json(action(p, g))},
              {"score", rational_to_json(path_score(p, g))}};
}

std::string path_to_text(const Path& p, const MultiwayGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i) out << " -> ";
    out << g.node(p.nodes[i]).word;
  }
  return out.str();
}

Json complex_to_json(const Complex& c) {
  return Json{{"re", c.real()}, {"im", c.imag()}};
}

Json smatrix_to_json(const LayerSystem& ls, const SolveResult& solved,
                     const ComplexMatrix& dense, const Eigen::VectorXcd& phases,
                     double k, const std::vector<GateMatch>& matches) {
  Json j;
  j["in"] = ls.in_words;
  j["out"] = ls.out_words;
  j["k"] = k;

  Json connected = Json::array();
  for (Eigen::Index r = 0; r < ls.connected.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < ls.connected.cols(); ++c) {
      row.push_back(static_cast<bool>(ls.connected(r, c)));
    }
    connected.push_back(std::move(row));
  }
  j["connected"] = std::move(connected);

  j["feasible"] = solved.feasible;
  j["residual"] = solved.residual;
  Json weights = Json::array();
  for (Eigen::Index r = 0; r < solved.weights.entries.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < solved.weights.entries.cols(); ++c) {
      row.push_back(solved.weights.entries(r, c));
    }
    weights.push_back(std::move(row));
  }
  if (solved.feasible) {
    j["weights"] = std::move(weights);
  } else {
    j["weights"] = nullptr;
    j["infeasible"] = Json{{"residual", solved.residual},
                           {"best_weights", std::move(weights)}};
  }

  Json jphases = Json::array();
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    jphases.push_back(complex_to_json(phases(i)));
  }
  j["phases"] = std::move(jphases);

  Json jdense = Json::array();
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < dense.cols(); ++c) {
      row.push_back(complex_to_json(dense(r, c)));
    }
    jdense.push_back(std::move(row));
  }
  j["dense"] = std::move(jdense);

  Json jmatches = Json::array();
  for (const auto& m : matches) {
    jmatches.push_back(Json{{"gate", m.gate},
                            {"row_perm", m.row_perm},
                            {"col_perm", m.col_perm},
                            {"global_phase", complex_to_json(m.global_phase)},
                            {"residual", m.residual}});
  }
  j["matches"] = std::move(jmatches);
  return j;
}

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::string ensemble_report_to_csv(const EnsembleReport& rep) {
  std::ostringstream out;
  out << "# length=" << rep.length << " beta=" << format_double(rep.beta)
      << " gamma=" << format_double(rep.gamma) << " canon=" << to_string(rep.canon_mode)
      << "\n";
  out << "# z_n=" << format_double(rep.z_n);
  if (rep.z_nminus1) out << " z_nminus1=" << format_double(*rep.z_nminus1);
  if (rep.mu) out << " mu=" << format_double(*rep.mu);
  out << "\n";
  out << "view,radius,n_expected,fd_predicted,abs_dev\n";
  for (const auto& row : rep.rows) {
    const double dev = std::abs(row.n_expected - row.fd_predicted);
    out << row.view.sequence << "," << row.view.radius << ","
        << format_double(row.n_expected) << "," << format_double(row.fd_predicted)
        << "," << format_double(dev) << "\n";
  }
  return out.str();
}

std::string correlation_report_to_csv(const CorrelationReport& rep) {
  std::ostringstream out;
  if (rep.pearson_r) {
    out << "# pearson_r=" << format_double(*rep.pearson_r) << "\n";
  } else {
    out << "# pearson_r=undefined (zero variance)\n";
  }
  out << "string,cond_entropy,variety\n";
  for (const auto& row : rep.rows) {
    out << row.word << "," << format_double(row.cond_entropy) << ","
        << format_double(to_double(row.variety)) << "\n";
  }
  return out.str();
}

}  // namespace mwg
