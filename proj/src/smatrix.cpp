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

#include "mwg/smatrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "mwg/gates.hpp"

namespace mwg {

namespace {

constexpr Complex kImag{0.0, 1.0};

double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// max-abs of w^T w - I over the column dimension.
double gram_residual(const RealMatrix& w) {
  const Eigen::Index n = w.cols();
  RealMatrix g = w.transpose() * w - RealMatrix::Identity(n, n);
  return max_abs(g);
}

}  // namespace

std::optional<Rational> LayerSystem::uniform_action(std::size_t j, std::size_t i) const {
  if (!connected(j, i)) return std::nullopt;
  const auto& terms = paths[j][i];
  const Rational first = terms.front().action;
  for (const auto& t : terms) {
    if (t.action != first) return std::nullopt;
  }
  return first;
}

bool LayerSystem::has_zero_row() const {
  for (Eigen::Index j = 0; j < connected.rows(); ++j) {
    if (!connected.row(j).any()) return true;
  }
  return false;
}

bool LayerSystem::has_zero_col() const {
  for (Eigen::Index i = 0; i < connected.cols(); ++i) {
    if (!connected.col(i).any()) return true;
  }
  return false;
}

LayerSystem layer_system(const MultiwayGraph& g, std::size_t layer_a,
                         std::size_t layer_b, bool restrict_physical) {
  if (layer_a >= layer_b) throw std::invalid_argument("layer_a must precede layer_b");
  if (layer_b >= g.layers.size()) throw std::invalid_argument("layer out of range");

  auto select = [&](std::size_t layer) {
    std::vector<NodeId> words;
    for (NodeId id : g.layers[layer]) {
      if (!restrict_physical || g.node(id).leibnizian) words.push_back(id);
    }
    return words;
  };

  LayerSystem ls;
  ls.in_words = select(layer_a);
  ls.out_words = select(layer_b);
  if (ls.in_words.empty() || ls.out_words.empty()) {
    throw std::domain_error("layer system requires non-empty word lists");
  }
  for (NodeId id : ls.in_words) ls.in_varieties.push_back(g.node(id).variety);

  std::map<NodeId, std::size_t> in_index, out_index;
  for (std::size_t i = 0; i < ls.in_words.size(); ++i) in_index[ls.in_words[i]] = i;
  for (std::size_t j = 0; j < ls.out_words.size(); ++j) out_index[ls.out_words[j]] = j;

  const std::size_t m = ls.out_words.size();
  const std::size_t n = ls.in_words.size();
  ls.connected = BoolMatrix::Constant(m, n, false);
  ls.paths.assign(m, std::vector<std::vector<PathTerm>>(n));

  for (auto& p : enumerate_physical_paths(g, layer_a, layer_b)) {
    auto iit = in_index.find(p.nodes.front());
    auto oit = out_index.find(p.nodes.back());
    if (iit == in_index.end() || oit == out_index.end()) continue;
    const Rational act = action(p, g);
    ls.connected(oit->second, iit->second) = true;
    ls.paths[oit->second][iit->second].push_back(PathTerm{std::move(p), act});
  }
  return ls;
}

LayerSystem make_layer_system(const BoolMatrix& connected,
                              const std::vector<Rational>& in_varieties) {
  const std::size_t m = connected.rows();
  const std::size_t n = connected.cols();
  if (in_varieties.size() != n) {
    throw std::invalid_argument("one variety per in-word required");
  }
  LayerSystem ls;
  for (std::size_t i = 0; i < n; ++i) ls.in_words.push_back(i);
  for (std::size_t j = 0; j < m; ++j) ls.out_words.push_back(j);
  ls.in_varieties = in_varieties;
  ls.connected = connected;
  ls.paths.assign(m, std::vector<std::vector<PathTerm>>(n));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (connected(j, i)) {
        ls.paths[j][i].push_back(PathTerm{Path{{i, n + j}}, -in_varieties[i]});
      }
    }
  }
  return ls;
}

WeightMatrix::WeightMatrix(RealMatrix e, BoolMatrix s)
    : entries(std::move(e)), support(std::move(s)) {
  if (entries.rows() != support.rows() || entries.cols() != support.cols()) {
    throw std::invalid_argument("weight entries and support shapes differ");
  }
  for (Eigen::Index j = 0; j < entries.rows(); ++j) {
    for (Eigen::Index i = 0; i < entries.cols(); ++i) {
      if (!support(j, i) && entries(j, i) != 0.0) {
        throw std::invalid_argument("nonzero weight outside support");
      }
    }
  }
}

WeightMatrix unit_weights(const BoolMatrix& support) {
  RealMatrix e = RealMatrix::Zero(support.rows(), support.cols());
  for (Eigen::Index j = 0; j < support.rows(); ++j) {
    for (Eigen::Index i = 0; i < support.cols(); ++i) {
      if (support(j, i)) e(j, i) = 1.0;
    }
  }
  return WeightMatrix(std::move(e), support);
}

ComplexMatrix build_smatrix(const LayerSystem& ls, const WeightMatrix& w, double k,
                            double gamma) {
  const std::size_t m = ls.m_out();
  const std::size_t n = ls.n_in();
  if (w.rows() != m || w.cols() != n) {
    throw std::invalid_argument("weight shape does not match layer system");
  }
  if (k <= 0.0) throw std::invalid_argument("coupling k must be positive");
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w.support(j, i) && !ls.connected(j, i)) {
        throw std::invalid_argument("weight support outside layer connectivity");
      }
    }
  }
  ComplexMatrix u = ComplexMatrix::Zero(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!w.support(j, i)) continue;
      const auto act = ls.uniform_action(j, i);
      if (!act) {
        throw std::domain_error(
            "paths joining a word pair disagree in action; use the "
            "multilayer build with per-edge weights");
      }
      u(j, i) = w.entries(j, i) * std::exp(kImag * (gamma * to_double(*act) / k));
    }
  }
  return u;
}

ComplexMatrix SMatrixSpec::dense() const {
  const Eigen::Index m = weights.entries.rows();
  const Eigen::Index n = weights.entries.cols();
  ComplexMatrix u(m, n);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      u(j, i) = weights.entries(j, i) * phases(i);
    }
  }
  return u;
}

SMatrixSpec make_smatrix_spec(const LayerSystem& ls, const WeightMatrix& w, double k,
                              double gamma) {
  const std::size_t m = ls.m_out();
  const std::size_t n = ls.n_in();
  if (w.rows() != m || w.cols() != n) {
    throw std::invalid_argument("weight shape does not match layer system");
  }
  if (k <= 0.0) throw std::invalid_argument("coupling k must be positive");
  SMatrixSpec spec;
  spec.weights = w;
  spec.k = k;
  spec.phases = Eigen::VectorXcd::Ones(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> column_action;
    for (std::size_t j = 0; j < m; ++j) {
      if (!ls.connected(j, i)) continue;
      const auto act = ls.uniform_action(j, i);
      if (!act || (column_action && *column_action != *act)) {
        throw std::domain_error("column phases are not uniform; the factored "
                                "form needs adjacent layers");
      }
      column_action = act;
    }
    if (column_action) {
      spec.phases(i) = std::exp(kImag * (gamma * to_double(*column_action) / k));
    }
  }
  return spec;
}

ComplexMatrix compose(const ComplexMatrix& u2, const ComplexMatrix& u1) {
  if (u2.cols() != u1.rows()) {
    throw std::invalid_argument("inner dimensions disagree");
  }
  return u2 * u1;
}

ComplexMatrix build_multilayer_smatrix(const MultiwayGraph& g, std::size_t layer_a,
                                       std::size_t layer_b,
                                       const std::vector<RealMatrix>& edge_weights,
                                       double k, double gamma) {
  if (layer_a >= layer_b) throw std::invalid_argument("layer_a must precede layer_b");
  if (edge_weights.size() != layer_b - layer_a) {
    throw std::invalid_argument("one edge-weight matrix per adjacent pair required");
  }
  if (k <= 0.0) throw std::invalid_argument("coupling k must be positive");

  // Physical word lists per layer, and their positional indices.
  std::vector<std::map<NodeId, std::size_t>> pos(g.layers.size());
  std::vector<std::size_t> width(g.layers.size(), 0);
  for (std::size_t d = layer_a; d <= layer_b; ++d) {
    for (NodeId id : g.layers[d]) {
      if (g.node(id).leibnizian) pos[d][id] = width[d]++;
    }
  }
  for (std::size_t t = 0; t < edge_weights.size(); ++t) {
    if (static_cast<std::size_t>(edge_weights[t].rows()) != width[layer_a + t + 1] ||
        static_cast<std::size_t>(edge_weights[t].cols()) != width[layer_a + t]) {
      throw std::invalid_argument("edge-weight shape does not match layer widths");
    }
  }

  ComplexMatrix u = ComplexMatrix::Zero(width[layer_b], width[layer_a]);
  for (const auto& p : enumerate_physical_paths(g, layer_a, layer_b)) {
    double weight = 1.0;
    for (std::size_t t = 0; t + 1 < p.nodes.size(); ++t) {
      weight *= edge_weights[t](pos[layer_a + t + 1].at(p.nodes[t + 1]),
                                pos[layer_a + t].at(p.nodes[t]));
    }
    const double act = to_double(action(p, g));
    u(pos[layer_b].at(p.nodes.back()), pos[layer_a].at(p.nodes.front())) +=
        weight * std::exp(kImag * (gamma * act / k));
  }
  return u;
}

SMatrixSpec adjacent_smatrix_spec(const MultiwayGraph& g, std::size_t layer,
                                  const RealMatrix& weights, double k, double gamma) {
  const LayerSystem ls = layer_system(g, layer, layer + 1, true);
  RealMatrix masked = weights;
  for (Eigen::Index j = 0; j < masked.rows(); ++j) {
    for (Eigen::Index i = 0; i < masked.cols(); ++i) {
      if (!ls.connected(j, i)) masked(j, i) = 0.0;
    }
  }
  return make_smatrix_spec(ls, WeightMatrix(std::move(masked), ls.connected), k, gamma);
}

// --- weight solving --------------------------------------------------------

namespace {

bool is_permutation_pattern(const BoolMatrix& pattern) {
  for (Eigen::Index i = 0; i < pattern.cols(); ++i) {
    if (pattern.col(i).count() != 1) return false;
  }
  for (Eigen::Index j = 0; j < pattern.rows(); ++j) {
    if (pattern.row(j).count() > 1) return false;
  }
  return true;
}

bool is_full_2x2(const BoolMatrix& pattern) {
  return pattern.rows() == 2 && pattern.cols() == 2 && pattern.all();
}

RealMatrix mask_of(const BoolMatrix& pattern) {
  RealMatrix m = RealMatrix::Zero(pattern.rows(), pattern.cols());
  for (Eigen::Index j = 0; j < pattern.rows(); ++j) {
    for (Eigen::Index i = 0; i < pattern.cols(); ++i) {
      if (pattern(j, i)) m(j, i) = 1.0;
    }
  }
  return m;
}

// Backtracking gradient descent on f(w) = ||w^T w - I||_F^2 restricted to
// the support. Returns the final iterate.
RealMatrix descend(RealMatrix w, const RealMatrix& mask, const SolveOptions& opts) {
  const Eigen::Index n = w.cols();
  const RealMatrix id = RealMatrix::Identity(n, n);
  double lr = 0.1;
  double f = (w.transpose() * w - id).squaredNorm();
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (f <= 1e-20) break;
    RealMatrix gram = w.transpose() * w - id;
    RealMatrix grad = (4.0 * (w * gram)).cwiseProduct(mask);
    if (grad.squaredNorm() < 1e-32) break;
    double step = lr;
    RealMatrix next;
    double f_next = f;
    while (true) {
      next = w - step * grad;
      f_next = (next.transpose() * next - id).squaredNorm();
      if (f_next < f || step < 1e-18) break;
      step *= 0.5;
    }
    if (f_next >= f) break;  // no descent direction left at float resolution
    const bool stagnant = (f - f_next) <= opts.objective_tolerance * f;
    w = std::move(next);
    f = f_next;
    lr = std::min(step * 2.0, 1.0);
    if (stagnant && it > 50) break;
  }
  return w;
}

SolveResult numeric_solve(const BoolMatrix& pattern, const SolveOptions& opts) {
  const Eigen::Index m = pattern.rows();
  const Eigen::Index n = pattern.cols();
  const RealMatrix mask = mask_of(pattern);

  SolveResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    RealMatrix w(m, n);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        w(j, i) = pattern(j, i) ? uni(rng) : 0.0;
      }
    }
    w = descend(std::move(w), mask, opts);
    const double res = gram_residual(w);
    // Lowest residual wins; ties keep the earliest restart.
    if (res < best.residual) {
      best.residual = res;
      best.weights = WeightMatrix(w.cwiseProduct(mask), pattern);
    }
  }
  best.feasible = best.residual <= opts.feasibility_residual;
  return best;
}

}  // namespace

RealMatrix full_2x2_weights(double lambda) {
  if (lambda < -1.0 || lambda > 1.0) {
    throw std::invalid_argument("lambda must lie in [-1, 1]");
  }
  const double c = std::sqrt(1.0 - lambda * lambda);
  RealMatrix w(2, 2);
  w << c, lambda, -lambda, c;
  return w;
}

SolveResult solve_unitary_weights(const BoolMatrix& pattern, const SolveOptions& opts) {
  const Eigen::Index m = pattern.rows();
  const Eigen::Index n = pattern.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("pattern must be non-empty");

  if (is_permutation_pattern(pattern)) {
    SolveResult r;
    r.weights = unit_weights(pattern);
    r.residual = gram_residual(r.weights.entries);
    r.feasible = true;
    r.closed_form = true;
    return r;
  }
  if (is_full_2x2(pattern)) {
    SolveResult r;
    r.weights = WeightMatrix(full_2x2_weights(1.0 / std::sqrt(2.0)), pattern);
    r.residual = gram_residual(r.weights.entries);
    r.feasible = r.residual <= opts.feasibility_residual;
    r.closed_form = true;
    return r;
  }

  // Disjoint blocks solve independently: w^T w is block diagonal over the
  // connected components of the bipartite support.
  const auto blocks = tensor_components(pattern);
  if (blocks.size() > 1) {
    SolveResult out;
    out.weights = WeightMatrix(RealMatrix::Zero(m, n), pattern);
    out.residual = 0.0;
    out.feasible = true;
    out.closed_form = true;
    for (const auto& b : blocks) {
      if (b.in_indices.empty()) continue;  // isolated out-word: zero row only
      if (b.out_indices.empty()) {
        // Isolated in-word: its Gram diagonal entry can never reach 1.
        out.feasible = false;
        out.residual = std::max(out.residual, 1.0);
        continue;
      }
      BoolMatrix sub(b.out_indices.size(), b.in_indices.size());
      for (std::size_t j = 0; j < b.out_indices.size(); ++j) {
        for (std::size_t i = 0; i < b.in_indices.size(); ++i) {
          sub(j, i) = pattern(b.out_indices[j], b.in_indices[i]);
        }
      }
      SolveResult part = solve_unitary_weights(sub, opts);
      for (std::size_t j = 0; j < b.out_indices.size(); ++j) {
        for (std::size_t i = 0; i < b.in_indices.size(); ++i) {
          out.weights.entries(b.out_indices[j], b.in_indices[i]) =
              part.weights.entries(j, i);
        }
      }
      out.feasible = out.feasible && part.feasible;
      out.residual = std::max(out.residual, part.residual);
      out.closed_form = out.closed_form && part.closed_form;
    }
    return out;
  }

  return numeric_solve(pattern, opts);
}

bool mutual_interaction_check(const BoolMatrix& pattern) {
  if (pattern.rows() != pattern.cols()) {
    throw std::invalid_argument("mutual interaction check needs a square pattern");
  }
  for (Eigen::Index j = 0; j < pattern.rows(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (pattern(j, i) != pattern(i, j)) return false;
    }
  }
  return true;
}

long long free_param_count(long long n_in, long long m_out) {
  return m_out * n_in - n_in * (n_in + 1) / 2;
}

long long delta_m(long long n_in, long long m_out) {
  if (2 * m_out >= n_in + 1) return 0;
  return n_in % 2 == 0 ? n_in / 2 + 1 - m_out : (n_in + 1) / 2 - m_out;
}

ExtensionResult extend_for_unitarity(const WeightMatrix& w, long long dm, double tol) {
  if (dm < 0) throw std::invalid_argument("dm must be non-negative");
  const Eigen::Index m = w.entries.rows();
  const Eigen::Index n = w.entries.cols();

  RealMatrix gap = RealMatrix::Identity(n, n) - w.entries.transpose() * w.entries;
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(gap);
  const Eigen::VectorXd lam = eig.eigenvalues();  // ascending

  ExtensionResult res;
  res.min_rows_needed = (lam.array() > tol).count();
  const bool psd = lam.size() == 0 || lam.minCoeff() >= -tol;

  res.stacked = RealMatrix::Zero(m + dm, n);
  res.stacked.topRows(m) = w.entries;
  for (long long t = 0; t < dm && t < n; ++t) {
    const Eigen::Index idx = n - 1 - t;  // largest eigenvalues first
    const double l = std::max(lam(idx), 0.0);
    res.stacked.row(m + t) = std::sqrt(l) * eig.eigenvectors().col(idx).transpose();
  }
  res.residual = gram_residual(res.stacked);
  res.feasible = psd && res.min_rows_needed <= dm && res.residual <= tol;
  return res;
}

Eigen::Matrix3d euler_omega(double psi, double theta, double phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const double cps = std::cos(psi), sps = std::sin(psi);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double cph = std::cos(phi), sph = std::sin(phi);
  Eigen::Matrix3d w;
  w << cps * cph - cth * sph * sps, cps * sph + cth * cph * sps, sps * sth,
      -sps * cph - cth * sph * cps, -sps * sph + cth * cph * cps, cps * sth,
      sth * sph, -sth * cph, cth;
  return static_cast<double>(sign) * w;
}

Eigen::VectorXd diagonal_hamiltonian(const ComplexMatrix& u, double dt, double tol) {
  if (u.rows() != u.cols()) throw std::invalid_argument("matrix must be square");
  if (dt == 0.0) throw std::invalid_argument("dt must be nonzero");
  Eigen::VectorXd h(u.rows());
  for (Eigen::Index j = 0; j < u.rows(); ++j) {
    for (Eigen::Index i = 0; i < u.cols(); ++i) {
      if (i != j && std::abs(u(j, i)) > tol) {
        throw std::domain_error("matrix is not diagonal");
      }
    }
    if (std::abs(std::abs(u(j, j)) - 1.0) > tol) {
      throw std::domain_error("diagonal entries must have unit modulus");
    }
    h(j) = -std::arg(u(j, j)) / dt;
  }
  return h;
}

}  // namespace mwg
