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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "mwg/engine.hpp"
#include "mwg/paths.hpp"
#include "mwg/rational.hpp"

namespace mwg {

// Transition matrices between multiway layers: support-constrained weight
// solving for (semi-)unitarity, composition, and unitarity restoration.
//
// Conventions: an S-matrix between n in-words and m out-words is m x n;
// entry (j, i) is the amplitude from in-word i to out-word j, a sum of
// weight * exp(i * gamma * S(path) / k) over connecting physical paths.

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// One connecting physical path with its exact action.
struct PathTerm {
  Path path;
  Rational action;
};

// Connectivity of an (in-layer, out-layer) pair, with the physical paths
// joining each pair of words. Entries with connected(j, i) == false are
// forced to zero in any S-matrix built on the system.
struct LayerSystem {
  std::vector<NodeId> in_words;
  std::vector<NodeId> out_words;
  std::vector<Rational> in_varieties;
  BoolMatrix connected;                             // m x n
  std::vector<std::vector<std::vector<PathTerm>>> paths;  // [j][i]

  std::size_t n_in() const { return in_words.size(); }
  std::size_t m_out() const { return out_words.size(); }

  // The action shared by all paths joining in-word i to out-word j;
  // nullopt when disconnected or when the connecting paths disagree
  // (entries are then kept per-path and need the multilayer build).
  std::optional<Rational> uniform_action(std::size_t j, std::size_t i) const;

  bool has_zero_row() const;
  bool has_zero_col() const;
};

// In/out word lists in deterministic layer order; connected(j, i) true iff
// a physical path joins in-word i to out-word j. restrict_physical limits
// the word lists to Leibnizian nodes (connectivity is always via physical
// paths, so non-Leibnizian words carry zero rows/columns when kept).
LayerSystem layer_system(const MultiwayGraph& g, std::size_t layer_a,
                         std::size_t layer_b, bool restrict_physical = true);

// Synthetic adjacent-style system from a connectivity pattern and the
// in-word varieties; word ids are 0..n-1 and 0..m-1.
LayerSystem make_layer_system(const BoolMatrix& connected,
                              const std::vector<Rational>& in_varieties);

// Real weights constrained to a support mask; entries are zero outside it.
struct WeightMatrix {
  RealMatrix entries;
  BoolMatrix support;

  WeightMatrix() = default;
  WeightMatrix(RealMatrix e, BoolMatrix s);

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

// All-ones weights on the given support.
WeightMatrix unit_weights(const BoolMatrix& support);

// Dense S-matrix U(j, i) = w(j, i) * exp(i * gamma * S_ji / k) with S_ji the
// uniform accumulated action of (j, i). Throws on support outside the
// connectivity and on entries whose paths disagree in action (use
// build_multilayer_smatrix with per-edge weights for those).
ComplexMatrix build_smatrix(const LayerSystem& ls, const WeightMatrix& w, double k,
                            double gamma = 1.0);

// Factored form of an S-matrix whose phases are uniform per column, as for
// adjacent layers where S_i = -gamma * variety(in_i): the dense matrix is
// exactly weights * diag(phases).
struct SMatrixSpec {
  WeightMatrix weights;
  Eigen::VectorXcd phases;  // unit modulus, one per column
  double k = 1.0;

  ComplexMatrix dense() const;
};

SMatrixSpec make_smatrix_spec(const LayerSystem& ls, const WeightMatrix& w, double k,
                              double gamma = 1.0);

// Matrix product with an explicit inner-dimension check.
ComplexMatrix compose(const ComplexMatrix& u2, const ComplexMatrix& u1);

// Direct build across several layers: edge_weights[t] holds the weights of
// the adjacent pair (layer_a+t, layer_a+t+1), indexed over the physical
// word lists of those layers; the weight of a path is the product of its
// edge weights.
ComplexMatrix build_multilayer_smatrix(const MultiwayGraph& g, std::size_t layer_a,
                                       std::size_t layer_b,
                                       const std::vector<RealMatrix>& edge_weights,
                                       double k, double gamma = 1.0);

// Factored S-matrix of the adjacent pair (layer, layer+1) with the given
// weights over its physical connectivity.
SMatrixSpec adjacent_smatrix_spec(const MultiwayGraph& g, std::size_t layer,
                                  const RealMatrix& weights, double k,
                                  double gamma = 1.0);

// --- weight solving -------------------------------------------------------

struct SolveOptions {
  int restarts = 32;
  int max_iterations = 20000;
  double feasibility_residual = 1e-9;  // max-abs of w^T w - I
  double objective_tolerance = 1e-12;  // relative stagnation threshold
  std::uint64_t seed = 0x6d7767;
};

struct SolveResult {
  bool feasible = false;
  WeightMatrix weights;
  double residual = 0.0;  // max-abs of w^T w - I at the best candidate
  bool closed_form = false;
};

// Real weights on the support with orthonormal columns (w^T w = I_n) when
// feasible. Permutation patterns, the full 2x2 pattern and block-diagonal
// compositions of those are solved in closed form; anything else by
// multi-start gradient descent on ||w^T w - I||_F^2. Infeasible is a value
// carrying the best residual found, not a fault.
SolveResult solve_unitary_weights(const BoolMatrix& pattern,
                                  const SolveOptions& opts = {});

// The one-parameter family of fully supported 2x2 semi-orthogonal weights,
// [[sqrt(1-l^2), l], [-l, sqrt(1-l^2)]] for l in [-1, 1].
RealMatrix full_2x2_weights(double lambda);

// True iff the square pattern is symmetric. One-sided interactions force
// the corresponding off-diagonal entries of any unitary solution to vanish;
// used as a pre-solve warning, not a hard precondition.
bool mutual_interaction_check(const BoolMatrix& pattern);

// mn - n(n+1)/2 free parameters left after semi-unitarity; negative values
// report the parameter deficit.
long long free_param_count(long long n_in, long long m_out);

// Minimum auxiliary out-words 2(m+dm) >= n+1 asks for: n even -> n/2+1-m,
// n odd -> (n+1)/2-m, and 0 when no extension is needed.
long long delta_m(long long n_in, long long m_out);

struct ExtensionResult {
  bool feasible = false;
  RealMatrix stacked;            // (m + dm) x n
  double residual = 0.0;         // max-abs of stacked^T stacked - I
  long long min_rows_needed = 0;  // rank of I - w^T w
};

// Stacks dm auxiliary rows under the pinned weights w and solves the joint
// semi-unitarity condition in closed form: the auxiliary block is a
// square-root factor of I - w^T w. Infeasible when that matrix is not psd
// or needs more than dm rows (min_rows_needed reports the true minimum).
ExtensionResult extend_for_unitarity(const WeightMatrix& w, long long dm,
                                     double tol = 1e-9);

// Euler-angle parameterization of O(3): the SO(3) rotation for angles
// (psi, theta, phi) times sign (+1 or -1).
Eigen::Matrix3d euler_omega(double psi, double theta, double phi, int sign);

// Hamiltonian of a diagonal time-evolution step U = exp(-i H dt):
// H_ii = -arg(U_ii)/dt. Throws when U is not diagonal-unitary within tol.
Eigen::VectorXd diagonal_hamiltonian(const ComplexMatrix& u, double dt,
                                     double tol = 1e-9);

}  // namespace mwg
