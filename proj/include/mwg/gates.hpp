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
#include <optional>
#include <string>
#include <vector>

namespace mwg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Reference gates and ZX generators, plus recognition of dense matrices
// against them up to word permutations and a global phase.

struct GateCatalogEntry {
  std::string name;
  ComplexMatrix matrix;
  bool unitary = true;
  std::optional<double> alpha;  // spider parameter when applicable
};

ComplexMatrix hadamard();
ComplexMatrix pi8_gate();  // diag(1, e^{i pi/4})
ComplexMatrix cnot();
ComplexMatrix swap_gate();
ComplexMatrix qutrit_swap();  // |0> -> |0>, |1> <-> |2>

// Z-spider with legs_in input and legs_out output legs:
// |0..0><0..0| + e^{i alpha} |1..1><1..1|, a 2^legs_out x 2^legs_in map.
ComplexMatrix z_spider(int legs_in, int legs_out, double alpha);

// X-spider: the Z-spider conjugated by a Hadamard on every leg.
ComplexMatrix x_spider(int legs_in, int legs_out, double alpha);

// Closed form of the two-in/two-out X-spider (entries (1 +- e^{i alpha})/4).
ComplexMatrix x_spider_explicit(double alpha);

// The reference unitaries (Hadamard, pi/8, CNOT, SWAP, qutrit swap); when
// alpha is given, the two-leg Z- and X-spiders at that parameter are
// appended (they are not unitary).
std::vector<GateCatalogEntry> gate_catalog(std::optional<double> alpha = std::nullopt);

// A match U(row_perm[j], col_perm[i]) ~= global_phase * G(j, i), with
// residual the max-abs deviation after the phase fit.
struct GateMatch {
  std::string gate;
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  Complex global_phase{1.0, 0.0};
  double residual = 0.0;
};

// Best permutation/phase alignment per same-shape catalog entry with
// residual <= tol; entries that cannot be aligned are absent. The search is
// exhaustive up to dimension 4 and support-pattern-pruned beyond.
std::vector<GateMatch> recognize_gate(const ComplexMatrix& u,
                                      const std::vector<GateCatalogEntry>& catalog,
                                      double tol = 1e-9);

// Connected components of the bipartite in/out connectivity; more than one
// component means the S-matrix factors as a tensor product of blocks.
struct TensorBlock {
  std::vector<int> in_indices;
  std::vector<int> out_indices;
};

std::vector<TensorBlock> tensor_components(const BoolMatrix& connected);

}  // namespace mwg
