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

#include "mwg/gates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mwg {

namespace {

constexpr Complex kImag{0.0, 1.0};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index ar = 0; ar < a.rows(); ++ar) {
    for (Eigen::Index ac = 0; ac < a.cols(); ++ac) {
      out.block(ar * b.rows(), ac * b.cols(), b.rows(), b.cols()) = a(ar, ac) * b;
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int count) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < count; ++i) out = kron(out, a);
  return out;
}

}  // namespace

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

ComplexMatrix pi8_gate() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::exp(kImag * (M_PI / 4.0));
  return t;
}

ComplexMatrix cnot() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
  return u;
}

ComplexMatrix swap_gate() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = u(1, 2) = u(2, 1) = u(3, 3) = 1.0;
  return u;
}

ComplexMatrix qutrit_swap() {
  ComplexMatrix u = ComplexMatrix::Zero(3, 3);
  u(0, 0) = u(1, 2) = u(2, 1) = 1.0;
  return u;
}

ComplexMatrix z_spider(int legs_in, int legs_out, double alpha) {
  if (legs_in < 1 || legs_out < 1) {
    throw std::invalid_argument("spiders need at least one leg per side");
  }
  const Eigen::Index rows = Eigen::Index(1) << legs_out;
  const Eigen::Index cols = Eigen::Index(1) << legs_in;
  ComplexMatrix z = ComplexMatrix::Zero(rows, cols);
  z(0, 0) = 1.0;
  z(rows - 1, cols - 1) = std::exp(kImag * alpha);
  return z;
}

ComplexMatrix x_spider(int legs_in, int legs_out, double alpha) {
  const ComplexMatrix h = hadamard();
  return kron_power(h, legs_out) * z_spider(legs_in, legs_out, alpha) *
         kron_power(h, legs_in);
}

ComplexMatrix x_spider_explicit(double alpha) {
  // |++><++| + e^{i alpha} |--><--|: entries (1 +- e^{i alpha})/4 with the
  // sign given by the Hamming parities of row and column index.
  const Complex p = (1.0 + std::exp(kImag * alpha)) / 4.0;
  const Complex q = (1.0 - std::exp(kImag * alpha)) / 4.0;
  ComplexMatrix x(4, 4);
  x << p, q, q, p,
       q, p, p, q,
       q, p, p, q,
       p, q, q, p;
  return x;
}

std::vector<GateCatalogEntry> gate_catalog(std::optional<double> alpha) {
  std::vector<GateCatalogEntry> cat;
  cat.push_back({"H", hadamard(), true, std::nullopt});
  cat.push_back({"pi8", pi8_gate(), true, std::nullopt});
  cat.push_back({"CNOT", cnot(), true, std::nullopt});
  cat.push_back({"SWAP", swap_gate(), true, std::nullopt});
  cat.push_back({"qutrit-swap", qutrit_swap(), true, std::nullopt});
  if (alpha) {
    cat.push_back({"Z-spider", z_spider(2, 2, *alpha), false, alpha});
    cat.push_back({"X-spider", x_spider(2, 2, *alpha), false, alpha});
  }
  return cat;
}

namespace {

// Phase fit on the largest catalog entry, then max-abs residual of
// U_p - phase * G with U_p(j, i) = u(rows[j], cols[i]).
struct FitResult {
  Complex phase{1.0, 0.0};
  double residual = 0.0;
};

FitResult fit_alignment(const ComplexMatrix& u, const ComplexMatrix& g,
                        const std::vector<int>& rows, const std::vector<int>& cols) {
  Eigen::Index bj = 0, bi = 0;
  double best = -1.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index i = 0; i < g.cols(); ++i) {
      if (std::abs(g(j, i)) > best) {
        best = std::abs(g(j, i));
        bj = j;
        bi = i;
      }
    }
  }
  FitResult fit;
  const Complex uref = u(rows[bj], cols[bi]);
  if (std::abs(uref) > 0.0 && best > 0.0) {
    fit.phase = uref / g(bj, bi);
    fit.phase /= std::abs(fit.phase);
  }
  double res = 0.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index i = 0; i < g.cols(); ++i) {
      res = std::max(res, std::abs(u(rows[j], cols[i]) - fit.phase * g(j, i)));
    }
  }
  fit.residual = res;
  return fit;
}

// Sorted nonzero-count signature used to skip hopeless permutations on
// larger matrices; permuting rows/columns cannot change it.
std::vector<int> row_support_counts(const ComplexMatrix& m, double eps) {
  std::vector<int> counts;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    int c = 0;
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      if (std::abs(m(j, i)) > eps) ++c;
    }
    counts.push_back(c);
  }
  return counts;
}

}  // namespace

std::vector<GateMatch> recognize_gate(const ComplexMatrix& u,
                                      const std::vector<GateCatalogEntry>& catalog,
                                      double tol) {
  std::vector<GateMatch> matches;
  for (const auto& entry : catalog) {
    if (entry.matrix.rows() != u.rows() || entry.matrix.cols() != u.cols()) continue;
    const Eigen::Index m = u.rows();
    const Eigen::Index n = u.cols();

    const bool pruned = m > 4 || n > 4;
    std::vector<int> u_row_sig, g_row_sig;
    if (pruned) {
      u_row_sig = row_support_counts(u, 2.0 * tol);
      g_row_sig = row_support_counts(entry.matrix, 0.0);
      auto us = u_row_sig, gs = g_row_sig;
      std::sort(us.begin(), us.end());
      std::sort(gs.begin(), gs.end());
      if (us != gs) continue;
    }

    std::optional<GateMatch> best;
    std::vector<int> rows(m), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      if (pruned) {
        bool ok = true;
        for (Eigen::Index j = 0; j < m; ++j) {
          if (u_row_sig[rows[j]] != g_row_sig[j]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      std::iota(cols.begin(), cols.end(), 0);
      do {
        const FitResult fit = fit_alignment(u, entry.matrix, rows, cols);
        if (fit.residual <= tol &&
            (!best || fit.residual < best->residual)) {
          best = GateMatch{entry.name, rows, cols, fit.phase, fit.residual};
        }
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));

    if (best) matches.push_back(std::move(*best));
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const GateMatch& a, const GateMatch& b) {
                     return a.residual < b.residual;
                   });
  return matches;
}

std::vector<TensorBlock> tensor_components(const BoolMatrix& connected) {
  const int m = static_cast<int>(connected.rows());
  const int n = static_cast<int>(connected.cols());
  std::vector<int> parent(n + m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (connected(j, i)) unite(i, n + j);  // in-words first, out-words offset by n
    }
  }

  std::map<int, TensorBlock> by_root;
  for (int i = 0; i < n; ++i) by_root[find(i)].in_indices.push_back(i);
  for (int j = 0; j < m; ++j) by_root[find(n + j)].out_indices.push_back(j);

  std::vector<TensorBlock> blocks;
  for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end(), [](const TensorBlock& a, const TensorBlock& b) {
    const int ai = a.in_indices.empty() ? std::numeric_limits<int>::max() : a.in_indices.front();
    const int bi = b.in_indices.empty() ? std::numeric_limits<int>::max() : b.in_indices.front();
    if (ai != bi) return ai < bi;
    const int ao = a.out_indices.empty() ? std::numeric_limits<int>::max() : a.out_indices.front();
    const int bo = b.out_indices.empty() ? std::numeric_limits<int>::max() : b.out_indices.front();
    return ao < bo;
  });
  return blocks;
}

}  // namespace mwg
