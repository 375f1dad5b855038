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

// Acceptance suite: one self-contained check per release criterion, each
// printing a PASS/FAIL line with its runtime. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mwg/engine.hpp"
#include "mwg/gates.hpp"
#include "mwg/paths.hpp"
#include "mwg/smatrix.hpp"
#include "mwg/stats.hpp"
#include "mwg/strcore.hpp"
#include "oracles.hpp"

using namespace mwg;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > budget_seconds) {
    ok = false;
    note += " (over budget)";
  }
  std::printf("[%s] %02d %s (%.2f s / %.0f s)%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), seconds, budget_seconds, note.c_str());
  if (!ok) ++failures;
}

bool check(bool cond, const char* what) {
  if (!cond) std::printf("       failed: %s\n", what);
  return cond;
}

const Alphabet kAB{"AB"};
const Alphabet kABC{"ABC"};
const Alphabet kABCD{"ABCD"};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// 01: exact neighborhood, profile and variety values of the two reference
// six-letter words.
bool exact_reference_words() {
  bool ok = true;
  const CyclicString good("AABABB", kAB);
  ok &= check(variety(good) == Rational(4), "variety(AABABB) == 4");
  ok &= check(indifference_profile(good).a == std::vector<std::size_t>{2, 2, 1, 1, 2, 2},
              "a-vector of AABABB");
  ok &= check(!is_leibnizian(CyclicString("AAABBB", kAB)), "AAABBB not Leibnizian");
  const std::vector<std::string> expected{"BBAAB", "BAABA", "AABAB",
                                          "ABABB", "BABBA", "ABBAA"};
  for (std::size_t i = 1; i <= 6; ++i) {
    ok &= check(neighborhood(good, i, 2) == expected[i - 1], "radius-2 neighborhood");
  }
  return ok;
}

// 02: the two length-12 seed words have variety 10; one rewriting step under
// {BA->AB, DC->CD} with rotation identity yields exactly two Leibnizian
// out-words of variety 12, fully connected to both seeds.
bool length12_pair_system() {
  bool ok = true;
  const CyclicString in1("AABBDCABABDC", kABCD);
  const CyclicString in2("ABABCDABABDC", kABCD);
  ok &= check(variety(in1) == Rational(10), "variety(AABBDCABABDC) == 10");
  ok &= check(variety(in2) == Rational(10), "variety(ABABCDABABDC) == 10");

  MultiwayOptions opt;
  opt.canon_mode = CanonMode::rotation;
  opt.max_depth = 1;
  const auto g = build_multiway({in1, in2},
                                {parse_rule("BA->AB"), parse_rule("DC->CD")}, opt);
  const auto ls = layer_system(g, 0, 1);
  ok &= check(ls.n_in() == 2 && ls.m_out() == 2, "2x2 physical system");
  ok &= check(ls.connected.all(), "fully connected");
  for (NodeId id : ls.out_words) {
    ok &= check(g.node(id).variety == Rational(12), "out-word variety == 12");
  }
  return ok;
}

// 03: every Leibnizian word within two rewriting steps of BADCBADC has
// variety exactly 8.
bool badc_varieties() {
  const auto g = build_multiway(CyclicString("BADCBADC", kABCD),
                                {parse_rule("BA->AB"), parse_rule("DC->CD")},
                                MultiwayOptions{.max_depth = 2});
  bool ok = check(g.layers.size() == 3, "depth-2 graph");
  std::size_t leib = 0;
  for (const auto& [id, node] : g.nodes) {
    if (node.leibnizian) {
      ++leib;
      ok &= check(node.variety == Rational(8), "Leibnizian variety == 8");
    }
  }
  ok &= check(leib == 8, "eight Leibnizian words");
  return ok;
}

// 04: fractal words are Leibnizian for n in 2..8 on two- and three-letter
// alphabets; the two-letter n=1 word is not.
bool fractal_words_leibnizian() {
  bool ok = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    ok &= check(is_leibnizian(fractal_word(kAB, n)), "two-letter fractal word");
    ok &= check(is_leibnizian(fractal_word(kABC, n)), "three-letter fractal word");
  }
  ok &= check(!is_leibnizian(fractal_word(kAB, 1)), "AB not Leibnizian");
  return ok;
}

// 05: the max-radius shortcut agrees with the full radius scan on every
// two-letter string of length 4..14.
bool shortcut_equivalence() {
  std::size_t mismatches = 0;
  for (std::size_t n = 4; n <= 14; ++n) {
    for (std::size_t bits = 0; bits < (1u << n); ++bits) {
      std::string w;
      w.reserve(n);
      for (std::size_t i = 0; i < n; ++i) w.push_back(bits & (1u << i) ? 'B' : 'A');
      if (is_leibnizian(CyclicString(w, kAB)) != oracle::leibnizian_full_scan(w)) {
        ++mismatches;
      }
    }
  }
  return check(mismatches == 0, "0 mismatches");
}

// 06: the sorting system reaches an empty frontier; its final word is fully
// sorted within rule reach.
bool sorting_terminates() {
  const auto g = build_multiway(CyclicString("BBBAAACC", kABC),
                                {parse_rule("BA->AB"), parse_rule("CB->BC")});
  bool ok = check(!g.truncated, "no truncation");
  ok &= check(g.layers.back().size() == 1, "single final word");
  const CyclicString last(g.node(g.layers.back().front()).word, kABC);
  ok &= check(last.str() == "AAABBBCC", "final word sorted");
  ok &= check(find_matches(last, parse_rule("BA->AB"), MatchMode::linear).empty() &&
                  find_matches(last, parse_rule("CB->BC"), MatchMode::linear).empty(),
              "no rule matches remain");
  return ok;
}

// 07: weight algebra: the fully interacting 2x2 family, composition against
// the direct multi-layer build, feasibility by shape, and the parameter
// counting formulas.
bool smatrix_algebra() {
  bool ok = true;

  // (a) eleven lambda samples of the full 2x2 family.
  const auto ls2 = make_layer_system(BoolMatrix::Constant(2, 2, true),
                                     {Rational(10), Rational(12)});
  for (int i = 0; i <= 10; ++i) {
    const double lambda = -1.0 + 0.2 * static_cast<double>(i);
    const WeightMatrix w(full_2x2_weights(lambda), ls2.connected);
    const auto u = build_smatrix(ls2, w, 1.0);
    ok &= check(max_abs(u.adjoint() * u - ComplexMatrix::Identity(2, 2)) <= 1e-9,
                "family member unitary");
  }

  // (b) composition == direct build over >= 100 randomized product-rule
  // weight draws on two generated systems (layer widths up to 6).
  const auto sorting = build_multiway(CyclicString("BBBAAACC", kABC),
                                      {parse_rule("BA->AB"), parse_rule("CB->BC")});
  const auto chain = build_multiway(CyclicString("AABAABBABAB", kAB),
                                    {parse_rule("BA->AB")},
                                    MultiwayOptions{.max_depth = 4});
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  int trials = 0;
  auto physical_width = [](const MultiwayGraph& g, std::size_t layer) {
    std::size_t w = 0;
    for (NodeId id : g.layers[layer]) {
      if (g.node(id).leibnizian) ++w;
    }
    return w;
  };
  for (int t = 0; t < 120; ++t) {
    const MultiwayGraph& g = t % 2 ? sorting : chain;
    const std::size_t base = t % 2 ? 2 + (t / 2) % 4 : (t / 2) % 3;
    const std::size_t na = physical_width(g, base);
    const std::size_t nb = physical_width(g, base + 1);
    const std::size_t nc = physical_width(g, base + 2);
    RealMatrix w1(nb, na), w2(nc, nb);
    for (Eigen::Index r = 0; r < w1.rows(); ++r)
      for (Eigen::Index c = 0; c < w1.cols(); ++c) w1(r, c) = uni(rng);
    for (Eigen::Index r = 0; r < w2.rows(); ++r)
      for (Eigen::Index c = 0; c < w2.cols(); ++c) w2(r, c) = uni(rng);
    const auto u1 = adjacent_smatrix_spec(g, base, w1, 1.0).dense();
    const auto u2 = adjacent_smatrix_spec(g, base + 1, w2, 1.0).dense();
    const auto direct = build_multilayer_smatrix(g, base, base + 2, {w1, w2}, 1.0);
    ok &= check(max_abs(compose(u2, u1) - direct) <= 1e-12, "compose == direct");
    ++trials;
  }
  ok &= check(trials >= 100, ">= 100 composition trials");

  // (c) feasibility by shape for fully connected rectangles.
  SolveOptions sopt;
  sopt.restarts = 32;
  const auto wide = solve_unitary_weights(BoolMatrix::Constant(3, 2, true), sopt);
  ok &= check(wide.feasible && wide.residual <= 1e-9, "2-in/3-out feasible");
  const auto narrow = solve_unitary_weights(BoolMatrix::Constant(2, 3, true), sopt);
  ok &= check(!narrow.feasible && narrow.residual >= 1e-3, "3-in/2-out infeasible");

  // (d) parameter counting.
  ok &= check(free_param_count(4, 4) == 6, "free_param_count(4,4) == 6");
  for (long long n = 2; n <= 8; ++n) {
    for (long long m = 1; m <= 4; ++m) {
      const long long expect =
          2 * m >= n + 1 ? 0 : (n % 2 == 0 ? n / 2 + 1 - m : (n + 1) / 2 - m);
      ok &= check(delta_m(n, m) == expect, "delta_m parity formula");
    }
  }
  return ok;
}

// 08: gate recognition on the reference instances.
bool gate_recognition() {
  bool ok = true;
  const auto catalog = gate_catalog();
  auto has = [&](const std::vector<GateMatch>& ms, const std::string& name,
                 double tol) {
    for (const auto& m : ms) {
      if (m.gate == name && m.residual <= tol) return true;
    }
    return false;
  };

  // Fully interacting 2x2 at theta = -pi/4 (equal in-varieties).
  const auto ls2 = make_layer_system(BoolMatrix::Constant(2, 2, true),
                                     {Rational(10), Rational(10)});
  const WeightMatrix w(full_2x2_weights(1.0 / std::sqrt(2.0)), ls2.connected);
  const auto u = build_smatrix(ls2, w, 1.0);
  ok &= check(has(recognize_gate(u, catalog, 1e-9), "H", 1e-9), "Hadamard match");

  // Non-interacting phase gate.
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::exp(Complex(0, M_PI / 4.0));
  ok &= check(has(recognize_gate(t, catalog, 1e-9), "pi8", 1e-9), "pi/8 match");

  // Permutation connectivity 1->1, 2->2, 3->4, 4->3 with unit weights.
  BoolMatrix perm(4, 4);
  perm.setConstant(false);
  perm(0, 0) = perm(1, 1) = perm(3, 2) = perm(2, 3) = true;
  const auto ls4 = make_layer_system(
      perm, {Rational(8), Rational(8), Rational(8), Rational(8)});
  const auto cnot_u = build_smatrix(ls4, unit_weights(perm), 1.0);
  ok &= check(has(recognize_gate(cnot_u, catalog, 1e-9), "CNOT", 1e-9), "CNOT match");

  // Swapped middle words 1->1, 2->3, 3->2, 4->4.
  BoolMatrix mid(4, 4);
  mid.setConstant(false);
  mid(0, 0) = mid(2, 1) = mid(1, 2) = mid(3, 3) = true;
  const auto ls4b = make_layer_system(
      mid, {Rational(8), Rational(8), Rational(8), Rational(8)});
  const auto swap_u = build_smatrix(ls4b, unit_weights(mid), 1.0);
  ok &= check(has(recognize_gate(swap_u, catalog, 1e-9), "SWAP", 1e-9), "SWAP match");

  // Exhaustive sign enumeration on the qutrit solution support.
  const std::vector<std::pair<int, int>> support{{0, 0}, {1, 2}, {2, 1}};
  int solutions = 0;
  for (int signs = 0; signs < 8; ++signs) {
    ComplexMatrix q = ComplexMatrix::Zero(3, 3);
    for (int b = 0; b < 3; ++b) {
      q(support[b].first, support[b].second) = (signs >> b) & 1 ? -1.0 : 1.0;
    }
    if (max_abs(q.adjoint() * q - ComplexMatrix::Identity(3, 3)) == 0.0) ++solutions;
  }
  ok &= check(solutions == 8, "eight qutrit sign solutions");
  ok &= check(has(recognize_gate(qutrit_swap(), catalog, 1e-9), "qutrit-swap", 1e-9),
              "qutrit swap match");
  return ok;
}

// 09: the explicit X-spider closed form equals the Hadamard-conjugated
// Z-spider.
bool spider_identity() {
  bool ok = true;
  for (double alpha : {0.0, M_PI / 4.0, M_PI / 2.0, M_PI}) {
    ok &= check(max_abs(x_spider(2, 2, alpha) - x_spider_explicit(alpha)) <= 1e-12,
                "X(alpha) identity");
  }
  return ok;
}

// 10: occupation statistics over the exhaustive two-letter ensembles.
bool fermi_statistics() {
  bool ok = true;
  for (std::size_t n = 8; n <= 11; ++n) {
    const auto rep = ensemble_report(kAB, n, 1.0, 1.0);

    double sum = 0.0;
    for (const auto& row : rep.rows) {
      ok &= check(row.n_expected >= 0.0 && row.n_expected <= 1.0, "occupation range");
      sum += row.n_expected;
    }
    ok &= check(std::abs(sum - static_cast<double>(n)) <= 1e-10, "sum rule");

    // Independent brute-force double loop: accumulate view weights directly
    // from the oracle's profile/window primitives.
    std::vector<std::string> words;
    for (std::size_t bits = 0; bits < (1u << n); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(bits & (1u << i) ? 'B' : 'A');
      if (oracle::leibnizian_full_scan(w)) words.push_back(std::move(w));
    }
    std::map<std::pair<std::string, std::size_t>, double> acc;
    double z = 0.0;
    for (const auto& w : words) {
      const double boltz = std::exp(-oracle::variety_double(w));
      z += boltz;
      for (const auto& v : oracle::views(w)) acc[v] += boltz;
    }
    ok &= check(acc.size() == rep.rows.size(), "view inventory agrees");
    for (const auto& row : rep.rows) {
      const auto it = acc.find({row.view.sequence, row.view.radius});
      if (it == acc.end()) {
        ok = check(false, "missing oracle view");
        continue;
      }
      ok &= check(std::abs(row.n_expected - it->second / z) <= 1e-12,
                  "oracle occupation agreement");
    }
  }

  // Idealized independent-level model: deviation from the closed-form
  // prediction shrinks monotonically as the level count doubles.
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t m : {10, 20, 40, 80}) {
    std::vector<double> energies;
    for (std::size_t i = 0; i < m; ++i) {
      energies.push_back(1.0 / static_cast<double>(1 + i % 5));
    }
    const std::size_t n = m / 2;
    const auto occ = idealized_fd_occupations(energies, n, 1.0);
    std::vector<double> xs;
    for (double e : energies) xs.push_back(std::exp(-e));
    auto esp = [&](std::size_t kk) {
      std::vector<double> e(kk + 1, 0.0);
      e[0] = 1.0;
      for (double x : xs) {
        for (std::size_t j = std::min(kk, xs.size()); j > 0; --j) e[j] += x * e[j - 1];
      }
      return e[kk];
    };
    const double mu = std::log(esp(n - 1) / esp(n));
    double dev = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      dev = std::max(dev, std::abs(occ[i] - fd_prediction(
                                                1 + i % 5, 1.0, 1.0, mu)));
    }
    ok &= check(dev <= prev, "deviation non-increasing");
    prev = dev;
  }
  return ok;
}

// 11: conditional entropy and variety correlate positively over a seeded
// random sample.
bool entropy_variety_correlation() {
  const auto samples = sample_leibnizian(kAB, 8, 20, 200, 1);
  const auto rep = entropy_variety_scan(samples);
  return check(rep.pearson_r.has_value() && *rep.pearson_r > 0.1, "pearson r > 0.1");
}

}  // namespace

int main() {
  criterion(1, "exact analysis of the reference six-letter words", 1.0,
            exact_reference_words);
  criterion(2, "length-12 pair system: varieties 10 -> 12, fully connected 2x2", 1.0,
            length12_pair_system);
  criterion(3, "BADCBADC depth-2 Leibnizian varieties are all 8", 1.0,
            badc_varieties);
  criterion(4, "fractal words Leibnizian for n=2..8, two-letter n=1 is not", 10.0,
            fractal_words_leibnizian);
  criterion(5, "max-radius shortcut == full scan on all 2-letter words N=4..14", 60.0,
            shortcut_equivalence);
  criterion(6, "sorting system terminates at the sorted word", 1.0,
            sorting_terminates);
  criterion(7, "weight algebra: 2x2 family, composition, feasibility, counts", 60.0,
            smatrix_algebra);
  criterion(8, "gate recognition: H, pi/8, CNOT, SWAP, qutrit signs", 10.0,
            gate_recognition);
  criterion(9, "X-spider equals the Hadamard-conjugated Z-spider", 1.0,
            spider_identity);
  criterion(10, "occupation statistics: range, sum rule, oracle, convergence", 300.0,
            fermi_statistics);
  criterion(11, "entropy-variety correlation is positive", 120.0,
            entropy_variety_correlation);

  if (failures == 0) {
    std::printf("all %d criteria passed\n", 11);
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
