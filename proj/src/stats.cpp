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

#include "mwg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "mwg/paths.hpp"  // TruncationError

namespace mwg {

std::vector<CyclicString> enumerate_leibnizian(const Alphabet& alphabet, std::size_t n,
                                               CanonMode mode,
                                               std::size_t max_candidates) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  const std::size_t nu = alphabet.size();
  double space = std::pow(static_cast<double>(nu), static_cast<double>(n));
  if (space > static_cast<double>(max_candidates)) {
    throw TruncationError("candidate space " + std::to_string(space) +
                          " exceeds cap of " + std::to_string(max_candidates));
  }

  std::vector<CyclicString> out;
  std::vector<std::size_t> digits(n, 0);
  std::string word(n, alphabet.letter(0));
  while (true) {
    for (std::size_t i = 0; i < n; ++i) word[i] = alphabet.letter(digits[i]);
    CyclicString s(word, alphabet);
    // One representative per canon class: keep the word equal to its own
    // canonical form (the class minimum), so the scan stays deduplicated
    // and ascending.
    if (canonicalize(s, mode).str() == word && is_leibnizian(s)) {
      out.push_back(std::move(s));
    }
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == nu) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<View> views_of(const CyclicString& s) {
  if (!is_leibnizian(s)) {
    throw std::domain_error("views are defined for Leibnizian strings only");
  }
  const auto prof = indifference_profile(s);
  std::vector<View> views;
  views.reserve(s.size());
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const std::size_t a = prof.a[i - 1];
    views.push_back(View{neighborhood(s, i, a), a});
  }
  return views;
}

namespace {

double boltzmann(const CyclicString& s, double beta, double gamma) {
  return std::exp(-beta * gamma * to_double(variety(s)));
}

}  // namespace

double partition_function(const std::vector<CyclicString>& strings, double beta,
                          double gamma) {
  if (strings.empty()) throw std::domain_error("partition function of an empty ensemble");
  double z = 0.0;
  for (const auto& s : strings) z += boltzmann(s, beta, gamma);
  return z;
}

double occupation_expectation(const View& view, const std::vector<CyclicString>& strings,
                              double beta, double gamma) {
  if (strings.empty()) throw std::domain_error("occupation over an empty ensemble");
  double z = 0.0;
  double acc = 0.0;
  for (const auto& s : strings) {
    const double w = boltzmann(s, beta, gamma);
    z += w;
    const auto views = views_of(s);
    if (std::find(views.begin(), views.end(), view) != views.end()) acc += w;
  }
  return acc / z;
}

double chemical_potential(const Alphabet& alphabet, std::size_t n, double beta,
                          double gamma, CanonMode mode) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (n < 2) throw std::invalid_argument("chemical potential needs length >= 2");
  const auto ens_n = enumerate_leibnizian(alphabet, n, mode);
  const auto ens_n1 = enumerate_leibnizian(alphabet, n - 1, mode);
  if (ens_n.empty() || ens_n1.empty()) {
    throw std::domain_error("empty ensemble at length " +
                            std::to_string(ens_n.empty() ? n : n - 1));
  }
  return std::log(partition_function(ens_n1, beta, gamma) /
                  partition_function(ens_n, beta, gamma)) /
         beta;
}

double fd_prediction(std::size_t radius, double beta, double gamma, double mu) {
  if (radius == 0) throw std::invalid_argument("view radius must be >= 1");
  return 1.0 / (std::exp(beta * (gamma / static_cast<double>(radius) - mu)) + 1.0);
}

namespace {

// Elementary symmetric polynomials e_0..e_k of xs.
std::vector<double> elementary_symmetric(const std::vector<double>& xs, std::size_t k) {
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (double x : xs) {
    for (std::size_t j = std::min(k, xs.size()); j > 0; --j) {
      e[j] += x * e[j - 1];
    }
  }
  return e;
}

}  // namespace

std::vector<double> idealized_fd_occupations(const std::vector<double>& energies,
                                             std::size_t n, double beta) {
  const std::size_t m = energies.size();
  if (n > m) throw std::invalid_argument("occupancy cannot exceed the level count");
  std::vector<double> xs;
  xs.reserve(m);
  for (double e : energies) xs.push_back(std::exp(-beta * e));

  const double zn = elementary_symmetric(xs, n)[n];
  std::vector<double> occ(m, 0.0);
  if (n == 0) return occ;
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<double> rest;
    rest.reserve(m - 1);
    for (std::size_t t = 0; t < m; ++t) {
      if (t != s) rest.push_back(xs[t]);
    }
    occ[s] = xs[s] * elementary_symmetric(rest, n - 1)[n - 1] / zn;
  }
  return occ;
}

EnsembleReport ensemble_report(const Alphabet& alphabet, std::size_t n, double beta,
                               double gamma, CanonMode mode) {
  EnsembleReport rep;
  rep.length = n;
  rep.beta = beta;
  rep.gamma = gamma;
  rep.canon_mode = mode;

  const auto strings = enumerate_leibnizian(alphabet, n, mode);
  if (strings.empty()) throw std::domain_error("empty ensemble at length " + std::to_string(n));
  rep.z_n = partition_function(strings, beta, gamma);

  if (n >= 2) {
    const auto shorter = enumerate_leibnizian(alphabet, n - 1, mode);
    if (!shorter.empty()) {
      rep.z_nminus1 = partition_function(shorter, beta, gamma);
      rep.mu = std::log(*rep.z_nminus1 / rep.z_n) / beta;
    }
  }

  // Single pass: accumulate per-view Boltzmann weight.
  std::map<View, double> acc;
  for (const auto& s : strings) {
    const double w = boltzmann(s, beta, gamma);
    for (const auto& v : views_of(s)) acc[v] += w;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [view, weight] : acc) {
    EnsembleReport::Row row;
    row.view = view;
    row.n_expected = weight / rep.z_n;
    row.fd_predicted = rep.mu ? fd_prediction(view.radius, beta, gamma, *rep.mu) : nan;
    rep.rows.push_back(std::move(row));
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const EnsembleReport::Row& a, const EnsembleReport::Row& b) {
              return std::tie(a.view.radius, a.view.sequence) <
                     std::tie(b.view.radius, b.view.sequence);
            });
  return rep;
}

std::vector<CyclicString> sample_leibnizian(const Alphabet& alphabet,
                                            std::size_t len_min, std::size_t len_max,
                                            std::size_t count, std::uint64_t seed) {
  if (len_min < 3 || len_min > len_max) {
    throw std::invalid_argument("need 3 <= len_min <= len_max");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(len_min, len_max);
  std::uniform_int_distribution<std::size_t> letter_dist(0, alphabet.size() - 1);

  std::vector<CyclicString> out;
  out.reserve(count);
  const std::size_t max_attempts = count * 100000 + 1000;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("rejection sampling exceeded the attempt budget");
    }
    const std::size_t len = len_dist(rng);
    std::string word(len, alphabet.letter(0));
    for (auto& c : word) c = alphabet.letter(letter_dist(rng));
    CyclicString s(word, alphabet);
    if (is_leibnizian(s)) out.push_back(std::move(s));
  }
  return out;
}

CorrelationReport entropy_variety_scan(const std::vector<CyclicString>& samples) {
  if (samples.size() < 30) {
    throw std::invalid_argument("correlation scan needs at least 30 samples");
  }
  CorrelationReport rep;
  rep.rows.reserve(samples.size());
  for (const auto& s : samples) {
    rep.rows.push_back({s.str(), conditional_entropy(s), variety(s)});
  }
  const double n = static_cast<double>(rep.rows.size());
  double mx = 0.0, my = 0.0;
  for (const auto& r : rep.rows) {
    mx += r.cond_entropy;
    my += to_double(r.variety);
  }
  mx /= n;
  my /= n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (const auto& r : rep.rows) {
    const double dx = r.cond_entropy - mx;
    const double dy = to_double(r.variety) - my;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  if (vx > 0.0 && vy > 0.0) {
    rep.pearson_r = cov / std::sqrt(vx * vy);
  }
  return rep;
}

}  // namespace mwg
