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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwg/alphabet.hpp"
#include "mwg/strcore.hpp"

namespace mwg {

// Ensemble statistics of Leibnizian strings: exhaustive enumeration, view
// occupations, partition functions, chemical potential, the Fermi-Dirac
// comparison and the entropy-variety correlation scan.

// The radius-a_i neighborhood that uniquely identifies a position; the
// single-particle state of the fermionic analogy.
struct View {
  std::string sequence;  // odd length 2*radius + 1
  std::size_t radius = 0;

  bool operator==(const View&) const = default;
  auto operator<=>(const View&) const = default;
};

// All strings of length n over the alphabet passing the Leibnizian test,
// one representative per canon class, ascending. Throws TruncationError
// when the candidate space exceeds max_candidates (no silent sampling).
std::vector<CyclicString> enumerate_leibnizian(const Alphabet& alphabet, std::size_t n,
                                               CanonMode mode = CanonMode::literal,
                                               std::size_t max_candidates = 1u << 24);

// One view per position: the neighborhood of radius a_i at position i.
// Views within a Leibnizian string are all distinct. Throws on
// non-Leibnizian input.
std::vector<View> views_of(const CyclicString& s);

// Z = sum_l exp(-beta * gamma * variety(S_l)) over a non-empty ensemble.
double partition_function(const std::vector<CyclicString>& strings, double beta,
                          double gamma);

// Ensemble average of the 0/1 indicator that `view` occurs among the views
// of each string.
double occupation_expectation(const View& view, const std::vector<CyclicString>& strings,
                              double beta, double gamma);

// mu = ln(Z(n-1)/Z(n)) / beta over exhaustively enumerated ensembles;
// throws when either ensemble is empty.
double chemical_potential(const Alphabet& alphabet, std::size_t n, double beta,
                          double gamma, CanonMode mode = CanonMode::literal);

// 1 / (exp(beta * (gamma/radius - mu)) + 1).
double fd_prediction(std::size_t radius, double beta, double gamma, double mu);

// Exact canonical-ensemble occupations of M independent fermionic levels
// with total occupancy n, by dynamic programming over elementary symmetric
// polynomials of the Boltzmann factors. Validates the closed-form
// prediction (a large-N approximation) independently of strings.
std::vector<double> idealized_fd_occupations(const std::vector<double>& energies,
                                             std::size_t n, double beta);

struct EnsembleReport {
  std::size_t length = 0;
  double beta = 1.0;
  double gamma = 1.0;
  CanonMode canon_mode = CanonMode::literal;
  double z_n = 0.0;
  std::optional<double> z_nminus1;  // absent when the shorter ensemble is empty
  std::optional<double> mu;
  struct Row {
    View view;
    double n_expected = 0.0;
    double fd_predicted = 0.0;  // NaN when mu is absent
  };
  std::vector<Row> rows;  // ascending by (radius, sequence)
};

EnsembleReport ensemble_report(const Alphabet& alphabet, std::size_t n, double beta,
                               double gamma, CanonMode mode = CanonMode::literal);

// Seeded rejection sampling of uniform strings until Leibnizian; lengths
// drawn uniformly in [len_min, len_max].
std::vector<CyclicString> sample_leibnizian(const Alphabet& alphabet,
                                            std::size_t len_min, std::size_t len_max,
                                            std::size_t count, std::uint64_t seed);

struct CorrelationReport {
  struct Row {
    std::string word;
    double cond_entropy = 0.0;
    Rational variety;
  };
  std::vector<Row> rows;
  std::optional<double> pearson_r;  // absent when either variance vanishes
};

// Per-string (conditional entropy, variety) pairs plus their Pearson
// correlation; requires at least 30 samples.
CorrelationReport entropy_variety_scan(const std::vector<CyclicString>& samples);

}  // namespace mwg
