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

#include "mwg/strcore.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mwg {

std::size_t max_radius(std::size_t n) {
  if (n == 0) throw std::invalid_argument("string length must be positive");
  return n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
}

std::string neighborhood(const CyclicString& s, std::size_t pos, std::size_t radius) {
  const std::size_t n = s.size();
  if (pos < 1 || pos > n) {
    throw std::out_of_range("position out of range");
  }
  if (radius > max_radius(n)) {
    throw std::out_of_range("radius exceeds max_radius");
  }
  std::string out;
  out.reserve(2 * radius + 1);
  const long long p = static_cast<long long>(pos);
  const long long m = static_cast<long long>(radius);
  for (long long d = -m; d <= m; ++d) {
    out.push_back(s.at_wrapped(p + d));
  }
  return out;
}

bool isomorphic(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  return std::equal(u.begin(), u.end(), v.rbegin());
}

std::optional<std::size_t> relative_indifference(const CyclicString& s,
                                                 std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("positions must be distinct");
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("string too short for a position pair");
  const std::size_t mmax = max_radius(n);
  for (std::size_t m = kMinRadius; m <= mmax; ++m) {
    if (!isomorphic(neighborhood(s, i, m), neighborhood(s, j, m))) {
      return m;
    }
  }
  return std::nullopt;
}

IndifferenceProfile indifference_profile(const CyclicString& s) {
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("profile requires length >= 2");
  IndifferenceProfile prof;
  prof.a.assign(n, 0);
  prof.r.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto rij = relative_indifference(s, i, j);
      prof.r[i - 1][j - 1] = rij;
      prof.r[j - 1][i - 1] = rij;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    bool complete = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!prof.r[i][j]) {
        complete = false;
        break;
      }
      best = std::max(best, *prof.r[i][j]);
    }
    prof.a[i] = complete ? best : 0;
  }
  return prof;
}

bool is_leibnizian(const CyclicString& s) {
  const std::size_t n = s.size();
  if (n < 2) return false;
  const std::size_t mmax = max_radius(n);
  if (mmax < kMinRadius) return false;
  std::vector<std::string> nb;
  nb.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    nb.push_back(neighborhood(s, i, mmax));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (isomorphic(nb[i], nb[j])) return false;
    }
  }
  return true;
}

Rational variety(const CyclicString& s) {
  if (!is_leibnizian(s)) return Rational(0);
  const auto prof = indifference_profile(s);
  Rational sum(0);
  for (std::size_t a : prof.a) {
    sum += Rational(1, static_cast<std::int64_t>(a));
  }
  return sum;
}

namespace {

double entropy_of_counts(const std::map<std::string, std::size_t>& counts,
                         std::size_t total) {
  double h = 0.0;
  for (const auto& [tok, c] : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double shannon_entropy(const CyclicString& s) {
  std::map<std::string, std::size_t> counts;
  for (char c : s.str()) counts[std::string(1, c)]++;
  return entropy_of_counts(counts, s.size());
}

double conditional_entropy(const CyclicString& s, PairTopology topology) {
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("conditional entropy requires length >= 2");
  const std::size_t npairs = topology == PairTopology::cyclic ? n : n - 1;
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 1; i <= npairs; ++i) {
    std::string pair{s.at_wrapped(static_cast<long long>(i)),
                     s.at_wrapped(static_cast<long long>(i) + 1)};
    counts[pair]++;
  }
  return entropy_of_counts(counts, npairs) - shannon_entropy(s);
}

CyclicString fractal_word(const Alphabet& alphabet, std::size_t n) {
  if (n == 0) throw std::invalid_argument("fractal word parameter must be >= 1");
  std::string word;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      word.append(i, alphabet.letter(l));
    }
  }
  return CyclicString(word, alphabet);
}

namespace {

std::string minimal_rotation(const std::string& w) {
  std::string best = w;
  std::string rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

CyclicString canonicalize(const CyclicString& s, CanonMode mode) {
  switch (mode) {
    case CanonMode::literal:
      return s;
    case CanonMode::rotation:
      return CyclicString(minimal_rotation(s.str()), s.alphabet());
    case CanonMode::rotation_mirror: {
      std::string rev(s.str().rbegin(), s.str().rend());
      return CyclicString(std::min(minimal_rotation(s.str()), minimal_rotation(rev)),
                          s.alphabet());
    }
  }
  throw std::logic_error("unknown canon mode");
}

const char* to_string(CanonMode mode) {
  switch (mode) {
    case CanonMode::literal: return "literal";
    case CanonMode::rotation: return "rotation";
    case CanonMode::rotation_mirror: return "rotation_mirror";
  }
  return "?";
}

CanonMode canon_mode_from_string(std::string_view name) {
  if (name == "literal") return CanonMode::literal;
  if (name == "rotation") return CanonMode::rotation;
  if (name == "rotation_mirror") return CanonMode::rotation_mirror;
  throw std::invalid_argument("unknown canon mode: " + std::string(name));
}

}  // namespace mwg
