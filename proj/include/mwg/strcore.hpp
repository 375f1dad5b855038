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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwg/alphabet.hpp"
#include "mwg/rational.hpp"

namespace mwg {

// Exact combinatorial analysis of cyclic character strings: neighborhoods,
// indifference radii, the Leibnizian test, BSD variety, entropies and
// fractal words. All functions are pure and safe to call concurrently.

// Largest admissible neighborhood radius for a string of length n:
// n/2 - 1 when n is even, (n-1)/2 when n is odd.
std::size_t max_radius(std::size_t n);

// Neighborhoods of radius 0 (bare letters) do not distinguish positions in
// this model; radius comparisons start at 1. Strings too short to admit
// radius 1 (n <= 2) are never Leibnizian.
inline constexpr std::size_t kMinRadius = 1;

// The plain (non-cyclic) substring of radius m centered at 1-based position
// pos, wrapping through the seam as needed. Length 2m+1.
std::string neighborhood(const CyclicString& s, std::size_t pos, std::size_t radius);

// Two linear sequences are isomorphic when they are equal or one is the
// mirror image of the other.
bool isomorphic(std::string_view u, std::string_view v);

// Smallest radius in [1, max_radius] at which the neighborhoods of 1-based
// positions i and j are non-isomorphic; nullopt when no radius separates
// them. Throws when i == j.
std::optional<std::size_t> relative_indifference(const CyclicString& s,
                                                 std::size_t i, std::size_t j);

// Per-position absolute indifference a_i = max_j r_ij, with a_i = 0 as the
// sentinel whenever some r_ij is absent, plus the full symmetric r-table.
struct IndifferenceProfile {
  std::vector<std::size_t> a;                                  // a[i-1], 0 sentinel
  std::vector<std::vector<std::optional<std::size_t>>> r;      // r[i-1][j-1], diag unused
};

IndifferenceProfile indifference_profile(const CyclicString& s);

// True iff every pair of positions is distinguished at some admissible
// radius. Checked at the maximum radius only; pairwise isomorphism there is
// equivalent to the full radius scan (larger windows contain smaller ones).
bool is_leibnizian(const CyclicString& s);

// Sum of 1/a_i in exact rational arithmetic; 0 for non-Leibnizian strings.
Rational variety(const CyclicString& s);

// Letter-frequency entropy in bits.
double shannon_entropy(const CyclicString& s);

enum class PairTopology { cyclic, linear };

// H(Y|X) = H(X,Y) - H(X), where H(X,Y) is taken over consecutive-letter
// pairs. The cyclic list (n pairs, wraparound included) matches the string
// topology; the linear list (n-1 pairs) is provided for sensitivity checks.
double conditional_entropy(const CyclicString& s,
                           PairTopology topology = PairTopology::cyclic);

// Concatenation over i = 1..n of l1^i l2^i ... lv^i for alphabet letters lk.
CyclicString fractal_word(const Alphabet& alphabet, std::size_t n);

enum class CanonMode { literal, rotation, rotation_mirror };

// literal: identity. rotation: lexicographically minimal rotation.
// rotation_mirror: minimal over rotations of the word and of its reverse.
CyclicString canonicalize(const CyclicString& s, CanonMode mode);

const char* to_string(CanonMode mode);
CanonMode canon_mode_from_string(std::string_view name);

}  // namespace mwg
