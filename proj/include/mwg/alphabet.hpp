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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mwg {

// Ordered set of distinct symbols. The order is fixed and is what all
// canonical orderings (fractal words, enumeration, lexicographic minima)
// refer to. Symbols are opaque single-byte tokens.
class Alphabet {
 public:
  explicit Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("alphabet must contain at least one symbol");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      for (std::size_t j = i + 1; j < letters_.size(); ++j) {
        if (letters_[i] == letters_[j]) {
          throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                      letters_[i] + "'");
        }
      }
    }
  }

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t idx) const { return letters_.at(idx); }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const {
    return letters_.find(c) != std::string::npos;
  }

  bool operator==(const Alphabet& other) const = default;

 private:
  std::string letters_;
};

// A word over a finite alphabet with cyclic topology. Positions in the
// public API are 1-based; index arithmetic is modular.
class CyclicString {
 public:
  CyclicString(std::string chars, Alphabet alphabet)
      : chars_(std::move(chars)), alphabet_(std::move(alphabet)) {
    if (chars_.empty()) {
      throw std::invalid_argument("cyclic string must be non-empty");
    }
    for (std::size_t i = 0; i < chars_.size(); ++i) {
      if (!alphabet_.contains(chars_[i])) {
        throw std::invalid_argument(std::string("symbol '") + chars_[i] +
                                    "' at position " + std::to_string(i + 1) +
                                    " is not in the alphabet");
      }
    }
  }

  std::size_t size() const { return chars_.size(); }
  const std::string& str() const { return chars_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Character at 1-based position, wrapping modulo the length. Accepts any
  // signed offset-adjusted position.
  char at_wrapped(long long pos1) const {
    const long long n = static_cast<long long>(chars_.size());
    long long idx = (pos1 - 1) % n;
    if (idx < 0) idx += n;
    return chars_[static_cast<std::size_t>(idx)];
  }

  bool operator==(const CyclicString& other) const {
    return chars_ == other.chars_ && alphabet_ == other.alphabet_;
  }

 private:
  std::string chars_;
  Alphabet alphabet_;
};

}  // namespace mwg
