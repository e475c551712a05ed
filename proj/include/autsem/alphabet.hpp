/*
 *   Copyright 2026 The autsem Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Alphabets, symbols and words, plus the error types shared by the whole
 * library.
 */

#ifndef AUTSEM_ALPHABET_HPP
#define AUTSEM_ALPHABET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace autsem {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Two automata or words were combined over different alphabets.
  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  /// A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  /// Malformed input text (JSON, word strings, padded words).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  /// An enumeration produced more words than the configured cap.
  class EnumerationCapExceeded : public Error {
   public:
    using Error::Error;
  };

  using Symbol = std::uint32_t;
  using Word   = std::vector<Symbol>;

  /// Label used for epsilon transitions inside nondeterministic automata.
  inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

  namespace detail {
    inline void hash_mix(std::size_t& seed, std::size_t value) noexcept {
      seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }

    template <typename Range>
    std::size_t hash_range(Range const& r) noexcept {
      std::size_t seed = r.size();
      for (auto const& x : r) {
        hash_mix(seed, std::hash<std::decay_t<decltype(x)>>{}(x));
      }
      return seed;
    }

    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        return hash_range(w);
      }
    };
  }  // namespace detail

  /// Shortlex order: shorter words first, then lexicographic on symbol ids.
  inline bool shortlex_less(Word const& a, Word const& b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  /// A finite, nonempty, ordered set of distinct printable letter names.
  ///
  /// Copies share the name table. The padded pair alphabet of an alphabet is
  /// built on first use and shared between copies as well.
  class Alphabet {
   public:
    Alphabet() : Alphabet(std::vector<std::string>{"a"}) {}

    explicit Alphabet(std::vector<std::string> names)
        : data_(std::make_shared<Data>()) {
      if (names.empty()) {
        throw PreconditionError("alphabet must be nonempty");
      }
      data_->names = std::move(names);
      for (std::size_t i = 0; i < data_->names.size(); ++i) {
        auto const& n = data_->names[i];
        if (n.empty()) {
          throw PreconditionError("alphabet letter names must be nonempty");
        }
        if (n.find_first_of(" \t\n\r") != std::string::npos) {
          throw PreconditionError("alphabet letter name contains whitespace: '"
                                  + n + "'");
        }
        if (!data_->index.emplace(n, static_cast<Symbol>(i)).second) {
          throw PreconditionError("duplicate alphabet letter '" + n + "'");
        }
      }
    }

    Alphabet(std::initializer_list<std::string> names)
        : Alphabet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept {
      return data_->names.size();
    }

    std::string const& name(Symbol s) const {
      if (s >= size()) {
        throw PreconditionError("symbol " + std::to_string(s)
                                + " out of range for alphabet of size "
                                + std::to_string(size()));
      }
      return data_->names[s];
    }

    std::vector<std::string> const& names() const noexcept {
      return data_->names;
    }

    std::optional<Symbol> find(std::string_view n) const {
      auto it = data_->index.find(std::string(n));
      if (it == data_->index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Symbol at(std::string_view n) const {
      auto s = find(n);
      if (!s) {
        throw ParseError("unknown letter '" + std::string(n) + "'");
      }
      return *s;
    }

    bool contains(Word const& w) const noexcept {
      return std::all_of(
          w.begin(), w.end(), [this](Symbol s) { return s < size(); });
    }

    /// Parses whitespace separated letter names; the empty string is the
    /// empty word.
    Word parse(std::string_view text) const {
      Word               result;
      std::istringstream in{std::string(text)};
      std::string        tok;
      while (in >> tok) {
        result.push_back(at(tok));
      }
      return result;
    }

    std::string format(Word const& w) const {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += name(w[i]);
      }
      return out;
    }

    /// The padded pair alphabet A(2,$), see padrel.hpp for the encoding.
    Alphabet const& padded() const;

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x.data_ == y.data_ || x.data_->names == y.data_->names;
    }

   private:
    struct Data {
      std::vector<std::string>                names;
      std::unordered_map<std::string, Symbol> index;
      mutable std::once_flag                  padded_once;
      mutable std::unique_ptr<Alphabet>       padded;
    };
    std::shared_ptr<Data> data_;
  };

  /// Name of the padding marker when it is printed.
  inline constexpr std::string_view kPadName = "$";

  /// Index of the padding marker inside a pair letter for a base of size n.
  inline constexpr Symbol pad_of(std::size_t base_size) noexcept {
    return static_cast<Symbol>(base_size);
  }

  /// Pair letter (x, y) of A(2,$); either side may be pad_of(n) but not both.
  inline constexpr Symbol pair_symbol(std::size_t base_size, Symbol x, Symbol y) noexcept {
    return static_cast<Symbol>(x * (base_size + 1) + y);
  }

  inline constexpr Symbol pair_left(std::size_t base_size, Symbol p) noexcept {
    return static_cast<Symbol>(p / (base_size + 1));
  }

  inline constexpr Symbol pair_right(std::size_t base_size, Symbol p) noexcept {
    return static_cast<Symbol>(p % (base_size + 1));
  }

  inline Alphabet const& Alphabet::padded() const {
    std::call_once(data_->padded_once, [this] {
      std::size_t const        n = size();
      std::vector<std::string> names;
      names.reserve((n + 1) * (n + 1) - 1);
      auto side = [&](Symbol s) {
        return s == pad_of(n) ? std::string(kPadName) : data_->names[s];
      };
      for (Symbol x = 0; x <= n; ++x) {
        for (Symbol y = 0; y <= n; ++y) {
          if (x == pad_of(n) && y == pad_of(n)) {
            continue;
          }
          names.push_back(side(x) + "|" + side(y));
        }
      }
      data_->padded = std::make_unique<Alphabet>(std::move(names));
    });
    return *data_->padded;
  }

}  // namespace autsem

#endif  // AUTSEM_ALPHABET_HPP
