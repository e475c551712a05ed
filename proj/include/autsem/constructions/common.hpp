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
 * Small helpers shared by the construction headers.
 */

#ifndef AUTSEM_CONSTRUCTIONS_COMMON_HPP
#define AUTSEM_CONSTRUCTIONS_COMMON_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "../autostruct.hpp"

namespace autsem {

  /// Mangled name for a new symbol, e.g. mangle("c", {1, 0}) == "c:1:0".
  inline std::string mangle(std::string const& kind, std::vector<std::size_t> const& ix) {
    std::string out = kind;
    for (auto i : ix) {
      out += ":" + std::to_string(i);
    }
    return out;
  }

  namespace detail {
    /// Concatenation of two relations; only meaningful when every member of
    /// m has components of equal length (no pads), e.g. a diagonal.
    inline PairRelation rel_concat(PairRelation const& m, PairRelation const& k) {
      check_same_alphabet(m.base(), k.base());
      return PairRelation(m.base(), concat(m.fsa(), k.fsa()));
    }

    /// (x, epsilon) for x in X.
    inline PairRelation drop(Fsa const& x) {
      return product(x, Fsa::empty_word(x.alphabet()));
    }

    /// (epsilon, w).
    inline PairRelation append(Alphabet const& a, Word const& w) {
      return product(Fsa::empty_word(a), Fsa::word(a, w));
    }

    /// One pair letter as a relation.
    inline PairRelation pair_letter(Alphabet const& a, Symbol x, Symbol y) {
      return PairRelation(a, Fsa::word(a.padded(), {pair_symbol(a.size(), x, y)}));
    }

    /// Some word of length <= max_len with value `target`, by breadth-first
    /// search over values.
    inline std::optional<Word> find_word(GenMap const& g, Element const& target, std::size_t max_len = 10) {
      std::unordered_map<Element, Word, ElementHash> seen;
      std::vector<Element>                           level;
      for (Symbol a = 0; a < g.alphabet.size(); ++a) {
        if (seen.emplace(g.images[a], Word{a}).second) {
          level.push_back(g.images[a]);
        }
      }
      for (std::size_t len = 1; len <= max_len; ++len) {
        auto it = seen.find(target);
        if (it != seen.end()) {
          return it->second;
        }
        std::vector<Element> next;
        for (auto const& x : level) {
          for (Symbol a = 0; a < g.alphabet.size(); ++a) {
            Element y = g.target->multiply(x, g.images[a]);
            if (!seen.count(y)) {
              Word w = seen.at(x);
              w.push_back(a);
              seen.emplace(y, w);
              next.push_back(std::move(y));
            }
          }
        }
        level = std::move(next);
        if (level.empty()) {
          break;
        }
      }
      auto it = seen.find(target);
      if (it != seen.end()) {
        return it->second;
      }
      return std::nullopt;
    }

    /// The representative in L of `target`.
    inline Word representative(AutomaticStructure const& s, Element const& target, std::size_t max_len = 10) {
      auto w = find_word(s.genmap(), target, max_len);
      if (!w) {
        throw PreconditionError("no word of length <= " + std::to_string(max_len) + " has value "
                                + s.model->format(target));
      }
      return normal_form(s, *w);
    }

    inline void require_unique(AutomaticStructure const& s, char const* what) {
      if (!s.unique) {
        throw PreconditionError(std::string(what) + ": input structures must have uniqueness");
      }
    }

    /// e names the identity, lies in L, and L - {e} avoids it.
    inline void check_identity_letter(AutomaticStructure const& m, std::string const& e, char const* what) {
      std::string const w(what);
      auto              ex = m.alphabet.find(e);
      if (!ex) {
        throw PreconditionError(w + ": letter '" + e + "' missing from a factor");
      }
      auto id = m.model->identity();
      if (!id || m.images[*ex] != *id) {
        throw PreconditionError(w + ": '" + e + "' must represent the identity");
      }
      if (!m.language.accepts(Word{*ex})) {
        throw PreconditionError(w + ": '" + e + "' must lie in L");
      }
      Fsa const any    = Fsa::universal(m.alphabet);
      Fsa const with_e = concat_all({any, Fsa::letters(m.alphabet, {*ex}), any});
      if (!is_empty(intersect(difference(m.language, Fsa::word(m.alphabet, {*ex})), with_e))) {
        throw PreconditionError(w + ": L - {" + e + "} must avoid '" + e + "'");
      }
    }

    inline Word embed_word(Alphabet const& from, Alphabet const& to, Word const& w) {
      Word out;
      for (auto x : w) {
        out.push_back(to.at(from.name(x)));
      }
      return out;
    }

    /// Keeps the letters of `to` (by name) and drops every transition on
    /// another letter.
    inline Fsa shrink(Fsa const& x, Alphabet const& to) {
      Alphabet const& from = x.alphabet();
      return map_symbols(x, to, [&](Symbol a) -> std::optional<Symbol> { return to.find(from.name(a)); });
    }

    inline PairRelation shrink(PairRelation const& m, Alphabet const& to) {
      std::size_t const n  = m.base().size();
      std::size_t const n2 = to.size();
      return PairRelation(to, map_symbols(m.fsa(), to.padded(), [&](Symbol p) -> std::optional<Symbol> {
                            Symbol side[2] = {pair_left(n, p), pair_right(n, p)};
                            Symbol out[2];
                            for (int i = 0; i < 2; ++i) {
                              if (side[i] == pad_of(n)) {
                                out[i] = pad_of(n2);
                              } else {
                                auto s = to.find(m.base().name(side[i]));
                                if (!s) {
                                  return std::nullopt;
                                }
                                out[i] = *s;
                              }
                            }
                            return pair_symbol(n2, out[0], out[1]);
                          }));
    }

    /// Letter names of a and b, concatenated; throws when they overlap.
    inline std::vector<std::string> disjoint_names(Alphabet const& a, Alphabet const& b) {
      std::vector<std::string> names = a.names();
      for (auto const& n : b.names()) {
        if (a.find(n)) {
          throw PreconditionError("alphabets overlap in letter '" + n + "'");
        }
        names.push_back(n);
      }
      return names;
    }
  }  // namespace detail

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_COMMON_HPP
