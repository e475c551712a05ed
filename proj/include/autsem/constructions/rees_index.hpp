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
 * Subsemigroups of finite Rees index: a structure for S from one for T
 * (adding a letter per element of S - T), and a structure for T from one
 * with uniqueness for S by re-blocking the words of L that lie in T.
 */

#ifndef AUTSEM_CONSTRUCTIONS_REES_INDEX_HPP
#define AUTSEM_CONSTRUCTIONS_REES_INDEX_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "../explore.hpp"
#include "common.hpp"

namespace autsem {

  /// The elements of S - T, one new letter each.
  struct ComplementData {
    std::vector<std::string> names;
    std::vector<Element>     elements;
    /// Per element c: a word u over T's alphabet with x c = x u for all x in
    /// T, or nullopt when c acts on T as a right identity.
    std::vector<std::optional<Word>> right_action;
    /// Optional override, rows[c][g] for g in A then C: a word over A then
    /// C with value c g. Computed from the model when empty.
    std::vector<std::vector<Word>> rows;
  };

  namespace detail {
    /// Words that occur as factors of words of x.
    inline Fsa factors(Fsa const& x) {
      Fsa const          t = trim(x);
      std::vector<State> all(t.states());
      for (State q = 0; q < t.states(); ++q) {
        all[q] = q;
      }
      return Fsa(t.alphabet(), t.states(), all, all, t.transitions());
    }

    /// Factors of L with length in [k, 2k).
    inline std::vector<Word> block_words(Fsa const& lang, std::size_t k) {
      std::vector<Word> out;
      for (auto& w : enumerate(factors(lang), 2 * k - 1)) {
        if (w.size() >= k) {
          out.push_back(std::move(w));
        }
      }
      return out;
    }

    inline std::string block_name(char const* kind, Alphabet const& a, Word const& w) {
      std::string out = std::string(kind) + ":";
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "." : "") + a.name(w[i]);
      }
      return out;
    }
  }  // namespace detail

  /// Structure for S over A u C with L u C, from a structure t for T whose
  /// model is S's.
  inline AutomaticStructure rees_index_up(AutomaticStructure const& t, ComplementData const& comp) {
    std::size_t const m = comp.elements.size();
    if (m == 0) {
      return t;
    }
    if (comp.names.size() != m || comp.right_action.size() != m) {
      throw PreconditionError("rees_index_up: names, elements and right actions must have equal length");
    }
    std::unordered_set<Element, ElementHash> distinct(comp.elements.begin(), comp.elements.end());
    if (distinct.size() != m) {
      throw PreconditionError("rees_index_up: complement elements must be distinct");
    }
    Alphabet const    a(detail::disjoint_names(t.alphabet, Alphabet(comp.names)));
    std::size_t const n  = t.alphabet.size();
    SemigroupPtr const& s = t.model;
    auto              c_letter = [&](std::size_t c) { return Symbol(n + c); };

    // x c = x u on a sample of T
    auto const sample = enumerate(t.language, 4);
    for (std::size_t c = 0; c < m; ++c) {
      if (auto const& u = comp.right_action[c]) {
        if (u->empty()) {
          throw PreconditionError("rees_index_up: right action words must be nonempty");
        }
        for (auto const& w : sample) {
          Word wu = w;
          wu.insert(wu.end(), u->begin(), u->end());
          if (s->multiply(t.evaluate(w), comp.elements[c]) != t.evaluate(wu)) {
            throw PreconditionError("rees_index_up: '" + comp.names[c] + "' does not act as its right action word");
          }
        }
      } else {
        for (auto const& w : sample) {
          if (s->multiply(t.evaluate(w), comp.elements[c]) != t.evaluate(w)) {
            throw PreconditionError("rees_index_up: '" + comp.names[c] + "' is not a right identity on T");
          }
        }
      }
    }

    std::vector<Element> images;
    for (auto const& x : t.images) {
      images.push_back(x);
    }
    for (auto const& x : comp.elements) {
      images.push_back(x);
    }
    std::vector<std::vector<Word>> rows = comp.rows;
    if (rows.empty()) {
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<Word> row;
        for (Symbol g = 0; g < a.size(); ++g) {
          Element const v  = s->multiply(comp.elements[c], images[g]);
          std::size_t   hit = m;
          for (std::size_t d = 0; d < m; ++d) {
            if (comp.elements[d] == v) {
              hit = d;
            }
          }
          if (hit < m) {
            row.push_back(Word{c_letter(hit)});
          } else {
            row.push_back(detail::embed_word(t.alphabet, a, detail::representative(t, v)));
          }
        }
        rows.push_back(std::move(row));
      }
    } else if (rows.size() != m) {
      throw PreconditionError("rees_index_up: one row per complement element required");
    }
    for (auto const& row : rows) {
      if (row.size() != a.size()) {
        throw PreconditionError("rees_index_up: each row needs one entry per letter");
      }
    }

    std::vector<Word> cwords;
    for (std::size_t c = 0; c < m; ++c) {
      cwords.push_back(Word{c_letter(c)});
    }
    Fsa const      lt   = embed(t.language, a);
    Fsa const      lang = determinize_minimize(union_of(lt, Fsa::words(a, cwords)));
    std::vector<PairRelation> ms;
    for (Symbol g = 0; g < a.size(); ++g) {
      PairRelation body(a, Fsa::nothing(a.padded()));
      if (g < n) {
        body = embed(t.multipliers[g], a);
      } else if (auto const& u = comp.right_action[g - n]) {
        body = embed(multiplier_for_word(t, *u), a);
      } else {
        body = embed(t.equality, a);
      }
      std::vector<std::pair<Word, Word>> fin;
      for (std::size_t c = 0; c < m; ++c) {
        fin.emplace_back(Word{c_letter(c)}, rows[c][g]);
      }
      ms.push_back(rel_union(body, from_pairs(a, fin)));
    }
    std::vector<std::pair<Word, Word>> same;
    for (auto const& w : cwords) {
      same.emplace_back(w, w);
    }
    PairRelation const eq = rel_union(embed(t.equality, a), from_pairs(a, same));
    std::vector<Word>  reps;
    for (Symbol g = 0; g < n; ++g) {
      reps.push_back(detail::embed_word(t.alphabet, a, t.gen_reps[g]));
    }
    for (auto const& w : cwords) {
      reps.push_back(w);
    }
    return make_structure(a, s, images, lang, ms, eq, t.unique, reps);
  }

  /// Whether every factor of L with length in [k, 2k) lies in T.
  inline bool rees_index_k_holds(AutomaticStructure const&               s,
                                 std::function<bool(Word const&)> const& member_t,
                                 std::size_t                             k) {
    if (k == 0) {
      return false;
    }
    for (auto const& w : detail::block_words(s.language, k)) {
      if (!member_t(w)) {
        return false;
      }
    }
    return true;
  }

  /// Smallest k in [1, k_max] for which rees_index_k_holds.
  inline std::optional<std::size_t> rees_index_find_k(AutomaticStructure const&               s,
                                                      std::function<bool(Word const&)> const& member_t,
                                                      std::size_t                             k_max) {
    for (std::size_t k = 1; k <= k_max; ++k) {
      if (rees_index_k_holds(s, member_t, k)) {
        return k;
      }
    }
    return std::nullopt;
  }

  /// U = {w in L : w lies in T}, assuming only words of length <= bound lie
  /// outside T; checked on the lengths up to 2 bound.
  inline Fsa rees_index_synthesize_u(AutomaticStructure const&               s,
                                     std::function<bool(Word const&)> const& member_t,
                                     std::size_t                             bound) {
    std::vector<Word> outside;
    for (auto const& w : enumerate(s.language, 2 * bound)) {
      if (!member_t(w)) {
        if (w.size() > bound) {
          throw PreconditionError("rees_index_down: L has words of length > " + std::to_string(bound)
                                  + " outside T; U not found within the bound");
        }
        outside.push_back(w);
      }
    }
    return determinize_minimize(difference(s.language, Fsa::words(s.alphabet, outside)));
  }

  /// Structure for T over B = {b_alpha} u {c_alpha} from a structure with
  /// uniqueness for S. `member_t` decides whether a word over A represents
  /// an element of T, k must satisfy rees_index_k_holds, and U is the set of
  /// T-words of L (synthesized up to synth_bound when not given).
  inline AutomaticStructure rees_index_down(AutomaticStructure const&               s,
                                            std::function<bool(Word const&)> const& member_t,
                                            std::size_t                             k,
                                            std::optional<Fsa>                      u          = std::nullopt,
                                            std::size_t                             synth_bound = 8) {
    detail::require_unique(s, "rees_index_down");
    if (k == 0) {
      throw PreconditionError("rees_index_down: k must be at least 1");
    }
    if (!rees_index_k_holds(s, member_t, k)) {
      throw PreconditionError("rees_index_down: some factor of L with length in [" + std::to_string(k) + ", "
                              + std::to_string(2 * k) + ") lies outside T");
    }
    Fsa const uset = u ? determinize_minimize(intersect(*u, s.language))
                       : rees_index_synthesize_u(s, member_t, synth_bound);
    for (auto const& w : enumerate(uset, 2 * synth_bound)) {
      if (!member_t(w)) {
        throw PreconditionError("rees_index_down: U contains a word outside T");
      }
    }

    // letters: b blocks then c words
    std::vector<Word>        alpha = detail::block_words(s.language, k);
    std::size_t const        nb    = alpha.size();
    std::vector<std::string> names;
    for (auto const& w : alpha) {
      names.push_back(detail::block_name("b", s.alphabet, w));
    }
    for (auto const& w : enumerate(uset, k - 1)) {
      alpha.push_back(w);
      names.push_back(detail::block_name("c", s.alphabet, w));
    }
    if (alpha.empty()) {
      throw PreconditionError("rees_index_down: T has no elements represented in L");
    }
    Alphabet const          b(names);
    std::map<Word, Symbol> index;
    for (Symbol x = 0; x < alpha.size(); ++x) {
      index.emplace(alpha[x], x);
    }
    // side phase: 0 start, 1 after a block of length k, 2 finished
    auto step_phase = [&](std::uint32_t phase, Symbol x) -> std::optional<std::uint32_t> {
      if (x >= nb) {
        return phase == 0 ? std::optional<std::uint32_t>(2) : std::nullopt;
      }
      if (phase == 2) {
        return std::nullopt;
      }
      return alpha[x].size() == k ? 1u : 2u;
    };

    Dfa const         du     = to_dfa(uset);
    std::vector<char> u_live = du.live();
    Fsa const         kl     = determinize_minimize(explore(
        b,
        {Key{du.start, 0}},
        [&](Key const& key, auto emit) {
          for (Symbol x = 0; x < b.size(); ++x) {
            auto ph = step_phase(key[1], x);
            if (!ph) {
              continue;
            }
            State q = key[0];
            for (auto z : alpha[x]) {
              q = du.next(q, z);
            }
            if (u_live[q]) {
              emit(x, Key{q, *ph});
            }
          }
        },
        [&](Key const& key) { return key[1] != 0 && du.accepting[key[0]] != 0; }));

    // the re-blocking of (u, v) in a relation over A restricted to U x U
    std::size_t const na = s.alphabet.size();
    auto              reblock = [&](PairRelation const& r) {
      std::vector<char> live;
      Dfa const         dr = detail::live_dfa(restrict(r, uset, uset), live);
      // Key: [state, phase0, phase1, ended0, ended1, buffered side, buffer...]
      auto flush = [&](Key& key) {
        std::uint32_t const side = key[5];
        std::size_t         i    = 6;
        while (i < key.size() && key[3 + (1 - side)] == 1) {
          Symbol const x = Symbol(key[i++]);
          key[0]         = dr.next(key[0], side == 0 ? pair_symbol(na, x, pad_of(na)) : pair_symbol(na, pad_of(na), x));
        }
        key.erase(key.begin() + 6, key.begin() + std::ptrdiff_t(i));
      };
      Fsa f = explore(
          b.padded(),
          {Key{dr.start, 0, 0, 0, 0, 0}},
          [&](Key const& key, auto emit) {
            std::size_t const nbp = b.size();
            for (Symbol p = 0; p < b.padded().size(); ++p) {
              Symbol const y[2] = {pair_left(nbp, p), pair_right(nbp, p)};
              Key          nk   = key;
              Word         add[2];
              bool         ok = true;
              for (int sd = 0; sd < 2 && ok; ++sd) {
                if (y[sd] == pad_of(nbp)) {
                  ok          = nk[1 + sd] != 0;
                  nk[3 + sd]  = 1;
                } else {
                  auto ph = nk[3 + sd] ? std::nullopt : step_phase(nk[1 + sd], y[sd]);
                  ok      = ph.has_value();
                  if (ok) {
                    nk[1 + sd] = *ph;
                    add[sd]    = alpha[y[sd]];
                  }
                }
              }
              if (!ok) {
                continue;
              }
              // merge the buffered letters with the new ones
              std::vector<Symbol> buf[2];
              buf[nk[5]].assign(nk.begin() + 6, nk.end());
              for (int sd = 0; sd < 2; ++sd) {
                buf[sd].insert(buf[sd].end(), add[sd].begin(), add[sd].end());
              }
              std::size_t const both = std::min(buf[0].size(), buf[1].size());
              for (std::size_t i = 0; i < both; ++i) {
                nk[0] = dr.next(nk[0], pair_symbol(na, buf[0][i], buf[1][i]));
              }
              std::uint32_t const side = buf[0].size() > both ? 0 : 1;
              nk.resize(6);
              nk[5] = side;
              nk.insert(nk.end(), buf[side].begin() + std::ptrdiff_t(both), buf[side].end());
              flush(nk);
              if (live[nk[0]]) {
                emit(p, nk);
              }
            }
          },
          [&](Key const& key) {
            if (key[1] == 0 || key[2] == 0) {
              return false;
            }
            Key end = key;
            end[3] = end[4] = 1;
            flush(end);
            return dr.accepting[end[0]] != 0;
          });
      return PairRelation(b, determinize_minimize(intersect(f, well_padded(b).fsa())));
    };

    auto phi = [&](Word const& w) {
      if (w.size() < k) {
        return Word{index.at(w)};
      }
      Word        out;
      std::size_t i = 0;
      while (w.size() - i >= 2 * k) {
        out.push_back(index.at(Word(w.begin() + std::ptrdiff_t(i), w.begin() + std::ptrdiff_t(i + k))));
        i += k;
      }
      out.push_back(index.at(Word(w.begin() + std::ptrdiff_t(i), w.end())));
      return out;
    };

    std::vector<Element>      images;
    std::vector<PairRelation> ms;
    std::vector<Word>         reps;
    for (Symbol x = 0; x < b.size(); ++x) {
      images.push_back(s.evaluate(alpha[x]));
      ms.push_back(reblock(multiplier_for_word(s, alpha[x])));
      reps.push_back(phi(normal_form(s, alpha[x])));
    }
    return make_structure(b, s.model, images, kl, ms, diagonal(kl), true, reps);
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_REES_INDEX_HPP
