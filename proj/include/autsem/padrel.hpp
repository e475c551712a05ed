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
 * Synchronous binary relations on words, represented by automata over the
 * padded pair alphabet A(2,$).
 *
 * For a base alphabet of size n the pair (x, y) is the symbol x * (n + 1) + y
 * where the value n stands for the padding marker. The pair ($,$) is the
 * largest index and is excluded, so the padded alphabet has (n+1)^2 - 1
 * letters.
 */

#ifndef AUTSEM_PADREL_HPP
#define AUTSEM_PADREL_HPP

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "explore.hpp"
#include "fsa.hpp"

namespace autsem {

  /// An Fsa over the padded alphabet of `base`.
  class PairRelation {
   public:
    PairRelation(Alphabet base, Fsa fsa) : base_(std::move(base)), fsa_(std::move(fsa)) {
      if (!(fsa_.alphabet() == base_.padded())) {
        throw AlphabetMismatch("relation automaton is not over the padded alphabet");
      }
    }

    Alphabet const& base() const noexcept {
      return base_;
    }
    Fsa const& fsa() const noexcept {
      return fsa_;
    }

    bool accepts(Word const& u, Word const& v) const;

   private:
    Alphabet base_;
    Fsa      fsa_;
  };

  inline Word convolve(Alphabet const& base, Word const& u, Word const& v) {
    std::size_t const n = base.size();
    if (!base.contains(u) || !base.contains(v)) {
      throw AlphabetMismatch("convolve: word not over the base alphabet");
    }
    Word out(std::max(u.size(), v.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      Symbol x = i < u.size() ? u[i] : pad_of(n);
      Symbol y = i < v.size() ? v[i] : pad_of(n);
      out[i]   = pair_symbol(n, x, y);
    }
    return out;
  }

  inline bool is_well_padded(Alphabet const& base, Word const& w) {
    std::size_t const n = base.size();
    Symbol const      limit = Symbol((n + 1) * (n + 1) - 1);
    bool left_ended = false, right_ended = false;
    for (auto p : w) {
      if (p >= limit) {
        return false;
      }
      bool lp = pair_left(n, p) == pad_of(n);
      bool rp = pair_right(n, p) == pad_of(n);
      if ((left_ended && !lp) || (right_ended && !rp)) {
        return false;
      }
      left_ended  = left_ended || lp;
      right_ended = right_ended || rp;
    }
    return true;
  }

  inline std::pair<Word, Word> deconvolve(Alphabet const& base, Word const& w) {
    if (!is_well_padded(base, w)) {
      throw ParseError("deconvolve: word is not well padded");
    }
    std::size_t const n = base.size();
    Word              u, v;
    for (auto p : w) {
      if (pair_left(n, p) != pad_of(n)) {
        u.push_back(pair_left(n, p));
      }
      if (pair_right(n, p) != pad_of(n)) {
        v.push_back(pair_right(n, p));
      }
    }
    return {u, v};
  }

  inline bool PairRelation::accepts(Word const& u, Word const& v) const {
    return fsa_.accepts(convolve(base_, u, v));
  }

  /// All well-padded words over A(2,$).
  inline PairRelation well_padded(Alphabet const& base) {
    std::size_t const       n = base.size();
    std::vector<Transition> ts;
    for (Symbol x = 0; x <= n; ++x) {
      for (Symbol y = 0; y <= n; ++y) {
        if (x == pad_of(n) && y == pad_of(n)) {
          continue;
        }
        Symbol p = pair_symbol(n, x, y);
        if (x == pad_of(n)) {
          ts.push_back({0, p, 1});
          ts.push_back({1, p, 1});
        } else if (y == pad_of(n)) {
          ts.push_back({0, p, 2});
          ts.push_back({2, p, 2});
        } else {
          ts.push_back({0, p, 0});
        }
      }
    }
    return PairRelation(base, Fsa(base.padded(), 3, {0}, {0, 1, 2}, std::move(ts)));
  }

  /// Finite relation given by its members.
  inline PairRelation from_pairs(Alphabet const&                              base,
                                 std::vector<std::pair<Word, Word>> const& pairs) {
    std::vector<Word> ws;
    for (auto const& [u, v] : pairs) {
      ws.push_back(convolve(base, u, v));
    }
    return PairRelation(base, Fsa::words(base.padded(), ws));
  }

  /// (X x Y) convolved: all pairs with left in X and right in Y.
  inline PairRelation product(Fsa const& x, Fsa const& y) {
    check_same_alphabet(x.alphabet(), y.alphabet());
    Alphabet const    base = x.alphabet();
    std::size_t const n    = base.size();
    Dfa const         dx   = minimize(to_dfa(x));
    Dfa const         dy   = minimize(to_dfa(y));
    auto const        lx   = dx.live();
    auto const        ly   = dy.live();
    if (!lx[dx.start] || !ly[dy.start]) {
      return PairRelation(base, Fsa::nothing(base.padded()));
    }
    // key: sx, sy, left ended, right ended
    Fsa f = explore(
        base.padded(),
        {Key{dx.start, dy.start, 0, 0}},
        [&](Key const& k, auto emit) {
          for (Symbol a = 0; a <= n; ++a) {
            Symbol sx = k[0];
            bool   el = k[2] != 0;
            if (a == pad_of(n)) {
              if (!el && !dx.accepting[sx]) {
                continue;
              }
              el = true;
            } else {
              if (el) {
                continue;
              }
              sx = dx.next(sx, a);
              if (!lx[sx]) {
                continue;
              }
            }
            for (Symbol b = 0; b <= n; ++b) {
              if (a == pad_of(n) && b == pad_of(n)) {
                continue;
              }
              Symbol sy = k[1];
              bool   er = k[3] != 0;
              if (b == pad_of(n)) {
                if (!er && !dy.accepting[sy]) {
                  continue;
                }
                er = true;
              } else {
                if (er) {
                  continue;
                }
                sy = dy.next(sy, b);
                if (!ly[sy]) {
                  continue;
                }
              }
              emit(pair_symbol(n, a, b), Key{sx, sy, el, er});
            }
          }
        },
        [&](Key const& k) {
          return (k[2] || dx.accepting[k[0]]) && (k[3] || dy.accepting[k[1]]);
        });
    return PairRelation(base, f);
  }

  /// Pairs (w, w) for w in L.
  inline PairRelation diagonal(Fsa const& l) {
    Alphabet const    base = l.alphabet();
    std::size_t const n    = base.size();
    return PairRelation(base, map_symbols(l, base.padded(), [n](Symbol a) -> std::optional<Symbol> {
                          return pair_symbol(n, a, a);
                        }));
  }

  /// Left components of the members.
  inline Fsa left_projection(PairRelation const& m) {
    std::size_t const n = m.base().size();
    return map_symbols(m.fsa(), m.base(), [n](Symbol p) -> std::optional<Symbol> {
      Symbol x = pair_left(n, p);
      return x == pad_of(n) ? kEpsilon : x;
    });
  }

  /// Right components of the members.
  inline Fsa right_projection(PairRelation const& m) {
    std::size_t const n = m.base().size();
    return map_symbols(m.fsa(), m.base(), [n](Symbol p) -> std::optional<Symbol> {
      Symbol y = pair_right(n, p);
      return y == pad_of(n) ? kEpsilon : y;
    });
  }

  /// The converse relation.
  inline PairRelation swap(PairRelation const& m) {
    std::size_t const n = m.base().size();
    return PairRelation(m.base(), map_symbols(m.fsa(), m.base().padded(), [n](Symbol p) -> std::optional<Symbol> {
                          return pair_symbol(n, pair_right(n, p), pair_left(n, p));
                        }));
  }

  inline PairRelation rel_union(PairRelation const& m, PairRelation const& k) {
    check_same_alphabet(m.base(), k.base());
    return PairRelation(m.base(), union_of(m.fsa(), k.fsa()));
  }

  inline PairRelation rel_intersect(PairRelation const& m, PairRelation const& k) {
    check_same_alphabet(m.base(), k.base());
    return PairRelation(m.base(), intersect(m.fsa(), k.fsa()));
  }

  inline PairRelation rel_minimize(PairRelation const& m) {
    return PairRelation(m.base(), determinize_minimize(m.fsa()));
  }

  /// Members whose left side lies in X and right side in Y.
  inline PairRelation restrict(PairRelation const& m, Fsa const& x, Fsa const& y) {
    return rel_intersect(m, product(x, y));
  }

  inline bool rel_equivalent(PairRelation const& m, PairRelation const& k) {
    check_same_alphabet(m.base(), k.base());
    return equivalent(m.fsa(), k.fsa());
  }

  /// Least C <= cap with ||u| - |v|| <= C for every member, if one exists.
  inline std::optional<std::size_t> bounded_difference(PairRelation const& m,
                                                       std::size_t         cap = SIZE_MAX) {
    std::size_t const n = m.base().size();
    Fsa const         t = trim(intersect(m.fsa(), well_padded(m.base()).fsa()));
    if (t.finals().empty()) {
      return 0;
    }
    auto is_pad = [n](Symbol p) {
      return pair_left(n, p) == pad_of(n) || pair_right(n, p) == pad_of(n);
    };
    // Tarjan's SCC, iterative.
    auto const               adj = t.adjacency();
    std::size_t const        sz  = t.states();
    std::vector<std::size_t> index(sz, SIZE_MAX), low(sz, 0), comp(sz, SIZE_MAX);
    std::vector<char>        on_stack(sz, 0);
    std::vector<State>       stack;
    std::size_t              counter = 0, ncomp = 0;
    for (State root = 0; root < sz; ++root) {
      if (index[root] != SIZE_MAX) {
        continue;
      }
      std::vector<std::pair<State, std::size_t>> call{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& [s, i] = call.back();
        if (i < adj[s].size()) {
          State w = adj[s][i++].second;
          if (index[w] == SIZE_MAX) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[s] = std::min(low[s], index[w]);
          }
        } else {
          State v = s;
          call.pop_back();
          if (!call.empty()) {
            low[call.back().first] = std::min(low[call.back().first], low[v]);
          }
          if (low[v] == index[v]) {
            State w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              comp[w]     = ncomp;
            } while (w != v);
            ++ncomp;
          }
        }
      }
    }
    for (auto const& e : t.transitions()) {
      if (e.label != kEpsilon && comp[e.from] == comp[e.to] && is_pad(e.label)) {
        return std::nullopt;  // a padded letter on a cycle pumps the difference
      }
    }
    // Tarjan numbers components in reverse topological order.
    std::vector<std::size_t> best(ncomp, 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(ncomp);
    for (auto const& e : t.transitions()) {
      if (comp[e.from] != comp[e.to]) {
        out[comp[e.from]].emplace_back(comp[e.to],
                                       e.label != kEpsilon && is_pad(e.label) ? 1 : 0);
      }
    }
    std::size_t result = 0;
    for (std::size_t c = 0; c < ncomp; ++c) {
      for (auto const& [d, w] : out[c]) {
        best[c] = std::max(best[c], best[d] + w);
      }
    }
    for (auto s : t.initial()) {
      result = std::max(result, best[comp[s]]);
    }
    if (result > cap) {
      return std::nullopt;
    }
    return result;
  }

  namespace detail {
    inline Dfa live_dfa(PairRelation const& m, std::vector<char>& live) {
      Dfa d = minimize(to_dfa(intersect(m.fsa(), well_padded(m.base()).fsa())));
      live  = d.live();
      return d;
    }
  }  // namespace detail

  /// M (.) N: pairs (w1 w1', w2 w2') with (w1, w2) in M and (w1', w2') in N.
  /// Requires ||w1| - |w2|| <= C on M; a violation found while building
  /// throws PreconditionError.
  inline PairRelation padded_product(PairRelation const& m, PairRelation const& nrel, std::size_t c) {
    check_same_alphabet(m.base(), nrel.base());
    Alphabet const    base = m.base();
    std::size_t const n    = base.size();
    Symbol const      pad  = pad_of(n);
    std::vector<char> mlive, nlive;
    Dfa const         dm = detail::live_dfa(m, mlive);
    Dfa const         dn = detail::live_dfa(nrel, nlive);
    if (!mlive[dm.start] || !nlive[dn.start]) {
      return PairRelation(base, Fsa::nothing(base.padded()));
    }
    // Key layout: [ms, ns, phase_left, phase_right, which_queue, q...]
    // phase: 0 feeding M, 1 feeding N, 2 stream ended. which_queue: 0 left,
    // 1 right. Only one queue is ever nonempty.
    constexpr Symbol kDead = kEpsilon;
    struct St {
      Symbol             ms, ns, pl, pr, wq;
      std::deque<Symbol> q;
    };
    auto decode = [](Key const& k) {
      St s{k[0], k[1], k[2], k[3], k[4], {}};
      s.q.assign(k.begin() + 5, k.end());
      return s;
    };
    auto encode = [](St const& s) {
      Key k{s.ms, s.ns, s.pl, s.pr, s.wq};
      k.insert(k.end(), s.q.begin(), s.q.end());
      return k;
    };
    // Feeds N whatever pairs are available; `final` means both streams are
    // exhausted.
    auto drain = [&](St& s, bool final) {
      while (s.ns != kDead) {
        bool   lq = s.wq == 0 && !s.q.empty();
        bool   rq = s.wq == 1 && !s.q.empty();
        bool   le = !lq && (s.pl == 2 || final);
        bool   re = !rq && (s.pr == 2 || final);
        if ((!lq && !le) || (!rq && !re) || (le && re)) {
          return;
        }
        Symbol x = lq ? s.q.front() : pad;
        Symbol y = rq ? s.q.front() : pad;
        if (lq || rq) {
          s.q.pop_front();
        }
        s.ns = dn.next(s.ns, pair_symbol(n, x, y));
        if (!nlive[s.ns]) {
          s.ns = kDead;
        }
      }
    };
    Fsa f = explore(
        base.padded(),
        {Key{dm.start, dn.start, 0, 0, 0}},
        [&](Key const& k, auto emit) {
          St const s = decode(k);
          if (s.ms == kDead || s.ns == kDead) {
            return;
          }
          // switch guesses
          if (s.pl == 0) {
            St t = s;
            t.pl = 1;
            emit(kEpsilon, encode(t));
          }
          if (s.pr == 0) {
            St t = s;
            t.pr = 1;
            emit(kEpsilon, encode(t));
          }
          for (Symbol p = 0; p < base.padded().size(); ++p) {
            Symbol x = pair_left(n, p), y = pair_right(n, p);
            if ((s.pl == 2 && x != pad) || (s.pr == 2 && y != pad)) {
              continue;
            }
            St t = s;
            if (x == pad) {
              t.pl = 2;
            }
            if (y == pad) {
              t.pr = 2;
            }
            // M consumes the part of this letter addressed to it.
            bool mx = s.pl == 0 && x != pad;
            bool my = s.pr == 0 && y != pad;
            if (mx || my) {
              t.ms = dm.next(t.ms, pair_symbol(n, mx ? x : pad, my ? y : pad));
              if (!mlive[t.ms]) {
                continue;
              }
            }
            // symbols addressed to N
            if (s.pl == 1 && x != pad) {
              if (t.wq == 1 && !t.q.empty()) {
                // right symbol waiting: N may read directly
                t.ns = dn.next(t.ns, pair_symbol(n, x, t.q.front()));
                t.q.pop_front();
                if (!nlive[t.ns]) {
                  continue;
                }
              } else {
                t.wq = 0;
                t.q.push_back(x);
              }
            }
            if (s.pr == 1 && y != pad) {
              if (t.wq == 0 && !t.q.empty()) {
                t.ns = dn.next(t.ns, pair_symbol(n, t.q.front(), y));
                t.q.pop_front();
                if (!nlive[t.ns]) {
                  continue;
                }
              } else {
                t.wq = 1;
                t.q.push_back(y);
              }
            }
            drain(t, false);
            if (t.ns == kDead) {
              continue;
            }
            if (t.q.size() > c) {
              throw PreconditionError("padded_product: left relation exceeds difference bound "
                                      + std::to_string(c));
            }
            if (t.q.empty()) {
              t.wq = 0;
            }
            emit(p, encode(t));
          }
        },
        [&](Key const& k) {
          St s = decode(k);
          if (s.ms == kDead || s.ns == kDead || !dm.accepting[s.ms]) {
            return false;
          }
          drain(s, true);
          return s.ns != kDead && s.q.empty() && dn.accepting[s.ns] != 0;
        });
    return PairRelation(base, determinize_minimize(intersect(f, well_padded(base).fsa())));
  }

  /// Pairs (u, w) such that (u, v) in M and (v, w) in N for some v. Requires
  /// |v| - |u| <= C on M; a violation found while building throws.
  inline PairRelation compose(PairRelation const& m, PairRelation const& nrel, std::size_t c) {
    check_same_alphabet(m.base(), nrel.base());
    Alphabet const    base = m.base();
    std::size_t const n    = base.size();
    Symbol const      pad  = pad_of(n);
    std::vector<char> mlive, nlive;
    Dfa const         dm = detail::live_dfa(m, mlive);
    Dfa const         dn = detail::live_dfa(nrel, nlive);
    if (!mlive[dm.start] || !nlive[dn.start]) {
      return PairRelation(base, Fsa::nothing(base.padded()));
    }
    // Key: [ms, ns, v_ended, tail_steps]; tail steps are epsilon moves taken
    // after the input where only the middle word continues.
    auto step = [&](Key const& k, Symbol x, Symbol y, Symbol z, Key& out) {
      Symbol ms = k[0], ns = k[1];
      if (k[2] && y != pad) {
        return false;
      }
      if (!(x == pad && y == pad)) {
        ms = dm.next(ms, pair_symbol(n, x, y));
        if (!mlive[ms]) {
          return false;
        }
      }
      if (!(y == pad && z == pad)) {
        ns = dn.next(ns, pair_symbol(n, y, z));
        if (!nlive[ns]) {
          return false;
        }
      }
      out = Key{ms, ns, (k[2] || y == pad) ? 1u : 0u, k[3]};
      return true;
    };
    Fsa f = explore(
        base.padded(),
        {Key{dm.start, dn.start, 0, 0}},
        [&](Key const& k, auto emit) {
          Key out;
          if (k[3] == 0) {
            for (Symbol p = 0; p < base.padded().size(); ++p) {
              Symbol x = pair_left(n, p), z = pair_right(n, p);
              for (Symbol y = 0; y <= n; ++y) {
                if (step(k, x, y, z, out)) {
                  emit(p, out);
                }
              }
            }
          }
          if (!k[2]) {
            for (Symbol y = 0; y < n; ++y) {
              if (step(k, pad, y, pad, out)) {
                out[3] = k[3] + 1;
                if (out[3] > c) {
                  throw PreconditionError("compose: left relation exceeds difference bound "
                                          + std::to_string(c));
                }
                emit(kEpsilon, out);
              }
            }
          }
        },
        [&](Key const& k) { return dm.accepting[k[0]] && dn.accepting[k[1]]; });
    return PairRelation(base, determinize_minimize(intersect(f, well_padded(base).fsa())));
  }

  namespace detail {
    /// apply_word on a prepared automaton: `d` over the padded alphabet of a
    /// base of size n, `live` its live-state table.
    inline Fsa apply_dfa(Alphabet const& base, Dfa const& d, std::vector<char> const& live, Word const& w) {
      std::size_t const n   = base.size();
      Symbol const      pad = pad_of(n);
      // Key: [state, position in w, v_ended]
      return explore(
          base,
          {Key{d.start, 0, 0}},
          [&](Key const& k, auto emit) {
            Symbol x        = k[1] < w.size() ? w[k[1]] : pad;
            Symbol next_pos = k[1] < w.size() ? k[1] + 1 : k[1];
            if (!k[2]) {
              for (Symbol y = 0; y < n; ++y) {
                State s = d.next(k[0], pair_symbol(n, x, y));
                if (live[s]) {
                  emit(y, Key{s, next_pos, 0});
                }
              }
            }
            if (x != pad) {
              State s = d.next(k[0], pair_symbol(n, x, pad));
              if (live[s]) {
                emit(kEpsilon, Key{s, next_pos, 1});
              }
            }
          },
          [&](Key const& k) { return k[1] == w.size() && d.accepting[k[0]] != 0; });
    }
  }  // namespace detail

  /// Words v with (w, v) in M.
  inline Fsa apply_word(PairRelation const& m, Word const& w) {
    if (!m.base().contains(w)) {
      throw AlphabetMismatch("apply_word: word not over the base alphabet");
    }
    std::vector<char> live;
    Dfa const         d = detail::live_dfa(m, live);
    return detail::apply_dfa(m.base(), d, live, w);
  }

  /// Re-expresses a relation over a larger base alphabet, matching letters by
  /// name.
  inline PairRelation embed(PairRelation const& m, Alphabet const& to) {
    std::size_t const   n  = m.base().size();
    std::size_t const   n2 = to.size();
    std::vector<Symbol> id(n + 1);
    for (Symbol a = 0; a < n; ++a) {
      auto s = to.find(m.base().name(a));
      if (!s) {
        throw AlphabetMismatch("letter '" + m.base().name(a) + "' missing from target alphabet");
      }
      id[a] = *s;
    }
    id[n] = pad_of(n2);
    return PairRelation(to, map_symbols(m.fsa(), to.padded(), [&](Symbol p) -> std::optional<Symbol> {
                          return pair_symbol(n2, id[pair_left(n, p)], id[pair_right(n, p)]);
                        }));
  }

}  // namespace autsem

#endif  // AUTSEM_PADREL_HPP
