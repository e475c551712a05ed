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
 * Generalized sequential machines: nondeterministic letter-to-word
 * transducers with nonempty outputs, their image map on languages (eta) and
 * on padded pair relations (zeta).
 */

#ifndef AUTSEM_GSM_HPP
#define AUTSEM_GSM_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "explore.hpp"
#include "fsa.hpp"
#include "padrel.hpp"

namespace autsem {

  struct GsmEdge {
    State  from;
    Symbol input;
    State  to;
    Word   output;

    auto operator<=>(GsmEdge const&) const = default;
  };

  class Gsm {
   public:
    Gsm(Alphabet             input,
        Alphabet             output,
        std::size_t          states,
        State                initial,
        std::vector<State>   terminals,
        std::vector<GsmEdge> edges)
        : input_(std::move(input)),
          output_(std::move(output)),
          states_(states),
          initial_(initial),
          terminals_(std::move(terminals)),
          edges_(std::move(edges)) {
      if (initial_ >= states_) {
        throw PreconditionError("gsm initial state out of range");
      }
      for (auto t : terminals_) {
        if (t >= states_) {
          throw PreconditionError("gsm terminal state out of range");
        }
      }
      for (auto const& e : edges_) {
        if (e.from >= states_ || e.to >= states_) {
          throw PreconditionError("gsm edge state out of range");
        }
        if (e.input >= input_.size()) {
          throw AlphabetMismatch("gsm edge input letter out of range");
        }
        if (e.output.empty()) {
          throw PreconditionError("gsm outputs must be nonempty words");
        }
        if (!output_.contains(e.output)) {
          throw AlphabetMismatch("gsm edge output not over the output alphabet");
        }
      }
      std::sort(terminals_.begin(), terminals_.end());
      terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
      std::sort(edges_.begin(), edges_.end());
      edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
      by_state_.assign(states_, {});
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        by_state_[edges_[i].from].push_back(i);
      }
      terminal_.assign(states_, 0);
      for (auto t : terminals_) {
        terminal_[t] = 1;
      }
    }

    Alphabet const& input() const noexcept {
      return input_;
    }
    Alphabet const& output() const noexcept {
      return output_;
    }
    std::size_t states() const noexcept {
      return states_;
    }
    State initial() const noexcept {
      return initial_;
    }
    std::vector<State> const& terminals() const noexcept {
      return terminals_;
    }
    std::vector<GsmEdge> const& edges() const noexcept {
      return edges_;
    }
    /// Indices into edges() leaving q.
    std::vector<std::size_t> const& out(State q) const {
      return by_state_.at(q);
    }
    bool is_terminal(State q) const {
      return terminal_.at(q) != 0;
    }
    std::size_t max_output() const {
      std::size_t m = 0;
      for (auto const& e : edges_) {
        m = std::max(m, e.output.size());
      }
      return m;
    }

   private:
    Alphabet                              input_;
    Alphabet                              output_;
    std::size_t                           states_;
    State                                 initial_;
    std::vector<State>                    terminals_;
    std::vector<GsmEdge>                  edges_;
    std::vector<std::vector<std::size_t>> by_state_;
    std::vector<char>                     terminal_;
  };

  /// The image of X: outputs of successful paths reading a word of X.
  inline Fsa eta(Gsm const& g, Fsa const& x) {
    check_same_alphabet(g.input(), x.alphabet());
    Dfa const  d    = minimize(to_dfa(x));
    auto const live = d.live();
    // Key: [q, xs, edge + 1 or 0, position in its output, moved]
    return explore(
        g.output(),
        {Key{g.initial(), d.start, 0, 0, 0}},
        [&](Key const& k, auto emit) {
          if (k[2] != 0) {
            GsmEdge const& e = g.edges()[k[2] - 1];
            if (k[3] + 1 < e.output.size()) {
              emit(e.output[k[3]], Key{k[0], k[1], k[2], k[3] + 1, 1});
            } else {
              emit(e.output[k[3]], Key{e.to, k[1], 0, 0, 1});
            }
            return;
          }
          for (auto i : g.out(k[0])) {
            GsmEdge const& e  = g.edges()[i];
            State const    xs = d.next(k[1], e.input);
            if (!live[xs]) {
              continue;
            }
            if (e.output.size() == 1) {
              emit(e.output[0], Key{e.to, xs, 0, 0, 1});
            } else {
              emit(e.output[0], Key{k[0], xs, std::uint32_t(i + 1), 1, 1});
            }
          }
        },
        [&](Key const& k) { return k[2] == 0 && k[4] == 1 && g.is_terminal(k[0]) && d.accepting[k[1]]; });
  }

  /// Least C <= cap with ||out(p1)| - |out(p2)|| <= C for all path pairs of
  /// equal input length; nullopt when no such C exists.
  inline std::optional<std::size_t> bounded_output_variance(Gsm const& g, std::size_t cap = 64) {
    // Breadth-first over (q1, q2, difference); all state pairs may start.
    using Node = std::tuple<State, State, long>;
    std::set<Node>    seen;
    std::vector<Node> todo;
    for (State a = 0; a < g.states(); ++a) {
      for (State b = 0; b < g.states(); ++b) {
        seen.emplace(a, b, 0);
        todo.emplace_back(a, b, 0);
      }
    }
    std::size_t best = 0;
    while (!todo.empty()) {
      auto [a, b, d] = todo.back();
      todo.pop_back();
      for (auto i : g.out(a)) {
        for (auto j : g.out(b)) {
          auto const& e = g.edges()[i];
          auto const& f = g.edges()[j];
          long const  n = d + long(e.output.size()) - long(f.output.size());
          std::size_t const mag = std::size_t(n < 0 ? -n : n);
          if (mag > cap) {
            return std::nullopt;
          }
          best = std::max(best, mag);
          if (seen.emplace(e.to, f.to, n).second) {
            todo.emplace_back(e.to, f.to, n);
          }
        }
      }
    }
    return best;
  }

  /// The pair image of M: (w, z) with w in eta(u), z in eta(v) for some
  /// (u, v) in M. Throws unless bounded_output_variance(g) <= c.
  inline PairRelation zeta(Gsm const& g, PairRelation const& m, std::size_t c) {
    check_same_alphabet(g.input(), m.base());
    auto const var = bounded_output_variance(g, c);
    if (!var) {
      throw PreconditionError("zeta: gsm output variance exceeds " + std::to_string(c));
    }
    Alphabet const&   in   = g.input();
    Alphabet const&   outa = g.output();
    std::size_t const n    = in.size();
    std::size_t const k    = outa.size();
    Symbol const      ipad = pad_of(n);
    Symbol const      opad = pad_of(k);
    std::size_t const limit = c + g.max_output() + 1;
    std::vector<char> live;
    Dfa const         dm = detail::live_dfa(m, live);

    // Key: [ms, q1, q2, phase1, phase2, |buf1|, buf1..., buf2...]; a phase
    // is 0 before the first letter, 1 while reading and 2 once finished.
    struct View {
      std::uint32_t ms, q[2], phase[2];
      Word          buf[2];
    };
    auto unpack = [](Key const& key) {
      View v{key[0], {key[1], key[2]}, {key[3], key[4]}, {}};
      std::size_t const l1 = key[5];
      v.buf[0].assign(key.begin() + 6, key.begin() + 6 + long(l1));
      v.buf[1].assign(key.begin() + 6 + long(l1), key.end());
      return v;
    };
    auto pack = [&](View const& v) {
      for (auto const& b : v.buf) {
        if (b.size() > limit) {
          throw PreconditionError("zeta: output buffer exceeded the variance bound");
        }
      }
      Key key{v.ms, v.q[0], v.q[1], v.phase[0], v.phase[1], std::uint32_t(v.buf[0].size())};
      key.insert(key.end(), v.buf[0].begin(), v.buf[0].end());
      key.insert(key.end(), v.buf[1].begin(), v.buf[1].end());
      return key;
    };
    auto can_emit = [](View const& v, int s) {
      return !v.buf[s].empty() || v.phase[s] == 2;
    };

    Fsa f = explore(
        outa.padded(),
        {pack(View{dm.start, {g.initial(), g.initial()}, {0, 0}, {}})},
        [&](Key const& key, auto emit) {
          View const v = unpack(key);
          if (can_emit(v, 0) && can_emit(v, 1) && !(v.buf[0].empty() && v.buf[1].empty())) {
            View   w = v;
            Symbol o[2];
            for (int s = 0; s < 2; ++s) {
              if (w.buf[s].empty()) {
                o[s] = opad;
              } else {
                o[s] = w.buf[s].front();
                w.buf[s].erase(w.buf[s].begin());
              }
            }
            emit(pair_symbol(k, o[0], o[1]), pack(w));
            return;
          }
          // Declare a side finished: it has read something, its buffer is
          // empty and it sits in a terminal state.
          for (int s = 0; s < 2; ++s) {
            if (v.phase[s] == 1 && v.buf[s].empty() && g.is_terminal(v.q[s])) {
              View w    = v;
              w.phase[s] = 2;
              emit(kEpsilon, pack(w));
            }
          }
          // Consume one letter of M on both tracks.
          for (Symbol p = 0; p < in.padded().size(); ++p) {
            State const ms = dm.next(v.ms, p);
            if (!live[ms]) {
              continue;
            }
            Symbol const x[2] = {pair_left(n, p), pair_right(n, p)};
            bool         ok   = true;
            for (int s = 0; s < 2; ++s) {
              if (v.phase[s] == 2 && x[s] != ipad) {
                ok = false;
              }
              if (v.phase[s] != 2 && v.buf[s].empty() && x[s] == ipad) {
                ok = false;
              }
            }
            if (!ok) {
              continue;
            }
            std::vector<std::size_t> choice[2];
            for (int s = 0; s < 2; ++s) {
              if (x[s] == ipad) {
                choice[s].push_back(SIZE_MAX);
              } else {
                for (auto i : g.out(v.q[s])) {
                  if (g.edges()[i].input == x[s]) {
                    choice[s].push_back(i);
                  }
                }
              }
            }
            for (auto i : choice[0]) {
              for (auto j : choice[1]) {
                View                      w = v;
                w.ms                        = ms;
                std::size_t const pick[2] = {i, j};
                for (int s = 0; s < 2; ++s) {
                  if (pick[s] != SIZE_MAX) {
                    GsmEdge const& e = g.edges()[pick[s]];
                    w.q[s]           = e.to;
                    w.phase[s]        = 1;
                    w.buf[s].insert(w.buf[s].end(), e.output.begin(), e.output.end());
                  }
                }
                emit(kEpsilon, pack(w));
              }
            }
          }
        },
        [&](Key const& key) {
          View const v = unpack(key);
          return v.phase[0] == 2 && v.phase[1] == 2 && v.buf[0].empty() && v.buf[1].empty() && dm.accepting[v.ms];
        });
    return PairRelation(outa, determinize_minimize(intersect(f, well_padded(outa).fsa())));
  }

}  // namespace autsem

#endif  // AUTSEM_GSM_HPP
