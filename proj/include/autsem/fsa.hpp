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
 * Finite automata over an arbitrary finite alphabet.
 *
 * An Fsa is a nondeterministic automaton that may carry epsilon transitions.
 * Algorithms that need determinism work on the dense Dfa representation,
 * which is always complete (a sink state absorbs missing transitions).
 * Every value is immutable once constructed.
 */

#ifndef AUTSEM_FSA_HPP
#define AUTSEM_FSA_HPP

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "alphabet.hpp"

namespace autsem {

  using State = std::uint32_t;

  struct Transition {
    State  from;
    Symbol label;  // kEpsilon for an epsilon move
    State  to;

    friend auto operator<=>(Transition const&, Transition const&) = default;
  };

  class Fsa;
  struct Dfa;
  Fsa to_fsa(Dfa const& d);

  class Fsa {
   public:
    Fsa(Alphabet                alphabet,
        std::size_t             states,
        std::vector<State>      initial,
        std::vector<State>      finals,
        std::vector<Transition> transitions)
        : alphabet_(std::move(alphabet)),
          states_(states),
          initial_(std::move(initial)),
          finals_(std::move(finals)),
          transitions_(std::move(transitions)) {
      normalise(initial_);
      normalise(finals_);
      std::sort(transitions_.begin(), transitions_.end());
      transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                         transitions_.end());
      for (auto s : initial_) {
        check_state(s);
      }
      for (auto s : finals_) {
        check_state(s);
      }
      for (auto const& t : transitions_) {
        check_state(t.from);
        check_state(t.to);
        if (t.label != kEpsilon && t.label >= alphabet_.size()) {
          throw PreconditionError("transition label out of alphabet range");
        }
      }
    }

    /// The empty language.
    static Fsa nothing(Alphabet a) {
      return Fsa(std::move(a), 1, {0}, {}, {});
    }

    /// The language {epsilon}.
    static Fsa empty_word(Alphabet a) {
      return Fsa(std::move(a), 1, {0}, {0}, {});
    }

    static Fsa word(Alphabet a, Word const& w) {
      if (!a.contains(w)) {
        throw AlphabetMismatch("word is not over the automaton alphabet");
      }
      std::vector<Transition> ts;
      for (std::size_t i = 0; i < w.size(); ++i) {
        ts.push_back({State(i), w[i], State(i + 1)});
      }
      return Fsa(std::move(a), w.size() + 1, {0}, {State(w.size())}, std::move(ts));
    }

    /// A finite language, as a trie.
    static Fsa words(Alphabet a, std::vector<Word> const& ws) {
      std::vector<Transition>                         ts;
      std::vector<State>                              finals;
      std::vector<std::unordered_map<Symbol, State>> children(1);
      for (auto const& w : ws) {
        if (!a.contains(w)) {
          throw AlphabetMismatch("word is not over the automaton alphabet");
        }
        State cur = 0;
        for (auto x : w) {
          auto it = children[cur].find(x);
          if (it == children[cur].end()) {
            State nxt = State(children.size());
            children[cur].emplace(x, nxt);
            children.emplace_back();
            ts.push_back({cur, x, nxt});
            cur = nxt;
          } else {
            cur = it->second;
          }
        }
        finals.push_back(cur);
      }
      return Fsa(std::move(a), children.size(), {0}, std::move(finals), std::move(ts));
    }

    /// One-letter words drawn from `letters`.
    static Fsa letters(Alphabet a, std::vector<Symbol> const& letters) {
      std::vector<Transition> ts;
      for (auto x : letters) {
        if (x >= a.size()) {
          throw AlphabetMismatch("letter out of alphabet range");
        }
        ts.push_back({0, x, 1});
      }
      return Fsa(std::move(a), 2, {0}, {1}, std::move(ts));
    }

    /// A*.
    static Fsa universal(Alphabet a) {
      std::vector<Transition> ts;
      for (Symbol x = 0; x < a.size(); ++x) {
        ts.push_back({0, x, 0});
      }
      return Fsa(std::move(a), 1, {0}, {0}, std::move(ts));
    }

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t states() const noexcept {
      return states_;
    }
    std::vector<State> const& initial() const noexcept {
      return initial_;
    }
    std::vector<State> const& finals() const noexcept {
      return finals_;
    }
    std::vector<Transition> const& transitions() const noexcept {
      return transitions_;
    }

    /// True when produced by determinization: one initial state, no epsilon
    /// moves and exactly one transition per (state, symbol).
    bool is_deterministic() const noexcept {
      return deterministic_;
    }

    bool is_final(State s) const noexcept {
      return std::binary_search(finals_.begin(), finals_.end(), s);
    }

    bool accepts(Word const& w) const {
      if (!alphabet_.contains(w)) {
        throw AlphabetMismatch("word is not over the automaton alphabet");
      }
      auto const adj = adjacency();
      auto       cur = closure(adj, initial_);
      for (auto x : w) {
        std::vector<State> nxt;
        for (auto s : cur) {
          for (auto const& [label, to] : adj[s]) {
            if (label == x) {
              nxt.push_back(to);
            }
          }
        }
        cur = closure(adj, nxt);
        if (cur.empty()) {
          return false;
        }
      }
      return std::any_of(cur.begin(), cur.end(), [this](State s) { return is_final(s); });
    }

    using Adjacency = std::vector<std::vector<std::pair<Symbol, State>>>;

    /// Per-state outgoing edges sorted by label (epsilon sorts last).
    Adjacency adjacency() const {
      Adjacency adj(states_);
      for (auto const& t : transitions_) {
        adj[t.from].emplace_back(t.label, t.to);
      }
      for (auto& v : adj) {
        std::sort(v.begin(), v.end());
      }
      return adj;
    }

    /// Sorted epsilon closure of a state set.
    static std::vector<State> closure(Adjacency const& adj, std::vector<State> const& seeds) {
      std::vector<char>  seen(adj.size(), 0);
      std::vector<State> stack;
      std::vector<State> out;
      for (auto s : seeds) {
        if (!seen[s]) {
          seen[s] = 1;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (auto it = adj[s].rbegin(); it != adj[s].rend() && it->first == kEpsilon; ++it) {
          if (!seen[it->second]) {
            seen[it->second] = 1;
            stack.push_back(it->second);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    friend Fsa to_fsa(Dfa const& d);

    static void normalise(std::vector<State>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    void check_state(State s) const {
      if (s >= states_) {
        throw PreconditionError("state index " + std::to_string(s) + " out of range");
      }
    }

    Alphabet                alphabet_;
    std::size_t             states_;
    std::vector<State>      initial_;
    std::vector<State>      finals_;
    std::vector<Transition> transitions_;
    bool                    deterministic_ = false;
  };

  /// Complete deterministic automaton with a dense transition table.
  struct Dfa {
    Alphabet           alphabet;
    std::size_t        states = 0;
    State              start  = 0;
    std::vector<State> delta;
    std::vector<char>  accepting;

    std::size_t letters() const noexcept {
      return alphabet.size();
    }
    State next(State s, Symbol a) const noexcept {
      return delta[std::size_t(s) * letters() + a];
    }
    State run(Word const& w) const noexcept {
      State s = start;
      for (auto a : w) {
        s = next(s, a);
      }
      return s;
    }
    bool accepts(Word const& w) const noexcept {
      return accepting[run(w)] != 0;
    }

    /// live[s] is true when an accepting state is reachable from s.
    std::vector<char> live() const {
      std::vector<std::vector<State>> preds(states);
      for (State s = 0; s < states; ++s) {
        for (Symbol a = 0; a < letters(); ++a) {
          preds[next(s, a)].push_back(s);
        }
      }
      std::vector<char>  out(states, 0);
      std::vector<State> stack;
      for (State s = 0; s < states; ++s) {
        if (accepting[s]) {
          out[s] = 1;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        State t = stack.back();
        stack.pop_back();
        for (auto s : preds[t]) {
          if (!out[s]) {
            out[s] = 1;
            stack.push_back(s);
          }
        }
      }
      return out;
    }
  };

  inline void check_same_alphabet(Alphabet const& x, Alphabet const& y) {
    if (!(x == y)) {
      throw AlphabetMismatch("operands are over different alphabets");
    }
  }

  /// Subset construction; the result is complete and contains only
  /// reachable states.
  inline Dfa determinize(Fsa const& x) {
    auto const        adj = x.adjacency();
    std::size_t const k   = x.alphabet().size();

    std::unordered_map<std::vector<State>, State, detail::WordHash> ids;
    std::vector<std::vector<State>>                                 subsets;
    auto intern = [&](std::vector<State> s) -> State {
      auto it = ids.find(s);
      if (it != ids.end()) {
        return it->second;
      }
      State id = State(subsets.size());
      ids.emplace(s, id);
      subsets.push_back(std::move(s));
      return id;
    };

    Dfa d{x.alphabet(), 0, 0, {}, {}};
    d.start = intern(Fsa::closure(adj, x.initial()));
    std::vector<std::pair<Symbol, State>> moves;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      moves.clear();
      for (auto s : subsets[i]) {
        for (auto const& e : adj[s]) {
          if (e.first != kEpsilon) {
            moves.push_back(e);
          }
        }
      }
      std::sort(moves.begin(), moves.end());
      std::vector<State> row(k, kEpsilon);
      std::size_t        j = 0;
      while (j < moves.size()) {
        Symbol             a = moves[j].first;
        std::vector<State> targets;
        while (j < moves.size() && moves[j].first == a) {
          targets.push_back(moves[j].second);
          ++j;
        }
        row[a] = intern(Fsa::closure(adj, targets));
      }
      for (auto& r : row) {
        if (r == kEpsilon) {
          r = intern({});
        }
      }
      d.delta.insert(d.delta.end(), row.begin(), row.end());
    }
    d.states = subsets.size();
    d.accepting.resize(d.states, 0);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      d.accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(), [&](State s) {
        return x.is_final(s);
      });
    }
    return d;
  }

  namespace detail {
    /// Renumbers reachable states in breadth-first, symbol order.
    inline Dfa canonical_order(Dfa const& d) {
      std::vector<State> id(d.states, kEpsilon);
      std::vector<State> order;
      id[d.start] = 0;
      order.push_back(d.start);
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol a = 0; a < d.letters(); ++a) {
          State t = d.next(order[i], a);
          if (id[t] == kEpsilon) {
            id[t] = State(order.size());
            order.push_back(t);
          }
        }
      }
      Dfa out{d.alphabet, order.size(), 0, {}, {}};
      out.delta.resize(order.size() * d.letters());
      out.accepting.resize(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        out.accepting[i] = d.accepting[order[i]];
        for (Symbol a = 0; a < d.letters(); ++a) {
          out.delta[i * d.letters() + a] = id[d.next(order[i], a)];
        }
      }
      return out;
    }
  }  // namespace detail

  /// Hopcroft partition refinement. The result is minimal, complete and
  /// numbered canonically, so equal languages give identical tables.
  inline Dfa minimize(Dfa const& input) {
    Dfa const         d = detail::canonical_order(input);
    std::size_t const n = d.states;
    std::size_t const k = d.letters();

    // Inverse transitions in CSR form, indexed by (symbol, target).
    std::vector<std::size_t> offset(k * n + 1, 0);
    for (State s = 0; s < n; ++s) {
      for (Symbol a = 0; a < k; ++a) {
        ++offset[std::size_t(a) * n + d.next(s, a) + 1];
      }
    }
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<State>       preds(n * k);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (State s = 0; s < n; ++s) {
      for (Symbol a = 0; a < k; ++a) {
        preds[fill[std::size_t(a) * n + d.next(s, a)]++] = s;
      }
    }

    std::vector<State>       elems(n);
    std::vector<std::size_t> loc(n);
    std::vector<State>       block(n);
    std::vector<std::size_t> first;
    std::vector<std::size_t> past;
    std::vector<std::size_t> marked;

    {
      std::size_t pos = 0;
      for (int acc = 1; acc >= 0; --acc) {
        std::size_t begin = pos;
        for (State s = 0; s < n; ++s) {
          if ((d.accepting[s] != 0) == (acc == 1)) {
            elems[pos] = s;
            loc[s]     = pos;
            block[s]   = State(first.size());
            ++pos;
          }
        }
        if (pos > begin) {
          first.push_back(begin);
          past.push_back(pos);
          marked.push_back(0);
        }
      }
    }

    std::vector<char>                      in_work(first.size() * k, 0);
    std::vector<std::pair<State, Symbol>>  work;
    if (first.size() == 2) {
      State smaller = (past[0] - first[0] <= past[1] - first[1]) ? 0 : 1;
      for (Symbol a = 0; a < k; ++a) {
        work.emplace_back(smaller, a);
        in_work[smaller * k + a] = 1;
      }
    }

    std::vector<State> splitter;
    std::vector<State> touched;
    while (!work.empty()) {
      auto [b, a] = work.back();
      work.pop_back();
      in_work[std::size_t(b) * k + a] = 0;

      splitter.clear();
      for (std::size_t i = first[b]; i < past[b]; ++i) {
        State t = elems[i];
        for (std::size_t j = offset[std::size_t(a) * n + t]; j < offset[std::size_t(a) * n + t + 1]; ++j) {
          splitter.push_back(preds[j]);
        }
      }
      touched.clear();
      for (auto s : splitter) {
        State       bs   = block[s];
        std::size_t dest = first[bs] + marked[bs];
        if (loc[s] < dest) {
          continue;  // already marked
        }
        if (marked[bs] == 0) {
          touched.push_back(bs);
        }
        State other            = elems[dest];
        elems[dest]            = s;
        elems[loc[s]]          = other;
        loc[other]             = loc[s];
        loc[s]                 = dest;
        ++marked[bs];
      }
      for (auto bs : touched) {
        std::size_t m = marked[bs];
        marked[bs]    = 0;
        if (m == past[bs] - first[bs]) {
          continue;
        }
        State nb = State(first.size());
        first.push_back(first[bs]);
        past.push_back(first[bs] + m);
        marked.push_back(0);
        first[bs] = first[bs] + m;
        for (std::size_t i = first[nb]; i < past[nb]; ++i) {
          block[elems[i]] = nb;
        }
        in_work.resize(first.size() * k, 0);
        std::size_t size_old = past[bs] - first[bs];
        std::size_t size_new = past[nb] - first[nb];
        for (Symbol c = 0; c < k; ++c) {
          if (in_work[std::size_t(bs) * k + c]) {
            work.emplace_back(nb, c);
            in_work[std::size_t(nb) * k + c] = 1;
          } else {
            State pick = size_new <= size_old ? nb : bs;
            work.emplace_back(pick, c);
            in_work[std::size_t(pick) * k + c] = 1;
          }
        }
      }
    }

    Dfa q{d.alphabet, first.size(), block[d.start], {}, {}};
    q.delta.resize(first.size() * k);
    q.accepting.resize(first.size());
    for (std::size_t b = 0; b < first.size(); ++b) {
      State rep      = elems[first[b]];
      q.accepting[b] = d.accepting[rep];
      for (Symbol a = 0; a < k; ++a) {
        q.delta[b * k + a] = block[d.next(rep, a)];
      }
    }
    return detail::canonical_order(q);
  }

  inline Fsa to_fsa(Dfa const& d) {
    std::vector<Transition> ts;
    ts.reserve(d.states * d.letters());
    std::vector<State> finals;
    for (State s = 0; s < d.states; ++s) {
      if (d.accepting[s]) {
        finals.push_back(s);
      }
      for (Symbol a = 0; a < d.letters(); ++a) {
        ts.push_back({s, a, d.next(s, a)});
      }
    }
    Fsa f(d.alphabet, d.states, {d.start}, std::move(finals), std::move(ts));
    f.deterministic_ = true;
    return f;
  }

  /// Dense view of an automaton; linear when it is already deterministic.
  inline Dfa to_dfa(Fsa const& x) {
    if (!x.is_deterministic()) {
      return determinize(x);
    }
    Dfa d{x.alphabet(), x.states(), x.initial().front(), {}, {}};
    d.delta.resize(x.states() * x.alphabet().size());
    for (auto const& t : x.transitions()) {
      d.delta[std::size_t(t.from) * d.letters() + t.label] = t.to;
    }
    d.accepting.assign(x.states(), 0);
    for (auto s : x.finals()) {
      d.accepting[s] = 1;
    }
    return d;
  }

  /// Deterministic, complete and minimal automaton for the same language.
  inline Fsa determinize_minimize(Fsa const& x) {
    return to_fsa(minimize(to_dfa(x)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean algebra
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Fsa disjoint_union(Fsa const& x, Fsa const& y, bool link_concat) {
      check_same_alphabet(x.alphabet(), y.alphabet());
      State const             off = State(x.states());
      std::vector<Transition> ts  = x.transitions();
      for (auto const& t : y.transitions()) {
        ts.push_back({t.from + off, t.label, t.to + off});
      }
      std::vector<State> init = x.initial();
      std::vector<State> fin;
      if (link_concat) {
        for (auto f : x.finals()) {
          for (auto i : y.initial()) {
            ts.push_back({f, kEpsilon, i + off});
          }
        }
      } else {
        fin = x.finals();
        for (auto i : y.initial()) {
          init.push_back(i + off);
        }
      }
      for (auto f : y.finals()) {
        fin.push_back(f + off);
      }
      return Fsa(x.alphabet(), x.states() + y.states(), std::move(init), std::move(fin), std::move(ts));
    }

    template <typename Accept>
    Dfa product(Dfa const& x, Dfa const& y, Accept accept) {
      check_same_alphabet(x.alphabet, y.alphabet);
      std::size_t const k = x.letters();
      std::unordered_map<std::uint64_t, State> ids;
      std::vector<std::pair<State, State>>     pairs;
      auto intern = [&](State a, State b) {
        std::uint64_t key = (std::uint64_t(a) << 32) | b;
        auto [it, inserted] = ids.emplace(key, State(pairs.size()));
        if (inserted) {
          pairs.emplace_back(a, b);
        }
        return it->second;
      };
      Dfa out{x.alphabet, 0, intern(x.start, y.start), {}, {}};
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        for (Symbol c = 0; c < k; ++c) {
          out.delta.push_back(intern(x.next(a, c), y.next(b, c)));
        }
      }
      out.states = pairs.size();
      for (auto [a, b] : pairs) {
        out.accepting.push_back(accept(x.accepting[a] != 0, y.accepting[b] != 0) ? 1 : 0);
      }
      return out;
    }
  }  // namespace detail

  inline Fsa union_of(Fsa const& x, Fsa const& y) {
    return detail::disjoint_union(x, y, false);
  }

  inline Fsa concat(Fsa const& x, Fsa const& y) {
    return detail::disjoint_union(x, y, true);
  }

  inline Fsa star(Fsa const& x) {
    State const             hub = State(x.states());
    std::vector<Transition> ts  = x.transitions();
    for (auto i : x.initial()) {
      ts.push_back({hub, kEpsilon, i});
    }
    for (auto f : x.finals()) {
      ts.push_back({f, kEpsilon, hub});
    }
    return Fsa(x.alphabet(), x.states() + 1, {hub}, {hub}, std::move(ts));
  }

  inline Fsa plus(Fsa const& x) {
    return concat(x, star(x));
  }

  inline Fsa intersect(Fsa const& x, Fsa const& y) {
    return to_fsa(detail::product(to_dfa(x), to_dfa(y), [](bool a, bool b) { return a && b; }));
  }

  inline Fsa complement(Fsa const& x) {
    Dfa d = to_dfa(x);
    for (auto& a : d.accepting) {
      a = a ? 0 : 1;
    }
    return to_fsa(d);
  }

  inline Fsa difference(Fsa const& x, Fsa const& y) {
    return to_fsa(detail::product(to_dfa(x), to_dfa(y), [](bool a, bool b) { return a && !b; }));
  }

  /// Union of many automata over one alphabet; `nothing` when the list is
  /// empty.
  inline Fsa union_all(Alphabet const& a, std::vector<Fsa> const& parts) {
    Fsa acc = Fsa::nothing(a);
    for (auto const& p : parts) {
      acc = union_of(acc, p);
    }
    return acc;
  }

  inline Fsa concat_all(std::vector<Fsa> const& parts) {
    if (parts.empty()) {
      throw PreconditionError("concat_all needs at least one operand");
    }
    Fsa acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = concat(acc, parts[i]);
    }
    return acc;
  }

  enum class Op { union_, concat, star, plus, intersect, complement, difference };

  /// Single dispatch point over the regular operations.
  inline Fsa combine(Op op, Fsa const& x, std::optional<Fsa> const& y = std::nullopt) {
    bool const unary = op == Op::star || op == Op::plus || op == Op::complement;
    if (unary && y) {
      throw PreconditionError("unary operation given a second operand");
    }
    if (!unary && !y) {
      throw PreconditionError("binary operation missing its second operand");
    }
    switch (op) {
      case Op::union_:
        return union_of(x, *y);
      case Op::concat:
        return concat(x, *y);
      case Op::star:
        return star(x);
      case Op::plus:
        return plus(x);
      case Op::intersect:
        return intersect(x, *y);
      case Op::complement:
        return complement(x);
      case Op::difference:
        return difference(x, *y);
    }
    throw PreconditionError("unknown operation");
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  inline bool is_empty(Fsa const& x) {
    auto const         adj = x.adjacency();
    std::vector<char>  seen(x.states(), 0);
    std::vector<State> stack(x.initial().begin(), x.initial().end());
    for (auto s : stack) {
      seen[s] = 1;
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      if (x.is_final(s)) {
        return false;
      }
      for (auto const& e : adj[s]) {
        if (!seen[e.second]) {
          seen[e.second] = 1;
          stack.push_back(e.second);
        }
      }
    }
    return true;
  }

  inline bool equivalent(Fsa const& x, Fsa const& y) {
    check_same_alphabet(x.alphabet(), y.alphabet());
    Dfa sym = detail::product(to_dfa(x), to_dfa(y), [](bool a, bool b) { return a != b; });
    return std::none_of(sym.accepting.begin(), sym.accepting.end(), [](char c) { return c != 0; });
  }

  /// Drops states that are unreachable or cannot reach a final state.
  /// The result need not be complete.
  inline Fsa trim(Fsa const& x) {
    auto const        adj = x.adjacency();
    std::vector<char> fwd(x.states(), 0);
    std::vector<char> bwd(x.states(), 0);
    std::vector<State> stack(x.initial().begin(), x.initial().end());
    for (auto s : stack) {
      fwd[s] = 1;
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto const& e : adj[s]) {
        if (!fwd[e.second]) {
          fwd[e.second] = 1;
          stack.push_back(e.second);
        }
      }
    }
    std::vector<std::vector<State>> radj(x.states());
    for (auto const& t : x.transitions()) {
      radj[t.to].push_back(t.from);
    }
    for (auto f : x.finals()) {
      bwd[f] = 1;
      stack.push_back(f);
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto p : radj[s]) {
        if (!bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
      }
    }
    std::vector<State> id(x.states(), kEpsilon);
    State              next = 0;
    for (State s = 0; s < x.states(); ++s) {
      if (fwd[s] && bwd[s]) {
        id[s] = next++;
      }
    }
    if (next == 0) {
      return Fsa::nothing(x.alphabet());
    }
    std::vector<Transition> ts;
    for (auto const& t : x.transitions()) {
      if (id[t.from] != kEpsilon && id[t.to] != kEpsilon) {
        ts.push_back({id[t.from], t.label, id[t.to]});
      }
    }
    std::vector<State> init, fin;
    for (auto s : x.initial()) {
      if (id[s] != kEpsilon) {
        init.push_back(id[s]);
      }
    }
    for (auto s : x.finals()) {
      if (id[s] != kEpsilon) {
        fin.push_back(id[s]);
      }
    }
    return Fsa(x.alphabet(), next, std::move(init), std::move(fin), std::move(ts));
  }

  /// True when the language is finite.
  inline bool is_finite(Fsa const& x) {
    Fsa t = trim(determinize_minimize(x));
    // colour: 0 unvisited, 1 on stack, 2 done
    auto const        adj = t.adjacency();
    std::vector<char> colour(t.states(), 0);
    std::vector<std::pair<State, std::size_t>> stack;
    for (auto root : t.initial()) {
      if (colour[root]) {
        continue;
      }
      stack.emplace_back(root, 0);
      colour[root] = 1;
      while (!stack.empty()) {
        auto& [s, i] = stack.back();
        if (i < adj[s].size()) {
          State nxt = adj[s][i++].second;
          if (colour[nxt] == 1) {
            return false;
          }
          if (colour[nxt] == 0) {
            colour[nxt] = 1;
            stack.emplace_back(nxt, 0);
          }
        } else {
          colour[s] = 2;
          stack.pop_back();
        }
      }
    }
    return true;
  }

  /// Default cap on enumeration output; AUTSEM_ENUM_CAP overrides it.
  inline std::size_t default_enum_cap() {
    if (char const* env = std::getenv("AUTSEM_ENUM_CAP")) {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return 1'000'000;
  }

  /// Enumerates accepted words of a Dfa; `visit` is called in shortlex order
  /// and may return false to stop early.
  template <typename Visit>
  void for_each_word(Dfa const& d, std::size_t max_len, Visit&& visit, std::size_t cap) {
    // reach[r][s]: some word of length exactly r leads from s to acceptance
    std::vector<std::vector<char>> reach(max_len + 1, std::vector<char>(d.states, 0));
    for (State s = 0; s < d.states; ++s) {
      reach[0][s] = d.accepting[s];
    }
    std::vector<std::vector<std::pair<Symbol, State>>> live_edges(d.states);
    auto const live = d.live();
    for (State s = 0; s < d.states; ++s) {
      for (Symbol a = 0; a < d.letters(); ++a) {
        State t = d.next(s, a);
        if (live[t]) {
          live_edges[s].emplace_back(a, t);
        }
      }
    }
    for (std::size_t r = 1; r <= max_len; ++r) {
      for (State s = 0; s < d.states; ++s) {
        for (auto const& [a, t] : live_edges[s]) {
          if (reach[r - 1][t]) {
            reach[r][s] = 1;
            break;
          }
        }
      }
    }
    std::size_t count = 0;
    Word        w;
    for (std::size_t len = 0; len <= max_len; ++len) {
      if (!reach[len][d.start]) {
        continue;
      }
      w.assign(len, 0);
      // iterative DFS over positions
      std::vector<State>       state_at(len + 1);
      std::vector<std::size_t> edge_at(len + 1, 0);
      state_at[0]    = d.start;
      std::size_t i  = 0;
      edge_at[0]     = 0;
      while (true) {
        if (i == len) {
          if (++count > cap) {
            throw EnumerationCapExceeded("enumeration exceeded cap of " + std::to_string(cap)
                                         + " words");
          }
          if constexpr (std::is_same_v<decltype(visit(static_cast<Word const&>(w))), bool>) {
            if (!visit(static_cast<Word const&>(w))) {
              return;
            }
          } else {
            visit(static_cast<Word const&>(w));
          }
          if (i == 0) {
            break;
          }
          --i;
          continue;
        }
        auto const& edges = live_edges[state_at[i]];
        bool        moved = false;
        while (edge_at[i] < edges.size()) {
          auto [a, t] = edges[edge_at[i]++];
          if (reach[len - i - 1][t]) {
            w[i]            = a;
            state_at[i + 1] = t;
            edge_at[i + 1]  = 0;
            ++i;
            moved = true;
            break;
          }
        }
        if (!moved) {
          if (i == 0) {
            break;
          }
          --i;
        }
      }
    }
  }

  /// All accepted words of length at most max_len, in shortlex order.
  inline std::vector<Word> enumerate(Fsa const& x, std::size_t max_len, std::size_t cap = default_enum_cap()) {
    std::vector<Word> out;
    for_each_word(
        to_dfa(x), max_len, [&](Word const& w) { out.push_back(w); }, cap);
    return out;
  }

  /// Shortlex-least accepted word, if any.
  inline std::optional<Word> shortlex_least(Fsa const& x) {
    Dfa const d    = minimize(to_dfa(x));
    auto const live = d.live();
    if (!live[d.start]) {
      return std::nullopt;
    }
    // distance to acceptance by backwards BFS
    std::vector<std::size_t>        dist(d.states, SIZE_MAX);
    std::vector<std::vector<State>> preds(d.states);
    for (State s = 0; s < d.states; ++s) {
      for (Symbol a = 0; a < d.letters(); ++a) {
        preds[d.next(s, a)].push_back(s);
      }
    }
    std::deque<State> queue;
    for (State s = 0; s < d.states; ++s) {
      if (d.accepting[s]) {
        dist[s] = 0;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      State t = queue.front();
      queue.pop_front();
      for (auto s : preds[t]) {
        if (dist[s] == SIZE_MAX) {
          dist[s] = dist[t] + 1;
          queue.push_back(s);
        }
      }
    }
    Word  w;
    State s = d.start;
    while (dist[s] != 0) {
      for (Symbol a = 0; a < d.letters(); ++a) {
        State t = d.next(s, a);
        if (dist[t] + 1 == dist[s]) {
          w.push_back(a);
          s = t;
          break;
        }
      }
    }
    return w;
  }

  /// Relabels every transition through `f`; a result of std::nullopt drops
  /// the transition and kEpsilon turns it into an epsilon move.
  template <typename F>
  Fsa map_symbols(Fsa const& x, Alphabet to, F&& f) {
    std::vector<Transition> ts;
    for (auto const& t : x.transitions()) {
      if (t.label == kEpsilon) {
        ts.push_back(t);
        continue;
      }
      std::optional<Symbol> b = f(t.label);
      if (b) {
        ts.push_back({t.from, *b, t.to});
      }
    }
    return Fsa(std::move(to), x.states(), x.initial(), x.finals(), std::move(ts));
  }

  /// Re-expresses an automaton over a larger alphabet, matching letters by
  /// name.
  inline Fsa embed(Fsa const& x, Alphabet const& to) {
    std::vector<Symbol> id(x.alphabet().size());
    for (Symbol a = 0; a < x.alphabet().size(); ++a) {
      auto s = to.find(x.alphabet().name(a));
      if (!s) {
        throw AlphabetMismatch("letter '" + x.alphabet().name(a) + "' missing from target alphabet");
      }
      id[a] = *s;
    }
    return map_symbols(x, to, [&](Symbol a) -> std::optional<Symbol> { return id[a]; });
  }

  /// Graphviz rendering; parallel edges are merged into one label.
  inline std::string to_dot(Fsa const& x, std::string const& name = "fsa") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (State s = 0; s < x.states(); ++s) {
      out << "  " << s << " [shape=" << (x.is_final(s) ? "doublecircle" : "circle") << "];\n";
    }
    for (auto i : x.initial()) {
      out << "  __start -> " << i << ";\n";
    }
    std::map<std::pair<State, State>, std::vector<std::string>> edges;
    for (auto const& t : x.transitions()) {
      edges[{t.from, t.to}].push_back(t.label == kEpsilon ? "&epsilon;" : x.alphabet().name(t.label));
    }
    for (auto const& [ft, labels] : edges) {
      out << "  " << ft.first << " -> " << ft.second << " [label=\"";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out << (i ? "," : "");
        for (char c : labels[i]) {
          if (c == '"' || c == '\\') {
            out << '\\';
          }
          out << c;
        }
      }
      out << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace autsem

#endif  // AUTSEM_FSA_HPP
