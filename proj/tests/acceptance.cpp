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

// Acceptance run: one PASS/FAIL line per criterion, each with its time
// budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "autsem/autsem.hpp"
#include "oracles.hpp"

using namespace autsem;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  // Collects the first failure message; later ones only count.
  struct Tally {
    std::size_t failures = 0;
    std::string first;

    void check(bool cond, std::string const& what) {
      if (!cond) {
        if (failures++ == 0) {
          first = what;
        }
      }
    }
    Outcome done(std::string const& detail) const {
      if (failures == 0) {
        return {true, detail};
      }
      return {false, std::to_string(failures) + " failed checks, first: " + first};
    }
  };

  std::size_t violations(AutomaticStructure const& s, std::size_t max_len) {
    ValidateOptions o;
    o.max_len = max_len;
    return validate(s, o).total_violations;
  }

  std::set<std::string> words_of(AutomaticStructure const& s, std::size_t max_len) {
    std::set<std::string> out;
    for (auto const& w : enumerate(s.language, max_len)) {
      out.insert(s.alphabet.format(w));
    }
    return out;
  }

  // Words of L with the "t:" prefix stripped from letter names.
  std::set<std::string> plain_words(AutomaticStructure const& s, std::size_t max_len) {
    std::set<std::string> out;
    for (auto const& w : enumerate(s.language, max_len)) {
      std::string y;
      for (auto x : w) {
        std::string n = s.alphabet.name(x);
        if (n.rfind("t:", 0) == 0) {
          n = n.substr(2);
        }
        y += (y.empty() ? "" : " ") + n;
      }
      out.insert(y);
    }
    return out;
  }

  std::map<std::size_t, std::set<std::string>> values_by_length(AutomaticStructure const& s, std::size_t max_len) {
    std::map<std::size_t, std::set<std::string>> out;
    for (auto const& x : enumerate(s.language, max_len)) {
      out[x.size()].insert(s.model->format(s.evaluate(x)));
    }
    return out;
  }

  Word cat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // 1
  Outcome convolution_round_trip() {
    Alphabet const ab{"a", "b"};
    Tally          t;
    auto const     ws    = oracle::all_words(2, 6);
    std::size_t    pairs = 0;
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        Word const w = convolve(ab, u, v);
        t.check(w.size() == std::max(u.size(), v.size()), "convolution length");
        t.check(deconvolve(ab, w) == std::pair{u, v}, "deconvolve(convolve(u, v)) != (u, v)");
        ++pairs;
      }
    }
    return t.done(std::to_string(pairs) + " pairs, lengths <= 6");
  }

  ////////////////////////////////////////////////////////////////////////
  // 2
  struct Expr {
    Fsa            fsa;
    std::set<Word> words;  // the language up to kMax
  };
  constexpr std::size_t kMax = 8;

  Expr random_expr(std::mt19937& rng, Alphabet const& a, std::vector<Word> const& universe, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 6);
    int const                          op = pick(rng);
    if (op == 0) {
      Fsa const f = oracle::random_fsa(rng, a, 3);
      return {f, oracle::language(f, kMax)};
    }
    Expr const x = random_expr(rng, a, universe, depth - 1);
    auto       cut = [&](std::set<Word> s) {
      std::erase_if(s, [](Word const& w) { return w.size() > kMax; });
      return s;
    };
    auto concat_sets = [&](std::set<Word> const& p, std::set<Word> const& q) {
      std::set<Word> out;
      for (auto const& u : p) {
        for (auto const& v : q) {
          if (u.size() + v.size() <= kMax) {
            out.insert(cat(u, v));
          }
        }
      }
      return out;
    };
    if (op == 1) {
      std::set<Word> c;
      for (auto const& w : universe) {
        if (!x.words.count(w)) {
          c.insert(w);
        }
      }
      return {complement(x.fsa), c};
    }
    if (op == 2) {
      std::set<Word> s{Word{}};
      for (;;) {
        std::set<Word> next = s;
        for (auto const& w : concat_sets(s, x.words)) {
          next.insert(w);
        }
        if (next.size() == s.size()) {
          break;
        }
        s = std::move(next);
      }
      return {star(x.fsa), s};
    }
    Expr const     y = random_expr(rng, a, universe, depth - 1);
    std::set<Word> r;
    switch (op) {
      case 3:
        std::set_union(x.words.begin(), x.words.end(), y.words.begin(), y.words.end(), std::inserter(r, r.end()));
        return {union_of(x.fsa, y.fsa), r};
      case 4:
        std::set_intersection(x.words.begin(), x.words.end(), y.words.begin(), y.words.end(),
                              std::inserter(r, r.end()));
        return {intersect(x.fsa, y.fsa), r};
      case 5:
        std::set_difference(x.words.begin(), x.words.end(), y.words.begin(), y.words.end(),
                            std::inserter(r, r.end()));
        return {difference(x.fsa, y.fsa), r};
      default:
        return {concat(x.fsa, y.fsa), cut(concat_sets(x.words, y.words))};
    }
  }

  Outcome fsa_algebra() {
    std::mt19937 rng(2026);
    Tally        t;
    for (int i = 0; i < 200; ++i) {
      Alphabet const    a = i % 3 == 0 ? Alphabet{"x"} : (i % 3 == 1 ? Alphabet{"x", "y"} : Alphabet{"x", "y", "z"});
      auto const        universe = oracle::all_words(a.size(), kMax);
      Expr const        e        = random_expr(rng, a, universe, 3);
      Fsa const         m        = determinize_minimize(e.fsa);
      std::set<Word>    got;
      for (auto const& w : enumerate(m, kMax)) {
        got.insert(w);
      }
      t.check(got == e.words, "expression " + std::to_string(i) + " disagrees with the set oracle");
    }
    return t.done("200 expressions, words to length 8");
  }

  ////////////////////////////////////////////////////////////////////////
  // 3
  Outcome padded_product_lemma() {
    Alphabet const    ab{"a", "b"};
    std::size_t const len = 6;
    auto const        ws  = oracle::all_words(2, len);
    std::map<Word, std::size_t> id;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      id[ws[i]] = i;
    }
    auto table = [&](PairRelation const& r) {
      std::vector<std::vector<char>> in(ws.size(), std::vector<char>(ws.size(), 0));
      for (auto const& [u, v] : oracle::members(r, len)) {
        in[id[u]][id[v]] = 1;
      }
      return in;
    };
    std::mt19937 rng(33);
    Tally        t;
    for (int iter = 0; iter < 50; ++iter) {
      std::size_t const  c = std::size_t(iter % 4);
      PairRelation const m = oracle::random_bounded_relation(rng, ab, c);
      PairRelation const n = oracle::random_relation(rng, ab);
      auto const         bound = bounded_difference(m, c);
      t.check(bound.has_value() && *bound <= c, "generated M exceeds its bound");
      auto const mt = table(m), nt = table(n);
      auto const got = table(padded_product(m, n, c));
      for (std::size_t i = 0; i < ws.size(); ++i) {
        Word const& u = ws[i];
        for (std::size_t j = 0; j < ws.size(); ++j) {
          Word const& v      = ws[j];
          bool        expect = false;
          for (std::size_t p = 0; p <= u.size() && !expect; ++p) {
            std::size_t const u1 = id[Word(u.begin(), u.begin() + std::ptrdiff_t(p))];
            std::size_t const u2 = id[Word(u.begin() + std::ptrdiff_t(p), u.end())];
            for (std::size_t q = 0; q <= v.size() && !expect; ++q) {
              std::size_t const v1 = id[Word(v.begin(), v.begin() + std::ptrdiff_t(q))];
              std::size_t const v2 = id[Word(v.begin() + std::ptrdiff_t(q), v.end())];
              expect               = mt[u1][v1] && nt[u2][v2];
            }
          }
          t.check((got[i][j] != 0) == expect, "membership differs from the definition");
        }
      }
    }
    return t.done("50 relations, C <= 3, pairs to length 6");
  }

  ////////////////////////////////////////////////////////////////////////
  // 4
  Outcome bicyclic() {
    auto const  s = bruck_reilly_finite(trivial_monoid(), {0});
    auto const& a = s.alphabet;
    Tally       t;
    std::size_t const v = violations(s, 7);
    t.check(v == 0, std::to_string(v) + " violations to length 7");
    t.check(word_equal(s, a.parse("b c"), a.parse("t:0")), "b c != t:0");
    t.check(!word_equal(s, a.parse("c b"), a.parse("t:0")), "c b == t:0");
    return t.done("letters b c t:0, 0 violations to length 7");
  }

  ////////////////////////////////////////////////////////////////////////
  // 5
  Outcome bruck_reilly_variants() {
    Tally      t;
    auto const z2  = cyclic_group(2);
    auto const z2s = finite_structure(z2);
    auto const f_id   = bruck_reilly_finite(z2, {0, 1});
    auto const f_one  = bruck_reilly_finite(z2, {0, 0});
    auto const c1     = bruck_reilly_const_one(z2s);
    auto const id     = bruck_reilly_identity(z2s);
    for (auto const* s : {&f_id, &f_one, &c1, &id}) {
      std::size_t const v = violations(*s, 6);
      t.check(v == 0, s->model->describe().dump() + ": " + std::to_string(v) + " violations");
    }
    // theta = 1: the finite and const_one languages coincide up to letter names
    t.check(plain_words(f_one, 6) == words_of(c1, 6), "finite and const_one languages differ");
    t.check(values_by_length(f_one, 6) == values_by_length(c1, 6), "finite and const_one values differ");
    // theta = id: same elements at each length
    t.check(values_by_length(f_id, 6) == values_by_length(id, 6), "finite and identity values differ");
    return t.done("Z2 with theta = id and theta = 1, length 6");
  }

  ////////////////////////////////////////////////////////////////////////
  // 6
  Outcome bruck_reilly_fgt_path() {
    Tally             t;
    auto const        fm  = free_monogenic_structure(true);
    FiniteImage const img{trivial_monoid(), {atom(0)}, {0, 0}};
    auto const        s   = bruck_reilly_fgt(fm, Endomorphism{Endomorphism::Kind::const_one, {}, 1}, img);
    std::size_t const v   = violations(s, 6);
    t.check(v == 0, std::to_string(v) + " violations");
    t.check(dynamic_cast<BruckReilly const*>(s.model.get()) != nullptr, "model is not a Bruck-Reilly extension");
    auto const c1 = bruck_reilly_const_one(fm);
    t.check(equivalent(s.language, c1.language), "language differs from the const_one construction");
    return t.done("N0 with a -> 1, 0 violations to length 6");
  }

  ////////////////////////////////////////////////////////////////////////
  // 7
  Outcome free_products() {
    Tally      t;
    auto const p = free_product_semigroups(free_monogenic_structure(false, "a"), free_monogenic_structure(false, "b"));
    std::size_t v = violations(p, 6);
    t.check(v == 0, "a+ * b+: " + std::to_string(v) + " violations");
    auto const z2 = [](std::string const& a) {
      return rename_letters(finite_structure(cyclic_group(2)), {"e", a});
    };
    auto const d = free_product_monoids(z2("a"), z2("b"));
    v            = violations(d, 6);
    t.check(v == 0, "Z2 * Z2: " + std::to_string(v) + " violations");

    auto const r1 = free_product_restrict(p, 1);
    t.check(equivalent(r1.language, free_monogenic_structure(false, "a").language), "restriction to a+");
    t.check(equivalent(free_product_restrict(r1, 1).language, r1.language), "restriction is not idempotent");
    auto const r2 = free_product_restrict(p, 2);
    t.check(words_of(r2, 6) == words_of(free_monogenic_structure(false, "b"), 6), "restriction to b+");
    auto const m1 = free_product_monoids_restrict(d, 1);
    std::set<Element> values;
    for (auto const& w : enumerate(m1.language, 6)) {
      values.insert(m1.evaluate(w));
    }
    t.check(values.size() == 2 && m1.alphabet.names() == z2("a").alphabet.names(), "monoid restriction to Z2");
    t.check(equivalent(free_product_monoids_restrict(m1, 1).language, m1.language), "monoid restriction twice");
    t.check(violations(m1, 6) == 0, "restricted monoid structure fails validation");
    return t.done("a+ * b+ and Z2 * Z2, length 6; restrictions round trip");
  }

  ////////////////////////////////////////////////////////////////////////
  // 8
  Outcome direct_products() {
    Tally      t;
    auto const z2 = rename_letters(finite_structure(cyclic_group(2)), {"e", "a"});
    auto const z3 = rename_letters(finite_structure(cyclic_group(3), std::vector<std::size_t>{0, 1}), {"f", "b"});
    auto const p  = direct_product_monoids(z2, z3, "e", "f");
    std::size_t v = violations(p, 6);
    t.check(v == 0, "Z2 x Z3: " + std::to_string(v) + " violations");
    auto const q = direct_product_finite_infinite(cyclic_group(2), free_monogenic_structure(false, "a"));
    v            = violations(q, 6);
    t.check(v == 0, "Z2 x a+: " + std::to_string(v) + " violations");
    bool rejected = false;
    try {
      direct_product_finite_infinite(null_semigroup2(), free_monogenic_structure(false, "a"));
    } catch (PreconditionError const&) {
      rejected = true;
    }
    t.check(rejected, "null semigroup accepted although S^2 != S");
    return t.done("Z2 x Z3 and Z2 x a+, length 6; null semigroup rejected");
  }

  ////////////////////////////////////////////////////////////////////////
  // 9
  Outcome rees_matrix() {
    Tally      t;
    auto const s = build_descriptor(json::parse(R"({"op":"rees_matrix","U":"z2","I":2,"J":2,"P":[[0,0],[0,0]]})"));
    std::size_t v = violations(s, 6);
    t.check(v == 0, "M[Z2^1; 2, 2; 1]: " + std::to_string(v) + " violations");
    auto const u = rees_matrix_converse(s);
    v            = violations(u, 6);
    t.check(v == 0, "converse: " + std::to_string(v) + " violations");
    t.check(dynamic_cast<AdjoinIdentity const*>(u.model.get()) != nullptr, "converse model is not Z2^1");
    auto const elems = u.model->elements();
    t.check(elems && elems->size() == 3, "Z2^1 must have three elements");
    std::set<Element> reached;
    for (auto const& w : enumerate(u.language, 6)) {
      reached.insert(u.evaluate(w));
    }
    t.check(reached.size() == 3, "converse language does not reach all of Z2^1");
    return t.done("M[Z2^1; 2, 2; 1] and its converse, length 6");
  }

  ////////////////////////////////////////////////////////////////////////
  // 10
  // Z2 x {1 > 0}: (g, y) at index g + 2y; Z2 x {0} is an ideal of index 2.
  FinitePtr z2_semilattice() {
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        table[x][y] = ((x % 2 + y % 2) % 2) + 2 * std::min(x / 2, y / 2);
      }
    }
    return std::make_shared<FiniteSemigroup>(table, std::vector<std::string>{"e0", "a0", "e1", "a1"}, 2);
  }

  // The word over T's alphabet spelled by a block word.
  std::string flatten(AutomaticStructure const& s, Word const& x) {
    std::string out;
    for (auto b : x) {
      std::string name = s.alphabet.name(b).substr(2);
      std::replace(name.begin(), name.end(), '.', ' ');
      out += (out.empty() ? "" : " ") + name;
    }
    return out;
  }

  Outcome rees_index() {
    Tally      t;
    auto const s    = z2_semilattice();
    auto const tt   = finite_structure(s, std::vector<std::size_t>{1});
    auto const up   = rees_index_up(tt, ComplementData{{"u", "v"}, {atom(2), atom(3)}, {std::nullopt, Word{0}}, {}});
    t.check(violations(up, 6) == 0, "up: violations");
    auto const in_t = [&](Word const& x) { return up.evaluate(x).data[0] < 2; };
    auto const k    = rees_index_find_k(up, in_t, 4);
    t.check(k.has_value(), "no block length found");
    if (!k) {
      return t.done("");
    }
    auto const down = rees_index_down(up, in_t, *k);
    t.check(violations(down, 6) == 0, "down: violations");
    std::set<std::string> flat;
    for (auto const& x : enumerate(down.language, 6)) {
      flat.insert(flatten(down, x));
    }
    t.check(flat == words_of(tt, 6), "down language differs from T's language");
    // index 1: {1} u Z2 down to Z2
    auto const one = std::make_shared<FiniteSemigroup>(
        std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 1}}, std::vector<std::string>{"1", "e", "a"}, 0);
    auto const s1 = finite_structure(one);
    auto const t1 = rees_index_down(s1, [&](Word const& x) { return s1.evaluate(x) != atom(0); }, 2);
    t.check(violations(t1, 6) == 0, "index 1 down: violations");
    std::set<Element> values;
    for (auto const& x : enumerate(t1.language, 6)) {
      values.insert(t1.evaluate(x));
    }
    t.check(values == std::set<Element>{atom(1), atom(2)}, "index 1 down does not cover Z2 exactly");
    return t.done("index-2 ideal of Z2 x {1 > 0}, k = " + std::to_string(*k));
  }

  ////////////////////////////////////////////////////////////////////////
  // 11
  Outcome wreath() {
    Tally      t;
    auto const spow = cartesian_power_monoid(integers_structure(), 2);
    auto const s    = wreath_finite_T(spow, cyclic_group(2));
    std::size_t const v = violations(s, 5);
    t.check(v == 0, std::to_string(v) + " violations");
    t.check(dynamic_cast<Wreath const*>(s.model.get()) != nullptr, "model is not a wreath product");
    for (auto const& x : enumerate(s.language, 1)) {
      t.check(x.size() != 1, "a length-one word survived stripping");
    }
    return t.done("Z wr Z2, " + std::to_string(s.alphabet.size()) + " letters, length 5");
  }

  ////////////////////////////////////////////////////////////////////////
  // 12
  std::set<Word> path_outputs(Gsm const& g, Word const& u) {
    std::set<Word> out;
    if (u.empty()) {
      return out;
    }
    std::vector<std::pair<State, Word>> cur{{g.initial(), {}}};
    for (auto x : u) {
      std::vector<std::pair<State, Word>> next;
      for (auto const& [q, w] : cur) {
        for (auto const& e : g.edges()) {
          if (e.from == q && e.input == x) {
            next.emplace_back(e.to, cat(w, e.output));
          }
        }
      }
      cur = std::move(next);
    }
    for (auto const& [q, w] : cur) {
      if (g.is_terminal(q)) {
        out.insert(w);
      }
    }
    return out;
  }

  Gsm random_gsm(std::mt19937& rng, Alphabet const& a, Alphabet const& b) {
    std::uniform_int_distribution<std::size_t> nst(1, 4);
    std::size_t const                          n = nst(rng);
    std::uniform_int_distribution<State>       st(0, State(n - 1));
    std::uniform_int_distribution<std::size_t> olen(1, 2);
    std::uniform_int_distribution<Symbol>      letter(0, Symbol(b.size() - 1));
    std::uniform_int_distribution<int>         coin(0, 99);
    std::vector<GsmEdge>                       es;
    for (State q = 0; q < n; ++q) {
      for (Symbol x = 0; x < a.size(); ++x) {
        for (int r = 0; r < 2; ++r) {
          if (coin(rng) < 55) {
            Word o(olen(rng));
            for (auto& s : o) {
              s = letter(rng);
            }
            es.push_back({q, x, st(rng), o});
          }
        }
      }
    }
    std::vector<State> term;
    for (State q = 0; q < n; ++q) {
      if (coin(rng) < 50) {
        term.push_back(q);
      }
    }
    return Gsm(a, b, n, 0, term, es);
  }

  Outcome gsm_lemmas() {
    Alphabet const    ab{"a", "b"}, xy{"x", "y"};
    std::size_t const len = 6;
    std::mt19937      rng(12);
    Tally             t;
    int               etas = 0, zetas = 0;
    for (int iter = 0; iter < 40; ++iter) {
      Gsm const      g = random_gsm(rng, ab, xy);
      Fsa const      x = oracle::random_fsa(rng, ab, 4);
      std::set<Word> expect;
      for (auto const& u : oracle::all_words(2, len)) {
        if (oracle::accepts(x, u)) {
          for (auto const& v : path_outputs(g, u)) {
            if (v.size() <= len) {
              expect.insert(v);
            }
          }
        }
      }
      auto const     got = enumerate(eta(g, x), len);
      t.check(std::set<Word>(got.begin(), got.end()) == expect, "eta disagrees with path enumeration");
      ++etas;
    }
    for (int iter = 0; iter < 200 && zetas < 25; ++iter) {
      Gsm const  g   = random_gsm(rng, ab, xy);
      auto const var = bounded_output_variance(g, 3);
      if (!var) {
        continue;
      }
      ++zetas;
      PairRelation const m = iter % 2 == 0 ? oracle::random_bounded_relation(rng, ab, 2)
                                           : oracle::random_relation(rng, ab);
      std::set<std::pair<Word, Word>> expect;
      for (auto const& [u, v] : oracle::members(m, len)) {
        for (auto const& w : path_outputs(g, u)) {
          for (auto const& z : path_outputs(g, v)) {
            if (w.size() <= len && z.size() <= len) {
              expect.emplace(w, z);
            }
          }
        }
      }
      t.check(oracle::members(zeta(g, m, *var), len) == expect, "zeta disagrees with the double existential");
    }
    t.check(zetas >= 10, "too few machines with bounded variance");
    return t.done(std::to_string(etas) + " eta and " + std::to_string(zetas) + " zeta machines, length 6");
  }

  struct Criterion {
    char const*              name;
    double                   budget;  // seconds
    std::function<Outcome()> run;
  };
}  // namespace

int main() {
  std::vector<Criterion> const all{
      {"convolution round trip", 5, convolution_round_trip},
      {"Fsa algebra vs set oracle", 30, fsa_algebra},
      {"padded product vs definition", 30, padded_product_lemma},
      {"bicyclic monoid", 10, bicyclic},
      {"Bruck-Reilly variants cross-check", 30, bruck_reilly_variants},
      {"Bruck-Reilly fgt path", 30, bruck_reilly_fgt_path},
      {"free products", 30, free_products},
      {"direct products", 20, direct_products},
      {"Rees matrix and converse", 30, rees_matrix},
      {"finite Rees index up/down", 20, rees_index},
      {"wreath product Z wr Z2", 60, wreath},
      {"gsm eta and zeta vs brute force", 20, gsm_lemmas}};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = all[i].run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > all[i].budget) {
      o = {false, o.detail + "; over the time budget"};
    }
    failed += o.ok ? 0 : 1;
    std::printf("[%s] %2zu. %s (%.2fs / %.0fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, all[i].name, secs,
                all[i].budget, o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, all.size());
  return failed;
}
