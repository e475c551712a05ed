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

#include "autsem/padrel.hpp"
#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace autsem;

namespace {
  Alphabet const abcd{"a", "b", "c", "d"};
  Alphabet const ab{"a", "b"};

  Word pw(Alphabet const& base, std::string const& text) {
    return base.padded().parse(text);
  }

  bool all_well_padded(PairRelation const& m, std::size_t len) {
    for (auto const& w : enumerate(m.fsa(), len)) {
      if (!is_well_padded(m.base(), w)) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("padded alphabet shape", "[padrel]") {
  CHECK(ab.padded().size() == 8);
  CHECK(abcd.padded().size() == 24);
  CHECK_FALSE(ab.padded().find("$|$").has_value());
  CHECK(ab.padded().name(pair_symbol(2, 0, pad_of(2))) == "a|$");
}

TEST_CASE("convolve examples", "[padrel]") {
  CHECK(convolve(abcd, {}, {}).empty());
  CHECK(convolve(abcd, abcd.parse("a b"), abcd.parse("c d")) == pw(abcd, "a|c b|d"));
  CHECK(convolve(abcd, abcd.parse("a b"), abcd.parse("a")) == pw(abcd, "a|a b|$"));
}

TEST_CASE("deconvolve examples", "[padrel]") {
  CHECK(deconvolve(abcd, pw(abcd, "a|a b|$")) == std::pair{abcd.parse("a b"), abcd.parse("a")});
  CHECK(deconvolve(abcd, {}) == std::pair{Word{}, Word{}});
  CHECK(deconvolve(abcd, pw(abcd, "$|c $|d")) == std::pair{Word{}, abcd.parse("c d")});
  CHECK_THROWS_AS(deconvolve(abcd, pw(abcd, "$|c a|d")), ParseError);
  CHECK_THROWS_AS(deconvolve(abcd, pw(abcd, "a|$ a|d")), ParseError);
}

TEST_CASE("convolve and deconvolve are inverse", "[padrel][property]") {
  auto ws = oracle::all_words(2, 5);
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      Word w = convolve(ab, u, v);
      REQUIRE(w.size() == std::max(u.size(), v.size()));
      REQUIRE(deconvolve(ab, w) == std::pair{u, v});
      REQUIRE(convolve(ab, deconvolve(ab, w).first, deconvolve(ab, w).second) == w);
    }
  }
}

TEST_CASE("diagonal", "[padrel]") {
  Fsa          aplus = plus(Fsa::letters(ab, {0}));
  PairRelation d     = diagonal(aplus);
  CHECK(d.fsa().accepts(pw(ab, "a|a a|a")));
  CHECK_FALSE(d.fsa().accepts(pw(ab, "a|a a|$")));

  Fsa                             apbp = concat(aplus, plus(Fsa::letters(ab, {1})));
  std::set<std::pair<Word, Word>> expect;
  for (auto const& w : oracle::language(apbp, 6)) {
    expect.emplace(w, w);
  }
  CHECK(oracle::members(diagonal(apbp), 6) == expect);
}

TEST_CASE("product and projections", "[padrel]") {
  Fsa          aplus = plus(Fsa::letters(ab, {0}));
  Fsa          bstar = star(Fsa::letters(ab, {1}));
  PairRelation p     = product(aplus, bstar);
  for (auto const& [u, v] : oracle::members(p, 4)) {
    CHECK(aplus.accepts(u));
    CHECK(bstar.accepts(v));
  }
  CHECK(oracle::members(p, 4).size() == 4 * 5);
  CHECK(equivalent(left_projection(p), aplus));
  CHECK(equivalent(right_projection(p), bstar));
  CHECK(all_well_padded(p, 5));
}

TEST_CASE("padded product examples", "[padrel]") {
  Alphabet     ac{"a", "c"};
  Fsa          aplus = plus(Fsa::letters(ac, {0}));
  PairRelation m     = from_pairs(ac, {{ac.parse("c"), {}}});
  PairRelation r     = padded_product(m, diagonal(aplus), 1);
  CHECK(r.accepts(ac.parse("c a"), ac.parse("a")));
  CHECK_FALSE(r.accepts(ac.parse("c a"), ac.parse("c a")));

  PairRelation cdiag = diagonal(star(Fsa::letters(ac, {1})));
  CHECK(is_empty(padded_product(cdiag, PairRelation(ac, Fsa::nothing(ac.padded())), 0).fsa()));

  // ({(c,c)}* ($,c)) (.) (K x {w}) with K = a+ and w = a
  PairRelation lead = PairRelation(
      ac, concat(star(Fsa::word(ac.padded(), pw(ac, "c|c"))), Fsa::word(ac.padded(), pw(ac, "$|c"))));
  PairRelation kw = product(aplus, Fsa::word(ac, ac.parse("a")));
  PairRelation lc = padded_product(lead, kw, 1);
  std::set<std::pair<Word, Word>> expect;
  for (std::size_t i = 0; i <= 5; ++i) {
    for (std::size_t j = 1; i + j <= 6; ++j) {
      Word u(i, 1), v(i + 1, 1);
      u.insert(u.end(), j, 0);
      v.push_back(0);
      if (u.size() <= 6 && v.size() <= 6) {
        expect.emplace(u, v);
      }
    }
  }
  CHECK(oracle::members(lc, 6) == expect);
  CHECK_FALSE(bounded_difference(lc, 100).has_value());  // j is free on the left
}

TEST_CASE("padded product agrees with the definition", "[padrel][property]") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t  c = std::size_t(iter % 4);
    PairRelation m = oracle::random_bounded_relation(rng, ab, c);
    PairRelation n = oracle::random_relation(rng, ab);
    REQUIRE(bounded_difference(m, c).has_value());
    auto                            mm = oracle::members(m, 4);
    auto                            nn = oracle::members(n, 4);
    std::set<std::pair<Word, Word>> expect;
    for (auto const& [u1, v1] : mm) {
      for (auto const& [u2, v2] : nn) {
        Word u = u1, v = v1;
        u.insert(u.end(), u2.begin(), u2.end());
        v.insert(v.end(), v2.begin(), v2.end());
        if (u.size() <= 4 && v.size() <= 4) {
          expect.emplace(u, v);
        }
      }
    }
    PairRelation r = padded_product(m, n, c);
    REQUIRE(oracle::members(r, 4) == expect);
    REQUIRE(all_well_padded(r, 5));
  }
}

TEST_CASE("padded product rejects a violated bound", "[padrel]") {
  PairRelation m = from_pairs(ab, {{{}, ab.parse("a a")}});
  CHECK_THROWS_AS(padded_product(m, diagonal(Fsa::universal(ab)), 1), PreconditionError);
}

TEST_CASE("compose", "[padrel]") {
  Fsa          l = concat(plus(Fsa::letters(ab, {0})), star(Fsa::letters(ab, {1})));
  PairRelation d = diagonal(l);
  CHECK(rel_equivalent(compose(d, d, 0), d));

  std::mt19937 rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    std::size_t  c  = std::size_t(iter % 3);
    PairRelation m  = oracle::random_bounded_relation(rng, ab, c);
    PairRelation n  = oracle::random_relation(rng, ab);
    PairRelation mn = compose(m, n, c);
    // right identity on the range of m
    CHECK(rel_equivalent(compose(m, diagonal(right_projection(m)), c), m));
    auto mm = oracle::members(m, 4 + c);
    auto nn = oracle::members(n, 4 + c);
    std::set<std::pair<Word, Word>> expect;
    for (auto const& [u, v] : mm) {
      for (auto it = nn.lower_bound({v, Word{}}); it != nn.end() && it->first == v; ++it) {
        if (u.size() <= 4 && it->second.size() <= 4) {
          expect.emplace(u, it->second);
        }
      }
    }
    REQUIRE(oracle::members(mn, 4) == expect);
  }
}

TEST_CASE("apply", "[padrel]") {
  Fsa          l = concat(plus(Fsa::letters(ab, {0})), star(Fsa::letters(ab, {1})));
  PairRelation d = diagonal(l);
  CHECK(enumerate(apply_word(d, ab.parse("a b")), 5) == std::vector<Word>{ab.parse("a b")});
  CHECK(is_empty(apply_word(d, ab.parse("b a"))));

  PairRelation m = from_pairs(ab, {{ab.parse("a"), ab.parse("b b")}, {ab.parse("a"), {}}});
  CHECK(enumerate(apply_word(m, ab.parse("a")), 5) == std::vector<Word>{Word{}, ab.parse("b b")});
  CHECK(is_empty(apply_word(m, ab.parse("a a"))));
}

TEST_CASE("bounded difference", "[padrel]") {
  Fsa aplus = plus(Fsa::letters(ab, {0}));
  CHECK(bounded_difference(diagonal(aplus)) == 0u);
  PairRelation one(ab, concat(star(Fsa::word(ab.padded(), pw(ab, "a|a"))), Fsa::word(ab.padded(), pw(ab, "$|b"))));
  CHECK(bounded_difference(one) == 1u);
  PairRelation unbounded(ab, plus(Fsa::word(ab.padded(), pw(ab, "$|b"))));
  CHECK_FALSE(bounded_difference(unbounded, 1000).has_value());
  PairRelation three = from_pairs(ab, {{ab.parse("a a a"), {}}, {ab.parse("a"), ab.parse("b")}});
  CHECK(bounded_difference(three) == 3u);
  CHECK_FALSE(bounded_difference(three, 2).has_value());
}
