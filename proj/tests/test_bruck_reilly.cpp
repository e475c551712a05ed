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

#include <map>

#include "autsem/constructions/bruck_reilly.hpp"
#include "catch_amalgamated.hpp"
#include "checks.hpp"

using namespace autsem;
using checks::w;

namespace {
  // Values of the words of L, grouped by length.
  std::map<std::size_t, std::set<std::string>> values_by_length(AutomaticStructure const& s, std::size_t max_len) {
    std::map<std::size_t, std::set<std::string>> out;
    for (auto const& x : enumerate(s.language, max_len)) {
      out[x.size()].insert(s.model->format(s.evaluate(x)));
    }
    return out;
  }

  // Words of L with "t:" stripped from letter names.
  std::set<std::string> plain_words(AutomaticStructure const& s, std::size_t max_len) {
    std::set<std::string> out;
    for (auto x : checks::words(s, max_len)) {
      std::string y;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.compare(i, 2, "t:") == 0 && (i == 0 || x[i - 1] == ' ')) {
          ++i;
          continue;
        }
        y += x[i];
      }
      out.insert(y);
    }
    return out;
  }
}  // namespace

TEST_CASE("bicyclic monoid as BR of the trivial monoid", "[bruck_reilly]") {
  auto const s = bruck_reilly_finite(trivial_monoid(), {0});
  CHECK(s.alphabet.names() == std::vector<std::string>{"b", "c", "t:0"});
  checks::expect_valid(s, 7);
  CHECK(word_equal(s, w(s, "b c"), w(s, "t:0")));
  CHECK_FALSE(word_equal(s, w(s, "c b"), w(s, "t:0")));
  CHECK(normal_form(s, w(s, "c b c b b")) == w(s, "c t:0 b b"));
  CHECK(checks::words(s, 3) == std::set<std::string>{"t:0", "c t:0", "t:0 b", "c c t:0", "c t:0 b", "t:0 b b"});
  CHECK(checks::pairs(s.multipliers[1], 3)
        == std::set<std::string>{"t:0 / c t:0", "t:0 b / t:0", "c t:0 / c c t:0", "t:0 b b / t:0 b",
                                 "c t:0 b / c t:0"});
}

TEST_CASE("BR of Z2 for every endomorphism", "[bruck_reilly]") {
  auto const z2 = cyclic_group(2);
  for (auto const& theta : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 0}}) {
    auto const s = bruck_reilly_finite(z2, theta);
    checks::expect_valid(s, 6);
  }
  // theta = 0: (t, c)($, 0) for t = 1
  auto const s0 = bruck_reilly_finite(z2, {0, 0});
  CHECK(normal_form(s0, w(s0, "t:1 c")) == w(s0, "c t:0"));
  auto const s1 = bruck_reilly_finite(z2, {0, 1});
  CHECK(normal_form(s1, w(s1, "t:1 c")) == w(s1, "c t:1"));
  CHECK(normal_form(s1, w(s1, "t:1 b b t:1")) == w(s1, "t:0 b b"));
  CHECK_THROWS_AS(bruck_reilly_finite(z2, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(bruck_reilly_finite(null_semigroup2(), {0, 1}), PreconditionError);
}

TEST_CASE("theta orbit splitting with a preperiod", "[bruck_reilly]") {
  // T = {1, x, y, z}: x, y, z idempotent left zeros of {x, y, z}; theta: x -> y -> z -> y
  std::vector<std::vector<std::size_t>> table{{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}};
  auto const t = std::make_shared<FiniteSemigroup>(table, std::vector<std::string>{"1", "x", "y", "z"}, 0);
  std::vector<std::size_t> const theta{0, 2, 3, 2};
  auto const th = [&](Element const& e) { return atom(std::int64_t(theta[std::size_t(e.data[0])])); };
  CHECK(theta_orbit(atom(1), th) == std::pair<std::size_t, std::size_t>{1, 2});
  auto const s = bruck_reilly_finite(t, theta);
  checks::expect_valid(s, 7);
}

TEST_CASE("bruck_reilly_const_one", "[bruck_reilly]") {
  auto const z2 = finite_structure(cyclic_group(2));
  auto const s  = bruck_reilly_const_one(z2);
  checks::expect_valid(s, 6);
  auto const f = bruck_reilly_finite(cyclic_group(2), {0, 0});
  CHECK(plain_words(f, 6) == checks::words(s, 6));
  CHECK(values_by_length(f, 6) == values_by_length(s, 6));
  // x absorbed once a b follows
  CHECK(normal_form(s, w(s, "c 1 b 1")) == w(s, "c 1 b"));

  auto const m = bruck_reilly_const_one(free_monogenic_structure(true));
  CHECK(m.alphabet.names() == std::vector<std::string>{"b", "c", "e", "a"});
  checks::expect_valid(m, 6);
  CHECK(normal_form(m, w(m, "a a c a")) == w(m, "c a"));

  auto const bic = bruck_reilly_const_one(finite_structure(trivial_monoid()));
  CHECK(plain_words(bruck_reilly_finite(trivial_monoid(), {0}), 6) == checks::words(bic, 6));
  CHECK_THROWS_AS(bruck_reilly_const_one(free_monogenic_structure(false)), PreconditionError);
}

TEST_CASE("bruck_reilly_identity", "[bruck_reilly]") {
  auto const s = bruck_reilly_identity(finite_structure(cyclic_group(2)));
  checks::expect_valid(s, 6);
  CHECK(s.language.accepts(w(s, "c b 1")));
  CHECK_FALSE(s.language.accepts(w(s, "c 1 b")));
  CHECK(values_by_length(s, 6) == values_by_length(bruck_reilly_finite(cyclic_group(2), {0, 1}), 6));
  // L_x = (c,c)* (b,b)* K_x
  CHECK(s.multipliers[3].accepts(w(s, "c b b 0"), w(s, "c b b 1")));
  CHECK_FALSE(s.multipliers[3].accepts(w(s, "c b b 0"), w(s, "c b b 0")));
  auto const m = bruck_reilly_identity(free_monogenic_structure(true));
  checks::expect_valid(m, 6);
  auto const bic = bruck_reilly_identity(finite_structure(trivial_monoid()));
  CHECK(values_by_length(bic, 6) == values_by_length(bruck_reilly_finite(trivial_monoid(), {0}), 6));
}

TEST_CASE("finitereg_automaton parity", "[bruck_reilly]") {
  Alphabet const a{"a"};
  Fsa const      even = finitereg_automaton(a, *cyclic_group(2), {1}, 0);
  CHECK(even.accepts(a.parse("a a")));
  CHECK(even.accepts(a.parse("a a a a")));
  CHECK_FALSE(even.accepts(a.parse("a")));
  CHECK_FALSE(even.accepts(Word{}));
}

TEST_CASE("bruck_reilly_fgt", "[bruck_reilly]") {
  // free monogenic monoid, a -> 1
  auto const  t = free_monogenic_structure(true);
  FiniteImage img{trivial_monoid(), {atom(0)}, {0, 0}};
  auto const  s = bruck_reilly_fgt(t, Endomorphism{Endomorphism::Kind::const_one, {}, 1}, img);
  checks::expect_valid(s, 6);
  auto const c1 = bruck_reilly_const_one(t);
  CHECK(equivalent(s.language, c1.language));
  for (std::size_t i = 0; i < s.multipliers.size(); ++i) {
    CHECK(rel_equivalent(s.multipliers[i], c1.multipliers[i]));
  }
  CHECK_THROWS_AS(bruck_reilly_fgt(t, Endomorphism{}, img), PreconditionError);

  // finite T: Z2 with theta = id and theta = 0
  auto const z2 = finite_structure(cyclic_group(2));
  for (auto const& theta : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 0}}) {
    FiniteImage zi{cyclic_group(2), {atom(0), atom(1)}, {theta[0], theta[1]}};
    if (theta[1] == 0) {
      zi = FiniteImage{trivial_monoid(), {atom(0)}, {0, 0}};
    }
    auto const f = bruck_reilly_fgt(z2, Endomorphism{Endomorphism::Kind::table, theta, 1}, zi);
    checks::expect_valid(f, 6);
    CHECK(plain_words(bruck_reilly_finite(cyclic_group(2), theta), 6) == checks::words(f, 6));
  }
}
