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

#include <random>

#include "autsem/constructions/rees_index.hpp"
#include "catch_amalgamated.hpp"
#include "checks.hpp"

using namespace autsem;
using checks::w;

namespace {
  // Z2 x {1 > 0}: (g, y) at index g + 2 y; T = Z2 x {0} is an ideal of index 2
  FinitePtr z2_semilattice() {
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        table[x][y] = ((x % 2 + y % 2) % 2) + 2 * std::min(x / 2, y / 2);
      }
    }
    return std::make_shared<FiniteSemigroup>(table, std::vector<std::string>{"e0", "a0", "e1", "a1"}, 2);
  }

  // {1, e, a} with {e, a} = Z2
  FinitePtr z2_one() {
    return std::make_shared<FiniteSemigroup>(std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 1}},
                                             std::vector<std::string>{"1", "e", "a"}, 0);
  }

  ComplementData z2_complement() {
    return {{"u", "v"}, {atom(2), atom(3)}, {std::nullopt, Word{0}}, {}};
  }

  // the A-word spelled by a word over the block alphabet
  std::string flatten(AutomaticStructure const& s, Word const& x) {
    std::string out;
    for (auto b : x) {
      std::string name = s.alphabet.name(b).substr(2);
      for (auto& ch : name) {
        if (ch == '.') {
          ch = ' ';
        }
      }
      out += (out.empty() ? "" : " ") + name;
    }
    return out;
  }

  std::set<std::string> flat_words(AutomaticStructure const& s, std::size_t max_len) {
    std::set<std::string> out;
    for (auto const& x : enumerate(s.language, max_len)) {
      out.insert(flatten(s, x));
    }
    return out;
  }
}  // namespace

TEST_CASE("rees_index_up", "[rees_index]") {
  auto const s   = z2_semilattice();
  auto const t   = finite_structure(s, std::vector<std::size_t>{1});
  CHECK(rees_index_up(t, ComplementData{}).alphabet.names() == t.alphabet.names());

  auto const up = rees_index_up(t, z2_complement());
  CHECK(up.alphabet.names() == std::vector<std::string>{"a0", "u", "v"});
  CHECK(checks::words(up, 3) == std::set<std::string>{"a0", "a0 a0", "u", "v"});
  checks::expect_valid(up, 6);
  CHECK(word_equal(up, w(up, "v v"), w(up, "u")));
  CHECK(word_equal(up, w(up, "a0 v"), w(up, "a0 a0")));

  // T1 from T
  auto const one = z2_one();
  auto const t1  = rees_index_up(finite_structure(one, std::vector<std::size_t>{1, 2}),
                                 ComplementData{{"1"}, {atom(0)}, {std::nullopt}, {}});
  checks::expect_valid(t1, 6);

  // a wrong row: u a0 claimed to be a0 a0
  auto bad            = z2_complement();
  bad.rows            = {{Word{0, 0}, Word{1}, Word{2}}, {Word{0, 0}, Word{2}, Word{1}}};
  auto const report   = validate(rees_index_up(t, bad), ValidateOptions{4, std::nullopt, 10});
  CHECK_FALSE(report.ok());

  auto wrong_action = z2_complement();
  wrong_action.right_action = {Word{0}, Word{0}};
  CHECK_THROWS_AS(rees_index_up(t, wrong_action), PreconditionError);
  auto clash  = z2_complement();
  clash.names = {"a0", "v"};
  CHECK_THROWS_AS(rees_index_up(t, clash), PreconditionError);
}

TEST_CASE("rees_index_down preconditions and k search", "[rees_index]") {
  auto const s      = free_monogenic_structure(true);
  auto const member = [&](Word const& x) { return s.evaluate(x).data[0] >= 1; };
  CHECK_FALSE(rees_index_k_holds(s, member, 1));
  CHECK(rees_index_find_k(s, member, 4) == 2);
  CHECK_THROWS_AS(rees_index_down(s, member, 0), PreconditionError);
  CHECK_THROWS_AS(rees_index_down(s, member, 1), PreconditionError);
  // a supplied U must not contain words outside T
  CHECK_THROWS_AS(rees_index_down(s, member, 2, Fsa::universal(s.alphabet)), PreconditionError);
  // with T empty, a a of length 2 lies outside T beyond the bound 1
  auto const never = [](Word const&) { return false; };
  CHECK_THROWS_AS(rees_index_synthesize_u(s, never, 1), PreconditionError);
}

TEST_CASE("rees_index_down re-blocks the free monogenic monoid", "[rees_index]") {
  auto const s      = free_monogenic_structure(true);
  auto const member = [&](Word const& x) { return s.evaluate(x).data[0] >= 1; };
  auto const t      = rees_index_down(s, member, 2);
  CHECK(t.alphabet.names() == std::vector<std::string>{"b:a.a", "b:a.a.a", "c:a"});
  CHECK(checks::words(t, 3) == std::set<std::string>{"c:a", "b:a.a", "b:a.a.a", "b:a.a b:a.a", "b:a.a b:a.a.a",
                                                     "b:a.a b:a.a b:a.a", "b:a.a b:a.a b:a.a.a"});
  checks::expect_valid(t, 6);
  // flattening recovers L - {e}
  std::set<std::string> expect;
  for (auto const& x : enumerate(s.language, 9)) {
    if (member(x)) {
      expect.insert(s.alphabet.format(x));
    }
  }
  std::set<std::string> got;
  for (auto const& x : flat_words(t, 4)) {
    if (std::count(x.begin(), x.end(), 'a') <= 9) {
      got.insert(x);
    }
  }
  CHECK(got == expect);
  // normal forms agree after flattening, on random words
  std::mt19937                          rng(7);
  std::uniform_int_distribution<Symbol> letter(0, Symbol(t.alphabet.size() - 1));
  for (int i = 0; i < 50; ++i) {
    Word x(1 + std::size_t(i % 5));
    for (auto& y : x) {
      y = letter(rng);
    }
    CHECK(flatten(t, normal_form(t, x)) == s.alphabet.format(normal_form(s, s.alphabet.parse(flatten(t, x)))));
  }
}

TEST_CASE("rees_index_down with T = S and k = 1", "[rees_index]") {
  auto const s = integers_structure();
  auto const t = rees_index_down(s, [](Word const&) { return true; }, 1);
  CHECK(t.alphabet.names() == std::vector<std::string>{"b:e", "b:x", "b:X"});
  std::set<std::string> expect;
  for (auto const& x : checks::words(s, 5)) {
    expect.insert(x);
  }
  CHECK(flat_words(t, 5) == expect);
  checks::expect_valid(t, 6);
}

TEST_CASE("rees_index round trips", "[rees_index]") {
  // T an ideal of index 1 in a finite monoid
  auto const one = z2_one();
  auto const s1  = finite_structure(one);
  auto const m1  = [&](Word const& x) { return s1.evaluate(x) != atom(0); };
  auto const t1  = rees_index_down(s1, m1, 2);
  CHECK(t1.alphabet.names() == std::vector<std::string>{"c:e", "c:a"});
  checks::expect_valid(t1, 6);

  // index 2: up then down
  auto const s  = z2_semilattice();
  auto const t  = finite_structure(s, std::vector<std::size_t>{1});
  auto const up = rees_index_up(t, z2_complement());
  auto const in_t = [&](Word const& x) { return up.evaluate(x).data[0] < 2; };
  auto const k  = rees_index_find_k(up, in_t, 4);
  REQUIRE(k == 2);
  auto const down = rees_index_down(up, in_t, *k);
  checks::expect_valid(down, 6);
  CHECK(flat_words(down, 6) == checks::words(t, 6));
  for (auto const& x : enumerate(down.language, 6)) {
    CHECK(t.language.accepts(t.alphabet.parse(flatten(down, x))));
  }
}
