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

#include "autsem/semigroups.hpp"
#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace autsem;

namespace {
  template <typename Universe>
  bool associative(Semigroup const& s, Universe const& u) {
    for (auto const& x : u) {
      for (auto const& y : u) {
        for (auto const& z : u) {
          if (s.multiply(s.multiply(x, y), z) != s.multiply(x, s.multiply(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Element br(std::int64_t m, std::int64_t t, std::int64_t n) {
    return BruckReilly::triple(m, atom(t), n);
  }
}  // namespace

TEST_CASE("Cayley table validation", "[semigroups]") {
  CHECK_THROWS_AS(FiniteSemigroup({{0, 1}, {0, 0}}), PreconditionError);  // not associative
  CHECK_THROWS_AS(FiniteSemigroup({{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(FiniteSemigroup({{0, 0}, {0, 1}}, {}, 0), PreconditionError);
  CHECK(cyclic_group(2)->identity_index() == 0u);
  CHECK_FALSE(null_semigroup2()->identity_index().has_value());
}

TEST_CASE("evaluate through a generating map", "[semigroups]") {
  auto    bicyclic = std::make_shared<BruckReilly>(trivial_monoid(), Endomorphism{});
  Alphabet a{"b", "c", "t"};
  GenMap  g{a, bicyclic, {br(0, 0, 1), br(1, 0, 0), br(0, 0, 0)}};
  CHECK(g.evaluate(a.parse("b c")) == br(0, 0, 0));
  CHECK(g.evaluate(a.parse("c b")) == br(1, 0, 1));
  CHECK(g.evaluate(a.parse("c")) == br(1, 0, 0));
  CHECK_THROWS_AS(g.evaluate(Word{}), PreconditionError);

  std::mt19937 rng(1);
  for (auto const& w : oracle::all_words(3, 5)) {
    if (w.size() < 2) {
      continue;
    }
    std::size_t cut = 1 + rng() % (w.size() - 1);
    Word        u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
    REQUIRE(g.evaluate(w) == bicyclic->multiply(g.evaluate(u), g.evaluate(v)));
  }
}

TEST_CASE("free product multiplication", "[semigroups]") {
  auto        s1 = std::make_shared<FreeMonogenic>(false);
  auto        s2 = std::make_shared<FreeMonogenic>(false);
  FreeProduct fp(s1, s2, false);
  Element     a = fp.syllable(0, atom(1)), b = fp.syllable(1, atom(1));
  CHECK(fp.multiply(a, b).parts.size() == 2);
  CHECK(fp.multiply(a, a) == fp.syllable(0, atom(2)));
  Element ab  = fp.multiply(a, b);
  Element ba  = fp.multiply(b, a);
  Element exp = fp.multiply(fp.multiply(a, fp.syllable(1, atom(2))), a);
  CHECK(fp.multiply(ab, ba) == exp);
  CHECK(exp.parts.size() == 3);

  auto        z2 = cyclic_group(2);
  FreeProduct d(z2, z2, true);
  Element     x = d.syllable(0, atom(1)), y = d.syllable(1, atom(1));
  CHECK(d.multiply(x, x) == *d.identity());
  // y x x y collapses completely
  CHECK(d.multiply(d.multiply(y, x), d.multiply(x, y)) == *d.identity());
  std::vector<Element> u{*d.identity(), x, y, d.multiply(x, y), d.multiply(y, x), d.multiply(d.multiply(x, y), x)};
  CHECK(associative(d, u));
}

TEST_CASE("Rees matrix multiplication", "[semigroups]") {
  auto       triv = trivial_monoid();
  ReesMatrix band(triv, 2, 2, {{atom(0), atom(0)}, {atom(0), atom(0)}});
  CHECK(band.multiply(ReesMatrix::triple(0, atom(0), 0), ReesMatrix::triple(1, atom(0), 1))
        == ReesMatrix::triple(0, atom(0), 1));

  auto       z2 = cyclic_group(2);
  ReesMatrix r0(z2, 2, 2, {{atom(0), atom(0)}, {atom(0), atom(0)}});
  CHECK(r0.multiply(ReesMatrix::triple(0, atom(1), 0), ReesMatrix::triple(0, atom(1), 0))
        == ReesMatrix::triple(0, atom(0), 0));
  ReesMatrix r1(z2, 2, 2, {{atom(1), atom(0)}, {atom(0), atom(1)}});
  CHECK(associative(r1, *r1.elements()));
}

TEST_CASE("Bruck-Reilly multiplication", "[semigroups]") {
  auto        z2 = cyclic_group(2);
  BruckReilly b(z2, Endomorphism{});
  CHECK(b.multiply(br(0, 1, 2), br(1, 1, 0)) == br(0, 0, 1));
  auto        triv = trivial_monoid();
  BruckReilly bic(triv, Endomorphism{});
  CHECK(bic.multiply(br(0, 0, 1), br(1, 0, 0)) == br(0, 0, 0));

  Endomorphism         one{Endomorphism::Kind::const_one, {}, 0};
  BruckReilly          b1(z2, one);
  std::vector<Element> u;
  for (std::int64_t m = 0; m <= 4; ++m) {
    for (std::int64_t t = 0; t < 2; ++t) {
      for (std::int64_t n = 0; n <= 4; ++n) {
        u.push_back(br(m, t, n));
      }
    }
  }
  for (auto const& x : u) {
    CHECK(b1.multiply(*b1.identity(), x) == x);
    CHECK(b1.multiply(x, *b1.identity()) == x);
  }
  std::vector<Element> small(u.begin(), u.begin() + 30);
  CHECK(associative(b1, small));
  CHECK(associative(b, small));
}

TEST_CASE("wreath multiplication", "[semigroups]") {
  auto   z2 = cyclic_group(2);
  Wreath w(z2, z2);
  // ((0,0),0) * ((0,1),1): t = 0 is the identity, so pointwise
  Element x = Wreath::make({atom(0), atom(0)}, 0);
  Element y = Wreath::make({atom(0), atom(1)}, 1);
  CHECK(w.multiply(x, y) == Wreath::make({atom(0), atom(1)}, 1));
  // twisted: (f, 1)(g, u) has (x)f + (x+1)g
  Element z = Wreath::make({atom(1), atom(0)}, 1);
  CHECK(w.multiply(z, y) == Wreath::make({atom(0), atom(0)}, 0));
  std::vector<Element> all;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int t = 0; t < 2; ++t) {
        all.push_back(Wreath::make({atom(a), atom(b)}, std::size_t(t)));
      }
    }
  }
  CHECK(associative(w, all));
}

TEST_CASE("square surjectivity", "[semigroups]") {
  CHECK(square_surjective(*cyclic_group(3)));
  CHECK_FALSE(square_surjective(*null_semigroup2()));
  CHECK(square_surjective(*right_zero_semigroup(3)));
}

TEST_CASE("right identity decomposition", "[semigroups]") {
  auto z3 = cyclic_group(3);
  auto d  = right_identity_decomposition(*z3);
  REQUIRE(d);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK((*d)[t] == std::pair<std::size_t, std::size_t>{0, t});
  }
  CHECK_FALSE(right_identity_decomposition(*right_zero_semigroup(2)).has_value());
  auto lz = left_zero_semigroup(2);  // every element is a right identity
  CHECK(right_identity_decomposition(*lz).has_value());
}

TEST_CASE("ideal generated", "[semigroups]") {
  auto z2 = cyclic_group(2);
  CHECK(ideal_generated(*z2, {0}) == std::set<std::size_t>{0, 1});
  CHECK(ideal_generated(*z2, {}).empty());
  auto n = null_semigroup2();
  CHECK(ideal_generated(*n, {1}) == std::set<std::size_t>{1});
}

TEST_CASE("theta orbit", "[semigroups]") {
  auto id  = [](Element const& x) { return x; };
  auto one = [](Element const&) { return atom(0); };
  CHECK(theta_orbit(atom(1), id) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(theta_orbit(atom(1), one) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(theta_orbit(atom(0), one) == std::pair<std::size_t, std::size_t>{0, 0});
  // x -> x + 1 mod 3 from 0: period 3, no preperiod
  auto rot = [](Element const& x) { return atom((x.data[0] + 1) % 3); };
  CHECK(theta_orbit(atom(0), rot) == std::pair<std::size_t, std::size_t>{0, 2});

  // minimality by direct scan on random maps of a 6-element set
  std::mt19937 rng(2);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::int64_t> map(6);
    for (auto& v : map) {
      v = std::int64_t(rng() % 6);
    }
    auto f     = [&](Element const& x) { return atom(map[std::size_t(x.data[0])]); };
    auto [j, k] = theta_orbit(atom(0), f);
    auto pow   = [&](std::size_t e) {
      Element x = atom(0);
      for (std::size_t i = 0; i < e; ++i) {
        x = f(x);
      }
      return x;
    };
    REQUIRE(pow(j) == pow(k + 1));
    for (std::size_t j2 = 0; j2 <= j; ++j2) {
      for (std::size_t k2 = j2; k2 < 20; ++k2) {
        if (pow(j2) == pow(k2 + 1)) {
          REQUIRE((j2 > j || (j2 == j && k2 >= k)));
        }
      }
    }
  }
}

TEST_CASE("finitereg automaton", "[semigroups]") {
  Alphabet a{"x", "y"};
  auto     triv = trivial_monoid();
  CHECK(equivalent(finitereg_automaton(a, *triv, {0, 0}, 0), plus(Fsa::letters(a, {0, 1}))));
  auto z2   = cyclic_group(2);
  Fsa  even = finitereg_automaton(a, *z2, {1, 1}, 0);
  Fsa  odd  = finitereg_automaton(a, *z2, {1, 1}, 1);
  for (auto const& w : oracle::all_words(2, 6)) {
    CHECK(even.accepts(w) == (!w.empty() && w.size() % 2 == 0));
    CHECK(odd.accepts(w) == (w.size() % 2 == 1));
  }
}

TEST_CASE("fgt witness", "[semigroups]") {
  auto z3 = cyclic_group(3);
  for (std::int64_t t = 0; t < 3; ++t) {
    CHECK(fgt_witness(*z3, *z3->elements(), atom(t)) == 1);
  }
  auto lz = left_zero_semigroup(4);
  CHECK(fgt_witness(*lz, *lz->elements(), atom(2)) == 1);
  // x t1 = x: each x is its own solution; for t2 = t1 only x = t1
  auto rz = right_zero_semigroup(4);
  CHECK(fgt_witness(*rz, *rz->elements(), atom(1)) == 4);
  FreeMonogenic        fm(true);
  std::vector<Element> u;
  for (int k = 0; k <= 10; ++k) {
    u.push_back(atom(k));
  }
  CHECK(fgt_witness(fm, u, atom(3)) <= 1);
}
