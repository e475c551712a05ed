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

#include "autsem/constructions/rees_matrix.hpp"
#include "catch_amalgamated.hpp"
#include "checks.hpp"

using namespace autsem;
using checks::w;

namespace {
  std::vector<std::vector<Element>> constant(std::size_t nj, std::size_t ni, Element const& x) {
    return std::vector<std::vector<Element>>(nj, std::vector<Element>(ni, x));
  }

  // b_h = 1 p b_h for P with identity entries
  std::vector<ReesDecomposition> trivial_dec(AutomaticStructure const& v, bool adjoin) {
    std::vector<ReesDecomposition> dec;
    for (auto const& img : v.images) {
      if (adjoin) {
        dec.push_back({AdjoinIdentity::one(), 0, 0, AdjoinIdentity::wrap(img)});
      } else {
        dec.push_back({atom(0), 0, 0, img});
      }
    }
    return dec;
  }

  // Z2 with a zero: e, a, z
  FinitePtr z2_zero() {
    return std::make_shared<FiniteSemigroup>(std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 0, 2}, {2, 2, 2}},
                                             std::vector<std::string>{"e", "a", "z"});
  }

  // Every element of M[Z2; ni, nj; P = e] as a letter.
  AutomaticStructure rees_letters(std::size_t ni, std::size_t nj) {
    auto                     model = std::make_shared<ReesMatrix>(cyclic_group(2), ni, nj, constant(nj, ni, atom(0)));
    std::vector<std::string> names;
    std::vector<Element>     images;
    auto const               all = model->elements();
    for (auto const& x : *all) {
      names.push_back(mangle("x", {std::size_t(x.data[0]), std::size_t(x.parts[0].data[0]), std::size_t(x.data[1])}));
      images.push_back(x);
    }
    return enumerated_structure(Alphabet(names), model, images);
  }
}  // namespace

TEST_CASE("Rees matrix over Z2 with identity adjoined", "[rees]") {
  auto const v  = finite_structure(cyclic_group(2));
  auto const s1 = rees_matrix_build(v, trivial_dec(v, true), 2, 2, constant(2, 2, atom(0)), {AdjoinIdentity::one()});
  CHECK(s1.alphabet.size() == 16);
  CHECK(s1.alphabet.name(0) == "c:0:0");
  checks::expect_valid(s1, 6);
  // c_{l a1} d_{a1 a2} e_{a2 r} has value (l, b_{a1} b_{a2}, r)
  Word const   x   = w(s1, "c:1:1 d:1:1 e:1:0");
  Element const val = s1.evaluate(x);
  CHECK(val == ReesMatrix::triple(1, AdjoinIdentity::wrap(atom(0)), 0));
  CHECK(normal_form(s1, x) == w(s1, "c:1:0 e:0:0"));
  CHECK(normal_form(s1, w(s1, "f:0:0:1 f:1:0:0")) == w(s1, "c:0:0 e:0:0"));
  CHECK(s1.language.accepts(w(s1, "f:1:0:1")));

  auto const u1 = rees_matrix_converse(s1);
  CHECK(u1.alphabet.names().front() == "b:0");
  checks::expect_valid(u1, 6);
  CHECK(u1.model->name() == "finite(2)^1");
}

TEST_CASE("Rees matrix without an adjoined identity", "[rees]") {
  auto const v = finite_structure(cyclic_group(2));
  auto const s = rees_matrix_build(v, trivial_dec(v, false), 2, 2, constant(2, 2, atom(0)), {}, false);
  CHECK(s.alphabet.size() == 12);
  checks::expect_valid(s, 6);
  auto const u = rees_matrix_converse(s);
  checks::expect_valid(u, 6);
}

TEST_CASE("Rees matrix preconditions", "[rees]") {
  auto const v = finite_structure(cyclic_group(2));
  auto       bad = trivial_dec(v, true);
  std::swap(bad[0], bad[1]);
  CHECK_THROWS_AS(rees_matrix_build(v, bad, 2, 2, constant(2, 2, atom(0)), {AdjoinIdentity::one()}), PreconditionError);
  CHECK_THROWS_AS(rees_matrix_build(v, trivial_dec(v, true), 2, 2, constant(2, 2, atom(0)), {}), PreconditionError);

  // p = z gives z U1 = {z}, a proper subset of U
  auto const u  = z2_zero();
  auto const vz = finite_structure(u);
  std::vector<std::vector<Element>> p{{atom(0), atom(2)}, {atom(0), atom(0)}};
  auto const s1 = rees_matrix_build(vz, trivial_dec(vz, true), 2, 2, p, {AdjoinIdentity::one()});
  checks::expect_valid(s1, 4);
  CHECK_THROWS_AS(rees_matrix_converse(s1, {1, 0}), PreconditionError);
  checks::expect_valid(rees_matrix_converse(s1, {0, 0}), 5);
}

TEST_CASE("converse from a prefix-automatic Rees matrix semigroup", "[rees]") {
  auto const s = rees_letters(2, 2);
  checks::expect_valid(s, 3);
  auto const u = rees_matrix_converse_prefix(s, finite_prefix_equality(s));
  CHECK(u.model->name() == "finite(2)");
  checks::expect_valid(u, 6);
  // a single letter: no c letters between b letters
  CHECK(u.language.accepts(w(u, "b:0")));

  auto const local = rees_matrix_converse_prefix(rees_letters(1, 1), finite_prefix_equality(rees_letters(1, 1)));
  CHECK(local.alphabet.names() == std::vector<std::string>{"b:0", "b:1", "c:0:0"});
  checks::expect_valid(local, 6);

  CHECK_THROWS_AS(rees_matrix_converse_prefix(s, PairRelation(s.alphabet, Fsa::nothing(s.alphabet.padded()))),
                  PreconditionError);
}
