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
 * Bruck-Reilly extensions BR(T, theta) over the generators b = (0, 1, 1),
 * c = (1, 1, 0) and one letter per generator of T.
 *
 * bruck_reilly_finite handles any finite T; the other three take a
 * structure (X, K) with uniqueness for T and use L = c* K b* (or c* b* K
 * when theta is the identity).
 */

#ifndef AUTSEM_CONSTRUCTIONS_BRUCK_REILLY_HPP
#define AUTSEM_CONSTRUCTIONS_BRUCK_REILLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace autsem {

  namespace detail {
    /// Relation-building shorthands over {b, c} u X, with b = 0 and c = 1.
    struct BrPieces {
      Alphabet a;

      Symbol pad() const {
        return pad_of(a.size());
      }
      Fsa letter(Symbol x, Symbol y) const {
        return Fsa::word(a.padded(), {pair_symbol(a.size(), x, y)});
      }
      Fsa cc_star() const {
        return star(letter(1, 1));
      }
      Fsa bb_star() const {
        return star(letter(0, 0));
      }
      Fsa bb_power(std::size_t n) const {
        return Fsa::word(a.padded(), Word(n, pair_symbol(a.size(), 0, 0)));
      }
      PairRelation rel(Fsa const& f) const {
        return PairRelation(a, f);
      }
    };

    inline Alphabet br_alphabet(Alphabet const& x) {
      return Alphabet(disjoint_names(Alphabet{"b", "c"}, x));
    }

    inline std::vector<Element> br_images(AutomaticStructure const& t) {
      Element const        one = *t.model->identity();
      std::vector<Element> images{BruckReilly::triple(0, one, 1), BruckReilly::triple(1, one, 0)};
      for (auto const& x : t.images) {
        images.push_back(BruckReilly::triple(0, x, 0));
      }
      return images;
    }

    /// The word of K representing the identity of T.
    inline Word identity_word(AutomaticStructure const& t, char const* what) {
      auto one = t.model->identity();
      if (!one) {
        throw PreconditionError(std::string(what) + ": T must be a monoid");
      }
      try {
        return representative(t, *one);
      } catch (PreconditionError const&) {
        throw PreconditionError(std::string(what) + ": no word of K represents the identity of T");
      }
    }

    /// Generator representatives c w1, w1 b and the generators of T.
    inline std::vector<Word> br_reps(AutomaticStructure const& t, Alphabet const& a, Word const& w1, bool b_first) {
      Word const        one = embed_word(t.alphabet, a, w1);
      Word              b{0}, c{1};
      std::vector<Word> reps;
      Word              rb = b_first ? b : one;
      rb.insert(rb.end(), (b_first ? one : b).begin(), (b_first ? one : b).end());
      Word rc = c;
      rc.insert(rc.end(), one.begin(), one.end());
      reps.push_back(rb);
      reps.push_back(rc);
      for (auto const& g : t.gen_reps) {
        reps.push_back(embed_word(t.alphabet, a, g));
      }
      return reps;
    }
  }  // namespace detail

  /// BR(T, theta) for a finite monoid T, theta given as a table on T's
  /// elements. L = c* Tbar b* with Tbar = {t:name}.
  inline AutomaticStructure bruck_reilly_finite(FinitePtr t, std::vector<std::size_t> const& theta) {
    if (!t->identity_index()) {
      throw PreconditionError("bruck_reilly_finite: T must be a monoid");
    }
    if (!is_endomorphism(*t, theta, true)) {
      throw PreconditionError("bruck_reilly_finite: theta is not a monoid endomorphism of T");
    }
    std::size_t const        l = t->size();
    std::vector<std::string> names{"b", "c"};
    for (auto const& n : t->names()) {
      names.push_back("t:" + n);
    }
    Alphabet const         a(names);
    detail::BrPieces const p{a};
    auto                   tbar = [](std::size_t i) { return Symbol(2 + i); };
    std::size_t const      one  = *t->identity_index();
    auto const model = std::make_shared<BruckReilly>(t, Endomorphism{Endomorphism::Kind::table, theta, 1});

    std::vector<Symbol> bars;
    for (std::size_t i = 0; i < l; ++i) {
      bars.push_back(tbar(i));
    }
    Fsa const lang = determinize_minimize(
        concat_all({star(Fsa::letters(a, {1})), Fsa::letters(a, bars), star(Fsa::letters(a, {0}))}));

    std::vector<Fsa> lb, lc;
    for (std::size_t i = 0; i < l; ++i) {
      lb.push_back(concat_all({p.cc_star(), p.letter(tbar(i), tbar(i)), p.bb_star(), p.letter(p.pad(), 0)}));
      lc.push_back(concat_all({p.cc_star(), p.letter(tbar(i), 1), p.letter(p.pad(), tbar(theta[i]))}));
      lc.push_back(concat_all({p.cc_star(), p.letter(tbar(i), tbar(i)), p.bb_star(), p.letter(0, p.pad())}));
    }
    std::vector<PairRelation> ms{p.rel(determinize_minimize(union_all(a.padded(), lb))),
                                 p.rel(determinize_minimize(union_all(a.padded(), lc)))};
    std::vector<Element> images{BruckReilly::triple(0, atom(std::int64_t(one)), 1),
                                BruckReilly::triple(1, atom(std::int64_t(one)), 0)};
    auto const theta_fn = [&](Element const& x) { return atom(std::int64_t(theta[std::size_t(x.data[0])])); };
    for (std::size_t g = 0; g < l; ++g) {
      images.push_back(BruckReilly::triple(0, atom(std::int64_t(g)), 0));
      auto const [j, k] = theta_orbit(atom(std::int64_t(g)), theta_fn);
      std::vector<Fsa> parts;
      std::size_t      tn = g;  // g theta^n
      for (std::size_t n = 0; n <= k; ++n) {
        std::vector<Fsa> swaps;
        for (std::size_t alpha = 0; alpha < l; ++alpha) {
          swaps.push_back(p.letter(tbar(alpha), tbar(t->mul(alpha, tn))));
        }
        Fsa body = concat_all({p.cc_star(), union_all(a.padded(), swaps), p.bb_power(n)});
        if (n >= j) {
          body = concat(body, star(p.bb_power(k + 1 - j)));
        }
        parts.push_back(body);
        tn = theta[tn];
      }
      ms.push_back(p.rel(determinize_minimize(union_all(a.padded(), parts))));
    }
    std::vector<Word> reps{{tbar(one), 0}, {1, tbar(one)}};
    for (std::size_t g = 0; g < l; ++g) {
      reps.push_back({tbar(g)});
    }
    return make_structure(a, model, images, lang, ms, diagonal(lang), true, reps);
  }

  /// BR(T, theta) with theta mapping everything to the identity; t is a
  /// structure with uniqueness for T. L = c* K b*.
  inline AutomaticStructure bruck_reilly_const_one(AutomaticStructure const& t) {
    detail::require_unique(t, "bruck_reilly_const_one");
    Word const             w1 = detail::identity_word(t, "bruck_reilly_const_one");
    Alphabet const         a  = detail::br_alphabet(t.alphabet);
    detail::BrPieces const p{a};
    Fsa const              k    = embed(t.language, a);
    Fsa const              dk   = diagonal(k).fsa();
    Fsa const              lang = determinize_minimize(concat_all({star(Fsa::letters(a, {1})), k, star(Fsa::letters(a, {0}))}));
    auto const model = std::make_shared<BruckReilly>(t.model, Endomorphism{Endomorphism::Kind::const_one, {}, 1});

    std::vector<PairRelation> ms;
    ms.push_back(p.rel(determinize_minimize(concat_all({p.cc_star(), dk, p.bb_star(), p.letter(p.pad(), 0)}))));
    PairRelation const shift = p.rel(concat(p.cc_star(), p.letter(p.pad(), 1)));
    PairRelation const to_one = product(k, Fsa::word(a, detail::embed_word(t.alphabet, a, w1)));
    ms.push_back(rel_union(p.rel(concat_all({p.cc_star(), dk, p.bb_star(), p.letter(0, p.pad())})),
                           padded_product(shift, to_one, 1)));
    for (Symbol x = 0; x < t.alphabet.size(); ++x) {
      Fsa const absorbed = concat_all({p.cc_star(), dk, plus(p.letter(0, 0))});
      Fsa const acts     = concat(p.cc_star(), embed(t.multipliers[x], a).fsa());
      ms.push_back(p.rel(determinize_minimize(union_of(absorbed, acts))));
    }
    return make_structure(a, model, detail::br_images(t), lang, ms, diagonal(lang), true,
                          detail::br_reps(t, a, w1, false));
  }

  /// BR(T, 1_T) for theta the identity; L = c* b* K.
  inline AutomaticStructure bruck_reilly_identity(AutomaticStructure const& t) {
    detail::require_unique(t, "bruck_reilly_identity");
    Word const             w1 = detail::identity_word(t, "bruck_reilly_identity");
    Alphabet const         a  = detail::br_alphabet(t.alphabet);
    detail::BrPieces const p{a};
    Fsa const              k    = embed(t.language, a);
    PairRelation const     dk   = diagonal(k);
    Fsa const              lang = determinize_minimize(concat_all({star(Fsa::letters(a, {1})), star(Fsa::letters(a, {0})), k}));
    auto const model = std::make_shared<BruckReilly>(t.model, Endomorphism{Endomorphism::Kind::identity, {}, 1});

    std::vector<PairRelation> ms;
    ms.push_back(padded_product(p.rel(concat_all({p.cc_star(), p.bb_star(), p.letter(p.pad(), 0)})), dk, 1));
    ms.push_back(rel_union(padded_product(p.rel(concat_all({p.cc_star(), p.bb_star(), p.letter(0, p.pad())})), dk, 1),
                           padded_product(p.rel(concat(p.cc_star(), p.letter(p.pad(), 1))), dk, 1)));
    for (Symbol x = 0; x < t.alphabet.size(); ++x) {
      ms.push_back(p.rel(determinize_minimize(concat_all({p.cc_star(), p.bb_star(), embed(t.multipliers[x], a).fsa()}))));
    }
    return make_structure(a, model, detail::br_images(t), lang, ms, diagonal(lang), true,
                          detail::br_reps(t, a, w1, true));
  }

  /// The finite image T theta for bruck_reilly_fgt.
  struct FiniteImage {
    /// T theta as a finite monoid.
    FinitePtr image;
    /// The element of T for each element of `image`.
    std::vector<Element> elements;
    /// x theta as an element of `image`, per letter x of X.
    std::vector<std::size_t> gen_image;
  };

  /// BR(T, theta) for an fgt monoid T and theta with finite image. `fgt_bound`
  /// caps ||u| - |v|| on the multipliers used; left empty, the bound is
  /// computed (and must exist).
  inline AutomaticStructure bruck_reilly_fgt(AutomaticStructure const&  t,
                                             Endomorphism const&        theta,
                                             FiniteImage const&         img,
                                             std::optional<std::size_t> fgt_bound = std::nullopt) {
    detail::require_unique(t, "bruck_reilly_fgt");
    Word const w1 = detail::identity_word(t, "bruck_reilly_fgt");
    if (img.elements.size() != img.image->size() || img.gen_image.size() != t.alphabet.size()) {
      throw PreconditionError("bruck_reilly_fgt: image data sizes do not match");
    }
    SemigroupPtr const& tm = t.model;
    for (Symbol x = 0; x < t.alphabet.size(); ++x) {
      if (theta.apply(*tm, t.images[x]) != img.elements.at(img.gen_image[x])) {
        throw PreconditionError("bruck_reilly_fgt: image of '" + t.alphabet.name(x) + "' is inconsistent with theta");
      }
    }
    Alphabet const         a = detail::br_alphabet(t.alphabet);
    detail::BrPieces const p{a};
    Fsa const              k    = embed(t.language, a);
    Fsa const              dk   = diagonal(k).fsa();
    Fsa const              lang = determinize_minimize(concat_all({star(Fsa::letters(a, {1})), k, star(Fsa::letters(a, {0}))}));
    auto const             model = std::make_shared<BruckReilly>(tm, theta);
    auto const             bound = [&](PairRelation const& r) {
      auto c = bounded_difference(r, fgt_bound ? *fgt_bound : SIZE_MAX);
      if (!c) {
        throw PreconditionError("bruck_reilly_fgt: multiplier length difference exceeds the fgt bound");
      }
      return *c;
    };

    std::vector<PairRelation> ms;
    ms.push_back(p.rel(determinize_minimize(concat_all({p.cc_star(), dk, p.bb_star(), p.letter(p.pad(), 0)}))));
    // N: (w1, w_t) with w1 theta = t, for each t in T theta
    PairRelation n(a, Fsa::nothing(a.padded()));
    for (std::size_t e = 0; e < img.image->size(); ++e) {
      Fsa const pre = intersect(finitereg_automaton(t.alphabet, *img.image, img.gen_image, e), t.language);
      if (is_empty(pre)) {
        continue;
      }
      Word const wt = detail::representative(t, img.elements[e]);
      n             = rel_union(n, product(embed(pre, a), Fsa::word(a, detail::embed_word(t.alphabet, a, wt))));
    }
    ms.push_back(rel_union(p.rel(concat_all({p.cc_star(), dk, p.bb_star(), p.letter(0, p.pad())})),
                           padded_product(p.rel(concat(p.cc_star(), p.letter(p.pad(), 1))), n, 1)));

    auto const theta_fn = [&](Element const& x) { return theta.apply(*tm, x); };
    for (Symbol x = 0; x < t.alphabet.size(); ++x) {
      auto const [j, kk] = theta_orbit(t.images[x], theta_fn);
      PairRelation acc(a, Fsa::nothing(a.padded()));
      Element      xn = t.images[x];  // x theta^n
      for (std::size_t nn = 0; nn <= kk; ++nn) {
        Word const         u  = nn == 0 ? Word{x} : detail::representative(t, xn);
        PairRelation const kn = embed(multiplier_for_word(t, u), a);
        Fsa                bs = p.bb_power(nn);
        if (nn >= j) {
          bs = concat(bs, star(p.bb_power(kk + 1 - j)));
        }
        PairRelation const tail = padded_product(kn, p.rel(bs), bound(kn));
        acc                     = rel_union(acc, p.rel(concat(p.cc_star(), tail.fsa())));
        xn                      = theta_fn(xn);
      }
      ms.push_back(rel_minimize(acc));
    }
    return make_structure(a, model, detail::br_images(t), lang, ms, diagonal(lang), true,
                          detail::br_reps(t, a, w1, false));
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_BRUCK_REILLY_HPP
