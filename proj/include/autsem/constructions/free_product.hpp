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
 * Free products of semigroups and of monoids, and the restrictions back to
 * a factor.
 */

#ifndef AUTSEM_CONSTRUCTIONS_FREE_PRODUCT_HPP
#define AUTSEM_CONSTRUCTIONS_FREE_PRODUCT_HPP

#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

namespace autsem {

  namespace detail {
    /// Alternating syllable words ending in a syllable of `last`:
    /// (other u eps)(last other)* last.
    inline Fsa ending_in(Fsa const& last, Fsa const& other) {
      Fsa const eps = Fsa::empty_word(last.alphabet());
      return concat_all({union_of(other, eps), star(concat(last, other)), last});
    }
  }  // namespace detail

  /// Free product S1 * S2 over the disjoint union of the alphabets. Words of
  /// L are alternating sequences of syllables from L1 and L2.
  inline AutomaticStructure free_product_semigroups(AutomaticStructure const& s1, AutomaticStructure const& s2) {
    detail::require_unique(s1, "free_product_semigroups");
    detail::require_unique(s2, "free_product_semigroups");
    Alphabet const                   a(detail::disjoint_names(s1.alphabet, s2.alphabet));
    AutomaticStructure const* const  in[2] = {&s1, &s2};
    Fsa const                        l[2]  = {embed(s1.language, a), embed(s2.language, a)};
    Fsa const                        w[2]  = {detail::ending_in(l[0], l[1]), detail::ending_in(l[1], l[0])};
    Fsa const                        lang  = determinize_minimize(union_of(w[0], w[1]));
    Fsa const                        eps   = Fsa::empty_word(a);
    auto                             model = std::make_shared<FreeProduct>(s1.model, s2.model, false);

    std::vector<Element>      images;
    std::vector<PairRelation> ms;
    std::vector<Word>         reps;
    std::vector<int>          tags;
    for (int i = 0; i < 2; ++i) {
      AutomaticStructure const& s = *in[i];
      // words ending in the other factor, or nothing at all
      PairRelation const before = diagonal(union_of(w[1 - i], eps));
      PairRelation const other  = diagonal(w[1 - i]);
      for (Symbol x = 0; x < s.alphabet.size(); ++x) {
        Word const g = detail::embed_word(s.alphabet, a, s.gen_reps[x]);
        ms.push_back(rel_union(detail::rel_concat(before, embed(s.multipliers[x], a)),
                               detail::rel_concat(other, detail::append(a, g))));
        images.push_back(model->syllable(std::size_t(i), s.images[x]));
        reps.push_back(g);
        tags.push_back(i + 1);
      }
    }
    AutomaticStructure out = make_structure(a, model, images, lang, ms, diagonal(lang), true, reps);
    out.tags               = tags;
    return out;
  }

  /// The factor `factor` (1 or 2) of a free product: its letters and the
  /// words of L over them.
  inline AutomaticStructure free_product_restrict(AutomaticStructure const& p, int factor) {
    if (factor != 1 && factor != 2) {
      throw PreconditionError("free_product_restrict: factor must be 1 or 2");
    }
    if (p.tags.size() != p.alphabet.size()) {
      throw PreconditionError("free_product_restrict: letters carry no factor tags");
    }
    std::vector<Symbol> keep;
    for (Symbol x = 0; x < p.alphabet.size(); ++x) {
      if (p.tags[x] == factor) {
        keep.push_back(x);
      }
    }
    if (keep.empty()) {
      throw PreconditionError("free_product_restrict: no letters in factor " + std::to_string(factor)
                              + " (empty language)");
    }
    auto fp = std::dynamic_pointer_cast<FreeProduct const>(p.model);
    if (!fp) {
      if (keep.size() == p.alphabet.size()) {
        return p;  // already a single factor
      }
      throw PreconditionError("free_product_restrict: input is not a free product");
    }
    if (fp->is_monoid()) {
      throw PreconditionError("free_product_restrict: monoid free products need free_product_monoids_restrict");
    }
    std::vector<std::string> names;
    std::vector<Element>     images;
    for (auto x : keep) {
      names.push_back(p.alphabet.name(x));
      images.push_back(p.images[x].parts.at(0));
    }
    Alphabet const b(names);
    Fsa const      lb   = intersect(p.language, plus(Fsa::letters(p.alphabet, keep)));
    Fsa const      lang = determinize_minimize(detail::shrink(lb, b));
    std::vector<PairRelation> ms;
    for (auto x : keep) {
      ms.push_back(detail::shrink(restrict(p.multipliers[x], lb, lb), b));
    }
    AutomaticStructure out = make_structure(b, fp->factor(std::size_t(factor - 1)), images, lang, ms,
                                            detail::shrink(restrict(p.equality, lb, lb), b), p.unique);
    out.tags.assign(b.size(), factor);
    return out;
  }

  /// Free product of monoids M1 * M2 sharing the identity letter `e`:
  /// L = {e}(L1' u eps)(L2' L1')*(L2' u eps) with Li' = Li - {e}.
  inline AutomaticStructure free_product_monoids(AutomaticStructure const& m1,
                                                 AutomaticStructure const& m2,
                                                 std::string const&        e = "e") {
    detail::require_unique(m1, "free_product_monoids");
    detail::require_unique(m2, "free_product_monoids");
    AutomaticStructure const* const in[2] = {&m1, &m2};
    for (auto const* m : in) {
      detail::check_identity_letter(*m, e, "free_product_monoids");
    }
    std::vector<std::string> names = m1.alphabet.names();
    for (auto const& n : m2.alphabet.names()) {
      if (n == e) {
        continue;
      }
      if (m1.alphabet.find(n)) {
        throw PreconditionError("alphabets overlap in letter '" + n + "'");
      }
      names.push_back(n);
    }
    Alphabet const a(names);
    Symbol const   ea  = a.at(e);
    Fsa const      eps = Fsa::empty_word(a);
    Fsa const      ew  = Fsa::word(a, {ea});
    Fsa const      bar[2] = {difference(embed(m1.language, a), ew), difference(embed(m2.language, a), ew)};
    Fsa const      w[2]   = {detail::ending_in(bar[0], bar[1]), detail::ending_in(bar[1], bar[0])};
    Fsa const      tail   = union_all(a, {w[0], w[1], eps});
    Fsa const      lang   = determinize_minimize(concat(ew, tail));
    PairRelation const ee = detail::pair_letter(a, ea, ea);
    auto               model = std::make_shared<FreeProduct>(m1.model, m2.model, true);

    std::vector<Element>      images(a.size());
    std::vector<PairRelation> ms(a.size(), diagonal(lang));
    std::vector<Word>         reps(a.size(), Word{ea});
    std::vector<int>          tags(a.size(), 0);
    images[ea] = Element{};
    for (int i = 0; i < 2; ++i) {
      AutomaticStructure const& m    = *in[i];
      Symbol const              mine = m.alphabet.at(e);
      Fsa const                 bari = difference(m.language, Fsa::word(m.alphabet, {mine}));
      PairRelation const        before = diagonal(union_of(w[1 - i], eps));
      for (Symbol x = 0; x < m.alphabet.size(); ++x) {
        if (x == mine) {
          continue;
        }
        Symbol const        y    = a.at(m.alphabet.name(x));
        PairRelation const& mult = m.multipliers[x];
        // the last syllable u of factor i absorbs x: u x in L', or u x = 1
        PairRelation r = detail::rel_concat(before, embed(restrict(mult, bari, bari), a));
        Fsa const    to_one = intersect(apply_word(swap(mult), Word{mine}), bari);
        r = rel_union(r, detail::rel_concat(before, detail::drop(embed(to_one, a))));
        Word const g = detail::embed_word(m.alphabet, a, m.gen_reps[x]);
        if (g == Word{ea}) {
          r = rel_union(r, before);
        } else {
          r = rel_union(r, detail::rel_concat(before, detail::append(a, g)));
        }
        ms[y]     = detail::rel_concat(ee, r);
        images[y] = model->syllable(std::size_t(i), m.images[x]);
        Word rep{ea};
        if (g != Word{ea}) {
          rep.insert(rep.end(), g.begin(), g.end());
        }
        reps[y] = rep;
        tags[y] = i + 1;
      }
    }
    AutomaticStructure out = make_structure(a, model, images, lang, ms, diagonal(lang), true, reps);
    out.tags               = tags;
    return out;
  }

  /// The factor `factor` (1 or 2) of a monoid free product: the words e u
  /// with at most one syllable, taken from that factor.
  inline AutomaticStructure free_product_monoids_restrict(AutomaticStructure const& p, int factor) {
    if (factor != 1 && factor != 2) {
      throw PreconditionError("free_product_monoids_restrict: factor must be 1 or 2");
    }
    if (p.tags.size() != p.alphabet.size()) {
      throw PreconditionError("free_product_monoids_restrict: letters carry no factor tags");
    }
    std::vector<Symbol> keep, body;
    std::size_t         identities = 0;
    for (Symbol x = 0; x < p.alphabet.size(); ++x) {
      if (p.tags[x] == 0) {
        ++identities;
        keep.push_back(x);
      } else if (p.tags[x] == factor) {
        keep.push_back(x);
        body.push_back(x);
      }
    }
    if (identities != 1) {
      throw PreconditionError("free_product_monoids_restrict: input not produced by free_product_monoids");
    }
    auto fp = std::dynamic_pointer_cast<FreeProduct const>(p.model);
    if (!fp) {
      if (keep.size() == p.alphabet.size()) {
        return p;
      }
      throw PreconditionError("free_product_monoids_restrict: input is not a free product");
    }
    if (!fp->is_monoid()) {
      throw PreconditionError("free_product_monoids_restrict: input is a semigroup free product");
    }
    SemigroupPtr const&      target = fp->factor(std::size_t(factor - 1));
    std::vector<std::string> names;
    std::vector<Element>     images;
    Symbol                   e = 0;
    for (auto x : keep) {
      names.push_back(p.alphabet.name(x));
      Element const& v = p.images[x];
      images.push_back(v.parts.empty() ? *target->identity() : v.parts[0]);
      if (p.tags[x] == 0) {
        e = x;
      }
    }
    Alphabet const b(names);
    Fsa const      shape = concat(Fsa::word(p.alphabet, {e}), star(Fsa::letters(p.alphabet, body)));
    Fsa const      lb    = intersect(p.language, shape);
    Fsa const      lang  = determinize_minimize(detail::shrink(lb, b));
    std::vector<PairRelation> ms;
    for (auto x : keep) {
      ms.push_back(detail::shrink(restrict(p.multipliers[x], lb, lb), b));
    }
    AutomaticStructure out = make_structure(b, target, images, lang, ms,
                                            detail::shrink(restrict(p.equality, lb, lb), b), p.unique);
    out.tags.clear();
    for (auto x : keep) {
      out.tags.push_back(p.tags[x]);
    }
    return out;
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_FREE_PRODUCT_HPP
