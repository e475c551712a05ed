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
 * Wreath products S wr T for finite T, from a structure (F, K) for the
 * power S^|T|. Words of L are words of K tagged letter by letter with e_i
 * and, on the last letter, q_i, where t_i = e_i q_i with e_i a right
 * identity.
 */

#ifndef AUTSEM_CONSTRUCTIONS_WREATH_HPP
#define AUTSEM_CONSTRUCTIONS_WREATH_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../gsm.hpp"
#include "common.hpp"
#include "direct_product.hpp"

namespace autsem {

  namespace detail {
    /// s with the word `from` of L replaced by `to` (a word not in L with the
    /// same value); the multipliers are patched to match.
    inline AutomaticStructure replace_word(AutomaticStructure const& s, Word const& from, Word const& to) {
      Alphabet const& a    = s.alphabet;
      Fsa const       old  = Fsa::word(a, from);
      Fsa const       neu  = Fsa::word(a, to);
      Fsa const       rest = determinize_minimize(difference(s.language, old));
      Fsa const       lang = determinize_minimize(union_of(rest, neu));
      std::vector<PairRelation> ms;
      for (auto const& m : s.multipliers) {
        PairRelation acc = restrict(m, rest, rest);
        acc              = rel_union(acc, product(neu, difference(apply_word(m, from), old)));
        acc              = rel_union(acc, product(difference(apply_word(swap(m), from), old), neu));
        if (m.accepts(from, from)) {
          acc = rel_union(acc, from_pairs(a, {{to, to}}));
        }
        ms.push_back(rel_minimize(acc));
      }
      std::vector<Word> reps = s.gen_reps;
      for (auto& r : reps) {
        if (r == from) {
          r = to;
        }
      }
      return make_structure(a, s.model, s.images, lang, ms, diagonal(lang), true, reps);
    }

    /// A new letter `name` for the identity, replacing its word in L.
    inline AutomaticStructure add_identity_letter(AutomaticStructure const& s, std::string const& name) {
      Element const one = *s.model->identity();
      Word const    old = representative(s, one);
      std::vector<std::string> names = s.alphabet.names();
      names.push_back(name);
      Alphabet const a(names);
      Symbol const   e = Symbol(s.alphabet.size());
      std::vector<PairRelation> ms;
      for (auto const& m : s.multipliers) {
        ms.push_back(embed(m, a));
      }
      Fsa const lang = embed(s.language, a);
      ms.push_back(diagonal(lang));
      std::vector<Element> images = s.images;
      images.push_back(one);
      std::vector<Word> reps = s.gen_reps;
      reps.push_back(old);
      AutomaticStructure const widened = make_structure(a, s.model, images, lang, ms, embed(s.equality, a), true, reps);
      return replace_word(widened, old, Word{e});
    }

    /// Tuple of the left-nested pairs of an iterated direct product.
    inline std::vector<Element> flatten_pairs(Element const& x, std::size_t m) {
      if (m == 1) {
        return {x};
      }
      std::vector<Element> out = flatten_pairs(x.parts.at(0), m - 1);
      out.push_back(x.parts.at(1));
      return out;
    }
  }  // namespace detail

  /// S^m for a monoid S with identity letter e, by iterated direct products
  /// of renamed copies (letter x of coordinate i is "x@i"). The model is a
  /// CartesianPower.
  inline AutomaticStructure cartesian_power_monoid(AutomaticStructure const& s, std::size_t m,
                                                   std::string const& e = "e") {
    if (m == 0) {
      throw PreconditionError("cartesian_power_monoid: exponent must be positive");
    }
    auto copy = [&](std::size_t i) {
      std::vector<std::string> names;
      for (auto const& n : s.alphabet.names()) {
        names.push_back(n + "@" + std::to_string(i));
      }
      return rename_letters(s, names);
    };
    AutomaticStructure cur = copy(0);
    std::string        id  = e + "@0";
    for (std::size_t i = 1; i < m; ++i) {
      cur = direct_product_monoids(cur, copy(i), id, e + "@" + std::to_string(i));
      if (i + 1 < m) {
        id  = mangle("1", {i});
        cur = detail::add_identity_letter(cur, id);
      }
    }
    auto const           model = std::make_shared<CartesianPower>(s.model, m);
    std::vector<Element> images;
    for (auto const& x : cur.images) {
      images.push_back(Element{{}, detail::flatten_pairs(x, m)});
    }
    return make_structure(cur.alphabet, model, images, cur.language, cur.multipliers, cur.equality, true,
                          cur.gen_reps);
  }

  /// S wr T for finite nontrivial T from a structure with uniqueness for
  /// S^|T| (model CartesianPower; coordinates indexed by T's elements).
  /// Length-one words are stripped first. `dec` defaults to
  /// right_identity_decomposition(T).
  inline AutomaticStructure wreath_finite_T(
      AutomaticStructure const&                                      spow_in,
      FinitePtr                                                      t,
      std::optional<std::vector<std::pair<std::size_t, std::size_t>>> dec        = std::nullopt,
      std::size_t                                                    search_len = 6) {
    detail::require_unique(spow_in, "wreath_finite_T");
    std::size_t const m = t->size();
    if (m < 2) {
      throw PreconditionError("wreath_finite_T: T must have at least two elements");
    }
    auto cp = std::dynamic_pointer_cast<CartesianPower const>(spow_in.model);
    if (!cp || cp->arity() != m) {
      throw PreconditionError("wreath_finite_T: the input must be a structure for S^|T|");
    }
    if (!dec) {
      dec = right_identity_decomposition(*t);
      if (!dec) {
        throw PreconditionError("wreath_finite_T: some element of T is not in the right ideal of a right identity");
      }
    }
    if (dec->size() != m) {
      throw PreconditionError("wreath_finite_T: one decomposition per element of T required");
    }
    for (std::size_t i = 0; i < m; ++i) {
      auto [e, q] = (*dec)[i];
      for (std::size_t x = 0; x < m; ++x) {
        if (t->mul(x, e) != x) {
          throw PreconditionError("wreath_finite_T: e_" + std::to_string(i) + " is not a right identity");
        }
      }
      if (t->mul(e, q) != i) {
        throw PreconditionError("wreath_finite_T: t_" + std::to_string(i) + " != e_i q_i");
      }
    }
    AutomaticStructure const spow = strip_length_one(spow_in, search_len);
    Alphabet const&          f    = spow.alphabet;
    std::size_t const        k    = f.size();

    std::vector<std::string> names;
    for (char const* kind : {"e", "q"}) {
      for (std::size_t i = 0; i < m; ++i) {
        for (Symbol x = 0; x < k; ++x) {
          names.push_back(std::string(kind) + ":" + f.name(x) + ":" + std::to_string(i));
        }
      }
    }
    Alphabet const a(names);
    auto           e_letter = [&](Symbol x, std::size_t i) { return Symbol(i * k + x); };
    auto           q_letter = [&](Symbol x, std::size_t i) { return Symbol(m * k + i * k + x); };

    // q0 = 0, q_i = 1 + i, chi = 1 + m
    std::vector<GsmEdge> edges;
    State const          chi = State(1 + m);
    for (Symbol x = 0; x < k; ++x) {
      for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({0, x, State(1 + i), {e_letter(x, i)}});
        edges.push_back({State(1 + i), x, State(1 + i), {e_letter(x, i)}});
        edges.push_back({State(1 + i), x, chi, {q_letter(x, i)}});
      }
    }
    Gsm const g(f, a, std::size_t(chi) + 1, 0, {chi}, edges);
    Fsa const lang = determinize_minimize(eta(g, spow.language));
    auto const var = bounded_output_variance(g);

    auto const any = Fsa::universal(a);
    std::vector<Fsa> ends;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Symbol> qs;
      for (Symbol x = 0; x < k; ++x) {
        qs.push_back(q_letter(x, i));
      }
      ends.push_back(concat(any, Fsa::letters(a, qs)));
    }
    auto const model = std::make_shared<Wreath>(cp->base(), t);

    // K-word of the q_i-shift of f: coordinate x holds f(x q_i)
    auto shifted = [&](Symbol x, std::size_t i) {
      Element const&       v = spow.images[x];
      std::vector<Element> parts(m);
      for (std::size_t z = 0; z < m; ++z) {
        parts[z] = v.parts[t->mul(z, (*dec)[i].second)];
      }
      try {
        return detail::representative(spow, Element{{}, parts});
      } catch (PreconditionError const&) {
        throw PreconditionError("wreath_finite_T: no word of K represents the q_" + std::to_string(i) + " shift of '"
                                + f.name(x) + "'");
      }
    };
    std::vector<std::vector<PairRelation>> zetas(k);
    for (Symbol x = 0; x < k; ++x) {
      for (std::size_t i = 0; i < m; ++i) {
        zetas[x].push_back(zeta(g, multiplier_for_word(spow, shifted(x, i)), *var));
      }
    }
    auto branch = [&](Word const& w, std::size_t i) {
      Word out;
      for (std::size_t z = 0; z + 1 < w.size(); ++z) {
        out.push_back(e_letter(w[z], i));
      }
      out.push_back(q_letter(w.back(), i));
      return out;
    };

    std::vector<Element>      images(a.size());
    std::vector<PairRelation> ms(a.size(), PairRelation(a, Fsa::nothing(a.padded())));
    std::vector<Word>         reps(a.size());
    for (Symbol x = 0; x < k; ++x) {
      for (std::size_t r = 0; r < m; ++r) {
        auto const [er, qr] = (*dec)[r];
        images[e_letter(x, r)] = Wreath::make(spow.images[x].parts, er);
        images[q_letter(x, r)] = Wreath::make(spow.images[x].parts, qr);
        PairRelation le(a, Fsa::nothing(a.padded())), lq(a, Fsa::nothing(a.padded()));
        for (std::size_t i = 0; i < m; ++i) {
          le = rel_union(le, restrict(zetas[x][i], ends[i], ends[i]));
          // t_i q_r = t_j
          lq = rel_union(lq, restrict(zetas[x][i], ends[i], ends[t->mul(i, qr)]));
        }
        ms[e_letter(x, r)]   = rel_minimize(le);
        ms[q_letter(x, r)]   = rel_minimize(lq);
        reps[e_letter(x, r)] = branch(spow.gen_reps[x], er);
        reps[q_letter(x, r)] = branch(spow.gen_reps[x], qr);
      }
    }
    return make_structure(a, model, images, lang, ms, diagonal(lang), true, reps);
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_WREATH_HPP
