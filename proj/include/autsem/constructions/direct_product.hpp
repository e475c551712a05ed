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
 * Direct products: of two monoids (interleaved words), of a finite
 * semigroup with S^2 = S and an automatic semigroup, and of two structures
 * whose elements have representatives of a common length.
 */

#ifndef AUTSEM_CONSTRUCTIONS_DIRECT_PRODUCT_HPP
#define AUTSEM_CONSTRUCTIONS_DIRECT_PRODUCT_HPP

#include <unordered_map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "../explore.hpp"
#include "common.hpp"

namespace autsem {

  /// a1 b1 a2 b2 ... with the shorter word filled up by e1 (first track) or
  /// e2 (second track).
  inline Word interleave_words(Word const& alpha, Word const& beta, Symbol e1, Symbol e2) {
    Word              out;
    std::size_t const n = std::max(alpha.size(), beta.size());
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(i < alpha.size() ? alpha[i] : e1);
      out.push_back(i < beta.size() ? beta[i] : e2);
    }
    return out;
  }

  namespace detail {
    /// {(sigma(a, b), sigma(a', b')) : (a, a') in r1, (b, b') in r2} over
    /// `a`, whose letters are those of r1's base followed by those of r2's.
    inline PairRelation interleave(PairRelation const& r1,
                                   PairRelation const& r2,
                                   Alphabet const&     a,
                                   Symbol              e1,
                                   Symbol              e2) {
      std::size_t const n1 = r1.base().size();
      std::size_t const n2 = r2.base().size();
      std::size_t const n  = a.size();
      std::vector<char> live1, live2;
      Dfa const         d1 = live_dfa(r1, live1);
      Dfa const         d2 = live_dfa(r2, live2);
      // side flags: 1 first track ended, 2 second track ended, 4 output
      // ended, 8 the current first-track letter was a fill
      enum : std::uint32_t { kEnd1 = 1, kEnd2 = 2, kDone = 4, kFill = 8 };
      // Key: [d1, d2, parity, first pair, flags left, flags right]
      Fsa f = explore(
          a.padded(),
          {Key{d1.start, d2.start, 0, 1, 0, 0}},
          [&](Key const& k, auto emit) {
            for (Symbol p = 0; p < a.padded().size(); ++p) {
              Symbol const  x[2]    = {pair_left(n, p), pair_right(n, p)};
              std::uint32_t flag[2] = {k[4], k[5]};
              Symbol        comp[2];
              bool          ok = true;
              for (int s = 0; s < 2 && ok; ++s) {
                std::uint32_t& fl = flag[s];
                if (fl & kDone) {
                  ok   = x[s] == pad_of(n);
                  comp[s] = k[2] == 0 ? pad_of(n1) : pad_of(n2);
                  continue;
                }
                if (k[2] == 0) {
                  if (x[s] == pad_of(n)) {
                    ok = k[3] == 0;
                    fl |= kEnd1 | kEnd2 | kDone;
                    comp[s] = pad_of(n1);
                  } else if (x[s] >= n1) {
                    ok = false;
                  } else if (k[3] == 0 && x[s] == e1) {
                    fl |= kEnd1 | kFill;
                    comp[s] = pad_of(n1);
                  } else {
                    ok = !(fl & kEnd1);
                    fl &= ~std::uint32_t(kFill);
                    comp[s] = x[s];
                  }
                } else {
                  if (x[s] == pad_of(n) || x[s] < n1) {
                    ok = false;
                  } else if (k[3] == 0 && x[s] == e2) {
                    ok = !(fl & kFill);
                    fl |= kEnd2;
                    comp[s] = pad_of(n2);
                  } else {
                    ok      = !(fl & kEnd2);
                    comp[s] = x[s] - Symbol(n1);
                  }
                }
              }
              if (!ok) {
                continue;
              }
              std::uint32_t s1 = k[0], s2 = k[1];
              if (k[2] == 0) {
                if (!(comp[0] == pad_of(n1) && comp[1] == pad_of(n1))) {
                  s1 = d1.next(s1, pair_symbol(n1, comp[0], comp[1]));
                  if (!live1[s1]) {
                    continue;
                  }
                }
              } else if (!(comp[0] == pad_of(n2) && comp[1] == pad_of(n2))) {
                s2 = d2.next(s2, pair_symbol(n2, comp[0], comp[1]));
                if (!live2[s2]) {
                  continue;
                }
              }
              std::uint32_t const first = k[2] == 1 ? 0 : k[3];
              emit(p, Key{s1, s2, 1 - k[2], first, flag[0], flag[1]});
            }
          },
          [&](Key const& k) { return k[2] == 0 && k[3] == 0 && d1.accepting[k[0]] && d2.accepting[k[1]]; });
      return PairRelation(a, determinize_minimize(intersect(f, well_padded(a).fsa())));
    }

    /// X = A x B, letter (i, j) at i |B| + j, named "(a,b)".
    inline Alphabet pair_alphabet(Alphabet const& a, Alphabet const& b) {
      std::vector<std::string> names;
      for (auto const& x : a.names()) {
        for (auto const& y : b.names()) {
          names.push_back("(" + x + "," + y + ")");
        }
      }
      return Alphabet(names);
    }

    /// Reads a relation over A x B as a relation r over A on the first
    /// coordinates and q over B on the second.
    inline PairRelation zip(PairRelation const& r, PairRelation const& q, Alphabet const& x) {
      std::size_t const na = r.base().size();
      std::size_t const nb = q.base().size();
      std::size_t const n  = x.size();
      std::vector<char> lr, lq;
      Dfa const         dr = live_dfa(r, lr);
      Dfa const         dq = live_dfa(q, lq);
      Fsa f = explore(
          x.padded(),
          {Key{dr.start, dq.start}},
          [&](Key const& k, auto emit) {
            for (Symbol p = 0; p < x.padded().size(); ++p) {
              Symbol const l = pair_left(n, p), rt = pair_right(n, p);
              Symbol const al = l == pad_of(n) ? pad_of(na) : l / Symbol(nb);
              Symbol const bl = l == pad_of(n) ? pad_of(nb) : l % Symbol(nb);
              Symbol const ar = rt == pad_of(n) ? pad_of(na) : rt / Symbol(nb);
              Symbol const br = rt == pad_of(n) ? pad_of(nb) : rt % Symbol(nb);
              State const  s1 = dr.next(k[0], pair_symbol(na, al, ar));
              State const  s2 = dq.next(k[1], pair_symbol(nb, bl, br));
              if (lr[s1] && lq[s2]) {
                emit(p, Key{s1, s2});
              }
            }
          },
          [&](Key const& k) { return dr.accepting[k[0]] && dq.accepting[k[1]]; });
      return PairRelation(x, determinize_minimize(intersect(f, well_padded(x).fsa())));
    }

    /// {(u, v) in A+ x A+ : pred(product of u, product of v)} over the
    /// letters of a finite semigroup.
    template <typename Pred>
    PairRelation product_relation(FiniteSemigroup const& s, Alphabet const& a, Pred&& pred) {
      std::size_t const n = a.size();
      // Key: [product of left + 1 or 0, product of right + 1 or 0]
      Fsa f = explore(
          a.padded(),
          {Key{0, 0}},
          [&](Key const& k, auto emit) {
            for (Symbol p = 0; p < a.padded().size(); ++p) {
              Symbol const  x[2] = {pair_left(n, p), pair_right(n, p)};
              std::uint32_t v[2] = {k[0], k[1]};
              for (int i = 0; i < 2; ++i) {
                if (x[i] != pad_of(n)) {
                  v[i] = v[i] == 0 ? x[i] + 1 : std::uint32_t(s.mul(v[i] - 1, x[i]) + 1);
                }
              }
              emit(p, Key{v[0], v[1]});
            }
          },
          [&](Key const& k) { return k[0] != 0 && k[1] != 0 && pred(k[0] - 1, k[1] - 1); });
      return PairRelation(a, determinize_minimize(intersect(f, well_padded(a).fsa())));
    }
  }  // namespace detail

  /// Direct product of monoids M1 x M2 with identity letters e1, e2 and
  /// disjoint alphabets: L is the interleaving of L1 x L2.
  inline AutomaticStructure direct_product_monoids(AutomaticStructure const& m1,
                                                   AutomaticStructure const& m2,
                                                   std::string const&        e1,
                                                   std::string const&        e2) {
    detail::require_unique(m1, "direct_product_monoids");
    detail::require_unique(m2, "direct_product_monoids");
    detail::check_identity_letter(m1, e1, "direct_product_monoids");
    detail::check_identity_letter(m2, e2, "direct_product_monoids");
    Alphabet const    a(detail::disjoint_names(m1.alphabet, m2.alphabet));
    std::size_t const n1 = m1.alphabet.size();
    Symbol const      x1 = a.at(e1), x2 = a.at(e2);
    auto              model = std::make_shared<DirectProduct>(m1.model, m2.model);
    Element const     id1 = *m1.model->identity(), id2 = *m2.model->identity();

    PairRelation const d1 = diagonal(m1.language), d2 = diagonal(m2.language);
    PairRelation const eq   = detail::interleave(d1, d2, a, x1, x2);
    Fsa const          lang = determinize_minimize(left_projection(eq));

    auto shift = [&](Word w) {
      for (auto& x : w) {
        x += Symbol(n1);
      }
      return w;
    };
    std::vector<Element>      images;
    std::vector<PairRelation> ms;
    std::vector<Word>         reps;
    for (Symbol x = 0; x < n1; ++x) {
      images.push_back(DirectProduct::pair(m1.images[x], id2));
      ms.push_back(detail::interleave(m1.multipliers[x], d2, a, x1, x2));
      reps.push_back(interleave_words(m1.gen_reps[x], Word{x2}, x1, x2));
    }
    for (Symbol y = 0; y < m2.alphabet.size(); ++y) {
      images.push_back(DirectProduct::pair(id1, m2.images[y]));
      ms.push_back(detail::interleave(d1, m2.multipliers[y], a, x1, x2));
      reps.push_back(interleave_words(Word{x1}, shift(m2.gen_reps[y]), x1, x2));
    }
    return make_structure(a, model, images, lang, ms, eq, true, reps);
  }

  /// S x T for a finite S with S^2 = S: words over S x B whose second
  /// coordinates spell a word of K; the first coordinates are free.
  inline AutomaticStructure direct_product_finite_infinite(FinitePtr s, AutomaticStructure const& t) {
    if (!square_surjective(*s)) {
      throw PreconditionError("direct_product_finite_infinite: S^2 != S");
    }
    Alphabet const    sa(s->names());
    Alphabet const    x = detail::pair_alphabet(sa, t.alphabet);
    std::size_t const nb = t.alphabet.size();
    auto              model = std::make_shared<DirectProduct>(s, t.model);

    PairRelation const eq = detail::zip(
        detail::product_relation(*s, sa, [](std::size_t p, std::size_t q) { return p == q; }), t.equality, x);
    Fsa const lang = determinize_minimize(left_projection(
        detail::zip(detail::product_relation(*s, sa, [](std::size_t p, std::size_t q) { return p == q; }),
                    diagonal(t.language), x)));

    // a word of length len over S with product v
    auto spell = [&](std::size_t v, std::size_t len) {
      Word w{Symbol(v)};
      while (w.size() < len) {
        bool split = false;
        for (std::size_t p = 0; p < s->size() && !split; ++p) {
          for (std::size_t q = 0; q < s->size() && !split; ++q) {
            if (s->mul(p, q) == w[0]) {
              w[0] = Symbol(q);
              w.insert(w.begin(), Symbol(p));
              split = true;
            }
          }
        }
      }
      return w;
    };
    std::vector<Element>      images;
    std::vector<PairRelation> ms;
    std::vector<Word>         reps;
    for (std::size_t i = 0; i < s->size(); ++i) {
      PairRelation const by_i =
          detail::product_relation(*s, sa, [&](std::size_t p, std::size_t q) { return s->mul(p, i) == q; });
      for (Symbol b = 0; b < nb; ++b) {
        images.push_back(DirectProduct::pair(atom(std::int64_t(i)), t.images[b]));
        ms.push_back(detail::zip(by_i, t.multipliers[b], x));
        Word const& v = t.gen_reps[b];
        Word const  u = spell(i, v.size());
        Word        rep;
        for (std::size_t k = 0; k < v.size(); ++k) {
          rep.push_back(Symbol(u[k] * nb + v[k]));
        }
        reps.push_back(rep);
      }
    }
    return make_structure(x, model, images, lang, ms, eq, false, reps);
  }

  namespace detail {
    /// Lengths of the L-words of each element, up to max_len.
    inline std::unordered_map<Element, std::set<std::size_t>, ElementHash>
    lengths_by_value(AutomaticStructure const& s, std::size_t max_len) {
      std::unordered_map<Element, std::set<std::size_t>, ElementHash> out;
      for (auto const& w : enumerate(s.language, max_len)) {
        out[s.evaluate(w)].insert(w.size());
      }
      return out;
    }
  }  // namespace detail

  /// S x T over A x B from structures in which any two elements (with
  /// representatives of length <= max_len / 2) have representatives of a
  /// common length <= max_len; checked, and the pair words are zipped.
  inline AutomaticStructure direct_product_pairing(AutomaticStructure const& s,
                                                   AutomaticStructure const& t,
                                                   std::size_t               max_len = 6) {
    auto const ls = detail::lengths_by_value(s, max_len);
    auto const lt = detail::lengths_by_value(t, max_len);
    for (auto const& [x, xs] : ls) {
      if (*xs.begin() > max_len / 2) {
        continue;
      }
      for (auto const& [y, ys] : lt) {
        if (*ys.begin() > max_len / 2) {
          continue;
        }
        bool common = false;
        for (auto l : xs) {
          common = common || ys.count(l) != 0;
        }
        if (!common) {
          throw PreconditionError("direct_product_pairing: no common length for " + s.model->format(x) + " and "
                                  + t.model->format(y) + " up to length " + std::to_string(max_len));
        }
      }
    }
    Alphabet const x     = detail::pair_alphabet(s.alphabet, t.alphabet);
    auto           model = std::make_shared<DirectProduct>(s.model, t.model);
    PairRelation const eq   = detail::zip(s.equality, t.equality, x);
    Fsa const          lang = determinize_minimize(left_projection(detail::zip(diagonal(s.language), diagonal(t.language), x)));
    std::vector<Element>      images;
    std::vector<PairRelation> ms;
    for (Symbol a = 0; a < s.alphabet.size(); ++a) {
      for (Symbol b = 0; b < t.alphabet.size(); ++b) {
        images.push_back(DirectProduct::pair(s.images[a], t.images[b]));
        ms.push_back(detail::zip(s.multipliers[a], t.multipliers[b], x));
      }
    }
    return make_structure(x, model, images, lang, ms, eq, s.unique && t.unique, {}, max_len);
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_DIRECT_PRODUCT_HPP
