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
 * Rees matrix semigroups M[U1; I, J; P] from a structure for the ideal V of
 * U generated by the entries of P, and back: structures for U1 (or U) from
 * a structure for the Rees matrix semigroup.
 */

#ifndef AUTSEM_CONSTRUCTIONS_REES_MATRIX_HPP
#define AUTSEM_CONSTRUCTIONS_REES_MATRIX_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "../explore.hpp"
#include "../gsm.hpp"
#include "common.hpp"

namespace autsem {

  /// b_h = s p_{rho lambda} s2 in the base monoid (U1, or U when no identity
  /// is adjoined).
  struct ReesDecomposition {
    Element     s;
    std::size_t rho    = 0;
    std::size_t lambda = 0;
    Element     s2;
  };

  namespace detail {
    /// Letter layout of the Rees alphabet: c_{li}, d_{ij}, e_{jr}, f_{lhr}.
    struct ReesLetters {
      std::size_t ni, nj, n, m;

      Symbol c(std::size_t l, std::size_t i) const {
        return Symbol(l * n + i);
      }
      Symbol d(std::size_t i, std::size_t j) const {
        return Symbol(ni * n + i * n + j);
      }
      Symbol e(std::size_t j, std::size_t r) const {
        return Symbol(ni * n + n * n + j * nj + r);
      }
      Symbol f(std::size_t l, std::size_t h, std::size_t r) const {
        return Symbol(ni * n + n * n + n * nj + (l * m + h) * nj + r);
      }
      std::size_t size() const {
        return ni * n + n * n + n * nj + ni * m * nj;
      }
      std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (std::size_t l = 0; l < ni; ++l) {
          for (std::size_t i = 0; i < n; ++i) {
            out.push_back(mangle("c", {l, i}));
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            out.push_back(mangle("d", {i, j}));
          }
        }
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t r = 0; r < nj; ++r) {
            out.push_back(mangle("e", {j, r}));
          }
        }
        for (std::size_t l = 0; l < ni; ++l) {
          for (std::size_t h = 0; h < m; ++h) {
            for (std::size_t r = 0; r < nj; ++r) {
              out.push_back(mangle("f", {l, h, r}));
            }
          }
        }
        return out;
      }
      /// c_{l g1} d_{g1 g2} ... e_{gk r}
      Word lift(std::size_t l, Word const& g, std::size_t r) const {
        Word out{c(l, g[0])};
        for (std::size_t i = 1; i < g.size(); ++i) {
          out.push_back(d(g[i - 1], g[i]));
        }
        out.push_back(e(g.back(), r));
        return out;
      }
    };

    /// Pairs of lifted words (c ... e, c ... e) whose generator sequences
    /// lie in k and whose outer indices satisfy accept(lL, rL, lR, rR).
    template <typename Accept>
    PairRelation rees_lift(PairRelation const& k, ReesLetters const& x, Alphabet const& a, Accept&& accept) {
      std::size_t const n  = x.n;
      std::size_t const na = a.size();
      std::vector<char> live;
      Dfa const         dk = live_dfa(k, live);
      std::size_t const c0 = 0, d0 = x.ni * n, e0 = d0 + n * n, f0 = e0 + n * x.nj;
      // Key: [k, phase, prev, l, r] for each side after the first entry;
      // phase 0 start, 1 inside, 2 after the e letter.
      Fsa f = explore(
          a.padded(),
          {Key{dk.start, 0, 0, 0, 0, 0, 0, 0, 0}},
          [&](Key const& key, auto emit) {
            for (Symbol p = 0; p < a.padded().size(); ++p) {
              Symbol const y[2] = {pair_left(na, p), pair_right(na, p)};
              Key          nk   = key;
              Symbol       tau[2];
              bool         ok = true;
              for (int s = 0; s < 2 && ok; ++s) {
                std::uint32_t* side = &nk[1 + 4 * s];
                std::uint32_t& phase = side[0];
                std::uint32_t& prev  = side[1];
                Symbol const   z     = y[s];
                tau[s]               = pad_of(n);
                if (phase == 0) {
                  ok = z < d0;
                  if (ok) {
                    side[2] = std::uint32_t((z - c0) / n);
                    prev    = std::uint32_t((z - c0) % n);
                    phase   = 1;
                    tau[s]  = prev;
                  }
                } else if (phase == 1) {
                  if (z >= d0 && z < e0 && (z - d0) / n == prev) {
                    prev   = std::uint32_t((z - d0) % n);
                    tau[s] = prev;
                  } else if (z >= e0 && z < f0 && (z - e0) / x.nj == prev) {
                    side[3] = std::uint32_t((z - e0) % x.nj);
                    phase   = 2;
                  } else {
                    ok = false;
                  }
                } else {
                  ok = z == pad_of(na);
                }
              }
              if (!ok) {
                continue;
              }
              if (!(tau[0] == pad_of(n) && tau[1] == pad_of(n))) {
                nk[0] = dk.next(nk[0], pair_symbol(n, tau[0], tau[1]));
                if (!live[nk[0]]) {
                  continue;
                }
              }
              emit(p, nk);
            }
          },
          [&](Key const& key) {
            return key[1] == 2 && key[5] == 2 && dk.accepting[key[0]] && accept(key[3], key[4], key[7], key[8]);
          });
      return PairRelation(a, determinize_minimize(intersect(f, well_padded(a).fsa())));
    }
  }  // namespace detail

  /// Structure for S1 = M[U1; I, J; P] from a structure v (with uniqueness)
  /// for the ideal V of U generated by the entries of P; v's model is U.
  /// `dec` decomposes each generator of V, `complement` lists U1 - V. With
  /// adjoin = false, U must be a monoid and is used as U1 itself; dec and
  /// complement are then plain elements of U.
  inline AutomaticStructure rees_matrix_build(AutomaticStructure const&             v,
                                              std::vector<ReesDecomposition> const& dec,
                                              std::size_t                           ni,
                                              std::size_t                           nj,
                                              std::vector<std::vector<Element>>     p,
                                              std::vector<Element> const&           complement,
                                              bool                                  adjoin = true) {
    detail::require_unique(v, "rees_matrix_build");
    SemigroupPtr const& u = v.model;
    if (!adjoin && !u->identity()) {
      throw PreconditionError("rees_matrix_build: without an adjoined identity U must be a monoid");
    }
    SemigroupPtr const base = adjoin ? SemigroupPtr(std::make_shared<AdjoinIdentity>(u)) : u;
    auto up = [&](Element const& x) { return adjoin ? AdjoinIdentity::wrap(x) : x; };
    // the U-element of a base element, or none for the adjoined identity
    auto down = [&](Element const& x) -> std::optional<Element> {
      if (!adjoin) {
        return x;
      }
      if (x.data.at(0) == 1) {
        return std::nullopt;
      }
      return x.parts.at(0);
    };
    for (auto& row : p) {
      for (auto& x : row) {
        x = up(x);
      }
    }
    auto model = std::make_shared<ReesMatrix>(base, ni, nj, p);
    std::size_t const n = v.alphabet.size();
    if (dec.size() != n) {
      throw PreconditionError("rees_matrix_build: one decomposition per generator of V required");
    }
    for (std::size_t h = 0; h < n; ++h) {
      auto const& x = dec[h];
      if (x.rho >= nj || x.lambda >= ni) {
        throw PreconditionError("rees_matrix_build: decomposition index out of range");
      }
      Element const prod = base->multiply(base->multiply(x.s, model->entry(x.rho, x.lambda)), x.s2);
      if (prod != up(v.images[h])) {
        throw PreconditionError("rees_matrix_build: decomposition of generator '" + v.alphabet.name(Symbol(h))
                                + "' is inconsistent");
      }
    }
    // V is the ideal generated by P, checked when U is finite
    if (auto all = u->elements()) {
      std::unordered_set<Element, ElementHash> ideal;
      std::vector<Element>                     todo;
      for (auto const& row : p) {
        for (auto const& x : row) {
          if (ideal.insert(*down(x)).second) {
            todo.push_back(*down(x));
          }
        }
      }
      while (!todo.empty()) {
        Element x = todo.back();
        todo.pop_back();
        for (auto const& y : *all) {
          for (auto z : {u->multiply(x, y), u->multiply(y, x)}) {
            if (ideal.insert(z).second) {
              todo.push_back(z);
            }
          }
        }
      }
      std::unordered_set<Element, ElementHash> vset;
      for (auto const& w : enumerate(v.language, 64)) {
        vset.insert(v.evaluate(w));
      }
      if (vset != ideal) {
        throw PreconditionError("rees_matrix_build: V is not the ideal generated by the entries of P");
      }
      for (auto const& x : complement) {
        auto dx = down(x);
        if (dx && ideal.count(*dx)) {
          throw PreconditionError("rees_matrix_build: complement element lies in V");
        }
      }
      std::size_t const expect = all->size() + (adjoin ? 1 : 0) - ideal.size();
      if (complement.size() != expect) {
        throw PreconditionError("rees_matrix_build: complement must list U1 - V exactly");
      }
    }

    detail::ReesLetters const x{ni, nj, n, complement.size()};
    Alphabet const            a(x.names());
    std::vector<Element>      images(x.size());
    for (std::size_t l = 0; l < ni; ++l) {
      for (std::size_t i = 0; i < n; ++i) {
        images[x.c(l, i)] = ReesMatrix::triple(l, dec[i].s, dec[i].rho);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        images[x.d(i, j)] = ReesMatrix::triple(dec[i].lambda, base->multiply(dec[i].s2, dec[j].s), dec[j].rho);
      }
      for (std::size_t r = 0; r < nj; ++r) {
        images[x.e(i, r)] = ReesMatrix::triple(dec[i].lambda, dec[i].s2, r);
      }
    }
    for (std::size_t l = 0; l < ni; ++l) {
      for (std::size_t h = 0; h < complement.size(); ++h) {
        for (std::size_t r = 0; r < nj; ++r) {
          images[x.f(l, h, r)] = ReesMatrix::triple(l, complement[h], r);
        }
      }
    }

    PairRelation const diag_k = diagonal(v.language);
    Fsa const          l1     = determinize_minimize(left_projection(detail::rees_lift(
        diag_k, x, a, [](auto l, auto r, auto l2, auto r2) { return l == l2 && r == r2; })));
    std::vector<Word> dwords;
    for (std::size_t i = 0; i < x.ni * complement.size() * nj; ++i) {
      dwords.push_back(Word{Symbol(x.f(0, 0, 0) + i)});
    }
    Fsa const lang = determinize_minimize(union_of(l1, Fsa::words(a, dwords)));

    // K-representative of a base element lying in V
    auto k_rep = [&](Element const& y) {
      auto dy = down(y);
      if (!dy) {
        throw PreconditionError("rees_matrix_build: expected an element of V");
      }
      return detail::representative(v, *dy);
    };
    auto complement_index = [&](Element const& y) -> std::optional<std::size_t> {
      for (std::size_t h = 0; h < complement.size(); ++h) {
        if (complement[h] == y) {
          return h;
        }
      }
      return std::nullopt;
    };

    std::vector<PairRelation> ms;
    std::vector<Word>         reps;
    for (Symbol letter = 0; letter < a.size(); ++letter) {
      Element const&    img = images[letter];
      std::size_t const l2  = std::size_t(img.data[0]);
      std::size_t const r2  = std::size_t(img.data[1]);
      Element const&    s2  = img.parts[0];
      // (l, s, r) letter = (l, s y_r, r2) with y_r = p_{r l2} s2 in V
      std::map<Word, std::set<std::size_t>> by_rep;
      std::vector<Element>                  ys;
      for (std::size_t r = 0; r < nj; ++r) {
        ys.push_back(base->multiply(model->entry(r, l2), s2));
        by_rep[k_rep(ys[r])].insert(r);
      }
      PairRelation acc(a, Fsa::nothing(a.padded()));
      for (auto const& [g, rs] : by_rep) {
        PairRelation const kg = multiplier_for_word(v, g);
        acc                   = rel_union(acc, detail::rees_lift(kg, x, a, [&, r2](auto l, auto r, auto l3, auto r3) {
                                  return l == l3 && rs.count(r) != 0 && r3 == r2;
                                }));
      }
      std::vector<std::pair<Word, Word>> fin;
      for (std::size_t l = 0; l < ni; ++l) {
        for (std::size_t h = 0; h < complement.size(); ++h) {
          for (std::size_t r = 0; r < nj; ++r) {
            Element const z = base->multiply(complement[h], ys[r]);
            fin.emplace_back(Word{x.f(l, h, r)}, x.lift(l, k_rep(z), r2));
          }
        }
      }
      ms.push_back(rel_union(acc, from_pairs(a, fin)));
      if (auto h = complement_index(s2)) {
        reps.push_back(Word{x.f(l2, *h, r2)});
      } else {
        reps.push_back(x.lift(l2, k_rep(s2), r2));
      }
    }
    return make_structure(a, model, images, lang, ms, diagonal(lang), true, reps);
  }

  namespace detail {
    /// Shared body of the converse constructions: a structure for the base
    /// of the Rees matrix model of s, read off the words with outer indices
    /// (i0, j0) where p = p_{j0 i0}.
    inline AutomaticStructure rees_converse_impl(AutomaticStructure const& s,
                                                 std::size_t               i0,
                                                 std::size_t               j0,
                                                 std::size_t               search_len) {
      auto rm = std::dynamic_pointer_cast<ReesMatrix const>(s.model);
      if (!rm) {
        throw PreconditionError("Rees converse: the model is not a Rees matrix semigroup");
      }
      if (i0 >= rm->rows() || j0 >= rm->cols()) {
        throw PreconditionError("Rees converse: p position out of range");
      }
      SemigroupPtr const& base = rm->base();
      Element const&      p    = rm->entry(j0, i0);
      if (auto all = base->elements()) {
        std::unordered_set<Element, ElementHash> target(all->begin(), all->end());
        if (auto ab = std::dynamic_pointer_cast<AdjoinIdentity const>(base)) {
          target.erase(AdjoinIdentity::one());
        }
        std::unordered_set<Element, ElementHash> got;
        for (auto const& t : *all) {
          got.insert(base->multiply(p, t));
        }
        if (got != target) {
          throw PreconditionError("Rees converse: p U1 != U for the chosen p position");
        }
      }
      std::size_t const na = s.alphabet.size();
      std::size_t const ni = rm->rows(), nj = rm->cols();
      std::vector<std::string> names;
      std::vector<Element>     images;
      for (std::size_t h = 0; h < na; ++h) {
        names.push_back(mangle("b", {h}));
        images.push_back(s.images[h].parts.at(0));
      }
      for (std::size_t j = 0; j < nj; ++j) {
        for (std::size_t i = 0; i < ni; ++i) {
          names.push_back(mangle("c", {j, i}));
          images.push_back(rm->entry(j, i));
        }
      }
      Alphabet const b(names);
      auto cix = [&](std::size_t j, std::size_t i) { return Symbol(na + j * ni + i); };

      // f: a_{h1} a_{h2} ... -> b_{h1} c_{j_{h1} i_{h2}} b_{h2} ...
      std::vector<GsmEdge> edges;
      for (Symbol h = 0; h < na; ++h) {
        std::size_t const ih = std::size_t(s.images[h].data[0]);
        std::size_t const jh = std::size_t(s.images[h].data[1]);
        edges.push_back({0, h, State(1 + jh), {h}});
        for (std::size_t j = 0; j < nj; ++j) {
          edges.push_back({State(1 + j), h, State(1 + jh), {cix(j, ih), h}});
        }
      }
      std::vector<State> terms;
      for (std::size_t j = 0; j < nj; ++j) {
        terms.push_back(State(1 + j));
      }
      Gsm const g(s.alphabet, b, 1 + nj, 0, terms, edges);

      std::vector<Symbol> first, last;
      for (Symbol h = 0; h < na; ++h) {
        if (std::size_t(s.images[h].data[0]) == i0) {
          first.push_back(h);
        }
        if (std::size_t(s.images[h].data[1]) == j0) {
          last.push_back(h);
        }
      }
      Fsa const any  = Fsa::universal(s.alphabet);
      Fsa const l11  = determinize_minimize(intersect(
          s.language, intersect(concat(Fsa::letters(s.alphabet, first), any), concat(any, Fsa::letters(s.alphabet, last)))));
      Fsa const k    = determinize_minimize(eta(g, l11));
      auto const var = bounded_output_variance(g);

      // right multiplication by v on the middle coordinate, realised by a
      // word x with value (i', t, j0) and p_{j0 i'} t = v
      std::unordered_map<Element, Word, ElementHash> seen;
      std::vector<Element>                           level;
      GenMap const                                   gm = s.genmap();
      for (Symbol h = 0; h < na; ++h) {
        if (seen.emplace(gm.images[h], Word{h}).second) {
          level.push_back(gm.images[h]);
        }
      }
      for (std::size_t len = 1; len < search_len && !level.empty(); ++len) {
        std::vector<Element> next;
        for (auto const& y : level) {
          for (Symbol h = 0; h < na; ++h) {
            Element z = rm->multiply(y, gm.images[h]);
            if (!seen.count(z)) {
              Word w = seen.at(y);
              w.push_back(h);
              seen.emplace(z, w);
              next.push_back(std::move(z));
            }
          }
        }
        level = std::move(next);
      }
      if (!var) {
        throw PreconditionError("Rees converse: transducer output variance is unbounded");
      }
      auto const                one = base->identity();
      std::vector<PairRelation> ms;
      for (Symbol beta = 0; beta < b.size(); ++beta) {
        if (one && images[beta] == *one) {
          ms.push_back(diagonal(k));
          continue;
        }
        std::optional<Word> found;
        for (auto const& [y, w] : seen) {
          if (std::size_t(y.data[1]) != j0) {
            continue;
          }
          Element const t = base->multiply(rm->entry(j0, std::size_t(y.data[0])), y.parts[0]);
          if (t == images[beta] && (!found || shortlex_less(w, *found))) {
            found = w;
          }
        }
        if (!found) {
          throw PreconditionError("Rees converse: no word realises right multiplication by '" + b.name(beta)
                                  + "' within length " + std::to_string(search_len));
        }
        PairRelation const r = restrict(multiplier_for_word(s, *found), l11, l11);
        ms.push_back(zeta(g, r, *var));
      }
      return make_structure(b, base, images, k, ms, diagonal(k), true, {}, search_len);
    }
  }  // namespace detail

  /// Structure for U1 from a structure with uniqueness for M[U1; I, J; P],
  /// using the words with outer indices p_position = (i, j) and the entry
  /// p_{j i}, which must satisfy p U1 = U.
  inline AutomaticStructure rees_matrix_converse(AutomaticStructure const&           s1,
                                                 std::pair<std::size_t, std::size_t> p_position = {0, 0},
                                                 std::size_t                         search_len = 8) {
    detail::require_unique(s1, "rees_matrix_converse");
    return detail::rees_converse_impl(s1, p_position.first, p_position.second, search_len);
  }

  /// Structure for U from a prefix-automatic structure with uniqueness for
  /// M[U; I, J; P]; `prefix_equality` is the candidate L_=', checked to
  /// max_len, and distinct letters must have distinct values.
  inline AutomaticStructure rees_matrix_converse_prefix(AutomaticStructure const&           s,
                                                        PairRelation const&                 prefix_equality,
                                                        std::size_t                         max_len    = 6,
                                                        std::pair<std::size_t, std::size_t> p_position = {0, 0},
                                                        std::size_t                         search_len = 8) {
    detail::require_unique(s, "rees_matrix_converse_prefix");
    auto const report = prefix_automatic_check(s, prefix_equality, max_len);
    if (!report.ok()) {
      throw PreconditionError("rees_matrix_converse_prefix: prefix check failed: " + report.summary());
    }
    std::unordered_set<Element, ElementHash> values(s.images.begin(), s.images.end());
    if (values.size() != s.images.size()) {
      throw PreconditionError("rees_matrix_converse_prefix: two letters have the same value");
    }
    return detail::rees_converse_impl(s, p_position.first, p_position.second, search_len);
  }

}  // namespace autsem

#endif  // AUTSEM_CONSTRUCTIONS_REES_MATRIX_HPP
