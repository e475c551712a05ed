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
 * Automatic structures: a generating alphabet with letter images in an
 * element model, a regular language L of representatives, one multiplier
 * relation per letter and an equality relation. Validation compares all of
 * them with the element model on every word up to a length bound.
 */

#ifndef AUTSEM_AUTOSTRUCT_HPP
#define AUTSEM_AUTOSTRUCT_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fsa.hpp"
#include "padrel.hpp"
#include "semigroups.hpp"

namespace autsem {

  struct AutomaticStructure {
    Alphabet                  alphabet;
    SemigroupPtr              model;
    std::vector<Element>      images;
    Fsa                       language;
    std::vector<PairRelation> multipliers;
    PairRelation              equality;
    bool                      unique = false;
    std::vector<Word>         gen_reps;
    /// Optional factor tag per letter (free products); empty when unused.
    std::vector<int> tags;

    GenMap genmap() const {
      return GenMap{alphabet, model, images};
    }
    Element evaluate(Word const& w) const {
      return genmap().evaluate(w);
    }
    Symbol letter(std::string_view n) const {
      return alphabet.at(n);
    }
    PairRelation const& multiplier(std::string_view n) const {
      return multipliers.at(letter(n));
    }
  };

  namespace detail {
    /// Shortlex-least words of a language matching each generator image.
    inline std::vector<Word> search_gen_reps(Fsa const& l, GenMap const& g, std::size_t max_len) {
      std::size_t const  k = g.alphabet.size();
      std::vector<Word>  reps(k);
      std::vector<char>  found(k, 0);
      std::size_t        missing = k;
      for_each_word(
          minimize(to_dfa(l)),
          max_len,
          [&](Word const& w) {
            if (w.empty()) {
              return true;
            }
            Element v = g.evaluate(w);
            for (std::size_t a = 0; a < k; ++a) {
              if (!found[a] && g.images[a] == v) {
                found[a] = 1;
                reps[a]  = w;
                --missing;
              }
            }
            return missing > 0;
          },
          default_enum_cap());
      for (std::size_t a = 0; a < k; ++a) {
        if (!found[a]) {
          throw PreconditionError("no representative of generator '" + g.alphabet.name(Symbol(a))
                                  + "' in L up to length " + std::to_string(max_len));
        }
      }
      return reps;
    }

    inline Fsa relabel(Fsa const& f, Alphabet const& to) {
      return map_symbols(f, to, [](Symbol a) -> std::optional<Symbol> { return a; });
    }
  }  // namespace detail

  /// Assembles a structure, minimizing every automaton. Missing gen_reps are
  /// found by bounded search in L (length `rep_search`).
  inline AutomaticStructure make_structure(Alphabet                  alphabet,
                                           SemigroupPtr              model,
                                           std::vector<Element>      images,
                                           Fsa const&                language,
                                           std::vector<PairRelation> multipliers,
                                           PairRelation const&       equality,
                                           bool                      unique,
                                           std::vector<Word>         gen_reps   = {},
                                           std::size_t               rep_search = 8) {
    if (images.size() != alphabet.size() || multipliers.size() != alphabet.size()) {
      throw PreconditionError("one image and one multiplier per letter required");
    }
    check_same_alphabet(language.alphabet(), alphabet);
    if (language.accepts(Word{})) {
      throw PreconditionError("the language of an automatic structure must not contain the empty word");
    }
    for (auto const& m : multipliers) {
      check_same_alphabet(m.base(), alphabet);
    }
    check_same_alphabet(equality.base(), alphabet);
    std::vector<PairRelation> mins;
    for (auto const& m : multipliers) {
      mins.push_back(rel_minimize(m));
    }
    AutomaticStructure s{alphabet,
                         std::move(model),
                         std::move(images),
                         determinize_minimize(language),
                         std::move(mins),
                         rel_minimize(equality),
                         unique,
                         std::move(gen_reps),
                         {}};
    if (s.gen_reps.empty()) {
      s.gen_reps = detail::search_gen_reps(s.language, s.genmap(), rep_search);
    }
    if (s.gen_reps.size() != alphabet.size()) {
      throw PreconditionError("one generator representative per letter required");
    }
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (!s.language.accepts(s.gen_reps[a])) {
        throw PreconditionError("generator representative for '" + alphabet.name(Symbol(a))
                                + "' is not in L");
      }
      if (s.evaluate(s.gen_reps[a]) != s.images[a]) {
        throw PreconditionError("generator representative for '" + alphabet.name(Symbol(a))
                                + "' has the wrong value");
      }
    }
    return s;
  }

  /// Same structure with letters renamed position by position.
  inline AutomaticStructure rename_letters(AutomaticStructure const& s, std::vector<std::string> names) {
    Alphabet to(std::move(names));
    if (to.size() != s.alphabet.size()) {
      throw PreconditionError("rename_letters: name count differs from alphabet size");
    }
    auto rel = [&](PairRelation const& m) {
      return PairRelation(to, detail::relabel(m.fsa(), to.padded()));
    };
    AutomaticStructure out = s;
    out.alphabet           = to;
    out.language           = detail::relabel(s.language, to);
    for (auto& m : out.multipliers) {
      m = rel(m);
    }
    out.equality = rel(s.equality);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  struct ValidationReport {
    std::vector<std::string> violations;  // first `max_listed` only
    std::size_t              total_violations = 0;
    std::size_t              language_words   = 0;
    std::size_t              pairs_checked    = 0;
    std::size_t              elements_checked = 0;
    std::size_t              max_listed       = 1000;

    bool ok() const noexcept {
      return total_violations == 0;
    }
    void add(std::string v) {
      ++total_violations;
      if (violations.size() < max_listed) {
        violations.push_back(std::move(v));
      }
    }
    std::string summary() const {
      return std::to_string(language_words) + " words, " + std::to_string(pairs_checked)
             + " pairs, " + std::to_string(elements_checked) + " elements checked; "
             + std::to_string(total_violations) + " violations";
    }
  };

  struct ValidateOptions {
    std::size_t max_len = 6;
    /// Depth of the element breadth-first search for surjectivity; defaults
    /// to ceil(max_len / 2).
    std::optional<std::size_t> surjectivity_depth = std::nullopt;
    std::size_t                max_listed = 1000;
  };

  namespace detail {
    struct WordIndex {
      std::vector<Word>                                                 words;
      std::vector<Element>                                              values;
      std::unordered_map<Word, std::size_t, WordHash>                   pos;
      std::unordered_map<Element, std::vector<std::size_t>, ElementHash> by_value;
    };

    inline WordIndex index_language(Fsa const& lang, GenMap const& g, std::size_t max_len) {
      WordIndex ix;
      for_each_word(
          minimize(to_dfa(lang)),
          max_len,
          [&](Word const& w) {
            if (w.empty()) {
              return;
            }
            ix.pos.emplace(w, ix.words.size());
            ix.by_value[g.evaluate(w)].push_back(ix.words.size());
            ix.values.push_back(g.evaluate(w));
            ix.words.push_back(w);
          },
          default_enum_cap());
      return ix;
    }

    inline std::string quote(Alphabet const& a, Word const& w) {
      return "\"" + a.format(w) + "\"";
    }

    /// Compares r with {(u, v) : u in left, v in right, f(u value) = v value}
    /// on all pairs of words of length <= max_len.
    template <typename F>
    void check_relation(PairRelation const& r,
                        WordIndex const&    left,
                        WordIndex const&    right,
                        F&&                 f,
                        std::size_t         max_len,
                        std::string const&  label,
                        ValidationReport&   report) {
      Alphabet const& a = r.base();
      Dfa const       d = minimize(to_dfa(r.fsa()));
      for_each_word(
          d,
          max_len,
          [&](Word const& w) {
            ++report.pairs_checked;
            if (!is_well_padded(a, w)) {
              report.add(label + " accepts a badly padded word");
              return;
            }
            auto [u, v] = deconvolve(a, w);
            auto iu     = left.pos.find(u);
            auto iv     = right.pos.find(v);
            if (iu == left.pos.end() || iv == right.pos.end()) {
              report.add(label + " accepts (" + quote(a, u) + ", " + quote(a, v)
                         + ") outside the allowed words");
              return;
            }
            if (f(left.values[iu->second]) != right.values[iv->second]) {
              report.add(label + " accepts (" + quote(a, u) + ", " + quote(a, v)
                         + ") but the values disagree");
            }
          },
          default_enum_cap());
      for (std::size_t i = 0; i < left.words.size(); ++i) {
        auto it = right.by_value.find(f(left.values[i]));
        if (it == right.by_value.end()) {
          continue;
        }
        for (auto j : it->second) {
          ++report.pairs_checked;
          if (!d.accepts(convolve(a, left.words[i], right.words[j]))) {
            report.add(label + " rejects (" + quote(a, left.words[i]) + ", "
                       + quote(a, right.words[j]) + ")");
          }
        }
      }
    }
  }  // namespace detail

  /// Caches minimized multiplier automata for repeated stepping.
  class Stepper {
   public:
    explicit Stepper(AutomaticStructure const& s) : s_(s) {
      for (auto const& m : s.multipliers) {
        dfas_.push_back(minimize(to_dfa(m.fsa())));
        live_.push_back(dfas_.back().live());
      }
    }

    /// Shortlex-least v with (w, v) in L_a.
    std::optional<Word> step(Word const& w, Symbol a) const {
      return shortlex_least(detail::apply_dfa(s_.alphabet, dfas_.at(a), live_.at(a), w));
    }

    std::optional<Word> normal_form(Word const& w) const {
      if (w.empty()) {
        throw PreconditionError("normal_form: empty word");
      }
      if (!s_.alphabet.contains(w)) {
        throw AlphabetMismatch("normal_form: word not over the structure alphabet");
      }
      std::optional<Word> cur = s_.gen_reps.at(w[0]);
      for (std::size_t i = 1; i < w.size() && cur; ++i) {
        cur = step(*cur, w[i]);
      }
      return cur;
    }

   private:
    AutomaticStructure const& s_;
    std::vector<Dfa>          dfas_;
    std::vector<std::vector<char>> live_;
  };

  /// Checks every defining property on words up to opts.max_len.
  inline ValidationReport validate(AutomaticStructure const& s, ValidateOptions const& opts = {}) {
    ValidationReport report;
    report.max_listed = opts.max_listed;
    GenMap const g    = s.genmap();
    if (s.language.accepts(Word{})) {
      report.add("L contains the empty word");
    }
    detail::WordIndex const ix = detail::index_language(s.language, g, opts.max_len);
    report.language_words      = ix.words.size();

    detail::check_relation(
        s.equality, ix, ix, [](Element const& x) { return x; }, opts.max_len, "L_=", report);
    if (s.unique) {
      for (auto const& [v, idx] : ix.by_value) {
        if (idx.size() > 1) {
          report.add("uniqueness: " + detail::quote(s.alphabet, ix.words[idx[0]]) + " and "
                     + detail::quote(s.alphabet, ix.words[idx[1]]) + " are equal");
        }
      }
    }
    for (Symbol a = 0; a < s.alphabet.size(); ++a) {
      Element const img = s.images[a];
      detail::check_relation(
          s.multipliers[a],
          ix,
          ix,
          [&](Element const& x) { return s.model->multiply(x, img); },
          opts.max_len,
          "L_" + s.alphabet.name(a),
          report);
    }

    // Surjectivity: every element reached by short products of generators
    // has a representative in L, found by stepping through the multipliers.
    std::size_t const depth = opts.surjectivity_depth.value_or((opts.max_len + 1) / 2);
    if (depth == 0 || opts.max_len == 0) {
      return report;
    }
    Stepper const                                          stepper(s);
    std::unordered_map<Element, Word, ElementHash>         seen;
    std::vector<std::pair<Element, Word>>                  frontier;
    for (Symbol a = 0; a < s.alphabet.size(); ++a) {
      if (seen.emplace(s.images[a], s.gen_reps[a]).second) {
        frontier.emplace_back(s.images[a], s.gen_reps[a]);
      }
    }
    for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
      std::vector<std::pair<Element, Word>> next;
      for (auto const& [x, rep] : frontier) {
        ++report.elements_checked;
        if (g.evaluate(rep) != x) {
          report.add("representative " + detail::quote(s.alphabet, rep) + " of "
                     + s.model->format(x) + " has the wrong value");
        }
        if (level == depth) {
          continue;
        }
        for (Symbol a = 0; a < s.alphabet.size(); ++a) {
          Element y = s.model->multiply(x, s.images[a]);
          if (seen.count(y)) {
            continue;
          }
          std::optional<Word> r;
          auto                it = ix.by_value.find(y);
          if (it != ix.by_value.end()) {
            r = ix.words[it->second.front()];
          } else {
            r = stepper.step(rep, a);
          }
          if (!r) {
            report.add("no representative in L for " + s.model->format(y));
            seen.emplace(y, Word{});
            continue;
          }
          seen.emplace(y, *r);
          next.emplace_back(y, *r);
        }
      }
      frontier = std::move(next);
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problem
  ////////////////////////////////////////////////////////////////////////

  /// Representative in L of the value of w, stepping letter by letter.
  inline Word normal_form(AutomaticStructure const& s, Word const& w) {
    auto r = Stepper(s).normal_form(w);
    if (!r) {
      throw PreconditionError("normal_form: a multiplier has no image (structure invalid)");
    }
    return *r;
  }

  inline bool word_equal(AutomaticStructure const& s, Word const& w1, Word const& w2) {
    Stepper const st(s);
    auto          n1 = st.normal_form(w1);
    auto          n2 = st.normal_form(w2);
    if (!n1 || !n2) {
      throw PreconditionError("word_equal: a multiplier has no image (structure invalid)");
    }
    return s.equality.fsa().accepts(convolve(s.alphabet, *n1, *n2));
  }

  /// K_w: pairs (u, v) of L with u w = v, composing the letter multipliers.
  inline PairRelation multiplier_for_word(AutomaticStructure const& s, Word const& w) {
    if (w.empty()) {
      throw PreconditionError("multiplier_for_word: empty word");
    }
    PairRelation k = s.multipliers.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      auto c = bounded_difference(k);
      if (!c) {
        throw PreconditionError("multiplier_for_word: unbounded length difference");
      }
      k = rel_minimize(compose(k, s.multipliers.at(w[i]), *c));
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalizations
  ////////////////////////////////////////////////////////////////////////

  /// Pairs (v, u) with v strictly shortlex-less than u.
  inline PairRelation shortlex_less_relation(Alphabet const& a) {
    std::size_t const       n = a.size();
    std::vector<Transition> ts;
    // 0 equal so far, 1 left lex-smaller, 2 left lex-larger, 3 left shorter
    for (Symbol x = 0; x <= n; ++x) {
      for (Symbol y = 0; y <= n; ++y) {
        if (x == pad_of(n) && y == pad_of(n)) {
          continue;
        }
        Symbol p = pair_symbol(n, x, y);
        if (y == pad_of(n)) {
          continue;
        }
        if (x == pad_of(n)) {
          for (State s : {0u, 1u, 2u, 3u}) {
            ts.push_back({s, p, 3});
          }
          continue;
        }
        ts.push_back({0, p, State(x < y ? 1 : x > y ? 2 : 0)});
        ts.push_back({1, p, 1});
        ts.push_back({2, p, 2});
      }
    }
    return PairRelation(a, Fsa(a.padded(), 4, {0}, {1, 3}, std::move(ts)));
  }

  /// Keeps only the shortlex-least word of each equality class.
  inline AutomaticStructure uniquify(AutomaticStructure const& s) {
    Fsa const bad = right_projection(rel_intersect(s.equality, shortlex_less_relation(s.alphabet)));
    Fsa const l2  = determinize_minimize(difference(s.language, bad));
    std::vector<PairRelation> ms;
    for (auto const& m : s.multipliers) {
      ms.push_back(restrict(m, l2, l2));
    }
    std::vector<Word> reps = s.gen_reps;
    for (auto& r : reps) {
      if (!l2.accepts(r)) {
        auto least = shortlex_least(intersect(apply_word(s.equality, r), l2));
        if (!least) {
          throw PreconditionError("uniquify: class lost its representative (structure invalid)");
        }
        r = *least;
      }
    }
    AutomaticStructure out = make_structure(s.alphabet, s.model, s.images, l2, ms, diagonal(l2), true, reps);
    out.tags               = s.tags;
    return out;
  }

  namespace detail {
    /// Shortlex-least word of length >= 2 and <= max_len for each target,
    /// by breadth-first search over values.
    inline std::vector<std::optional<Word>> search_long_words(GenMap const&               g,
                                                              std::vector<Element> const& targets,
                                                              std::size_t                 max_len) {
      std::vector<std::optional<Word>>               out(targets.size());
      std::unordered_map<Element, Word, ElementHash> seen;
      std::vector<std::pair<Element, Word>>          level;
      for (Symbol a = 0; a < g.alphabet.size(); ++a) {
        for (Symbol b = 0; b < g.alphabet.size(); ++b) {
          Element v = g.target->multiply(g.images[a], g.images[b]);
          if (seen.emplace(v, Word{a, b}).second) {
            level.emplace_back(v, Word{a, b});
          }
        }
      }
      for (std::size_t len = 2; len <= max_len && !level.empty(); ++len) {
        for (auto const& [v, w] : level) {
          for (std::size_t i = 0; i < targets.size(); ++i) {
            if (!out[i] && targets[i] == v) {
              out[i] = w;
            }
          }
        }
        if (len == max_len) {
          break;
        }
        std::vector<std::pair<Element, Word>> next;
        for (auto const& [v, w] : level) {
          for (Symbol a = 0; a < g.alphabet.size(); ++a) {
            Element u = g.target->multiply(v, g.images[a]);
            if (!seen.count(u)) {
              Word w2 = w;
              w2.push_back(a);
              seen.emplace(u, w2);
              next.emplace_back(u, w2);
            }
          }
        }
        level = std::move(next);
      }
      return out;
    }
  }  // namespace detail

  /// Replaces every length-one word of L by an equal word of length >= 2.
  inline AutomaticStructure strip_length_one(AutomaticStructure const& s, std::size_t search_len = 6) {
    if (!s.unique) {
      throw PreconditionError("strip_length_one needs a structure with uniqueness");
    }
    std::vector<Symbol> ones;
    for (Symbol a = 0; a < s.alphabet.size(); ++a) {
      if (s.language.accepts(Word{a})) {
        ones.push_back(a);
      }
    }
    if (ones.empty()) {
      return s;
    }
    std::vector<Element> targets;
    for (auto a : ones) {
      targets.push_back(s.evaluate(Word{a}));
    }
    auto found = detail::search_long_words(s.genmap(), targets, search_len);
    std::map<Symbol, Word> repl;
    for (std::size_t i = 0; i < ones.size(); ++i) {
      if (!found[i]) {
        throw PreconditionError("strip_length_one: no word of length 2.." + std::to_string(search_len)
                                + " equals '" + s.alphabet.name(ones[i]) + "'");
      }
      repl[ones[i]] = *found[i];
    }
    Fsa const ones_fsa = Fsa::letters(s.alphabet, ones);
    Fsa const rest     = determinize_minimize(difference(s.language, ones_fsa));
    std::vector<Word> new_words;
    for (auto const& [a, w] : repl) {
      new_words.push_back(w);
    }
    Fsa const l2 = determinize_minimize(union_of(rest, Fsa::words(s.alphabet, new_words)));

    std::vector<PairRelation> ms;
    for (auto const& m : s.multipliers) {
      PairRelation acc        = restrict(m, rest, rest);
      PairRelation const back = swap(m);
      for (auto const& [a, w] : repl) {
        Fsa const targets_of_a = apply_word(m, Word{a});
        acc = rel_union(acc, product(Fsa::word(s.alphabet, w), difference(targets_of_a, ones_fsa)));
        for (auto const& [b, w2] : repl) {
          if (targets_of_a.accepts(Word{b})) {
            acc = rel_union(acc, from_pairs(s.alphabet, {{w, w2}}));
          }
        }
        Fsa const sources_of_a = apply_word(back, Word{a});
        acc = rel_union(acc, product(difference(sources_of_a, ones_fsa), Fsa::word(s.alphabet, w)));
      }
      ms.push_back(rel_minimize(acc));
    }
    std::vector<Word> reps = s.gen_reps;
    for (auto& r : reps) {
      if (r.size() == 1 && repl.count(r[0])) {
        r = repl[r[0]];
      }
    }
    AutomaticStructure out = make_structure(s.alphabet, s.model, s.images, l2, ms, diagonal(l2), true, reps);
    out.tags               = s.tags;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix automaticity
  ////////////////////////////////////////////////////////////////////////

  /// Pref(L): nonempty prefixes of words of L.
  inline Fsa prefix_language(Fsa const& l) {
    Fsa const t = trim(determinize_minimize(l));
    std::vector<State> all(t.states());
    std::iota(all.begin(), all.end(), 0);
    Fsa const p(t.alphabet(), t.states(), t.initial(), all, t.transitions());
    return determinize_minimize(difference(p, Fsa::empty_word(t.alphabet())));
  }

  /// Compares a candidate L_=' with {(w1, w2) : w1 in L, w2 in Pref(L),
  /// w1 = w2} on words up to max_len.
  inline ValidationReport prefix_automatic_check(AutomaticStructure const& s,
                                                 PairRelation const&       candidate,
                                                 std::size_t               max_len) {
    ValidationReport        report;
    GenMap const            g  = s.genmap();
    detail::WordIndex const ix = detail::index_language(s.language, g, max_len);
    detail::WordIndex const px = detail::index_language(prefix_language(s.language), g, max_len);
    report.language_words      = ix.words.size();
    detail::check_relation(
        candidate, ix, px, [](Element const& x) { return x; }, max_len, "L_='", report);
    return report;
  }

  /// L_=' for a structure with finite L, computed from the element model.
  inline PairRelation finite_prefix_equality(AutomaticStructure const& s) {
    if (!is_finite(s.language)) {
      throw PreconditionError("finite_prefix_equality needs a finite language");
    }
    std::size_t             longest = 0;
    Fsa const               pref    = prefix_language(s.language);
    for (auto const& w : enumerate(pref, 64)) {
      longest = std::max(longest, w.size());
    }
    GenMap const                       g  = s.genmap();
    detail::WordIndex const            ix = detail::index_language(s.language, g, longest);
    detail::WordIndex const            px = detail::index_language(pref, g, longest);
    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t i = 0; i < ix.words.size(); ++i) {
      auto it = px.by_value.find(ix.values[i]);
      if (it != px.by_value.end()) {
        for (auto j : it->second) {
          pairs.emplace_back(ix.words[i], px.words[j]);
        }
      }
    }
    return from_pairs(s.alphabet, pairs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in structures
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Fsa letter_plus(Alphabet const& a, std::string_view n) {
      return plus(Fsa::letters(a, {a.at(n)}));
    }
    inline Fsa pair_word(Alphabet const& a, std::string const& text) {
      return Fsa::word(a.padded(), a.padded().parse(text));
    }
  }  // namespace detail

  /// Structure for a finite semigroup over the given generators (all
  /// elements by default); L holds the shortlex-least word of each element.
  inline AutomaticStructure finite_structure(FinitePtr                         s,
                                             std::optional<std::vector<std::size_t>> gens = std::nullopt) {
    std::vector<std::size_t> gs;
    if (gens) {
      gs = *gens;
    } else {
      for (std::size_t i = 0; i < s->size(); ++i) {
        gs.push_back(i);
      }
    }
    std::vector<std::string> names;
    std::vector<Element>     images;
    for (auto i : gs) {
      names.push_back(s->names().at(i));
      images.push_back(atom(std::int64_t(i)));
    }
    Alphabet const                   a(names);
    std::vector<std::optional<Word>> rep(s->size());
    std::vector<std::size_t>         order;
    for (Symbol x = 0; x < gs.size(); ++x) {
      if (!rep[gs[x]]) {
        rep[gs[x]] = Word{x};
        order.push_back(gs[x]);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Symbol x = 0; x < gs.size(); ++x) {
        std::size_t y = s->mul(order[i], gs[x]);
        if (!rep[y]) {
          Word w = *rep[order[i]];
          w.push_back(x);
          rep[y] = w;
          order.push_back(y);
        }
      }
    }
    std::vector<Word> words;
    for (auto e : order) {
      words.push_back(*rep[e]);
    }
    Fsa const                 l = Fsa::words(a, words);
    std::vector<PairRelation> ms;
    for (Symbol x = 0; x < gs.size(); ++x) {
      std::vector<std::pair<Word, Word>> pairs;
      for (auto e : order) {
        pairs.emplace_back(*rep[e], *rep[s->mul(e, gs[x])]);
      }
      ms.push_back(from_pairs(a, pairs));
    }
    return make_structure(a, s, images, l, ms, diagonal(l), true);
  }

  /// Structure for the (finite) subsemigroup of `model` generated by the
  /// images; L holds the shortlex-least word of each element.
  inline AutomaticStructure enumerated_structure(Alphabet const&      a,
                                                 SemigroupPtr         model,
                                                 std::vector<Element> images,
                                                 std::size_t          limit = 100000) {
    if (images.size() != a.size()) {
      throw PreconditionError("enumerated_structure: one image per letter required");
    }
    std::unordered_map<Element, std::size_t, ElementHash> index;
    std::vector<Element>                                  elems;
    std::vector<Word>                                     reps;
    for (Symbol x = 0; x < a.size(); ++x) {
      if (index.emplace(images[x], elems.size()).second) {
        elems.push_back(images[x]);
        reps.push_back(Word{x});
      }
    }
    std::vector<std::vector<std::size_t>> next;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      next.emplace_back();
      for (Symbol x = 0; x < a.size(); ++x) {
        Element y        = model->multiply(elems[i], images[x]);
        auto [it, fresh] = index.emplace(y, elems.size());
        if (fresh) {
          if (elems.size() >= limit) {
            throw PreconditionError("enumerated_structure: more than " + std::to_string(limit) + " elements");
          }
          elems.push_back(std::move(y));
          Word w = reps[i];
          w.push_back(x);
          reps.push_back(std::move(w));
        }
        next[i].push_back(it->second);
      }
    }
    Fsa const                 l = Fsa::words(a, reps);
    std::vector<PairRelation> ms;
    for (Symbol x = 0; x < a.size(); ++x) {
      std::vector<std::pair<Word, Word>> pairs;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        pairs.emplace_back(reps[i], reps[next[i][x]]);
      }
      ms.push_back(from_pairs(a, pairs));
    }
    return make_structure(a, std::move(model), std::move(images), l, ms, diagonal(l), true);
  }

  /// ({e}, {e}) for the trivial monoid.
  inline AutomaticStructure trivial_structure(std::string const& letter = "e") {
    auto s = std::make_shared<FiniteSemigroup>(std::vector<std::vector<std::size_t>>{{0}},
                                               std::vector<std::string>{letter}, 0);
    return finite_structure(s);
  }

  /// ({a}, a+) for the free monogenic semigroup, or ({e, a}, {e} u a+) for
  /// the free monogenic monoid.
  inline AutomaticStructure free_monogenic_structure(bool monoid, std::string const& a_name = "a",
                                                     std::string const& e_name = "e") {
    auto model = std::make_shared<FreeMonogenic>(monoid);
    if (!monoid) {
      Alphabet const     a{a_name};
      Fsa const          l  = detail::letter_plus(a, a_name);
      std::string const  aa = a_name + "|" + a_name;
      PairRelation const la(a, concat(plus(detail::pair_word(a, aa)), detail::pair_word(a, "$|" + a_name)));
      return make_structure(a, model, {atom(1)}, l, {la}, diagonal(l), true);
    }
    Alphabet const    a{e_name, a_name};
    Fsa const         ap = detail::letter_plus(a, a_name);
    Fsa const         l  = union_of(Fsa::letters(a, {0}), ap);
    std::string const aa = a_name + "|" + a_name;
    PairRelation const le = diagonal(l);
    PairRelation const la(
        a, union_of(detail::pair_word(a, e_name + "|" + a_name),
                    concat(plus(detail::pair_word(a, aa)), detail::pair_word(a, "$|" + a_name))));
    return make_structure(a, model, {atom(0), atom(1)}, l, {le, la}, diagonal(l), true);
  }

  /// ({e, x, X}, {e} u x+ u X+) for the integers, x = 1 and X = -1.
  inline AutomaticStructure integers_structure(std::string const& e = "e",
                                               std::string const& x = "x",
                                               std::string const& xi = "X") {
    Alphabet const a{e, x, xi};
    auto           model = std::make_shared<Integers>();
    Fsa const      l = union_all(a, {Fsa::letters(a, {0}), detail::letter_plus(a, x), detail::letter_plus(a, xi)});
    auto up = [&](std::string const& g, std::string const& h) {
      // multiplying by g: e -> g, g^n -> g^(n+1), h -> e, h^(n+1) -> h^n
      std::string const gg = g + "|" + g, hh = h + "|" + h;
      return PairRelation(
          a, union_all(a.padded(),
                       {detail::pair_word(a, e + "|" + g),
                        concat(plus(detail::pair_word(a, gg)), detail::pair_word(a, "$|" + g)),
                        detail::pair_word(a, h + "|" + e),
                        concat(plus(detail::pair_word(a, hh)), detail::pair_word(a, h + "|$"))}));
    };
    return make_structure(a, model, {atom(0), atom(1), atom(-1)}, l, {diagonal(l), up(x, xi), up(xi, x)},
                          diagonal(l), true);
  }

}  // namespace autsem

#endif  // AUTSEM_AUTOSTRUCT_HPP
