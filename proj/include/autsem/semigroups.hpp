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
 * Element models: exact multiplication for the finite and infinite
 * semigroups the constructions work with. Every model is immutable and is
 * shared through SemigroupPtr.
 */

#ifndef AUTSEM_SEMIGROUPS_HPP
#define AUTSEM_SEMIGROUPS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "alphabet.hpp"
#include "fsa.hpp"
#include "json.hpp"

namespace autsem {

  /// A semigroup element as a small tree of integers. Each model decides
  /// what `data` and `parts` mean.
  struct Element {
    std::vector<std::int64_t> data;
    std::vector<Element>      parts;

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const& x, Element const& y) {
      if (auto c = x.data <=> y.data; c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end());
    }
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept {
      std::size_t seed = detail::hash_range(e.data);
      for (auto const& p : e.parts) {
        detail::hash_mix(seed, (*this)(p));
      }
      return seed;
    }
  };

  inline Element atom(std::int64_t i) {
    return Element{{i}, {}};
  }

  class Semigroup {
   public:
    virtual ~Semigroup() = default;

    virtual Element                multiply(Element const& x, Element const& y) const = 0;
    virtual std::optional<Element> identity() const {
      return std::nullopt;
    }
    /// All elements, when the model is finite.
    virtual std::optional<std::vector<Element>> elements() const {
      return std::nullopt;
    }
    virtual std::string    format(Element const& x) const = 0;
    virtual std::string    name() const = 0;
    virtual nlohmann::json describe() const = 0;
  };

  using SemigroupPtr = std::shared_ptr<Semigroup const>;

  ////////////////////////////////////////////////////////////////////////
  // Finite semigroups
  ////////////////////////////////////////////////////////////////////////

  /// Cayley-table semigroup with elements 0..n-1.
  class FiniteSemigroup : public Semigroup {
   public:
    FiniteSemigroup(std::vector<std::vector<std::size_t>> table,
                    std::vector<std::string>              names    = {},
                    std::optional<std::size_t>            identity = std::nullopt)
        : table_(std::move(table)), names_(std::move(names)), identity_(identity) {
      std::size_t const n = table_.size();
      if (n == 0) {
        throw PreconditionError("finite semigroup must be nonempty");
      }
      if (names_.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          names_.push_back(std::to_string(i));
        }
      }
      if (names_.size() != n) {
        throw PreconditionError("element name count does not match table size");
      }
      for (auto const& row : table_) {
        if (row.size() != n) {
          throw PreconditionError("Cayley table must be square");
        }
        for (auto v : row) {
          if (v >= n) {
            throw PreconditionError("Cayley table entry out of range");
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
              throw PreconditionError("Cayley table is not associative at (" + names_[a] + ","
                                      + names_[b] + "," + names_[c] + ")");
            }
          }
        }
      }
      if (identity_) {
        if (*identity_ >= n) {
          throw PreconditionError("identity index out of range");
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (table_[*identity_][a] != a || table_[a][*identity_] != a) {
            throw PreconditionError("declared identity fails the identity law");
          }
        }
      } else {
        for (std::size_t e = 0; e < n && !identity_; ++e) {
          bool ok = true;
          for (std::size_t a = 0; a < n && ok; ++a) {
            ok = table_[e][a] == a && table_[a][e] == a;
          }
          if (ok) {
            identity_ = e;
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return table_.size();
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table_[a][b];
    }
    std::optional<std::size_t> identity_index() const noexcept {
      return identity_;
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return table_;
    }
    std::size_t index_of(std::string const& n) const {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == n) {
          return i;
        }
      }
      throw ParseError("unknown element '" + n + "'");
    }

    Element multiply(Element const& x, Element const& y) const override {
      return atom(std::int64_t(table_[std::size_t(x.data[0])][std::size_t(y.data[0])]));
    }
    std::optional<Element> identity() const override {
      if (identity_) {
        return atom(std::int64_t(*identity_));
      }
      return std::nullopt;
    }
    std::optional<std::vector<Element>> elements() const override {
      std::vector<Element> out;
      for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(atom(std::int64_t(i)));
      }
      return out;
    }
    std::string format(Element const& x) const override {
      return names_[std::size_t(x.data[0])];
    }
    std::string name() const override {
      return "finite(" + std::to_string(size()) + ")";
    }
    nlohmann::json describe() const override {
      nlohmann::json j;
      j["kind"]     = "cayley";
      j["elements"] = names_;
      j["table"]    = table_;
      if (identity_) {
        j["identity"] = *identity_;
      }
      return j;
    }

   private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string>              names_;
    std::optional<std::size_t>            identity_;
  };

  using FinitePtr = std::shared_ptr<FiniteSemigroup const>;

  /// Cyclic group Z_n under addition.
  inline FinitePtr cyclic_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return std::make_shared<FiniteSemigroup>(t, std::vector<std::string>{}, 0);
  }

  inline FinitePtr trivial_monoid() {
    return cyclic_group(1);
  }

  /// Two elements {x, z} with every product equal to z.
  inline FinitePtr null_semigroup2() {
    return std::make_shared<FiniteSemigroup>(std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}},
                                             std::vector<std::string>{"x", "z"});
  }

  /// xy = y.
  inline FinitePtr right_zero_semigroup(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = b;
      }
    }
    return std::make_shared<FiniteSemigroup>(t);
  }

  /// xy = x.
  inline FinitePtr left_zero_semigroup(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = a;
      }
    }
    return std::make_shared<FiniteSemigroup>(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Infinite built-in models
  ////////////////////////////////////////////////////////////////////////

  /// Free monogenic semigroup {a^k : k >= 1}, or monoid when k = 0 is allowed.
  class FreeMonogenic : public Semigroup {
   public:
    explicit FreeMonogenic(bool monoid) : monoid_(monoid) {}

    bool is_monoid() const noexcept {
      return monoid_;
    }
    Element multiply(Element const& x, Element const& y) const override {
      return atom(x.data[0] + y.data[0]);
    }
    std::optional<Element> identity() const override {
      if (monoid_) {
        return atom(0);
      }
      return std::nullopt;
    }
    std::string format(Element const& x) const override {
      return "a^" + std::to_string(x.data[0]);
    }
    std::string name() const override {
      return monoid_ ? "free_monogenic_monoid" : "free_monogenic";
    }
    nlohmann::json describe() const override {
      return {{"kind", "builtin"}, {"name", name()}};
    }

   private:
    bool monoid_;
  };

  /// The integers under addition.
  class Integers : public Semigroup {
   public:
    Element multiply(Element const& x, Element const& y) const override {
      return atom(x.data[0] + y.data[0]);
    }
    std::optional<Element> identity() const override {
      return atom(0);
    }
    std::string format(Element const& x) const override {
      return std::to_string(x.data[0]);
    }
    std::string name() const override {
      return "int_z";
    }
    nlohmann::json describe() const override {
      return {{"kind", "builtin"}, {"name", "int_z"}};
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Derived models
  ////////////////////////////////////////////////////////////////////////

  /// S with a new identity adjoined. The identity is {data {1}}, an element
  /// s of S is {data {0}, parts {s}}.
  class AdjoinIdentity : public Semigroup {
   public:
    explicit AdjoinIdentity(SemigroupPtr base) : base_(std::move(base)) {}

    static Element one() {
      return Element{{1}, {}};
    }
    static Element wrap(Element s) {
      return Element{{0}, {std::move(s)}};
    }
    SemigroupPtr const& base() const noexcept {
      return base_;
    }
    Element multiply(Element const& x, Element const& y) const override {
      if (x.data[0] == 1) {
        return y;
      }
      if (y.data[0] == 1) {
        return x;
      }
      return wrap(base_->multiply(x.parts[0], y.parts[0]));
    }
    std::optional<Element> identity() const override {
      return one();
    }
    std::optional<std::vector<Element>> elements() const override {
      auto es = base_->elements();
      if (!es) {
        return std::nullopt;
      }
      std::vector<Element> out{one()};
      for (auto& e : *es) {
        out.push_back(wrap(e));
      }
      return out;
    }
    std::string format(Element const& x) const override {
      return x.data[0] == 1 ? "1" : base_->format(x.parts[0]);
    }
    std::string name() const override {
      return base_->name() + "^1";
    }
    nlohmann::json describe() const override {
      return {{"kind", "adjoin_identity"}, {"base", base_->describe()}};
    }

   private:
    SemigroupPtr base_;
  };

  /// Free product of two semigroups (monoid mode identifies the two
  /// identities). An element lists its syllables in `parts` and their factor
  /// tags (0 or 1) in `data`; consecutive tags differ. In monoid mode no
  /// syllable is a factor identity and the empty sequence is the identity.
  class FreeProduct : public Semigroup {
   public:
    FreeProduct(SemigroupPtr s1, SemigroupPtr s2, bool monoid)
        : factors_{std::move(s1), std::move(s2)}, monoid_(monoid) {
      if (monoid_ && (!factors_[0]->identity() || !factors_[1]->identity())) {
        throw PreconditionError("monoid free product needs two monoids");
      }
    }

    SemigroupPtr const& factor(std::size_t i) const {
      return factors_.at(i);
    }
    bool is_monoid() const noexcept {
      return monoid_;
    }

    /// One-syllable element, or the identity when s is a factor identity in
    /// monoid mode.
    Element syllable(std::size_t tag, Element s) const {
      if (monoid_ && s == *factors_[tag]->identity()) {
        return Element{};
      }
      return Element{{std::int64_t(tag)}, {std::move(s)}};
    }

    Element multiply(Element const& x, Element const& y) const override {
      Element out = x;
      for (std::size_t i = 0; i < y.parts.size(); ++i) {
        push(out, std::size_t(y.data[i]), y.parts[i]);
      }
      return out;
    }
    std::optional<Element> identity() const override {
      if (monoid_) {
        return Element{};
      }
      return std::nullopt;
    }
    std::string format(Element const& x) const override {
      if (x.parts.empty()) {
        return "1";
      }
      std::string out = "[";
      for (std::size_t i = 0; i < x.parts.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(x.data[i] + 1) + ":"
               + factors_[std::size_t(x.data[i])]->format(x.parts[i]);
      }
      return out + "]";
    }
    std::string name() const override {
      return factors_[0]->name() + " * " + factors_[1]->name();
    }
    nlohmann::json describe() const override {
      return {{"kind", "free_product"},
              {"monoid", monoid_},
              {"factors", {factors_[0]->describe(), factors_[1]->describe()}}};
    }

   private:
    void push(Element& out, std::size_t tag, Element const& s) const {
      if (!out.parts.empty() && std::size_t(out.data.back()) == tag) {
        Element merged = factors_[tag]->multiply(out.parts.back(), s);
        out.parts.pop_back();
        out.data.pop_back();
        if (monoid_ && merged == *factors_[tag]->identity()) {
          return;  // the neighbours now carry different tags again
        }
        out.parts.push_back(std::move(merged));
        out.data.push_back(std::int64_t(tag));
        return;
      }
      out.parts.push_back(s);
      out.data.push_back(std::int64_t(tag));
    }

    std::array<SemigroupPtr, 2> factors_;
    bool         monoid_;
  };

  /// Direct product S1 x S2; parts {s1, s2}.
  class DirectProduct : public Semigroup {
   public:
    DirectProduct(SemigroupPtr s1, SemigroupPtr s2) : factors_{std::move(s1), std::move(s2)} {}

    SemigroupPtr const& factor(std::size_t i) const {
      return factors_.at(i);
    }
    static Element pair(Element a, Element b) {
      return Element{{}, {std::move(a), std::move(b)}};
    }
    Element multiply(Element const& x, Element const& y) const override {
      return pair(factors_[0]->multiply(x.parts[0], y.parts[0]),
                  factors_[1]->multiply(x.parts[1], y.parts[1]));
    }
    std::optional<Element> identity() const override {
      auto a = factors_[0]->identity();
      auto b = factors_[1]->identity();
      if (a && b) {
        return pair(*a, *b);
      }
      return std::nullopt;
    }
    std::optional<std::vector<Element>> elements() const override {
      auto xs = factors_[0]->elements();
      auto ys = factors_[1]->elements();
      if (!xs || !ys) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& a : *xs) {
        for (auto const& b : *ys) {
          out.push_back(pair(a, b));
        }
      }
      return out;
    }
    std::string format(Element const& x) const override {
      return "(" + factors_[0]->format(x.parts[0]) + ", " + factors_[1]->format(x.parts[1]) + ")";
    }
    std::string name() const override {
      return factors_[0]->name() + " x " + factors_[1]->name();
    }
    nlohmann::json describe() const override {
      return {{"kind", "direct_product"},
              {"factors", {factors_[0]->describe(), factors_[1]->describe()}}};
    }

   private:
    std::array<SemigroupPtr, 2> factors_;
  };

  /// S^n with componentwise multiplication; parts hold the n coordinates.
  class CartesianPower : public Semigroup {
   public:
    CartesianPower(SemigroupPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
      if (n_ == 0) {
        throw PreconditionError("cartesian power needs a positive exponent");
      }
    }
    SemigroupPtr const& base() const noexcept {
      return base_;
    }
    std::size_t arity() const noexcept {
      return n_;
    }
    Element multiply(Element const& x, Element const& y) const override {
      Element out;
      for (std::size_t i = 0; i < n_; ++i) {
        out.parts.push_back(base_->multiply(x.parts[i], y.parts[i]));
      }
      return out;
    }
    std::optional<Element> identity() const override {
      auto e = base_->identity();
      if (!e) {
        return std::nullopt;
      }
      return Element{{}, std::vector<Element>(n_, *e)};
    }
    std::string format(Element const& x) const override {
      std::string out = "(";
      for (std::size_t i = 0; i < n_; ++i) {
        out += (i ? ", " : "") + base_->format(x.parts[i]);
      }
      return out + ")";
    }
    std::string name() const override {
      return base_->name() + "^" + std::to_string(n_);
    }
    nlohmann::json describe() const override {
      return {{"kind", "power"}, {"base", base_->describe()}, {"n", n_}};
    }

   private:
    SemigroupPtr base_;
    std::size_t  n_;
  };

  /// M[U; I, J; P] with P a J x I matrix over U. An element (l, s, r) is
  /// {data {l, r}, parts {s}} with 0-based indices.
  class ReesMatrix : public Semigroup {
   public:
    ReesMatrix(SemigroupPtr u, std::size_t i, std::size_t j, std::vector<std::vector<Element>> p)
        : u_(std::move(u)), i_(i), j_(j), p_(std::move(p)) {
      if (i_ == 0 || j_ == 0) {
        throw PreconditionError("Rees matrix index sets must be nonempty");
      }
      if (p_.size() != j_) {
        throw PreconditionError("sandwich matrix must have |J| rows");
      }
      for (auto const& row : p_) {
        if (row.size() != i_) {
          throw PreconditionError("sandwich matrix must have |I| columns");
        }
      }
    }

    static Element triple(std::size_t l, Element s, std::size_t r) {
      return Element{{std::int64_t(l), std::int64_t(r)}, {std::move(s)}};
    }
    SemigroupPtr const& base() const noexcept {
      return u_;
    }
    std::size_t rows() const noexcept {
      return i_;
    }
    std::size_t cols() const noexcept {
      return j_;
    }
    /// p_{r l}
    Element const& entry(std::size_t r, std::size_t l) const {
      return p_.at(r).at(l);
    }
    std::vector<std::vector<Element>> const& matrix() const noexcept {
      return p_;
    }

    Element multiply(Element const& x, Element const& y) const override {
      Element mid = u_->multiply(u_->multiply(x.parts[0], entry(std::size_t(x.data[1]), std::size_t(y.data[0]))),
                                 y.parts[0]);
      return triple(std::size_t(x.data[0]), std::move(mid), std::size_t(y.data[1]));
    }
    std::optional<std::vector<Element>> elements() const override {
      auto us = u_->elements();
      if (!us) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (std::size_t l = 0; l < i_; ++l) {
        for (auto const& s : *us) {
          for (std::size_t r = 0; r < j_; ++r) {
            out.push_back(triple(l, s, r));
          }
        }
      }
      return out;
    }
    std::string format(Element const& x) const override {
      return "(" + std::to_string(x.data[0] + 1) + ", " + u_->format(x.parts[0]) + ", "
             + std::to_string(x.data[1] + 1) + ")";
    }
    std::string name() const override {
      return "M[" + u_->name() + "; " + std::to_string(i_) + ", " + std::to_string(j_) + "]";
    }
    nlohmann::json describe() const override {
      nlohmann::json p = nlohmann::json::array();
      for (auto const& row : p_) {
        nlohmann::json r = nlohmann::json::array();
        for (auto const& e : row) {
          r.push_back(element_json(e));
        }
        p.push_back(r);
      }
      return {{"kind", "rees"}, {"U", u_->describe()}, {"I", i_}, {"J", j_}, {"P", p}};
    }

    static nlohmann::json element_json(Element const& e) {
      nlohmann::json parts = nlohmann::json::array();
      for (auto const& p : e.parts) {
        parts.push_back(element_json(p));
      }
      return {{"data", e.data}, {"parts", parts}};
    }

   private:
    SemigroupPtr                      u_;
    std::size_t                       i_, j_;
    std::vector<std::vector<Element>> p_;
  };

  /// A monoid endomorphism described finitely.
  struct Endomorphism {
    enum class Kind { identity, const_one, table, power };
    Kind                     kind = Kind::identity;
    std::vector<std::size_t> table;      // Kind::table, on a Cayley monoid
    std::int64_t             power = 1;  // Kind::power: k |-> power * k on additive models

    Element apply(Semigroup const& t, Element const& x) const {
      switch (kind) {
        case Kind::identity:
          return x;
        case Kind::const_one:
          return *t.identity();
        case Kind::table:
          return atom(std::int64_t(table.at(std::size_t(x.data[0]))));
        case Kind::power:
          return atom(power * x.data[0]);
      }
      return x;
    }

    nlohmann::json describe() const {
      switch (kind) {
        case Kind::identity:
          return {{"kind", "identity"}};
        case Kind::const_one:
          return {{"kind", "const_one"}};
        case Kind::table:
          return {{"kind", "table"}, {"map", table}};
        case Kind::power:
          return {{"kind", "power"}, {"power", power}};
      }
      return {};
    }
  };

  /// Bruck-Reilly extension BR(T, theta); (m, t, n) is {data {m, n}, parts {t}}.
  class BruckReilly : public Semigroup {
   public:
    BruckReilly(SemigroupPtr t, Endomorphism theta) : t_(std::move(t)), theta_(std::move(theta)) {
      if (!t_->identity()) {
        throw PreconditionError("Bruck-Reilly extension needs a monoid");
      }
    }

    static Element triple(std::int64_t m, Element t, std::int64_t n) {
      return Element{{m, n}, {std::move(t)}};
    }
    SemigroupPtr const& base() const noexcept {
      return t_;
    }
    Endomorphism const& theta() const noexcept {
      return theta_;
    }
    Element theta_pow(Element x, std::int64_t k) const {
      for (std::int64_t i = 0; i < k; ++i) {
        Element y = theta_.apply(*t_, x);
        if (y == x) {
          break;
        }
        x = std::move(y);
      }
      return x;
    }

    Element multiply(Element const& x, Element const& y) const override {
      std::int64_t m = x.data[0], n = x.data[1], p = y.data[0], q = y.data[1];
      std::int64_t k = std::max(n, p);
      Element      t = t_->multiply(theta_pow(x.parts[0], k - n), theta_pow(y.parts[0], k - p));
      return triple(m - n + k, std::move(t), q - p + k);
    }
    std::optional<Element> identity() const override {
      return triple(0, *t_->identity(), 0);
    }
    std::string format(Element const& x) const override {
      return "(" + std::to_string(x.data[0]) + ", " + t_->format(x.parts[0]) + ", "
             + std::to_string(x.data[1]) + ")";
    }
    std::string name() const override {
      return "BR(" + t_->name() + ")";
    }
    nlohmann::json describe() const override {
      return {{"kind", "bruck_reilly"}, {"T", t_->describe()}, {"theta", theta_.describe()}};
    }

   private:
    SemigroupPtr t_;
    Endomorphism theta_;
  };

  /// S wr T for finite T: (f, t) is {data {t}, parts {f(t_0), ..., f(t_{m-1})}}.
  class Wreath : public Semigroup {
   public:
    Wreath(SemigroupPtr s, FinitePtr t) : s_(std::move(s)), t_(std::move(t)) {}

    SemigroupPtr const& base() const noexcept {
      return s_;
    }
    FinitePtr const& top() const noexcept {
      return t_;
    }
    static Element make(std::vector<Element> f, std::size_t t) {
      return Element{{std::int64_t(t)}, std::move(f)};
    }

    Element multiply(Element const& x, Element const& y) const override {
      std::size_t const    m = t_->size();
      std::size_t const    t = std::size_t(x.data[0]);
      std::vector<Element> f(m);
      for (std::size_t z = 0; z < m; ++z) {
        f[z] = s_->multiply(x.parts[z], y.parts[t_->mul(z, t)]);
      }
      return make(std::move(f), t_->mul(t, std::size_t(y.data[0])));
    }
    std::optional<Element> identity() const override {
      auto e = s_->identity();
      auto u = t_->identity_index();
      if (e && u) {
        return make(std::vector<Element>(t_->size(), *e), *u);
      }
      return std::nullopt;
    }
    std::string format(Element const& x) const override {
      std::string out = "((";
      for (std::size_t i = 0; i < x.parts.size(); ++i) {
        out += (i ? ", " : "") + s_->format(x.parts[i]);
      }
      return out + "), " + t_->names()[std::size_t(x.data[0])] + ")";
    }
    std::string name() const override {
      return s_->name() + " wr " + t_->name();
    }
    nlohmann::json describe() const override {
      return {{"kind", "wreath"}, {"S", s_->describe()}, {"T", t_->describe()}};
    }

   private:
    SemigroupPtr s_;
    FinitePtr    t_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Generating maps
  ////////////////////////////////////////////////////////////////////////

  /// Homomorphism A+ -> S given by letter images.
  struct GenMap {
    Alphabet             alphabet;
    SemigroupPtr         target;
    std::vector<Element> images;

    Element evaluate(Word const& w) const {
      if (w.empty()) {
        throw PreconditionError("cannot evaluate the empty word in a semigroup");
      }
      if (!alphabet.contains(w)) {
        throw AlphabetMismatch("evaluate: word not over the generating alphabet");
      }
      Element x = images[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = target->multiply(x, images[w[i]]);
      }
      return x;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  /// True when every element is a product of two elements.
  inline bool square_surjective(FiniteSemigroup const& s) {
    std::vector<char> hit(s.size(), 0);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        hit[s.mul(a, b)] = 1;
      }
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }

  /// For each t an (e, q) with e a right identity and t = e q; absent when
  /// some t lies in no such principal right ideal.
  inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>>
  right_identity_decomposition(FiniteSemigroup const& t) {
    std::vector<std::size_t> right_ids;
    for (std::size_t e = 0; e < t.size(); ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < t.size() && ok; ++x) {
        ok = t.mul(x, e) == x;
      }
      if (ok) {
        right_ids.push_back(e);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < t.size(); ++x) {
      std::optional<std::pair<std::size_t, std::size_t>> found;
      for (auto e : right_ids) {
        if (e == x) {
          found = {e, x};
          break;
        }
      }
      for (std::size_t k = 0; k < right_ids.size() && !found; ++k) {
        for (std::size_t q = 0; q < t.size() && !found; ++q) {
          if (t.mul(right_ids[k], q) == x) {
            found = {right_ids[k], q};
          }
        }
      }
      if (!found) {
        return std::nullopt;
      }
      out.push_back(*found);
    }
    return out;
  }

  /// Least two-sided ideal containing gens.
  inline std::set<std::size_t> ideal_generated(FiniteSemigroup const& u, std::set<std::size_t> const& gens) {
    std::set<std::size_t>    ideal = gens;
    std::vector<std::size_t> todo(gens.begin(), gens.end());
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      for (std::size_t y = 0; y < u.size(); ++y) {
        for (std::size_t z : {u.mul(x, y), u.mul(y, x)}) {
          if (ideal.insert(z).second) {
            todo.push_back(z);
          }
        }
      }
    }
    return ideal;
  }

  /// Whether a table is an endomorphism of the Cayley monoid (identity
  /// preserved when `monoid`).
  inline bool is_endomorphism(FiniteSemigroup const& t, std::vector<std::size_t> const& map, bool monoid) {
    if (map.size() != t.size()) {
      return false;
    }
    for (auto v : map) {
      if (v >= t.size()) {
        return false;
      }
    }
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (map[t.mul(a, b)] != t.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    if (monoid) {
      auto e = t.identity_index();
      return e && map[*e] == *e;
    }
    return true;
  }

  /// Minimal (j, k) with t theta^j = t theta^(k+1), k >= j. Requires the
  /// orbit of t to be finite.
  inline std::pair<std::size_t, std::size_t> theta_orbit(Element const&                         t,
                                                         std::function<Element(Element const&)> theta,
                                                         std::size_t limit = 100000) {
    std::unordered_map<Element, std::size_t, ElementHash> first;
    Element                                               x = t;
    for (std::size_t i = 0; i <= limit; ++i) {
      auto [it, fresh] = first.emplace(x, i);
      if (!fresh) {
        // x = t theta^i = t theta^(it->second); preperiod mu, period i - mu
        std::size_t mu = it->second;
        return {mu, i - 1};
      }
      x = theta(x);
    }
    throw PreconditionError("theta orbit did not become periodic within the limit");
  }

  /// Minimal automaton for {w in A+ : w h = s} when h maps into a finite
  /// semigroup. State 0 is the start, state i + 1 the element i.
  inline Fsa finitereg_automaton(Alphabet const&                a,
                                 FiniteSemigroup const&         s,
                                 std::vector<std::size_t> const& images,
                                 std::size_t                    target) {
    if (images.size() != a.size()) {
      throw PreconditionError("finitereg_automaton: one image per letter required");
    }
    std::vector<Transition> ts;
    for (Symbol x = 0; x < a.size(); ++x) {
      ts.push_back({0, x, State(images[x] + 1)});
      for (std::size_t e = 0; e < s.size(); ++e) {
        ts.push_back({State(e + 1), x, State(s.mul(e, images[x]) + 1)});
      }
    }
    return Fsa(a, s.size() + 1, {0}, {State(target + 1)}, std::move(ts));
  }

  /// Largest number of solutions x in the universe of x t1 = t2, over t2.
  inline std::size_t fgt_witness(Semigroup const& s, std::vector<Element> const& universe, Element const& t1) {
    std::unordered_map<Element, std::size_t, ElementHash> counts;
    std::size_t                                           best = 0;
    for (auto const& x : universe) {
      best = std::max(best, ++counts[s.multiply(x, t1)]);
    }
    return best;
  }

}  // namespace autsem

#endif  // AUTSEM_SEMIGROUPS_HPP
