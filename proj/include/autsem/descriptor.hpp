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
 * Construction descriptors: {"op": ..., "inputs": [...], "params": {...}},
 * where parameters may also sit at the top level. A structure argument is a
 * built-in name, a bundle directory, a Cayley object or a nested descriptor.
 *
 * Built-in structures: trivial, z<n> (letters e, a, a2, ...), bicyclic
 * (letters b, c, t:0), free_monogenic (monoid, letters e, a),
 * free_monogenic_semigroup (letter a), int_z (letters e, x, X), plus any
 * finite semigroup name accepted by finite_from_json.
 */

#ifndef AUTSEM_DESCRIPTOR_HPP
#define AUTSEM_DESCRIPTOR_HPP

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "autostruct.hpp"
#include "constructions/bruck_reilly.hpp"
#include "constructions/direct_product.hpp"
#include "constructions/free_product.hpp"
#include "constructions/rees_matrix.hpp"
#include "constructions/wreath.hpp"
#include "io.hpp"

namespace autsem {

  inline std::vector<std::string> const& descriptor_ops() {
    static std::vector<std::string> const ops{"builtin",
                                              "finite",
                                              "free_product",
                                              "free_product_monoids",
                                              "free_product_restrict",
                                              "free_product_monoids_restrict",
                                              "direct_product_monoids",
                                              "direct_product_finite_infinite",
                                              "rees_matrix",
                                              "rees_matrix_converse",
                                              "bruck_reilly_finite",
                                              "bruck_reilly_const_one",
                                              "bruck_reilly_identity",
                                              "bruck_reilly_fgt",
                                              "cartesian_power",
                                              "wreath",
                                              "rename",
                                              "uniquify",
                                              "strip_length_one"};
    return ops;
  }

  inline AutomaticStructure builtin_structure(std::string const& name) {
    if (name == "trivial") {
      return trivial_structure("e");
    }
    if (name == "bicyclic") {
      return bruck_reilly_finite(trivial_monoid(), {0});
    }
    if (name == "free_monogenic") {
      return free_monogenic_structure(true);
    }
    if (name == "free_monogenic_semigroup") {
      return free_monogenic_structure(false);
    }
    if (name == "int_z") {
      return integers_structure();
    }
    return finite_structure(finite_from_json(json(name)));
  }

  inline AutomaticStructure build_structure(json const& ref, std::filesystem::path const& base_dir);

  namespace detail {
    /// M[U1; I, J; P] over a finite U: V is the ideal generated by P, every
    /// element of V is a generator and decompositions are found by search.
    inline AutomaticStructure rees_over_finite(FinitePtr u, std::size_t ni, std::size_t nj, json const& pj, bool adjoin) {
      std::vector<std::vector<Element>> p;
      std::set<std::size_t>             entries;
      if (!pj.is_array() || pj.size() != nj) {
        throw ParseError("rees_matrix: P must be a list of |J| rows");
      }
      for (auto const& row : pj) {
        if (!row.is_array() || row.size() != ni) {
          throw ParseError("rees_matrix: each row of P must have |I| entries");
        }
        p.emplace_back();
        for (auto const& x : row) {
          std::size_t const i = x.is_string() ? u->index_of(x.get<std::string>()) : x.get<std::size_t>();
          if (i >= u->size()) {
            throw ParseError("rees_matrix: P entry out of range");
          }
          entries.insert(i);
          p.back().push_back(atom(std::int64_t(i)));
        }
      }
      std::set<std::size_t> const    ideal = ideal_generated(*u, entries);
      std::vector<std::size_t> const gens(ideal.begin(), ideal.end());
      AutomaticStructure const       v = finite_structure(u, gens);

      SemigroupPtr const base = adjoin ? SemigroupPtr(std::make_shared<AdjoinIdentity>(u)) : SemigroupPtr(u);
      auto up = [&](Element const& x) { return adjoin ? AdjoinIdentity::wrap(x) : x; };
      std::vector<Element> all;
      if (adjoin) {
        all.push_back(AdjoinIdentity::one());
      }
      for (std::size_t i = 0; i < u->size(); ++i) {
        all.push_back(up(atom(std::int64_t(i))));
      }
      std::vector<ReesDecomposition> dec;
      for (auto g : gens) {
        Element const target = up(atom(std::int64_t(g)));
        bool          found  = false;
        for (std::size_t r = 0; r < nj && !found; ++r) {
          for (std::size_t l = 0; l < ni && !found; ++l) {
            for (auto const& s : all) {
              Element const sp = base->multiply(s, up(p[r][l]));
              for (auto const& s2 : all) {
                if (base->multiply(sp, s2) == target) {
                  dec.push_back({s, r, l, s2});
                  found = true;
                  break;
                }
              }
              if (found) {
                break;
              }
            }
          }
        }
        if (!found) {
          throw PreconditionError("rees_matrix: no decomposition of '" + u->names()[g] + "'");
        }
      }
      std::vector<Element> complement;
      for (auto const& x : all) {
        if (adjoin && x == AdjoinIdentity::one()) {
          complement.push_back(x);
        } else if (!ideal.contains(std::size_t(adjoin ? x.parts[0].data[0] : x.data[0]))) {
          complement.push_back(x);
        }
      }
      return rees_matrix_build(v, dec, ni, nj, p, complement, adjoin);
    }

    inline AutomaticStructure build_op(std::string const& op, json const& params, json const& inputs,
                                       std::filesystem::path const& base_dir) {
      auto has = [&](char const* key) { return params.contains(key); };
      // structure argument: named parameter, else the next positional input
      std::size_t next  = 0;
      auto        input = [&](char const* key) {
        if (has(key)) {
          return build_structure(params.at(key), base_dir);
        }
        if (next >= inputs.size()) {
          throw ParseError(op + ": missing input '" + key + "'");
        }
        return build_structure(inputs.at(next++), base_dir);
      };
      auto str = [&](char const* key, std::string const& dflt) { return params.value(key, dflt); };
      auto num = [&](char const* key, std::size_t dflt) { return params.value(key, dflt); };
      auto finite = [&](char const* key) {
        if (!has(key)) {
          throw ParseError(op + ": missing finite semigroup '" + key + "'");
        }
        return finite_from_json(params.at(key));
      };

      if (op == "builtin") {
        return builtin_structure(params.at("name").get<std::string>());
      }
      if (op == "finite") {
        FinitePtr const s = finite("semigroup");
        if (has("generators")) {
          std::vector<std::size_t> gs;
          for (auto const& g : params.at("generators")) {
            gs.push_back(g.is_string() ? s->index_of(g.get<std::string>()) : g.get<std::size_t>());
          }
          return finite_structure(s, gs);
        }
        return finite_structure(s);
      }
      if (op == "free_product") {
        auto l = input("left");
        return free_product_semigroups(l, input("right"));
      }
      if (op == "free_product_monoids") {
        auto l = input("left");
        return free_product_monoids(l, input("right"), str("identity", "e"));
      }
      if (op == "free_product_restrict") {
        return free_product_restrict(input("of"), int(num("factor", 1)));
      }
      if (op == "free_product_monoids_restrict") {
        return free_product_monoids_restrict(input("of"), int(num("factor", 1)));
      }
      if (op == "direct_product_monoids") {
        auto l = input("left");
        return direct_product_monoids(l, input("right"), params.at("e1").get<std::string>(),
                                      params.at("e2").get<std::string>());
      }
      if (op == "direct_product_finite_infinite") {
        return direct_product_finite_infinite(finite("S"), input("T"));
      }
      if (op == "rees_matrix") {
        return rees_over_finite(finite("U"), params.at("I").get<std::size_t>(), params.at("J").get<std::size_t>(),
                                params.at("P"), params.value("adjoin", true));
      }
      if (op == "rees_matrix_converse") {
        return rees_matrix_converse(input("of"), {num("i", 0), num("j", 0)});
      }
      if (op == "bruck_reilly_finite") {
        FinitePtr const t = finite("T");
        std::vector<std::size_t> theta(t->size());
        for (std::size_t i = 0; i < theta.size(); ++i) {
          theta[i] = i;
        }
        if (has("theta")) {
          Endomorphism const e = endomorphism_from_json(params.at("theta"));
          if (e.kind == Endomorphism::Kind::table) {
            theta = e.table;
          } else if (e.kind == Endomorphism::Kind::const_one) {
            theta.assign(t->size(), *t->identity_index());
          } else if (e.kind != Endomorphism::Kind::identity) {
            throw ParseError("bruck_reilly_finite: theta must be a table, identity or const_one");
          }
        }
        return bruck_reilly_finite(t, theta);
      }
      if (op == "bruck_reilly_const_one") {
        return bruck_reilly_const_one(input("T"));
      }
      if (op == "bruck_reilly_identity") {
        return bruck_reilly_identity(input("T"));
      }
      if (op == "bruck_reilly_fgt") {
        AutomaticStructure const t = input("T");
        Endomorphism const       e = has("theta") ? endomorphism_from_json(params.at("theta")) : Endomorphism{};
        if (e.kind != Endomorphism::Kind::const_one) {
          throw ParseError("bruck_reilly_fgt: only theta const_one can be described here");
        }
        FiniteImage img{trivial_monoid(), {*t.model->identity()}, std::vector<std::size_t>(t.alphabet.size(), 0)};
        return bruck_reilly_fgt(t, e, img);
      }
      if (op == "cartesian_power") {
        return cartesian_power_monoid(input("of"), params.at("n").get<std::size_t>(), str("identity", "e"));
      }
      if (op == "wreath") {
        AutomaticStructure const s = input("S");
        FinitePtr const          t = finite("T");
        return wreath_finite_T(cartesian_power_monoid(s, t->size(), str("identity", "e")), t);
      }
      if (op == "rename") {
        AutomaticStructure const s     = input("of");
        std::vector<std::string> names = s.alphabet.names();
        for (auto const& [from, to] : params.at("letters").items()) {
          names.at(s.alphabet.at(from)) = to.get<std::string>();
        }
        return rename_letters(s, names);
      }
      if (op == "uniquify") {
        return uniquify(input("of"));
      }
      if (op == "strip_length_one") {
        return strip_length_one(input("of"), num("search_len", 6));
      }
      throw ParseError("unknown op '" + op + "'");
    }
  }  // namespace detail

  /// Builds from a descriptor object; relative bundle paths resolve against
  /// base_dir.
  inline AutomaticStructure build_descriptor(json const& d, std::filesystem::path const& base_dir = ".") {
    return detail::guarded("descriptor", [&] {
      if (!d.is_object() || !d.contains("op")) {
        throw ParseError("descriptor must be an object with an \"op\"");
      }
      json params = d.value("params", json::object());
      for (auto const& [k, v] : d.items()) {
        if (k != "op" && k != "inputs" && k != "params") {
          params[k] = v;
        }
      }
      return detail::build_op(d.at("op").get<std::string>(), params, d.value("inputs", json::array()), base_dir);
    });
  }

  inline AutomaticStructure build_structure(json const& ref, std::filesystem::path const& base_dir) {
    if (ref.is_string()) {
      std::string const           name = ref.get<std::string>();
      std::filesystem::path const p    = base_dir / name;
      if (std::filesystem::exists(p / "bundle.json")) {
        return load_bundle(p);
      }
      return builtin_structure(name);
    }
    if (ref.is_object() && ref.contains("op")) {
      return build_descriptor(ref, base_dir);
    }
    if (ref.is_object() && ref.contains("table")) {
      return finite_structure(finite_from_json(ref));
    }
    throw ParseError("structure reference must be a name, a bundle path, a Cayley table or a descriptor");
  }

}  // namespace autsem

#endif  // AUTSEM_DESCRIPTOR_HPP
