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
 * JSON serialization: automata, pair relations, gsms, Cayley tables,
 * element models and structure bundles (a directory with bundle.json and
 * one file per automaton).
 */

#ifndef AUTSEM_IO_HPP
#define AUTSEM_IO_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "autostruct.hpp"
#include "gsm.hpp"
#include "json.hpp"
#include "padrel.hpp"
#include "semigroups.hpp"

namespace autsem {

  using nlohmann::json;

  namespace detail {
    template <typename F>
    auto guarded(std::string const& what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw ParseError(what + ": " + e.what());
      }
    }

    inline std::vector<std::string> string_list(json const& j) {
      std::vector<std::string> out;
      for (auto const& x : j) {
        out.push_back(x.get<std::string>());
      }
      return out;
    }
  }  // namespace detail

  /// Reads a JSON file; parse errors carry the file name and position.
  inline json read_json(std::filesystem::path const& p) {
    std::ifstream in(p);
    if (!in) {
      throw ParseError("cannot open '" + p.string() + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(p.string() + ": " + e.what());
    }
  }

  inline void write_json(std::filesystem::path const& p, json const& j) {
    std::ofstream out(p);
    if (!out) {
      throw Error("cannot write '" + p.string() + "'");
    }
    out << j.dump(1) << '\n';
  }

  ////////////////////////////////////////////////////////////////////////
  // Automata
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(Fsa const& x) {
    json ts = json::array();
    for (auto const& t : x.transitions()) {
      ts.push_back({t.from, t.label == kEpsilon ? std::string() : x.alphabet().name(t.label), t.to});
    }
    return {{"alphabet", x.alphabet().names()},
            {"states", x.states()},
            {"initial", x.initial()},
            {"finals", x.finals()},
            {"transitions", ts}};
  }

  /// Automaton over its own listed alphabet.
  inline Fsa fsa_from_json(json const& j) {
    return detail::guarded("automaton JSON", [&] {
      Alphabet const          a(detail::string_list(j.at("alphabet")));
      std::size_t const       n = j.at("states").get<std::size_t>();
      std::vector<Transition> ts;
      for (auto const& t : j.at("transitions")) {
        if (!t.is_array() || t.size() != 3) {
          throw ParseError("automaton JSON: transitions are [src, letter, dst]");
        }
        std::string const l = t[1].get<std::string>();
        ts.push_back({t[0].get<State>(), l.empty() ? kEpsilon : a.at(l), t[2].get<State>()});
      }
      for (auto const& t : ts) {
        if (t.from >= n || t.to >= n) {
          throw ParseError("automaton JSON: transition state out of range");
        }
      }
      auto states = [&](char const* key) {
        auto v = j.at(key).get<std::vector<State>>();
        for (auto s : v) {
          if (s >= n) {
            throw ParseError(std::string("automaton JSON: ") + key + " state out of range");
          }
        }
        return v;
      };
      return Fsa(a, n, states("initial"), states("finals"), std::move(ts));
    });
  }

  /// Automaton re-expressed over `a`, matching letters by name.
  inline Fsa fsa_from_json(json const& j, Alphabet const& a) {
    return embed(fsa_from_json(j), a);
  }

  /// Automaton JSON over the pair alphabet ("x|y", "$|y", "x|$").
  inline json to_json(PairRelation const& r) {
    return to_json(r.fsa());
  }

  inline PairRelation relation_from_json(json const& j, Alphabet const& base) {
    return PairRelation(base, fsa_from_json(j, base.padded()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Gsm
  ////////////////////////////////////////////////////////////////////////

  /// Also records the two alphabets, which the edge list alone may not
  /// determine.
  inline json to_json(Gsm const& g) {
    json es = json::array();
    for (auto const& e : g.edges()) {
      es.push_back({e.from, g.input().name(e.input), e.to, g.output().format(e.output)});
    }
    return {{"states", g.states()},
            {"initial", g.initial()},
            {"terminals", g.terminals()},
            {"edges", es},
            {"input", g.input().names()},
            {"output", g.output().names()}};
  }

  /// Missing "input"/"output" alphabets are taken from the edges in order of
  /// first use.
  inline Gsm gsm_from_json(json const& j) {
    return detail::guarded("gsm JSON", [&] {
      std::vector<std::string> in, out;
      if (j.contains("input")) {
        in = detail::string_list(j.at("input"));
      }
      if (j.contains("output")) {
        out = detail::string_list(j.at("output"));
      }
      auto note = [](std::vector<std::string>& v, std::string const& x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) {
          v.push_back(x);
        }
      };
      for (auto const& e : j.at("edges")) {
        if (!j.contains("input")) {
          note(in, e.at(1).get<std::string>());
        }
        if (!j.contains("output")) {
          std::istringstream words(e.at(3).get<std::string>());
          for (std::string x; words >> x;) {
            note(out, x);
          }
        }
      }
      Alphabet const       a(in), b(out);
      std::vector<GsmEdge> edges;
      for (auto const& e : j.at("edges")) {
        edges.push_back({e.at(0).get<State>(), a.at(e.at(1).get<std::string>()), e.at(2).get<State>(),
                         b.parse(e.at(3).get<std::string>())});
      }
      return Gsm(a, b, j.at("states").get<std::size_t>(), j.value("initial", State(0)),
                 j.at("terminals").get<std::vector<State>>(), std::move(edges));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements and models
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(Element const& e) {
    json parts = json::array();
    for (auto const& p : e.parts) {
      parts.push_back(to_json(p));
    }
    return {{"data", e.data}, {"parts", parts}};
  }

  inline Element element_from_json(json const& j) {
    return detail::guarded("element JSON", [&] {
      Element e;
      e.data = j.at("data").get<std::vector<std::int64_t>>();
      for (auto const& p : j.at("parts")) {
        e.parts.push_back(element_from_json(p));
      }
      return e;
    });
  }

  /// Cyclic group of order n with elements e, a, a2, ...
  inline FinitePtr named_cyclic(std::size_t n) {
    std::vector<std::string> names{"e"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(i == 1 ? "a" : "a" + std::to_string(i));
    }
    return std::make_shared<FiniteSemigroup>(cyclic_group(n)->table(), names, 0);
  }

  /// A finite semigroup from a Cayley JSON object or one of the names
  /// "trivial", "z<n>", "null2", "left_zero<n>", "right_zero<n>".
  inline FinitePtr finite_from_json(json const& j) {
    return detail::guarded("Cayley JSON", [&]() -> FinitePtr {
      if (j.is_string()) {
        std::string const n = j.get<std::string>();
        auto suffix = [&](std::string const& prefix) -> std::optional<std::size_t> {
          if (n.rfind(prefix, 0) != 0 || n.size() == prefix.size()
              || n.find_first_not_of("0123456789", prefix.size()) != std::string::npos) {
            return std::nullopt;
          }
          std::size_t const k = std::stoul(n.substr(prefix.size()));
          if (k == 0 || k > 4096) {
            throw ParseError("finite semigroup size out of range in '" + n + "'");
          }
          return k;
        };
        if (n == "trivial") {
          return trivial_monoid();
        }
        if (n == "null2") {
          return null_semigroup2();
        }
        if (auto k = suffix("left_zero")) {
          return left_zero_semigroup(*k);
        }
        if (auto k = suffix("right_zero")) {
          return right_zero_semigroup(*k);
        }
        if (auto k = suffix("z")) {
          return named_cyclic(*k);
        }
        throw ParseError("unknown finite semigroup '" + n + "'");
      }
      std::vector<std::string> names;
      if (j.contains("elements")) {
        names = detail::string_list(j.at("elements"));
      }
      std::optional<std::size_t> id;
      if (j.contains("identity") && !j.at("identity").is_null()) {
        id = j.at("identity").get<std::size_t>();
      }
      return std::make_shared<FiniteSemigroup>(j.at("table").get<std::vector<std::vector<std::size_t>>>(),
                                               names, id);
    });
  }

  inline Endomorphism endomorphism_from_json(json const& j) {
    return detail::guarded("endomorphism JSON", [&] {
      Endomorphism t;
      if (j.is_array()) {
        t.kind  = Endomorphism::Kind::table;
        t.table = j.get<std::vector<std::size_t>>();
        return t;
      }
      std::string const kind = j.value("kind", j.contains("map") ? "table" : "identity");
      if (kind == "identity") {
        t.kind = Endomorphism::Kind::identity;
      } else if (kind == "const_one") {
        t.kind = Endomorphism::Kind::const_one;
      } else if (kind == "table") {
        t.kind  = Endomorphism::Kind::table;
        t.table = j.at("map").get<std::vector<std::size_t>>();
      } else if (kind == "power") {
        t.kind  = Endomorphism::Kind::power;
        t.power = j.at("power").get<std::int64_t>();
      } else {
        throw ParseError("unknown endomorphism kind '" + kind + "'");
      }
      return t;
    });
  }

  /// Rebuilds an element model from Semigroup::describe().
  inline SemigroupPtr model_from_json(json const& j) {
    return detail::guarded("model JSON", [&]() -> SemigroupPtr {
      std::string const kind = j.at("kind").get<std::string>();
      auto              sub  = [&](char const* key) { return model_from_json(j.at(key)); };
      auto              pair = [&](std::size_t i) { return model_from_json(j.at("factors").at(i)); };
      if (kind == "cayley") {
        return finite_from_json(j);
      }
      if (kind == "builtin") {
        std::string const n = j.at("name").get<std::string>();
        if (n == "free_monogenic" || n == "free_monogenic_monoid") {
          return std::make_shared<FreeMonogenic>(n == "free_monogenic_monoid");
        }
        if (n == "int_z") {
          return std::make_shared<Integers>();
        }
        throw ParseError("unknown built-in model '" + n + "'");
      }
      if (kind == "adjoin_identity") {
        return std::make_shared<AdjoinIdentity>(sub("base"));
      }
      if (kind == "free_product") {
        return std::make_shared<FreeProduct>(pair(0), pair(1), j.at("monoid").get<bool>());
      }
      if (kind == "direct_product") {
        return std::make_shared<DirectProduct>(pair(0), pair(1));
      }
      if (kind == "power") {
        return std::make_shared<CartesianPower>(sub("base"), j.at("n").get<std::size_t>());
      }
      if (kind == "rees") {
        std::vector<std::vector<Element>> p;
        for (auto const& row : j.at("P")) {
          p.emplace_back();
          for (auto const& x : row) {
            p.back().push_back(element_from_json(x));
          }
        }
        return std::make_shared<ReesMatrix>(sub("U"), j.at("I").get<std::size_t>(), j.at("J").get<std::size_t>(),
                                            std::move(p));
      }
      if (kind == "bruck_reilly") {
        return std::make_shared<BruckReilly>(sub("T"), endomorphism_from_json(j.at("theta")));
      }
      if (kind == "wreath") {
        auto t = std::dynamic_pointer_cast<FiniteSemigroup const>(sub("T"));
        if (!t) {
          throw ParseError("wreath model needs a Cayley table for T");
        }
        return std::make_shared<Wreath>(sub("S"), t);
      }
      throw ParseError("unknown model kind '" + kind + "'");
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure bundles
  ////////////////////////////////////////////////////////////////////////

  /// Writes bundle.json, L.json, equality.json and mult_<i>.json into dir
  /// (created if needed).
  inline void save_bundle(AutomaticStructure const& s, std::filesystem::path const& dir) {
    std::filesystem::create_directories(dir);
    json psi = json::object(), ms = json::object(), reps = json::object();
    for (Symbol x = 0; x < s.alphabet.size(); ++x) {
      std::string const& n    = s.alphabet.name(x);
      std::string const  file = "mult_" + std::to_string(x) + ".json";
      psi[n]                  = to_json(s.images[x]);
      ms[n]                   = file;
      write_json(dir / file, to_json(s.multipliers[x]));
      if (x < s.gen_reps.size()) {
        reps[n] = s.alphabet.format(s.gen_reps[x]);
      }
    }
    write_json(dir / "L.json", to_json(s.language));
    write_json(dir / "equality.json", to_json(s.equality));
    json b = {{"alphabet", s.alphabet.names()},
              {"model", s.model->describe()},
              {"psi", psi},
              {"L", "L.json"},
              {"multipliers", ms},
              {"equality", "equality.json"},
              {"unique", s.unique},
              {"gen_reps", reps}};
    if (!s.tags.empty()) {
      b["tags"] = s.tags;
    }
    write_json(dir / "bundle.json", b);
  }

  /// Loads a bundle written by save_bundle; the model is rebuilt from its
  /// description, so the result can be validated.
  inline AutomaticStructure load_bundle(std::filesystem::path const& dir) {
    json const b = read_json(dir / "bundle.json");
    return detail::guarded("bundle " + dir.string(), [&] {
      Alphabet const            a(detail::string_list(b.at("alphabet")));
      SemigroupPtr const        model = model_from_json(b.at("model"));
      std::vector<Element>      images;
      std::vector<PairRelation> ms;
      std::vector<Word>         reps;
      for (auto const& n : a.names()) {
        images.push_back(element_from_json(b.at("psi").at(n)));
        ms.push_back(relation_from_json(read_json(dir / b.at("multipliers").at(n).get<std::string>()), a));
        if (b.contains("gen_reps") && b.at("gen_reps").contains(n)) {
          reps.push_back(a.parse(b.at("gen_reps").at(n).get<std::string>()));
        }
      }
      if (!reps.empty() && reps.size() != a.size()) {
        throw ParseError("bundle " + dir.string() + ": gen_reps must cover every letter or none");
      }
      Fsa const          lang = fsa_from_json(read_json(dir / b.at("L").get<std::string>()), a);
      PairRelation const eq   = relation_from_json(read_json(dir / b.at("equality").get<std::string>()), a);
      AutomaticStructure s = make_structure(a, model, images, lang, ms, eq, b.value("unique", false), reps);
      if (b.contains("tags")) {
        s.tags = b.at("tags").get<std::vector<int>>();
      }
      return s;
    });
  }

}  // namespace autsem

#endif  // AUTSEM_IO_HPP
