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

// autsem: build, verify and query automatic structures.
//
// Exit codes: 0 success or true, 1 semantic failure or false, 2 usage or
// parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "autsem/descriptor.hpp"
#include "autsem/io.hpp"

namespace {
  using namespace autsem;
  namespace fs = std::filesystem;

  constexpr int kFalse = 1;
  constexpr int kUsage = 2;

  std::string show(Alphabet const& a, Word const& w) {
    return w.empty() ? "<empty>" : a.format(w);
  }

  int cmd_build(fs::path const& desc, fs::path const& out) {
    json const               d = read_json(desc);
    AutomaticStructure const s = build_descriptor(d, desc.parent_path().empty() ? fs::path(".") : desc.parent_path());
    save_bundle(s, out);
    std::cout << "model: " << s.model->name() << '\n';
    std::cout << "alphabet: " << s.alphabet.size() << " letters:";
    for (auto const& n : s.alphabet.names()) {
      std::cout << ' ' << n;
    }
    std::cout << '\n' << "L: " << s.language.states() << " states\n";
    std::cout << "equality: " << s.equality.fsa().states() << " states\n";
    for (Symbol x = 0; x < s.alphabet.size(); ++x) {
      std::cout << "L_" << s.alphabet.name(x) << ": " << s.multipliers[x].fsa().states() << " states\n";
    }
    std::cout << "written to " << out.string() << '\n';
    return 0;
  }

  int cmd_verify(fs::path const& dir, std::size_t max_len) {
    AutomaticStructure const s = load_bundle(dir);
    if (max_len == 0) {
      std::cout << "max-len 0: nothing to check; ok\n";
      return 0;
    }
    ValidateOptions opts;
    opts.max_len    = max_len;
    opts.max_listed = 20;
    ValidationReport const r = validate(s, opts);
    std::cout << r.summary() << '\n';
    for (auto const& v : r.violations) {
      std::cout << "  " << v << '\n';
    }
    if (!r.ok()) {
      return kFalse;
    }
    std::cout << "ok\n";
    return 0;
  }

  int cmd_eq(fs::path const& dir, std::string const& w1, std::string const& w2) {
    AutomaticStructure const s = load_bundle(dir);
    Word const               u = s.alphabet.parse(w1), v = s.alphabet.parse(w2);
    bool const               eq = word_equal(s, u, v);
    std::cout << (eq ? "true" : "false") << '\n';
    return eq ? 0 : kFalse;
  }

  int cmd_nf(fs::path const& dir, std::string const& w) {
    AutomaticStructure const s = load_bundle(dir);
    std::cout << show(s.alphabet, normal_form(s, s.alphabet.parse(w))) << '\n';
    return 0;
  }

  int cmd_enum(fs::path const& dir, std::size_t n) {
    AutomaticStructure const s = load_bundle(dir);
    for (auto const& w : enumerate(s.language, n)) {
      std::cout << show(s.alphabet, w) << '\n';
    }
    return 0;
  }

  int cmd_dot(fs::path const& file) {
    std::cout << to_dot(fsa_from_json(read_json(file)));
    return 0;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autsem: automatic structures for semigroups"};
  app.require_subcommand(1);

  std::string desc, out, bundle, w1, w2, file;
  std::size_t max_len = 6, n = 0;

  auto* build = app.add_subcommand("build", "Run a construction descriptor and write a structure bundle");
  build->add_option("descriptor", desc, "Descriptor JSON file")->required();
  build->add_option("-o,--out", out, "Output bundle directory")->required();

  auto* verify = app.add_subcommand("verify", "Check a bundle against its element model");
  verify->add_option("bundle", bundle, "Bundle directory")->required();
  verify->add_option("--max-len", max_len, "Largest word length checked");

  auto* eq = app.add_subcommand("eq", "Do two words represent the same element");
  eq->add_option("bundle", bundle, "Bundle directory")->required();
  eq->add_option("w1", w1, "First word (space separated letters)")->required();
  eq->add_option("w2", w2, "Second word")->required();

  auto* nf = app.add_subcommand("nf", "Shortlex-least word of L for a word");
  nf->add_option("bundle", bundle, "Bundle directory")->required();
  nf->add_option("word", w1, "Word (space separated letters)")->required();

  auto* en = app.add_subcommand("enum", "List the words of L up to a length");
  en->add_option("bundle", bundle, "Bundle directory")->required();
  en->add_option("N", n, "Largest length")->required();

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of an automaton JSON file");
  dot->add_option("automaton", file, "Automaton JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      return cmd_build(desc, out);
    }
    if (*verify) {
      return cmd_verify(bundle, max_len);
    }
    if (*eq) {
      return cmd_eq(bundle, w1, w2);
    }
    if (*nf) {
      return cmd_nf(bundle, w1);
    }
    if (*en) {
      return cmd_enum(bundle, n);
    }
    if (*dot) {
      return cmd_dot(file);
    }
  } catch (autsem::ParseError const& e) {
    std::cerr << "autsem: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "autsem: " << e.what() << '\n';
    return kFalse;
  }
  return kUsage;
}
