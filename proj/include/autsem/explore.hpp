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
 * Builds an Fsa by breadth-first exploration of an implicitly described
 * state space. States are keyed by small integer vectors.
 */

#ifndef AUTSEM_EXPLORE_HPP
#define AUTSEM_EXPLORE_HPP

#include <unordered_map>
#include <vector>

#include "fsa.hpp"

namespace autsem {

  using Key = std::vector<std::uint32_t>;

  /// Upper bound on explored states before giving up.
  inline constexpr std::size_t kExploreLimit = 4'000'000;

  /// `expand(key, emit)` calls `emit(label, next_key)` for each outgoing move
  /// (label may be kEpsilon); `is_final(key)` decides acceptance.
  template <typename Expand, typename IsFinal>
  Fsa explore(Alphabet const&         alphabet,
              std::vector<Key> const& initial,
              Expand&&                expand,
              IsFinal&&               is_final) {
    std::unordered_map<Key, State, detail::WordHash> ids;
    std::vector<Key>                                 keys;
    auto intern = [&](Key const& k) -> State {
      auto it = ids.find(k);
      if (it != ids.end()) {
        return it->second;
      }
      if (keys.size() >= kExploreLimit) {
        throw Error("automaton construction exceeded "
                    + std::to_string(kExploreLimit) + " states");
      }
      State id = State(keys.size());
      ids.emplace(k, id);
      keys.push_back(k);
      return id;
    };
    std::vector<State> init;
    for (auto const& k : initial) {
      init.push_back(intern(k));
    }
    std::vector<Transition> ts;
    std::vector<State>      finals;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      Key const cur = keys[i];
      if (is_final(cur)) {
        finals.push_back(State(i));
      }
      expand(cur, [&](Symbol label, Key const& next) {
        ts.push_back({State(i), label, intern(next)});
      });
    }
    return Fsa(alphabet, keys.size(), std::move(init), std::move(finals), std::move(ts));
  }

}  // namespace autsem

#endif  // AUTSEM_EXPLORE_HPP
