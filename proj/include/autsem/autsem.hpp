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
 * Everything: automata, pair relations, element models, automatic
 * structures, constructions and serialization.
 */

#ifndef AUTSEM_AUTSEM_HPP
#define AUTSEM_AUTSEM_HPP

#include "alphabet.hpp"
#include "autostruct.hpp"
#include "constructions/bruck_reilly.hpp"
#include "constructions/direct_product.hpp"
#include "constructions/free_product.hpp"
#include "constructions/rees_index.hpp"
#include "constructions/rees_matrix.hpp"
#include "constructions/wreath.hpp"
#include "descriptor.hpp"
#include "explore.hpp"
#include "fsa.hpp"
#include "gsm.hpp"
#include "io.hpp"
#include "padrel.hpp"
#include "semigroups.hpp"

#endif  // AUTSEM_AUTSEM_HPP
