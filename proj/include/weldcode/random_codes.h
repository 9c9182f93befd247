// Copyright 2026 The Weldcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef WELDCODE_RANDOM_CODES_H
#define WELDCODE_RANDOM_CODES_H

#include <random>

#include "weldcode/css.h"
#include "weldcode/welding.h"

namespace weldcode {

/// Random CSS code with k = 0: random rows for one kind, a basis of their
/// orthogonal complement for the other.
CssCode random_k0_code(std::mt19937_64 &rng, size_t n);

struct WeldInstance {
    CssCode code1;
    CssCode code2;
    QubitIdentification ident;
    WeldType type;
};

/// Random pair of k = 0 codes on at most `max_n` qubits each, rewritten with
/// prepare_weld so that both weld preconditions hold.
WeldInstance random_weld_instance(std::mt19937_64 &rng, size_t max_n = 12);

/// Like random_weld_instance but without prepare_weld, so the preconditions
/// may or may not hold.
WeldInstance random_raw_weld_instance(std::mt19937_64 &rng, size_t max_n = 12);

}  // namespace weldcode

#endif
