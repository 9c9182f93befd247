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


#ifndef WELDCODE_WELDING_H
#define WELDCODE_WELDING_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weldcode/css.h"

namespace weldcode {

/// Z-type welds regenerate the Z generators and keep every X generator;
/// X-type welds do the reverse.
enum class WeldType { Z, X };

inline PauliKind regenerated_kind(WeldType t) { return t == WeldType::Z ? PauliKind::Z : PauliKind::X; }
WeldType parse_weld_type(const std::string &s);

struct QubitIdentification {
    /// (qubit of code 1, qubit of code 2)
    std::vector<std::pair<size_t, size_t>> pairs;

    /// Reads lines "i j"; '#' starts a comment.
    static QubitIdentification parse(const std::string &text);
    std::string str() const;
};

struct WeldLayout {
    size_t N = 0;
    std::vector<size_t> embed1;
    std::vector<size_t> embed2;
    QubitSet shared;
    QubitSet support1;
    QubitSet support2;
};

/// Canonical layout: code-1 qubits keep their indices, unshared code-2 qubits
/// are appended in code-2 order.
WeldLayout make_layout(size_t n1, size_t n2, const QubitIdentification &ident);

struct Contraction {
    WeldLayout layout;
    GeneratingSet gens1;
    GeneratingSet gens2;
};

Contraction contract(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident);

GeneratingSet embed_gens(const GeneratingSet &g, const std::vector<size_t> &map, size_t N);

struct MatchReport {
    bool ok = true;
    /// Side (1 or 2) and index of an unmatched weld-touching generator.
    int side = 0;
    size_t index = 0;
    std::optional<PauliOperator> witness;
};

/// Every weld-touching generator of the regenerated kind on either side has a
/// partner on the other side with the same restriction to `shared`.
MatchReport check_well_matched(const GeneratingSet &r1, const GeneratingSet &r2, const QubitSet &shared,
                               WeldType type);

struct IndependenceReport {
    bool ok = true;
    /// Indices (into the generators of the regenerated kind) of a linearly
    /// independent subset whose product is the identity on the weld.
    std::vector<size_t> dependent_subset;
};

IndependenceReport check_weld_independence(const GeneratingSet &r, const QubitSet &shared, WeldType type);

/// Same group, but every generator whose weld restriction depends on earlier
/// weld-touching generators is multiplied by them (and dropped if that gives
/// the identity).
GeneratingSet make_weld_independent(const GeneratingSet &r, const QubitSet &shared, WeldType type);

/// Same group as `target`, with weld-touching generators chosen to match the
/// weld restrictions of `reference` one for one. Throws
/// WeldPreconditionError when the restrictions do not span the same space.
GeneratingSet align_weld_generators(const GeneratingSet &reference, const GeneratingSet &target,
                                    const QubitSet &shared, WeldType type);

/// Rewrites both inputs (same groups) so that the weld preconditions hold:
/// code 1 is made weld-independent and code 2 is aligned to it.
std::pair<CssCode, CssCode> prepare_weld(const CssCode &code1, const CssCode &code2,
                                         const QubitIdentification &ident, WeldType type);

struct WeldOptions {
    /// Pair equal-restriction groups in reverse order on the code-2 side.
    bool reverse_pairing = false;
};

/// Decomposition of one generator of the regenerated kind in a weld output.
struct WeldTraceEntry {
    size_t output_index;
    /// Source generators (indices into each input's list of that kind).
    std::optional<size_t> gen1;
    std::optional<size_t> gen2;
    PauliOperator theta1;
    PauliOperator theta2;
    PauliOperator w;
};

struct WeldResult {
    CssCode code;
    WeldLayout layout;
    WeldType type;
    std::vector<WeldTraceEntry> trace;
    /// Inputs re-expressed on the contracted qubits.
    GeneratingSet gens1;
    GeneratingSet gens2;
};

/// Matched-pair weld. Inputs must have k=0 and satisfy the well-matched and
/// weld-independence checks.
WeldResult weld(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident, WeldType type,
                const WeldOptions &options = {});

/// Keeps every generator of the other kind and takes the full commuting
/// space for the regenerated kind.
CssCode weld_oracle(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident, WeldType type);

const std::vector<WeldTraceEntry> &welded_operator_trace(const WeldResult &result);

struct PartnerCertificate {
    bool ok = false;
    std::vector<size_t> anticommuting;
    std::vector<size_t> expected;
};

/// `t` (on the side's own qubits) anticommutes with generator `gen_index` of
/// that side's regenerated kind and with nothing else there. Checks that after
/// the weld it anticommutes with exactly the welded generators built from it.
PartnerCertificate certify_partner(const WeldResult &result, int side, size_t gen_index, const PauliOperator &t);

/// Identifying qubits inside one code is not supported.
[[noreturn]] void self_weld(const CssCode &code, const QubitIdentification &ident, WeldType type);

}  // namespace weldcode

#endif
