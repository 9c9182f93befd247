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


#ifndef WELDCODE_CSS_H
#define WELDCODE_CSS_H

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weldcode/pauli.h"
#include "weldcode/regions.h"

namespace weldcode {

struct GeneratingSet {
    size_t n = 0;
    std::vector<PauliOperator> x_gens;
    std::vector<PauliOperator> z_gens;

    std::vector<PauliOperator> &of(PauliKind k) { return k == PauliKind::X ? x_gens : z_gens; }
    const std::vector<PauliOperator> &of(PauliKind k) const { return k == PauliKind::X ? x_gens : z_gens; }
    /// Bit rows of the generators of kind k.
    std::vector<BitVector> rows(PauliKind k) const;

    bool operator==(const GeneratingSet &other) const = default;
};

struct LogicalClass {
    PauliOperator z_rep;
    PauliOperator x_rep;

    const PauliOperator &rep(PauliKind k) const { return k == PauliKind::X ? x_rep : z_rep; }
    bool operator==(const LogicalClass &other) const = default;
};

struct Syndrome {
    std::vector<size_t> violated_x;
    std::vector<size_t> violated_z;

    size_t weight() const { return violated_x.size() + violated_z.size(); }
    bool operator==(const Syndrome &other) const = default;
};

struct GeneratorRef {
    PauliKind kind;
    size_t index;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    /// Offending generators; a single entry for a malformed operator, two for
    /// an anticommuting pair.
    std::vector<GeneratorRef> offenders;
};

ValidationReport validate(const GeneratingSet &gens);

/// Stabilizer code in standard CSS form with optional promoted logical classes.
/// Immutable; construction validates the generators and logicals.
class CssCode {
   public:
    CssCode() = default;
    explicit CssCode(GeneratingSet gens, std::vector<LogicalClass> logicals = {},
                     std::shared_ptr<const RegionMetadata> regions = nullptr);

    size_t n() const { return gens_.n; }
    const GeneratingSet &gens() const { return gens_; }
    const std::vector<PauliOperator> &gens(PauliKind k) const { return gens_.of(k); }
    const std::vector<LogicalClass> &logicals() const { return logicals_; }
    /// Null unless a builder attached region metadata.
    const RegionMetadata *regions() const { return regions_.get(); }
    std::shared_ptr<const RegionMetadata> regions_ptr() const { return regions_; }

    CssCode with_regions(std::shared_ptr<const RegionMetadata> regions) const;

   private:
    GeneratingSet gens_;
    std::vector<LogicalClass> logicals_;
    std::shared_ptr<const RegionMetadata> regions_;
};

/// Dimension of the generated group (X block plus Z block).
size_t rank_gf2(const GeneratingSet &gens);
size_t rank_gf2(const GeneratingSet &gens, PauliKind k);

/// n - rank. Promoted logicals are not generators, so they count as encoded.
size_t encoded_qubits(const CssCode &code);
size_t encoded_qubits(const GeneratingSet &gens);

bool groups_equal(const GeneratingSet &a, const GeneratingSet &b);

/// True when the pure operator p lies in the group generated by `gens`.
bool in_group(const GeneratingSet &gens, const PauliOperator &p);

Syndrome syndrome(const CssCode &code, const PauliOperator &error);

/// Removes the indexed generator and installs it as one side of a new
/// logical class; the other side comes from anticommuting_partner.
CssCode promote_to_logical(const CssCode &code, GeneratorRef ref);
/// Same, with the partner given explicitly (checked).
CssCode promote_to_logical(const CssCode &code, GeneratorRef ref, const PauliOperator &partner);

/// Inverse of promotion: appends the `kind` representative of logical class
/// `index` to the generators and drops the class.
CssCode fold_logical(const CssCode &code, size_t index, PauliKind kind);

/// A pure operator of the opposite type that anticommutes with `logical_rep`
/// and commutes with every generator and every other logical representative.
PauliOperator anticommuting_partner(const CssCode &code, const PauliOperator &logical_rep);

struct DistanceResult {
    size_t d_x;
    size_t d_z;
    size_t d() const { return std::min(d_x, d_z); }
};

/// Exhaustive per-type distance. Refuses (FeasibilityError) when a
/// same-type stabilizer group has rank above `max_rank`.
DistanceResult distance(const CssCode &code, size_t max_rank = 24);

/// Renames qubit q to perm[q].
CssCode relabel(const CssCode &code, const std::vector<size_t> &perm);
FlatRegionGraph relabel(const FlatRegionGraph &g, const std::vector<size_t> &perm);

/// Replaces the generating set by `gens`, which must generate the same group.
CssCode rebase_generators(const CssCode &code, GeneratingSet gens,
                          std::shared_ptr<const RegionMetadata> regions = nullptr);

}  // namespace weldcode

#endif
