// Copyright 2026 The tsc Authors
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

#ifndef TSC_CODE_H
#define TSC_CODE_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsc/colex.h"
#include "tsc/hypergraph.h"
#include "tsc/pauli.h"

namespace tsc {

/// W(sigma): product of the link operators of the edges in sigma.
Pauli cycle_operator(const Hypergraph &h, const BitVec &sigma);

/// Pairs of hyperedges whose link operators commute exactly when the edges
/// share an odd number of vertices. Zero for a valid colored hypergraph.
int commutation_violations(const Hypergraph &h, std::string *witness = nullptr);

/// Link operators of the derived graph, one per derived edge.
std::vector<Pauli> gauge_generators(const Hypergraph &h);

struct SubsystemCode {
    int n = 0;
    int k = 0;
    int r = 0;
    int s = 0;
    int dim_gauge = 0;
    int dim_centralizer = 0;
    PauliSpan gauge;
    PauliSpan stabilizer;
    std::optional<int> distance_bound;
    std::string provenance;
    std::map<std::string, bool> checks;

    bool identities_hold() const;
};

/// Solves (n, k, r, s) from an explicit gauge generating set.
SubsystemCode code_from_gauge(int n, const std::vector<Pauli> &generators, const std::string &provenance = "");

/// Gauge group of the derived graph, cross-checked against the centralizer
/// of the cycle operators. Raises GaugeMismatch when the two differ.
SubsystemCode build_code(const Hypergraph &h, const HypercycleSpace *cs = nullptr);

struct Prediction {
    int n = 0;
    int k = 0;
    int r = 0;
    int s = 0;
    int dim_cycle_space = 0;
    int incidence_rank = 0;
};

struct PipelineResult {
    PipelineKind kind = PipelineKind::None;
    EmbeddedGraph seed;
    ConstructionA construction;
    Promotion promotion;
    HypercycleSpace cycles;
    std::vector<FaceCycles> canonical;
    SubsystemCode code;
    Prediction predicted;
    int chi = 0;
    int delta = 0;
    /// Side of every seed face in the bipartition of the dual, when it exists.
    std::optional<std::vector<int>> dual_sides;
};

PipelineResult theorem2_pipeline(const EmbeddedGraph &seed);
PipelineResult theorem3_pipeline(const EmbeddedGraph &seed);

struct BombinPrediction {
    int n = 0;
    int k = 0;
    int r = 0;
    int genus = 0;
};

BombinPrediction bombin_check(const TwoColex &c);

struct DistanceBound {
    bool applicable = false;
    int ell = 0;
    int quotient_dim = 0;
};

DistanceBound distance_bound(const Hypergraph &h, const HypercycleSpace &cs, int coset_cap = 20);

struct LemmaReport {
    bool kernel_contained = true;
    long cosets_checked = 0;
    int violations = 0;
    int trivial_checked = 0;
    std::vector<std::string> witnesses;

    bool ok() const {
        return kernel_contained && violations == 0;
    }
};

/// Every nontrivial coset must carry a rank-3 edge and a cycle operator
/// outside the gauge group; every trivial generator must lie in the stabilizer.
LemmaReport nontrivial_cycle_checks(const Hypergraph &h,
                                    const HypercycleSpace &cs,
                                    const SubsystemCode &code,
                                    const std::vector<FaceCycles> &canonical,
                                    int coset_cap = 20);

struct DependencyReport {
    bool bipartite = false;
    int generators = 0;
    int relation_dim = 0;
    int expected_relation_dim = 0;
    int named_rank = 0;
    int expected_s = 0;
    int computed_s = 0;
    std::map<std::string, bool> relations;
    bool pauli_identities = true;
    std::vector<std::string> messages;

    bool ok() const;
};

DependencyReport dependency_check(const PipelineResult &p);

struct DistinctnessReport {
    bool six_valent = false;
    int witness_vertex = -1;
    bool simplified_is_colex = false;
    bool distinct = true;

    std::string verdict() const {
        return distinct ? "distinct from Construction B" : "coincides";
    }
};

DistinctnessReport distinctness_check(const Hypergraph &h);

/// Minimum weight of a dressed logical outside the gauge group; n <= max_n.
std::optional<int> exact_distance(const SubsystemCode &code, int max_n = 16);

}  // namespace tsc

#endif
