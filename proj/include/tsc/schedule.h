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

#ifndef TSC_SCHEDULE_H
#define TSC_SCHEDULE_H

#include <string>
#include <vector>

#include "tsc/code.h"
#include "tsc/hypergraph.h"
#include "tsc/pauli.h"
#include "tsc/tableau.h"

namespace tsc {

enum class ScheduleModel { Relaxed, Exclusive };

std::string model_name(ScheduleModel m);
ScheduleModel model_from_name(const std::string &s);

struct StabilizerGenerator {
    int face = -1;
    int which = 0;
    BitVec sigma;
    Pauli op;
};

/// Canonical face cycles as stabilizer generators.
std::vector<StabilizerGenerator> stabilizer_generators(const Hypergraph &h, const std::vector<FaceCycles> &canonical);

/// Boundary cycles of the rank-2 faces of h, completed to a basis of the
/// stabilizer group with center elements. Completions carry face -1.
std::vector<StabilizerGenerator> generic_generators(const Hypergraph &h, const SubsystemCode &code);

/// Derived edge ids whose link operators multiply to target, grouped by color
/// in the cyclic order r, g, b starting from the first color that satisfies
/// the prefix condition.
std::vector<int> decompose(const Hypergraph &h, const DerivedGraph &dg, const Pauli &target);

struct PrefixCheck {
    bool ok = true;
    int failing_index = -1;
};

PrefixCheck validate_prefixes(const std::vector<Pauli> &ordered);

struct ScheduledLink {
    int edge = -1;
    std::string pauli;
    std::vector<int> stabilizers;
};

struct MeasurementSchedule {
    ScheduleModel model = ScheduleModel::Relaxed;
    int time_steps = 0;
    std::vector<std::vector<ScheduledLink>> rounds;
    std::vector<std::vector<int>> per_stabilizer;
    /// Time step at which each stabilizer's sequence starts; sequences wrap
    /// into the next repetition of the cycle.
    std::vector<int> start_step;
};

MeasurementSchedule build_schedule(const Hypergraph &h,
                                   const std::vector<StabilizerGenerator> &gens,
                                   ScheduleModel model);

/// Link operator of a derived edge.
Pauli derived_link(const DerivedGraph &dg, int id);

struct SimulationReport {
    int trials = 0;
    long pairs = 0;
    long agreements = 0;
    double agreement = 0;
    bool idempotent = true;
    bool direct_agrees = true;
    bool gauge_varies = false;
    /// Fraction of generators recovered when every round is executed in
    /// parallel and each generator is read over its window.
    double parallel_agreement = 0;
    std::vector<std::string> failures;
};

SimulationReport simulate_syndrome(const Hypergraph &h,
                                   const std::vector<StabilizerGenerator> &gens,
                                   const MeasurementSchedule &schedule,
                                   int trials,
                                   uint64_t seed);

/// Raises InconsistentOutcome when any (generator, trial) pair disagreed.
void require_consistent(const SimulationReport &r);

}  // namespace tsc

#endif
