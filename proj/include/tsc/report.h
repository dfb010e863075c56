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

#ifndef TSC_REPORT_H
#define TSC_REPORT_H

#include <optional>
#include <string>

#include "tsc/code.h"
#include "tsc/io.h"
#include "tsc/schedule.h"

namespace tsc {

enum class PipelineChoice { Theorem2, Theorem3, Bombin, Custom };

PipelineChoice pipeline_from_name(const std::string &s);
std::string pipeline_name(PipelineChoice p);

struct BuiltCode {
    PipelineChoice pipeline = PipelineChoice::Theorem2;
    Hypergraph h;
    HypercycleSpace cycles;
    SubsystemCode code;
    std::optional<PipelineResult> result;
    std::optional<BombinPrediction> bombin;
    std::vector<StabilizerGenerator> generators;
    /// Stabilizer generators without an ordered link decomposition (winding loops).
    std::vector<StabilizerGenerator> unscheduled;
};

/// Seeds for the theorem pipelines, colexes (or colorable graphs) for bombin,
/// hypergraphs, colexes or colorable graphs for custom.
BuiltCode build_from_json(const json &input, PipelineChoice pipeline);

/// Each report sets *ok to false when an enabled check fails.
json build_report(const BuiltCode &b, int coset_cap, bool *ok);
json schedule_report(const BuiltCode &b, ScheduleModel model, int trials, uint64_t seed, bool *ok);
json verify_report(const BuiltCode &b, int trials, uint64_t seed, int coset_cap, bool *ok);

}  // namespace tsc

#endif
