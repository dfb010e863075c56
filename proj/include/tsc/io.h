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

#ifndef TSC_IO_H
#define TSC_IO_H

#include <string>

#include "json.hpp"
#include "tsc/code.h"
#include "tsc/colex.h"
#include "tsc/hypergraph.h"
#include "tsc/schedule.h"

namespace tsc {

using json = nlohmann::json;

json graph_to_json(const EmbeddedGraph &g);
EmbeddedGraph graph_from_json(const json &j);

json colex_to_json(const TwoColex &c);
TwoColex colex_from_json(const json &j);

/// Rank-2 edges are numbered first, then rank-3 edges.
json hypergraph_to_json(const Hypergraph &h);
Hypergraph hypergraph_from_json(const json &j);

json code_to_json(const SubsystemCode &c);
json schedule_to_json(const MeasurementSchedule &s);
json simulation_to_json(const SimulationReport &r);

enum class JsonKind { Graph, Colex, Hypergraph };
/// Raises UnknownFormat when the document matches none of the kinds.
JsonKind detect_kind(const json &j);

std::string graph_to_dot(const EmbeddedGraph &g);
std::string colex_to_dot(const TwoColex &c);
std::string hypergraph_to_dot(const Hypergraph &h);

json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace tsc

#endif
