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

#include "tsc/report.h"

#include "tsc/error.h"

namespace tsc {

PipelineChoice pipeline_from_name(const std::string &s) {
    if (s == "theorem2") {
        return PipelineChoice::Theorem2;
    }
    if (s == "theorem3") {
        return PipelineChoice::Theorem3;
    }
    if (s == "bombin") {
        return PipelineChoice::Bombin;
    }
    if (s == "custom") {
        return PipelineChoice::Custom;
    }
    fail(ErrorCode::BadParams, "unknown pipeline '" + s + "'");
}

std::string pipeline_name(PipelineChoice p) {
    switch (p) {
        case PipelineChoice::Theorem2:
            return "theorem2";
        case PipelineChoice::Theorem3:
            return "theorem3";
        case PipelineChoice::Bombin:
            return "bombin";
        default:
            return "custom";
    }
}

namespace {

TwoColex colex_of(const json &input) {
    if (detect_kind(input) == JsonKind::Colex) {
        return colex_from_json(input);
    }
    auto c = validate_colex(graph_from_json(input));
    if (!c) {
        fail(ErrorCode::NotEdgeColorable, "graph is not a 2-colex");
    }
    return *c;
}

void check(json &checks, bool *ok, const std::string &name, bool value) {
    checks[name] = value;
    if (!value) {
        *ok = false;
    }
}

Hypergraph custom_hypergraph(const json &input, JsonKind kind) {
    Hypergraph h;
    if (kind == JsonKind::Hypergraph) {
        h = hypergraph_from_json(input);
    } else if (kind == JsonKind::Colex) {
        return hypergraph_from_colex(colex_from_json(input));
    } else {
        auto g = graph_from_json(input);
        if (auto c = validate_colex(g)) {
            return hypergraph_from_colex(*c);
        }
        h.num_vertices = g.num_vertices();
        for (auto [u, v] : g.edges()) {
            h.edges.push_back({u, v});
        }
    }
    if (h.color.empty()) {
        auto col = three_edge_color(h);
        if (!col) {
            fail(ErrorCode::NotEdgeColorable, "no proper 3-edge-coloring exists");
        }
        h.color = *col;
    }
    return h;
}

// Spans the cycles whose operator lies in the stabilizer group.
std::vector<BitVec> stabilizer_cycles(const Hypergraph &h, const HypercycleSpace &cs, const SubsystemCode &code) {
    std::vector<BitVec> cols;
    for (const auto &sigma : cs.basis) {
        cols.push_back(cycle_operator(h, sigma).symplectic());
    }
    size_t nz = cols.size();
    for (const auto &z : code.stabilizer.basis()) {
        cols.push_back(z.symplectic());
    }
    size_t len = 2 * (size_t)h.num_vertices;
    std::vector<BitVec> rows(len, BitVec(cols.size()));
    for (size_t c = 0; c < cols.size(); c++) {
        for (int i : cols[c].ones()) {
            rows[i].set(c);
        }
    }
    std::vector<BitVec> out;
    for (const auto &x : gf2_nullspace(rows, cols.size())) {
        BitVec sigma(h.num_edges());
        bool any = false;
        for (int c : x.ones()) {
            if ((size_t)c < nz) {
                sigma ^= cs.basis[c];
                any = true;
            }
        }
        if (any) {
            out.push_back(sigma);
        }
    }
    return out;
}

}  // namespace

BuiltCode build_from_json(const json &input, PipelineChoice pipeline) {
    BuiltCode b;
    b.pipeline = pipeline;
    JsonKind kind = detect_kind(input);
    switch (pipeline) {
        case PipelineChoice::Theorem2:
        case PipelineChoice::Theorem3: {
            if (kind == JsonKind::Hypergraph) {
                fail(ErrorCode::UnknownFormat, "theorem pipelines take a seed graph");
            }
            auto seed = graph_from_json(input);
            b.result = pipeline == PipelineChoice::Theorem2 ? theorem2_pipeline(seed) : theorem3_pipeline(seed);
            b.h = b.result->promotion.h;
            b.cycles = b.result->cycles;
            b.code = b.result->code;
            b.generators = stabilizer_generators(b.h, b.result->canonical);
            return b;
        }
        case PipelineChoice::Bombin: {
            auto c = colex_of(input);
            b.bombin = bombin_check(c);
            b.h = bombin_hypergraph(c);
            break;
        }
        case PipelineChoice::Custom:
            b.h = custom_hypergraph(input, kind);
            break;
    }
    b.cycles = cycle_space(b.h);
    b.code = build_code(b.h, &b.cycles);
    b.code.provenance = pipeline_name(pipeline);
    auto trivial = stabilizer_cycles(b.h, b.cycles, b.code);
    b.cycles = cycle_space(b.h, &trivial);
    auto gens = generic_generators(b.h, b.code);
    auto dg = derived_graph(b.h);
    for (auto &g : gens) {
        try {
            decompose(b.h, dg, g.op);
            b.generators.push_back(std::move(g));
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoValidDecomposition) {
                throw;
            }
            b.unscheduled.push_back(std::move(g));
        }
    }
    return b;
}

json build_report(const BuiltCode &b, int coset_cap, bool *ok) {
    json j = code_to_json(b.code);
    j["pipeline"] = pipeline_name(b.pipeline);
    json checks = json::object();
    for (const auto &[name, v] : b.code.checks) {
        check(checks, ok, name, v);
    }
    check(checks, ok, "hypergraph_valid", validate_H(b.h).all());
    check(checks, ok, "identities", b.code.identities_hold());
    json predicted = json::object();
    if (b.result) {
        const auto &p = b.result->predicted;
        predicted = {{"n", p.n},
                     {"k", p.k},
                     {"r", p.r},
                     {"s", p.s},
                     {"dim_cycle_space", p.dim_cycle_space},
                     {"incidence_rank", p.incidence_rank}};
        check(checks, ok, "predicted_n", p.n == b.code.n);
        check(checks, ok, "predicted_k", p.k == b.code.k);
        check(checks, ok, "predicted_r", p.r == b.code.r);
        check(checks, ok, "predicted_s", p.s == b.code.s);
        check(checks, ok, "predicted_cycle_space", p.dim_cycle_space == b.cycles.dim);
        check(checks, ok, "predicted_incidence_rank", p.incidence_rank == b.cycles.incidence_rank);
        j["chi"] = b.result->chi;
        j["delta"] = b.result->delta;
        j["distinctness"] = distinctness_check(b.h).verdict();
    }
    if (b.bombin) {
        predicted = {{"n", b.bombin->n}, {"k", b.bombin->k}, {"r", b.bombin->r}, {"genus", b.bombin->genus}};
        check(checks, ok, "bombin_n", b.bombin->n == b.code.n);
        check(checks, ok, "bombin_k", b.bombin->k == b.code.k);
        check(checks, ok, "bombin_r", b.bombin->r == b.code.r);
    }
    j["predicted"] = predicted;
    j["dim_cycle_space"] = b.cycles.dim;
    j["incidence_rank"] = b.cycles.incidence_rank;
    try {
        auto d = distance_bound(b.h, b.cycles, coset_cap);
        j["ell"] = d.applicable ? json(d.ell) : json("not applicable");
        j["quotient_dim"] = d.quotient_dim;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::QuotientTooLarge) {
            throw;
        }
        j["ell"] = nullptr;
        j["notes"].push_back(e.what());
    }
    if (auto d = exact_distance(b.code)) {
        j["exact_distance"] = *d;
    }
    j["checks"] = checks;
    return j;
}

json schedule_report(const BuiltCode &b, ScheduleModel model, int trials, uint64_t seed, bool *ok) {
    auto sch = build_schedule(b.h, b.generators, model);
    auto sim = simulate_syndrome(b.h, b.generators, sch, trials, seed);
    json j;
    j["unscheduled"] = b.unscheduled.size();
    if (!b.unscheduled.empty()) {
        j["notes"].push_back(std::to_string(b.unscheduled.size()) +
                             " stabilizer generators have no ordered link decomposition");
    }
    j["schedule"] = schedule_to_json(sch);
    j["simulation"] = simulation_to_json(sim);
    if (sim.agreements != sim.pairs || !sim.idempotent || !sim.direct_agrees) {
        *ok = false;
    }
    return j;
}

json verify_report(const BuiltCode &b, int trials, uint64_t seed, int coset_cap, bool *ok) {
    json j = build_report(b, coset_cap, ok);
    json &checks = j["checks"];
    std::string witness;
    int bad = commutation_violations(b.h, &witness);
    check(checks, ok, "commutation_law", bad == 0);
    if (bad) {
        j["notes"].push_back("commutation law fails for " + witness);
    }
    if (b.result) {
        auto dep = dependency_check(*b.result);
        json rel = dep.relations;
        j["dependencies"] = {{"relations", rel},
                             {"relation_dim", dep.relation_dim},
                             {"expected_relation_dim", dep.expected_relation_dim},
                             {"named_rank", dep.named_rank},
                             {"messages", dep.messages}};
        check(checks, ok, "dependencies", dep.ok());
        auto dist = distinctness_check(b.h);
        bool expect_distinct = b.result->kind == PipelineKind::Theorem3 || b.result->delta == 0;
        check(checks, ok, "distinctness_matches", dist.distinct == expect_distinct);
    }
    j["unscheduled_generators"] = b.unscheduled.size();
    try {
        std::vector<FaceCycles> canonical;
        if (b.result) {
            canonical = b.result->canonical;
        }
        auto lem = nontrivial_cycle_checks(b.h, b.cycles, b.code, canonical, coset_cap);
        j["cosets"] = {{"checked", lem.cosets_checked},
                       {"violations", lem.violations},
                       {"trivial_checked", lem.trivial_checked},
                       {"witnesses", lem.witnesses}};
        check(checks, ok, "nontrivial_cycles", lem.ok());
    } catch (const Error &e) {
        if (e.code() != ErrorCode::QuotientTooLarge) {
            throw;
        }
        j["notes"].push_back(e.what());
    }
    for (auto model : {ScheduleModel::Relaxed, ScheduleModel::Exclusive}) {
        bool sched_ok = true;
        auto s = schedule_report(b, model, trials, seed, &sched_ok);
        int steps = s["schedule"]["time_steps"];
        j["schedules"][model_name(model)] = {{"time_steps", steps},
                                             {"agreement", s["simulation"]["agreement"]},
                                             {"parallel_agreement", s["simulation"]["parallel_agreement"]}};
        check(checks, ok, model_name(model) + "_consistent", sched_ok);
        if (model == ScheduleModel::Relaxed) {
            check(checks, ok, "relaxed_three_rounds", steps == 3);
        } else if (b.result) {
            check(checks, ok, "exclusive_four_steps", steps == 4);
        }
        if (b.code.r > 0) {
            check(checks, ok, model_name(model) + "_gauge_varies", s["simulation"]["gauge_varies"].get<bool>());
        }
    }
    return j;
}

}  // namespace tsc
