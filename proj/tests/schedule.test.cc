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

#include "doctest.h"
#include "tsc/error.h"
#include "tsc/fixtures.h"
#include "tsc/schedule.h"

using namespace tsc;

namespace {

// Product of link operators by direct symplectic XOR.
Pauli product_of(const DerivedGraph &dg, const std::vector<int> &ids, size_t n) {
    Pauli acc(n);
    for (int id : ids) {
        auto [a, b] = dg.edges[id];
        Color c = dg.color[id];
        for (int q : {a, b}) {
            if (c != Color::B) {
                acc.x.flip(q);
            }
            if (c != Color::R) {
                acc.z.flip(q);
            }
        }
    }
    return acc;
}

void check_schedule(const Hypergraph &h, const std::vector<StabilizerGenerator> &gens, int relaxed, int exclusive) {
    auto dg = derived_graph(h);
    auto rs = build_schedule(h, gens, ScheduleModel::Relaxed);
    CHECK(rs.time_steps == relaxed);
    for (size_t g = 0; g < gens.size(); g++) {
        CHECK(product_of(dg, rs.per_stabilizer[g], h.num_vertices) == gens[g].op);
    }
    auto es = build_schedule(h, gens, ScheduleModel::Exclusive);
    CHECK(es.time_steps == exclusive);
    for (const auto &round : es.rounds) {
        std::vector<int> hits(h.num_vertices, 0);
        for (const auto &l : round) {
            hits[dg.edges[l.edge].first]++;
            hits[dg.edges[l.edge].second]++;
        }
        CHECK(*std::max_element(hits.begin(), hits.end()) <= 1);
    }
    for (const auto *s : {&rs, &es}) {
        auto rep = simulate_syndrome(h, gens, *s, 20, 11);
        CHECK(rep.agreement == 1.0);
        CHECK(rep.idempotent);
        CHECK(rep.direct_agrees);
        CHECK(rep.gauge_varies);
    }
}

}  // namespace

TEST_CASE("prefix validation") {
    CHECK(validate_prefixes({Pauli::from_string("XX")}).ok);
    auto bad = validate_prefixes({Pauli::from_string("ZZI"), Pauli::from_string("XII"), Pauli::from_string("IIX")});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_index == 1);
}

TEST_CASE("single stabilizer repeats deterministically") {
    Hypergraph h;
    h.num_vertices = 2;
    h.edges = {{0, 1}, {0, 1}};
    h.color = {Color::R, Color::B};
    BitVec s(2);
    s.set(0);
    std::vector<StabilizerGenerator> gens{{0, 1, s, Pauli::from_string("XX")}};
    auto sch = build_schedule(h, gens, ScheduleModel::Relaxed);
    CHECK(sch.time_steps == 1);
    auto rep = simulate_syndrome(h, gens, sch, 10, 1);
    CHECK(rep.agreement == 1.0);
    CHECK_FALSE(rep.gauge_varies == false);
}

TEST_CASE("theorem 2 schedule") {
    auto p = theorem2_pipeline(torus_grid(2, 2));
    auto gens = stabilizer_generators(p.promotion.h, p.canonical);
    check_schedule(p.promotion.h, gens, 3, 4);
}

TEST_CASE("theorem 3 schedule") {
    auto p = theorem3_pipeline(torus_grid(2, 2));
    auto gens = stabilizer_generators(p.promotion.h, p.canonical);
    check_schedule(p.promotion.h, gens, 3, 4);
}

TEST_CASE("honeycomb schedule") {
    auto h = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    std::vector<FaceCycles> faces;
    for (int f = 0; f < (int)h.faces.size(); f++) {
        BitVec s(h.num_edges());
        for (int e : h.faces[f].hedges) {
            s.flip(e);
        }
        faces.push_back({f, s, std::nullopt});
    }
    check_schedule(h, stabilizer_generators(h, faces), 3, 3);
}

TEST_CASE("broken ordering is detected") {
    auto p = theorem2_pipeline(torus_grid(2, 2));
    auto &h = p.promotion.h;
    auto gens = stabilizer_generators(h, p.canonical);
    auto sch = build_schedule(h, gens, ScheduleModel::Relaxed);
    auto dg = derived_graph(h);
    bool some_prefix_fails = false;
    for (size_t g = 0; g < gens.size(); g++) {
        auto &d = sch.per_stabilizer[g];
        std::rotate(d.begin(), d.end() - 1, d.end());
        std::vector<Pauli> ops;
        for (int id : d) {
            ops.push_back(derived_link(dg, id));
        }
        auto pc = validate_prefixes(ops);
        some_prefix_fails |= !pc.ok && pc.failing_index >= 1;
    }
    CHECK(some_prefix_fails);
    auto rep = simulate_syndrome(h, gens, sch, 20, 5);
    CHECK(rep.agreement < 1.0);
    try {
        require_consistent(rep);
        FAIL("expected InconsistentOutcome");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InconsistentOutcome);
    }
}

TEST_CASE("bombin schedule") {
    auto h = bombin_hypergraph(*validate_colex(honeycomb_torus(3, 3)));
    auto code = build_code(h);
    auto gens = generic_generators(h, code);
    CHECK((int)gens.size() == code.s);
    auto sch = build_schedule(h, gens, ScheduleModel::Relaxed);
    CHECK(sch.time_steps == 3);
    auto rep = simulate_syndrome(h, gens, sch, 10, 2);
    CHECK(rep.agreement == 1.0);
}
