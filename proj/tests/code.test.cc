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
#include "tsc/code.h"
#include "tsc/error.h"
#include "tsc/fixtures.h"

using namespace tsc;

namespace {

// Independent count of (n, k, r, s) from explicit formulas on the seed.
struct Expected {
    int n, k, r, s;
};

Expected theorem2_formula(int v, int e, int f, bool bip) {
    int chi = v - e + f;
    int d = bip ? 1 : 0;
    return {6 * e, 1 + d - chi, 4 * e - chi, 2 * v + 2 * f - 1 - d};
}

Expected theorem3_formula(int v, int e, int f, bool bip) {
    int chi = v - e + f;
    int d = bip ? 1 : 0;
    return {10 * e, 1 - chi + d, 6 * e - chi, 2 * (v + e + f) - 1 - d};
}

void check_params(const SubsystemCode &c, Expected x) {
    CHECK(c.n == x.n);
    CHECK(c.k == x.k);
    CHECK(c.r == x.r);
    CHECK(c.s == x.s);
    CHECK(c.identities_hold());
    for (const auto &[name, ok] : c.checks) {
        INFO(name);
        CHECK(ok);
    }
}

}  // namespace

TEST_CASE("theorem 2 pipeline parameters") {
    auto p = theorem2_pipeline(torus_grid(2, 2));
    check_params(p.code, theorem2_formula(4, 8, 4, true));
    CHECK(p.code.n == 48);
    CHECK(p.code.k == 2);
    CHECK(p.code.r == 32);
    CHECK(p.code.s == 14);
    CHECK(p.cycles.dim == 18);
    CHECK(p.cycles.incidence_rank == 46);

    auto q = theorem2_pipeline(torus_grid(3, 3));
    check_params(q.code, theorem2_formula(9, 18, 9, false));
    CHECK(q.delta == 0);
}

TEST_CASE("theorem 3 pipeline parameters") {
    auto p = theorem3_pipeline(torus_grid(2, 2));
    check_params(p.code, theorem3_formula(4, 8, 4, true));
    CHECK(p.cycles.dim == 34);
    CHECK(p.cycles.incidence_rank == 78);
    auto q = theorem3_pipeline(torus_grid(3, 3));
    check_params(q.code, theorem3_formula(9, 18, 9, false));
}

TEST_CASE("dependency relations") {
    for (int m : {2, 3}) {
        auto p2 = theorem2_pipeline(torus_grid(m, m));
        auto d2 = dependency_check(p2);
        for (const auto &msg : d2.messages) {
            MESSAGE(msg);
        }
        CHECK(d2.ok());
        auto p3 = theorem3_pipeline(torus_grid(m, m));
        auto d3 = dependency_check(p3);
        for (const auto &msg : d3.messages) {
            MESSAGE(msg);
        }
        CHECK(d3.ok());
    }
}

TEST_CASE("distance bound and coset checks") {
    auto p = theorem2_pipeline(torus_grid(2, 2));
    auto b = distance_bound(p.promotion.h, p.cycles);
    CHECK(b.applicable);
    CHECK(b.ell >= 1);
    CHECK(b.ell <= 16);
    auto lem = nontrivial_cycle_checks(p.promotion.h, p.cycles, p.code, p.canonical);
    CHECK(lem.ok());
    CHECK(lem.cosets_checked == (1L << b.quotient_dim) - 1);

    auto honey = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    auto hb = distance_bound(honey, cycle_space(honey));
    CHECK_FALSE(hb.applicable);

    try {
        distance_bound(p.promotion.h, p.cycles, 0);
        FAIL("expected QuotientTooLarge");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::QuotientTooLarge);
    }
}

TEST_CASE("bombin parameters") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 6}}) {
        auto c = *validate_colex(honeycomb_torus(m, n));
        auto pred = bombin_check(c);
        auto h = bombin_hypergraph(c);
        auto code = build_code(h);
        CHECK(code.n == pred.n);
        CHECK(code.k == pred.k);
        CHECK(code.r == pred.r);
        CHECK(code.identities_hold());
    }
}

TEST_CASE("exact distance") {
    std::vector<Pauli> g;
    for (const char *s : {"ZZII", "IIZZ", "XIXI", "IXIX"}) {
        g.push_back(Pauli::from_string(s));
    }
    auto bs = code_from_gauge(4, g);
    CHECK(bs.k == 1);
    CHECK(bs.r == 1);
    CHECK(bs.s == 2);
    CHECK(exact_distance(bs) == 2);
    CHECK_FALSE(exact_distance(bs, 3).has_value());
}

TEST_CASE("distinctness") {
    auto p = theorem2_pipeline(torus_grid(2, 2));
    auto d = distinctness_check(p.promotion.h);
    CHECK(d.verdict() == "coincides");
    CHECK(distinctness_check(theorem2_pipeline(torus_grid(3, 3)).promotion.h).distinct);
    auto t3 = distinctness_check(theorem3_pipeline(torus_grid(2, 2)).promotion.h);
    CHECK(t3.distinct);
    CHECK_FALSE(t3.six_valent);
    auto bomb = bombin_hypergraph(*validate_colex(honeycomb_torus(3, 3)));
    auto db = distinctness_check(bomb);
    CHECK(db.six_valent);
    CHECK_FALSE(db.distinct);
}

TEST_CASE("seed degree errors") {
    try {
        theorem2_pipeline(theta_graph());
        FAIL("expected OddDegreeSeed");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OddDegreeSeed);
    }
}
