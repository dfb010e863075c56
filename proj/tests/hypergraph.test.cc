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
#include "tsc/hypergraph.h"

using namespace tsc;

namespace {

std::vector<int> faces_of_kind(const TwoColex &c, FaceKind k) {
    std::vector<int> out;
    for (int f = 0; f < c.graph.num_faces(); f++) {
        if ((*c.parentage)[f].kind == k) {
            out.push_back(f);
        }
    }
    return out;
}

Promotion theorem2_promotion(const EmbeddedGraph &seed) {
    auto a = construct_A_with_map(seed);
    return promote(a.colex, faces_of_kind(a.colex, FaceKind::VFace), Color::R);
}

// Parity scan written independently of is_hypercycle.
bool even_everywhere(const Hypergraph &h, const BitVec &s) {
    std::vector<int> deg(h.num_vertices, 0);
    for (int e = 0; e < h.num_edges(); e++) {
        if (s.get(e)) {
            for (int v : h.edges[e]) {
                deg[v]++;
            }
        }
    }
    for (int d : deg) {
        if (d % 2) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("promotion counts on the 2x2 torus grid") {
    auto p = theorem2_promotion(torus_grid(2, 2));
    CHECK(p.h.num_vertices == 48);
    CHECK(p.h.num_rank3() == 16);
    CHECK(p.h.num_edges() - p.h.num_rank3() == 48);
    auto rep = validate_H(p.h);
    CHECK(rep.all());
    auto dg = derived_graph(p.h);
    CHECK(dg.edges.size() == 96);
    REQUIRE(dg.embedding.has_value());
    CHECK(dg.embedding->euler_characteristic() == 0);
}

TEST_CASE("promote errors and identity") {
    auto a = construct_A_with_map(torus_grid(2, 2));
    auto e_faces = faces_of_kind(a.colex, FaceKind::EFace);
    try {
        promote(a.colex, {e_faces[0]}, Color::R);
        FAIL("expected BadFaceSize");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::BadFaceSize);
    }
    auto v_faces = faces_of_kind(a.colex, FaceKind::VFace);
    auto f_faces = faces_of_kind(a.colex, FaceKind::FFace);
    try {
        promote(a.colex, {v_faces[0], f_faces[0]}, Color::G);
        FAIL("expected MixedColorF");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::MixedColorF);
    }
    try {
        promote(a.colex, {v_faces[0]}, Color::B);
        FAIL("expected BadPromoteColor");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::BadPromoteColor);
    }
    auto id = promote(a.colex, {}, Color::R);
    CHECK(id.h.num_rank3() == 0);
    CHECK(id.h.num_vertices == a.colex.graph.num_vertices());
    CHECK(id.h.num_edges() == a.colex.graph.num_edges());
}

TEST_CASE("validate_H witnesses") {
    Hypergraph h;
    h.num_vertices = 5;
    h.edges = {{0, 1, 2}, {2, 3, 4}};
    auto rep = validate_H(h);
    CHECK_FALSE(rep.h4);
    CHECK_FALSE(rep.h2);
    bool found = false;
    for (const auto &w : rep.witnesses) {
        found |= w.find("H4: rank-3 edges 0 and 1") != std::string::npos;
    }
    CHECK(found);
    auto honey = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    CHECK(validate_H(honey).all());
}

TEST_CASE("three-edge-coloring") {
    Hypergraph pet;
    auto pg = petersen_graph();
    pet.num_vertices = pg.num_vertices();
    for (auto [u, v] : pg.edges()) {
        pet.edges.push_back({u, v});
    }
    CHECK_FALSE(three_edge_color(pet).has_value());

    auto honey = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    honey.color.clear();
    auto col = three_edge_color(honey);
    REQUIRE(col.has_value());
    honey.color = *col;
    CHECK(validate_H(honey).all());

    auto p = theorem2_promotion(torus_grid(2, 2));
    p.h.color.clear();
    auto c2 = three_edge_color(p.h);
    REQUIRE(c2.has_value());
    p.h.color = *c2;
    CHECK(validate_H(p.h).all());
}

TEST_CASE("cycle space dimensions") {
    auto p = theorem2_promotion(torus_grid(2, 2));
    auto cs = cycle_space(p.h);
    CHECK(cs.dim == 18);
    CHECK(cs.incidence_rank == 46);
    CHECK(cs.dim == p.h.num_edges() - cs.incidence_rank);
    for (const auto &b : cs.basis) {
        CHECK(even_everywhere(p.h, b));
    }
    Hypergraph square;
    square.num_vertices = 4;
    square.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(cycle_space(square).dim == 1);
    auto honey = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    CHECK(incidence_rank(honey) == honey.num_vertices - 1);
}

TEST_CASE("derived graph and contraction") {
    Hypergraph one;
    one.num_vertices = 3;
    one.edges = {{0, 1, 2}};
    one.color = {Color::B};
    auto dg = derived_graph(one);
    CHECK(dg.edges.size() == 3);
    for (char l : dg.label) {
        CHECK(l == 'Z');
    }
    auto honey = hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)));
    auto hd = derived_graph(honey);
    CHECK((int)hd.edges.size() == honey.num_edges());
    CHECK(contract_rank3(honey).num_edges() == honey.num_edges());
}

TEST_CASE("canonical cycles are hypercycles") {
    auto seed = torus_grid(2, 2);
    auto a = construct_A_with_map(seed);
    auto p = promote(a.colex, faces_of_kind(a.colex, FaceKind::VFace), Color::R);
    auto cyc = all_canonical_cycles(p, a.map, PipelineKind::Theorem2);
    int two = 0;
    for (const auto &fc : cyc) {
        auto kind = (*a.colex.parentage)[fc.face].kind;
        if (kind == FaceKind::EFace) {
            CHECK_FALSE(fc.sigma1.has_value());
            CHECK_FALSE(fc.sigma2.has_value());
            continue;
        }
        REQUIRE(fc.sigma1.has_value());
        REQUIRE(fc.sigma2.has_value());
        CHECK(even_everywhere(p.h, *fc.sigma1));
        CHECK(even_everywhere(p.h, *fc.sigma2));
        two++;
        if (kind == FaceKind::VFace) {
            int r3 = 0;
            for (int e : fc.sigma2->ones()) {
                r3 += p.h.rank(e) == 3;
            }
            CHECK(r3 == (int)a.colex.graph.faces()[fc.face].size() / 2);
        }
    }
    CHECK(two == 8);
}
