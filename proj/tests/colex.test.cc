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
#include "tsc/colex.h"
#include "tsc/error.h"
#include "tsc/fixtures.h"

using namespace tsc;

namespace {

// Every color class of edges must be a perfect matching.
void check_matchings(const TwoColex &c) {
    for (Color col : {Color::R, Color::G, Color::B}) {
        std::vector<int> hit(c.graph.num_vertices(), 0);
        for (int e = 0; e < c.graph.num_edges(); e++) {
            if (c.edge_color[e] == col) {
                hit[c.graph.edges()[e].first]++;
                hit[c.graph.edges()[e].second]++;
            }
        }
        for (int h : hit) {
            CHECK(h == 1);
        }
    }
}

// Exhaustive 3-coloring of the face adjacency.
bool brute_face_colorable(const EmbeddedGraph &g) {
    bool self = false;
    auto adj = face_adjacency(g, &self);
    if (self) {
        return false;
    }
    int n = g.num_faces();
    std::vector<int> col(n, 0);
    long total = 1;
    for (int i = 0; i < n; i++) {
        total *= 3;
    }
    for (long code = 0; code < total; code++) {
        long x = code;
        for (int i = 0; i < n; i++) {
            col[i] = x % 3;
            x /= 3;
        }
        bool ok = true;
        for (int f = 0; f < n && ok; f++) {
            for (int w : adj[f]) {
                if (col[w] == col[f]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("construction A counts") {
    for (auto seed : {torus_grid(2, 2), theta_graph(), torus_grid(3, 3), honeycomb_torus(3, 3), triangle_graph()}) {
        auto c = construct_A(seed);
        CHECK(c.graph.num_vertices() == 4 * seed.num_edges());
        CHECK(c.graph.num_edges() == 6 * seed.num_edges());
        CHECK(c.graph.num_faces() == seed.num_vertices() + seed.num_faces() + seed.num_edges());
        CHECK(c.graph.euler_characteristic() == seed.euler_characteristic());
        std::string why;
        CHECK_MESSAGE(colex_is_consistent(c, &why), why);
        check_matchings(c);
        CHECK(validate_colex(c.graph).has_value());
    }
    auto c = construct_A(torus_grid(2, 2));
    CHECK(c.graph.num_vertices() == 32);
    CHECK(c.graph.num_edges() == 48);
    CHECK(c.graph.num_faces() == 16);
    auto t = construct_A(theta_graph());
    CHECK(t.graph.num_vertices() == 12);
    CHECK(t.graph.num_edges() == 18);
    CHECK(t.graph.num_faces() == 8);
}

TEST_CASE("construction A face colors by parentage") {
    auto c = construct_A(torus_grid(2, 2));
    REQUIRE(c.parentage.has_value());
    for (int f = 0; f < c.graph.num_faces(); f++) {
        switch ((*c.parentage)[f].kind) {
            case FaceKind::FFace: CHECK(c.face_color[f] == Color::R); break;
            case FaceKind::EFace:
                CHECK(c.face_color[f] == Color::G);
                CHECK(c.graph.faces()[f].size() == 4);
                break;
            case FaceKind::VFace: CHECK(c.face_color[f] == Color::B); break;
        }
    }
}

TEST_CASE("construction 1") {
    for (auto seed : {torus_grid(2, 2), torus_grid(2, 4), honeycomb_torus(3, 3), theta_graph()}) {
        auto c = construct_1(seed);
        std::string why;
        CHECK_MESSAGE(colex_is_consistent(c, &why), why);
        CHECK(validate_colex(c.graph).has_value());
        CHECK(c.graph.euler_characteristic() == seed.euler_characteristic());
        check_matchings(c);
        auto back = recover_bipartite(c, Color::R);
        CHECK(is_isomorphic(back, seed));
        for (Color col : {Color::R, Color::G, Color::B}) {
            try {
                auto rec = recover_bipartite(c, col);
                CHECK(bipartition(rec).has_value());
            } catch (const Error &e) {
                // Only the theta seed is small enough to fold an edge onto itself.
                CHECK(e.code() == ErrorCode::LoopCreated);
                CHECK(seed.num_edges() == 3);
            }
        }
    }
    try {
        construct_1(triangle_graph());
        FAIL("expected NotBipartite");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotBipartite);
    }
}

TEST_CASE("validate_colex negatives") {
    CHECK_FALSE(validate_colex(torus_grid(2, 2)).has_value());
    // Honeycomb with hexagon counts not divisible by 3 has no face 3-coloring.
    auto h = honeycomb_torus(2, 2);
    CHECK_FALSE(validate_colex(h).has_value());
    CHECK_FALSE(brute_face_colorable(h));
    auto h3 = honeycomb_torus(3, 3);
    CHECK(validate_colex(h3).has_value());
    CHECK(brute_face_colorable(h3));
}

TEST_CASE("corollary 2") {
    CHECK(corollary2_check(construct_A(torus_grid(2, 2))));
    CHECK(corollary2_check(construct_A(theta_graph())));
    auto c = construct_1(honeycomb_torus(3, 3));
    c.parentage = std::vector<Parentage>(c.graph.num_faces(), Parentage{FaceKind::VFace, 0});
    CHECK_FALSE(corollary2_check(c));
    auto bare = construct_1(torus_grid(2, 2));
    try {
        corollary2_check(bare);
        FAIL("expected MissingParentage");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::MissingParentage);
    }
}
