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

#include "tsc/fixtures.h"

#include <string>

#include "tsc/error.h"

namespace tsc {

EmbeddedGraph torus_grid(int m, int n) {
    if (m < 2 || n < 2) {
        fail(ErrorCode::BadParams, "torus grid needs m, n >= 2");
    }
    auto vid = [&](int i, int j) { return ((i + m) % m) * n + (j + n) % n; };
    auto h = [&](int i, int j) { return 2 * vid(i, j); };
    auto v = [&](int i, int j) { return 2 * vid(i, j) + 1; };
    std::vector<std::pair<int, int>> edges(2 * m * n);
    std::vector<std::vector<int>> rotation(m * n);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < n; j++) {
            edges[h(i, j)] = {vid(i, j), vid(i, j + 1)};
            edges[v(i, j)] = {vid(i, j), vid(i + 1, j)};
            rotation[vid(i, j)] = {2 * h(i, j), 2 * v(i, j), 2 * h(i, j - 1) + 1, 2 * v(i - 1, j) + 1};
        }
    }
    return EmbeddedGraph::build(m * n, std::move(edges), std::move(rotation));
}

EmbeddedGraph theta_graph() {
    return EmbeddedGraph::build(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 2, 4}, {1, 5, 3}});
}

EmbeddedGraph triangle_graph() {
    return EmbeddedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {2, 1}, {4, 3}});
}

EmbeddedGraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; i++) {
        edges.emplace_back(i, (i + 1) % 5);
    }
    for (int i = 0; i < 5; i++) {
        edges.emplace_back(i, i + 5);
    }
    for (int i = 0; i < 5; i++) {
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    std::vector<std::vector<int>> rotation(10);
    for (int e = 0; e < (int)edges.size(); e++) {
        rotation[edges[e].first].push_back(2 * e);
        rotation[edges[e].second].push_back(2 * e + 1);
    }
    return EmbeddedGraph::build(10, std::move(edges), std::move(rotation));
}

EmbeddedGraph honeycomb_torus(int m, int n) {
    if (m < 2 || n < 2) {
        fail(ErrorCode::BadParams, "honeycomb torus needs m, n >= 2");
    }
    auto cell = [&](int i, int j) { return ((i + m) % m) * n + (j + n) % n; };
    auto A = [&](int i, int j) { return 2 * cell(i, j); };
    auto B = [&](int i, int j) { return 2 * cell(i, j) + 1; };
    auto e0 = [&](int i, int j) { return 3 * cell(i, j); };
    auto e1 = [&](int i, int j) { return 3 * cell(i, j) + 1; };
    auto e2 = [&](int i, int j) { return 3 * cell(i, j) + 2; };
    std::vector<std::pair<int, int>> edges(3 * m * n);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < n; j++) {
            edges[e0(i, j)] = {A(i, j), B(i, j)};
            edges[e1(i, j)] = {A(i, j), B(i - 1, j)};
            edges[e2(i, j)] = {A(i, j), B(i, j - 1)};
        }
    }
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < n; j++) {
            faces.push_back({
                2 * e0(i, j),
                2 * e1(i + 1, j) + 1,
                2 * e2(i + 1, j),
                2 * e0(i + 1, j - 1) + 1,
                2 * e1(i + 1, j - 1),
                2 * e2(i, j) + 1,
            });
        }
    }
    return EmbeddedGraph::from_faces(2 * m * n, std::move(edges), std::move(faces));
}

TwoColex lattice_4_8(int m, int n) {
    if (m % 2 != 0 || n % 2 != 0) {
        fail(ErrorCode::BadParams, "square-octagon lattice needs even m and n");
    }
    return construct_1(torus_grid(m, n));
}

TwoColex lattice_4_6_12(int m, int n) {
    return construct_A(honeycomb_torus(m, n));
}

}  // namespace tsc
