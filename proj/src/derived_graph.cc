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

#include <string>

#include "tsc/error.h"
#include "tsc/hypergraph.h"

namespace tsc {

int DerivedGraph::dart(int e, int a, int b) const {
    int count = (e + 1 < (int)first_of.size() ? first_of[e + 1] : (int)edges.size()) - first_of[e];
    for (int id = first_of[e]; id < first_of[e] + count; id++) {
        if (edges[id] == std::make_pair(a, b)) {
            return 2 * id;
        }
        if (edges[id] == std::make_pair(b, a)) {
            return 2 * id + 1;
        }
    }
    fail(ErrorCode::MalformedRotation, "hyperedge " + std::to_string(e) + " does not join " + std::to_string(a) +
                                           " and " + std::to_string(b));
}

DerivedGraph derived_graph(const Hypergraph &h) {
    DerivedGraph dg;
    dg.num_vertices = h.num_vertices;
    for (int e = 0; e < h.num_edges(); e++) {
        dg.first_of.push_back((int)dg.edges.size());
        const auto &vs = h.edges[e];
        if (vs.size() == 3) {
            for (int i = 0; i < 3; i++) {
                dg.edges.emplace_back(vs[i], vs[(i + 1) % 3]);
                dg.label.push_back('Z');
                dg.color.push_back(Color::B);
                dg.origin.push_back(e);
            }
            continue;
        }
        if ((int)h.color.size() <= e) {
            fail(ErrorCode::ColorMissing, "rank-2 edge " + std::to_string(e) + " has no color");
        }
        dg.edges.emplace_back(vs[0], vs[1]);
        dg.label.push_back("XYZ"[(int)h.color[e]]);
        dg.color.push_back(h.color[e]);
        dg.origin.push_back(e);
    }
    if (!h.faces.empty()) {
        std::vector<std::vector<int>> walks;
        for (const auto &f : h.faces) {
            std::vector<int> walk;
            size_t k = f.verts.size();
            for (size_t i = 0; i < k; i++) {
                walk.push_back(dg.dart(f.hedges[i], f.verts[i], f.verts[(i + 1) % k]));
            }
            walks.push_back(std::move(walk));
        }
        dg.embedding = EmbeddedGraph::from_faces(dg.num_vertices, dg.edges, std::move(walks));
    }
    return dg;
}

EmbeddedGraph contract_rank3(const Hypergraph &h) {
    DerivedGraph dg = derived_graph(h);
    if (!dg.embedding) {
        fail(ErrorCode::MalformedRotation, "hypergraph carries no embedding");
    }
    std::vector<int> tri;
    for (int id = 0; id < (int)dg.edges.size(); id++) {
        if (h.rank(dg.origin[id]) == 3) {
            tri.push_back(id);
        }
    }
    if (tri.empty()) {
        return *dg.embedding;
    }
    return contract_edges(*dg.embedding, tri).graph;
}

Hypergraph bombin_hypergraph(const TwoColex &c) {
    const auto &g = c.graph;
    Hypergraph h;
    h.num_vertices = g.num_darts();
    std::vector<int> tri_of(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) {
        tri_of[v] = h.num_edges();
        h.edges.push_back(g.rotation()[v]);
        h.color.push_back(Color::B);
        h.provenance.push_back("rank-3 at colex vertex " + std::to_string(v));
    }
    std::vector<int> conn(g.num_darts());
    for (int d = 0; d < g.num_darts(); d++) {
        conn[d] = h.num_edges();
        h.edges.push_back({d, g.rot_prev(twin(d))});
        int f = g.face_of(twin(d));
        Color fc = c.face_color[f];
        Color ec = c.edge_color[dart_edge(d)];
        Color lo = fc == Color::R ? Color::G : Color::R;
        h.color.push_back(ec == lo ? Color::R : Color::G);
        h.provenance.push_back("connector at colex dart " + std::to_string(d));
    }
    for (const auto &walk : g.faces()) {
        HFace big;
        for (int d : walk) {
            big.verts.push_back(g.rot_prev(d));
            big.hedges.push_back(conn[twin(d)]);
        }
        h.faces.push_back(std::move(big));
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        HFace t;
        int x = g.rotation()[v][0];
        for (int i = 0; i < 3; i++) {
            t.verts.push_back(x);
            t.hedges.push_back(tri_of[v]);
            x = g.rot_prev(x);
        }
        h.faces.push_back(std::move(t));
    }
    for (int e = 0; e < g.num_edges(); e++) {
        int d = 2 * e;
        int dp = 2 * e + 1;
        h.faces.push_back({{g.rot_prev(d), d, g.rot_prev(dp), dp},
                           {tri_of[g.tail(d)], conn[d], tri_of[g.tail(dp)], conn[dp]}});
    }
    return h;
}

}  // namespace tsc
