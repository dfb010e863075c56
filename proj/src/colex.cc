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

#include "tsc/colex.h"

#include <algorithm>

#include "tsc/error.h"

namespace tsc {

char color_char(Color c) {
    return "rgb"[(int)c];
}

Color color_from_char(char c) {
    switch (c) {
        case 'r': return Color::R;
        case 'g': return Color::G;
        case 'b': return Color::B;
    }
    fail(ErrorCode::ColorMissing, std::string("unknown color '") + c + "'");
}

Color third_color(Color a, Color b) {
    return (Color)(3 - (int)a - (int)b);
}

std::string face_kind_name(FaceKind k) {
    switch (k) {
        case FaceKind::VFace: return "v-face";
        case FaceKind::FFace: return "f-face";
        case FaceKind::EFace: return "e-face";
    }
    return "?";
}

ConstructionA construct_A_with_map(const EmbeddedGraph &seed) {
    using M = ConstructionAMap;
    int nd = seed.num_darts();
    std::vector<std::pair<int, int>> edges(3 * nd);
    for (int d = 0; d < nd; d++) {
        edges[M::short_edge(d)] = {M::a_vertex(d), M::b_vertex(d)};
        edges[M::sector_edge(d)] = {M::b_vertex(d), M::a_vertex(seed.rot_next(d))};
        edges[M::long_edge(d)] = {M::a_vertex(d), M::b_vertex(twin(d))};
    }
    auto fwd = [](int e) { return 2 * e; };
    auto rev = [](int e) { return 2 * e + 1; };

    std::vector<std::vector<int>> faces;
    std::vector<Parentage> parent;
    std::vector<Color> face_color;
    for (int v = 0; v < seed.num_vertices(); v++) {
        const auto &rot = seed.rotation()[v];
        std::vector<int> walk;
        for (int i = (int)rot.size() - 1; i >= 0; i--) {
            walk.push_back(rev(M::sector_edge(rot[i])));
            walk.push_back(rev(M::short_edge(rot[i])));
        }
        faces.push_back(std::move(walk));
        parent.push_back({FaceKind::VFace, v});
        face_color.push_back(Color::B);
    }
    for (int f = 0; f < seed.num_faces(); f++) {
        std::vector<int> walk;
        for (int d : seed.faces()[f]) {
            walk.push_back(fwd(M::long_edge(d)));
            walk.push_back(fwd(M::sector_edge(twin(d))));
        }
        faces.push_back(std::move(walk));
        parent.push_back({FaceKind::FFace, f});
        face_color.push_back(Color::R);
    }
    for (int e = 0; e < seed.num_edges(); e++) {
        int d = 2 * e;
        int dp = 2 * e + 1;
        faces.push_back({fwd(M::short_edge(d)), rev(M::long_edge(dp)), fwd(M::short_edge(dp)), rev(M::long_edge(d))});
        parent.push_back({FaceKind::EFace, e});
        face_color.push_back(Color::G);
    }
    std::vector<Color> edge_color(3 * nd);
    for (int d = 0; d < nd; d++) {
        edge_color[M::short_edge(d)] = Color::R;
        edge_color[M::sector_edge(d)] = Color::G;
        edge_color[M::long_edge(d)] = Color::B;
    }
    ConstructionA out;
    out.colex.graph = EmbeddedGraph::from_faces(2 * nd, std::move(edges), std::move(faces));
    out.colex.face_color = std::move(face_color);
    out.colex.edge_color = std::move(edge_color);
    out.colex.parentage = std::move(parent);
    out.map.seed = seed;
    return out;
}

TwoColex construct_A(const EmbeddedGraph &seed) {
    return construct_A_with_map(seed).colex;
}

TwoColex construct_1(const EmbeddedGraph &seed) {
    auto sides = bipartition(seed);
    if (!sides) {
        fail(ErrorCode::NotBipartite, "seed graph has an odd cycle");
    }
    EmbeddedGraph D = dual(seed);
    int E = D.num_edges();
    int nd = D.num_darts();
    std::vector<std::pair<int, int>> edges(E + nd);
    for (int e = 0; e < E; e++) {
        edges[e] = {2 * e, 2 * e + 1};
    }
    for (int x = 0; x < nd; x++) {
        edges[E + x] = {x, D.rot_next(x)};
    }
    std::vector<std::vector<int>> faces;
    std::vector<Color> face_color;
    for (int f = 0; f < D.num_faces(); f++) {
        std::vector<int> walk;
        for (int x : D.faces()[f]) {
            walk.push_back(x);
            walk.push_back(2 * (E + twin(x)));
        }
        faces.push_back(std::move(walk));
        face_color.push_back((*sides)[f] == 0 ? Color::G : Color::B);
    }
    for (int v = 0; v < D.num_vertices(); v++) {
        const auto &rot = D.rotation()[v];
        std::vector<int> walk;
        for (int i = (int)rot.size() - 1; i >= 0; i--) {
            walk.push_back(2 * (E + rot[i]) + 1);
        }
        faces.push_back(std::move(walk));
        face_color.push_back(Color::R);
    }
    TwoColex c;
    c.graph = EmbeddedGraph::from_faces(nd, std::move(edges), std::move(faces));
    c.face_color = std::move(face_color);
    c.edge_color.assign(E + nd, Color::R);
    for (int x = 0; x < nd; x++) {
        int f = c.graph.face_of(2 * (E + x));
        c.edge_color[E + x] = third_color(Color::R, c.face_color[f]);
    }
    return c;
}

namespace {

bool color_faces(const std::vector<std::vector<int>> &adj, std::vector<int> &col) {
    int n = (int)adj.size();
    int best = -1;
    int best_free = 4;
    for (int f = 0; f < n; f++) {
        if (col[f] != -1) {
            continue;
        }
        int mask = 0;
        for (int w : adj[f]) {
            if (col[w] != -1) {
                mask |= 1 << col[w];
            }
        }
        int free = 3 - __builtin_popcount(mask);
        if (free < best_free) {
            best_free = free;
            best = f;
        }
    }
    if (best == -1) {
        return true;
    }
    for (int c = 0; c < 3; c++) {
        bool ok = true;
        for (int w : adj[best]) {
            if (col[w] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        col[best] = c;
        if (color_faces(adj, col)) {
            return true;
        }
        col[best] = -1;
    }
    return false;
}

}  // namespace

std::optional<TwoColex> validate_colex(const EmbeddedGraph &g) {
    for (int v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) != 3) {
            return std::nullopt;
        }
    }
    bool self = false;
    auto adj = face_adjacency(g, &self);
    if (self) {
        return std::nullopt;
    }
    std::vector<int> col(g.num_faces(), -1);
    if (!color_faces(adj, col)) {
        return std::nullopt;
    }
    TwoColex c;
    c.graph = g;
    for (int x : col) {
        c.face_color.push_back((Color)x);
    }
    for (int e = 0; e < g.num_edges(); e++) {
        c.edge_color.push_back(
            third_color(c.face_color[g.face_of(2 * e)], c.face_color[g.face_of(2 * e + 1)]));
    }
    return c;
}

bool colex_is_consistent(const TwoColex &c, std::string *why) {
    auto say = [&](const std::string &s) {
        if (why != nullptr) {
            *why = s;
        }
        return false;
    };
    const auto &g = c.graph;
    if ((int)c.face_color.size() != g.num_faces() || (int)c.edge_color.size() != g.num_edges()) {
        return say("color tables have the wrong size");
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) != 3) {
            return say("vertex " + std::to_string(v) + " is not trivalent");
        }
        int mask = 0;
        for (int d : g.rotation()[v]) {
            mask |= 1 << (int)c.edge_color[dart_edge(d)];
        }
        if (mask != 7) {
            return say("edge colors at vertex " + std::to_string(v) + " are not distinct");
        }
    }
    for (int e = 0; e < g.num_edges(); e++) {
        Color a = c.face_color[g.face_of(2 * e)];
        Color b = c.face_color[g.face_of(2 * e + 1)];
        if (a == b) {
            return say("faces on both sides of edge " + std::to_string(e) + " share a color");
        }
        if (c.edge_color[e] != third_color(a, b)) {
            return say("edge " + std::to_string(e) + " has a color of an adjacent face");
        }
    }
    if (c.parentage) {
        for (int f = 0; f < g.num_faces(); f++) {
            if ((*c.parentage)[f].kind == FaceKind::EFace && g.faces()[f].size() != 4) {
                return say("e-face " + std::to_string(f) + " is not 4-sided");
            }
        }
    }
    return true;
}

EmbeddedGraph recover_bipartite(const TwoColex &c, Color color) {
    std::vector<int> other;
    for (int e = 0; e < c.graph.num_edges(); e++) {
        if (c.edge_color[e] != color) {
            other.push_back(e);
        }
    }
    return dual(contract_edges(c.graph, other).graph);
}

bool corollary2_check(const TwoColex &c) {
    if (!c.parentage) {
        fail(ErrorCode::MissingParentage, "colex carries no face parentage");
    }
    for (Color color : {Color::R, Color::G, Color::B}) {
        EmbeddedGraph b;
        try {
            b = recover_bipartite(c, color);
        } catch (const Error &) {
            continue;
        }
        auto sides = bipartition(b);
        if (!sides) {
            continue;
        }
        for (int cls : {0, 1}) {
            bool all_two = true;
            bool any = false;
            for (int v = 0; v < b.num_vertices(); v++) {
                if ((*sides)[v] == cls) {
                    any = true;
                    all_two &= b.degree(v) == 2;
                }
            }
            if (any && all_two) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace tsc
