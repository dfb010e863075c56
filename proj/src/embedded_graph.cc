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

#include "tsc/embedded_graph.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "tsc/error.h"

namespace tsc {

EmbeddedGraph EmbeddedGraph::build(
    int num_vertices, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> rotation) {
    if ((int)rotation.size() != num_vertices) {
        fail(ErrorCode::MalformedRotation, "rotation lists " + std::to_string(rotation.size()) +
                                               " vertices, expected " + std::to_string(num_vertices));
    }
    EmbeddedGraph g;
    g.edges_ = std::move(edges);
    g.rotation_ = std::move(rotation);
    for (int e = 0; e < g.num_edges(); e++) {
        auto [u, v] = g.edges_[e];
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            fail(ErrorCode::MalformedRotation, "edge " + std::to_string(e) + " has an endpoint out of range");
        }
        if (u == v) {
            fail(ErrorCode::LoopEdge, "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(u));
        }
    }
    std::vector<int> seen(g.num_darts(), 0);
    for (int v = 0; v < num_vertices; v++) {
        for (int d : g.rotation_[v]) {
            if (d < 0 || d >= g.num_darts()) {
                fail(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " out of range");
            }
            if (seen[d]++) {
                fail(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " listed twice");
            }
            if (g.tail(d) != v) {
                fail(ErrorCode::MalformedRotation,
                     "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) + " but leaves " +
                         std::to_string(g.tail(d)));
            }
        }
    }
    for (int d = 0; d < g.num_darts(); d++) {
        if (!seen[d]) {
            fail(ErrorCode::MalformedRotation, "edge-end " + std::to_string(d) + " missing from rotation");
        }
    }
    g.check_connected();
    g.index_rotation();
    g.trace_faces();
    return g;
}

EmbeddedGraph EmbeddedGraph::from_faces(
    int num_vertices, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> faces) {
    EmbeddedGraph g;
    g.edges_ = std::move(edges);
    for (int e = 0; e < g.num_edges(); e++) {
        auto [u, v] = g.edges_[e];
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            fail(ErrorCode::MalformedRotation, "edge " + std::to_string(e) + " has an endpoint out of range");
        }
        if (u == v) {
            fail(ErrorCode::LoopEdge, "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(u));
        }
    }
    int nd = g.num_darts();
    std::vector<int> next_in_face(nd, -1);
    for (const auto &walk : faces) {
        if (walk.empty()) {
            fail(ErrorCode::MalformedRotation, "empty face walk");
        }
        for (size_t i = 0; i < walk.size(); i++) {
            int d = walk[i];
            int n = walk[(i + 1) % walk.size()];
            if (d < 0 || d >= nd) {
                fail(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " out of range");
            }
            if (next_in_face[d] != -1) {
                fail(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " lies on two faces");
            }
            if (g.head(d) != g.tail(n)) {
                fail(ErrorCode::MalformedRotation, "face walk breaks after dart " + std::to_string(d));
            }
            next_in_face[d] = n;
        }
    }
    for (int d = 0; d < nd; d++) {
        if (next_in_face[d] == -1) {
            fail(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " lies on no face");
        }
    }
    g.rotation_.assign(num_vertices, {});
    std::vector<char> used(nd, 0);
    for (int d = 0; d < nd; d++) {
        int v = g.tail(d);
        if (used[d]) {
            continue;
        }
        if (!g.rotation_[v].empty()) {
            fail(ErrorCode::MalformedRotation, "vertex " + std::to_string(v) + " is pinched by the face walks");
        }
        int x = d;
        do {
            used[x] = 1;
            g.rotation_[v].push_back(x);
            x = next_in_face[x ^ 1];
        } while (x != d);
    }
    g.check_connected();
    g.index_rotation();
    g.faces_ = std::move(faces);
    g.face_of_.assign(nd, -1);
    for (int f = 0; f < g.num_faces(); f++) {
        for (int d : g.faces_[f]) {
            g.face_of_[d] = f;
        }
    }
    return g;
}

void EmbeddedGraph::index_rotation() {
    rot_next_.assign(num_darts(), -1);
    rot_prev_.assign(num_darts(), -1);
    for (const auto &rot : rotation_) {
        for (size_t i = 0; i < rot.size(); i++) {
            int a = rot[i];
            int b = rot[(i + 1) % rot.size()];
            rot_next_[a] = b;
            rot_prev_[b] = a;
        }
    }
}

void EmbeddedGraph::trace_faces() {
    faces_.clear();
    face_of_.assign(num_darts(), -1);
    for (int d = 0; d < num_darts(); d++) {
        if (face_of_[d] != -1) {
            continue;
        }
        int f = (int)faces_.size();
        faces_.emplace_back();
        int x = d;
        do {
            face_of_[x] = f;
            faces_[f].push_back(x);
            x = phi(x);
        } while (x != d);
    }
}

void EmbeddedGraph::check_connected() const {
    int n = num_vertices();
    if (n == 0) {
        fail(ErrorCode::DisconnectedGraph, "graph has no vertices");
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                count++;
                stack.push_back(w);
            }
        }
    }
    if (count != n) {
        fail(ErrorCode::DisconnectedGraph,
             "only " + std::to_string(count) + " of " + std::to_string(n) + " vertices reachable from vertex 0");
    }
}

int genus_from_euler(int chi) {
    if (chi % 2 != 0) {
        fail(ErrorCode::OddChi, "Euler characteristic " + std::to_string(chi) + " is odd");
    }
    return (2 - chi) / 2;
}

int genus(const EmbeddedGraph &g) {
    return genus_from_euler(g.euler_characteristic());
}

EmbeddedGraph dual(const EmbeddedGraph &g) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.num_edges(); e++) {
        edges.emplace_back(g.face_of(2 * e), g.face_of(2 * e + 1));
    }
    return EmbeddedGraph::from_faces(g.num_faces(), std::move(edges), g.rotation());
}

EmbeddedGraph medial(const EmbeddedGraph &g) {
    std::vector<std::pair<int, int>> edges;
    for (int d = 0; d < g.num_darts(); d++) {
        edges.emplace_back(dart_edge(d), dart_edge(g.rot_next(d)));
    }
    std::vector<std::vector<int>> faces;
    for (const auto &rot : g.rotation()) {
        std::vector<int> walk;
        for (int d : rot) {
            walk.push_back(2 * d);
        }
        faces.push_back(std::move(walk));
    }
    for (const auto &face : g.faces()) {
        int k = (int)face.size();
        std::vector<int> walk;
        for (int s = 0; s < k; s++) {
            int i = (k - s) % k;
            int prev = face[(i + k - 1) % k];
            walk.push_back(2 * twin(prev) + 1);
        }
        faces.push_back(std::move(walk));
    }
    return EmbeddedGraph::from_faces(g.num_edges(), std::move(edges), std::move(faces));
}

std::optional<std::vector<int>> bipartition(const EmbeddedGraph &g) {
    int n = g.num_vertices();
    std::vector<int> side(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < n; s++) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

namespace {

Contraction relabel(const EmbeddedGraph &g,
                    const std::vector<int> &at,
                    const std::vector<char> &edge_alive,
                    const std::vector<std::vector<int>> &rot,
                    const std::vector<char> &vertex_alive) {
    Contraction out;
    std::vector<int> vnew(g.num_vertices(), -1);
    int nv = 0;
    for (int v = 0; v < g.num_vertices(); v++) {
        if (vertex_alive[v]) {
            vnew[v] = nv++;
        }
    }
    out.edge_map.assign(g.num_edges(), -1);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.num_edges(); e++) {
        if (edge_alive[e]) {
            out.edge_map[e] = (int)edges.size();
            edges.emplace_back(vnew[at[2 * e]], vnew[at[2 * e + 1]]);
        }
    }
    std::vector<std::vector<int>> rotation(nv);
    for (int v = 0; v < g.num_vertices(); v++) {
        if (!vertex_alive[v]) {
            continue;
        }
        for (int d : rot[v]) {
            rotation[vnew[v]].push_back(2 * out.edge_map[d >> 1] + (d & 1));
        }
    }
    out.vertex_map.assign(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); v++) {
        out.vertex_map[v] = vnew[v];
    }
    out.graph = EmbeddedGraph::build(nv, std::move(edges), std::move(rotation));
    return out;
}

std::vector<int> rotate_after(const std::vector<int> &rot, int d) {
    auto it = std::find(rot.begin(), rot.end(), d);
    std::vector<int> out;
    size_t k = it - rot.begin();
    for (size_t s = 1; s < rot.size(); s++) {
        out.push_back(rot[(k + s) % rot.size()]);
    }
    return out;
}

}  // namespace

Contraction contract_edges(const EmbeddedGraph &g, const std::vector<int> &edge_set) {
    std::vector<int> at(g.num_darts());
    for (int d = 0; d < g.num_darts(); d++) {
        at[d] = g.tail(d);
    }
    std::vector<std::vector<int>> rot = g.rotation();
    std::vector<char> edge_alive(g.num_edges(), 1);
    std::vector<char> vertex_alive(g.num_vertices(), 1);
    std::vector<int> merged_into(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) {
        merged_into[v] = v;
    }
    std::vector<int> order = edge_set;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (int e : order) {
        int d = 2 * e;
        int dp = 2 * e + 1;
        int u = at[d];
        int v = at[dp];
        edge_alive[e] = 0;
        if (u == v) {
            auto &r = rot[u];
            r.erase(std::remove_if(r.begin(), r.end(), [&](int x) { return x == d || x == dp; }), r.end());
            continue;
        }
        std::vector<int> merged = rotate_after(rot[u], d);
        std::vector<int> tail_part = rotate_after(rot[v], dp);
        for (int x : tail_part) {
            at[x] = u;
        }
        merged.insert(merged.end(), tail_part.begin(), tail_part.end());
        rot[u] = std::move(merged);
        rot[v].clear();
        vertex_alive[v] = 0;
        for (auto &m : merged_into) {
            if (m == v) {
                m = u;
            }
        }
    }
    for (int e = 0; e < g.num_edges(); e++) {
        if (edge_alive[e] && at[2 * e] == at[2 * e + 1]) {
            fail(ErrorCode::LoopCreated, "contraction turns edge " + std::to_string(e) + " into a loop");
        }
    }
    Contraction out = relabel(g, at, edge_alive, rot, vertex_alive);
    std::vector<int> vnew(g.num_vertices(), -1);
    int nv = 0;
    for (int v = 0; v < g.num_vertices(); v++) {
        if (vertex_alive[v]) {
            vnew[v] = nv++;
        }
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        out.vertex_map[v] = vnew[merged_into[v]];
    }
    return out;
}

Contraction delete_edges(const EmbeddedGraph &g, const std::vector<int> &edge_set) {
    std::vector<int> at(g.num_darts());
    for (int d = 0; d < g.num_darts(); d++) {
        at[d] = g.tail(d);
    }
    std::vector<char> edge_alive(g.num_edges(), 1);
    for (int e : edge_set) {
        edge_alive[e] = 0;
    }
    std::vector<std::vector<int>> rot = g.rotation();
    for (auto &r : rot) {
        r.erase(std::remove_if(r.begin(), r.end(), [&](int x) { return !edge_alive[x >> 1]; }), r.end());
    }
    std::vector<char> vertex_alive(g.num_vertices(), 1);
    return relabel(g, at, edge_alive, rot, vertex_alive);
}

namespace {

bool try_map(const EmbeddedGraph &a, const EmbeddedGraph &b, int start_b, bool mirror) {
    int nd = a.num_darts();
    std::vector<int> m(nd, -1);
    std::vector<char> hit(nd, 0);
    auto b_next = [&](int y) { return mirror ? b.rot_prev(y) : b.rot_next(y); };
    std::queue<int> q;
    m[0] = start_b;
    hit[start_b] = 1;
    q.push(0);
    auto assign = [&](int x, int y) {
        if (m[x] == -1) {
            if (hit[y]) {
                return false;
            }
            m[x] = y;
            hit[y] = 1;
            q.push(x);
            return true;
        }
        return m[x] == y;
    };
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int y = m[x];
        if (!assign(twin(x), twin(y)) || !assign(a.rot_next(x), b_next(y))) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_isomorphic(const EmbeddedGraph &a, const EmbeddedGraph &b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_faces() != b.num_faces()) {
        return false;
    }
    if (a.num_edges() == 0) {
        return true;
    }
    for (bool mirror : {false, true}) {
        for (int y = 0; y < b.num_darts(); y++) {
            if (b.degree(b.tail(y)) != a.degree(a.tail(0))) {
                continue;
            }
            if (try_map(a, b, y, mirror)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<std::vector<int>> face_adjacency(const EmbeddedGraph &g, bool *self_adjacent) {
    std::vector<std::set<int>> adj(g.num_faces());
    bool self = false;
    for (int e = 0; e < g.num_edges(); e++) {
        int f1 = g.face_of(2 * e);
        int f2 = g.face_of(2 * e + 1);
        if (f1 == f2) {
            self = true;
            continue;
        }
        adj[f1].insert(f2);
        adj[f2].insert(f1);
    }
    if (self_adjacent != nullptr) {
        *self_adjacent = self;
    }
    std::vector<std::vector<int>> out;
    for (auto &s : adj) {
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

}  // namespace tsc
