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

#ifndef TSC_EMBEDDED_GRAPH_H
#define TSC_EMBEDDED_GRAPH_H

#include <optional>
#include <utility>
#include <vector>

namespace tsc {

/// Dart (directed edge-end) ids: dart 2e + side leaves the endpoint
/// edges[e].first when side is 0 and edges[e].second when side is 1.
inline int dart_edge(int d) {
    return d >> 1;
}
inline int twin(int d) {
    return d ^ 1;
}

/// Connected multigraph with a rotation system. Faces are traced with
/// phi(d) = rot_next(twin(d)); each face is stored as its cyclic dart walk.
class EmbeddedGraph {
   public:
    EmbeddedGraph() = default;

    /// rotation[v] lists the darts leaving v in cyclic order.
    static EmbeddedGraph build(
        int num_vertices, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> rotation);

    /// Builds from consistently oriented face walks; the face order is kept.
    static EmbeddedGraph from_faces(
        int num_vertices, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> faces);

    int num_vertices() const {
        return (int)rotation_.size();
    }
    int num_edges() const {
        return (int)edges_.size();
    }
    int num_faces() const {
        return (int)faces_.size();
    }
    int num_darts() const {
        return 2 * num_edges();
    }
    int euler_characteristic() const {
        return num_vertices() - num_edges() + num_faces();
    }

    const std::vector<std::pair<int, int>> &edges() const {
        return edges_;
    }
    const std::vector<std::vector<int>> &rotation() const {
        return rotation_;
    }
    const std::vector<std::vector<int>> &faces() const {
        return faces_;
    }

    int tail(int d) const {
        auto [u, v] = edges_[d >> 1];
        return (d & 1) ? v : u;
    }
    int head(int d) const {
        return tail(d ^ 1);
    }
    int rot_next(int d) const {
        return rot_next_[d];
    }
    int rot_prev(int d) const {
        return rot_prev_[d];
    }
    int phi(int d) const {
        return rot_next_[d ^ 1];
    }
    int face_of(int d) const {
        return face_of_[d];
    }
    int degree(int v) const {
        return (int)rotation_[v].size();
    }

   private:
    void index_rotation();
    void trace_faces();
    void check_connected() const;

    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> rot_next_;
    std::vector<int> rot_prev_;
    std::vector<int> face_of_;
};

int genus(const EmbeddedGraph &g);
int genus_from_euler(int chi);

EmbeddedGraph dual(const EmbeddedGraph &g);
EmbeddedGraph medial(const EmbeddedGraph &g);

/// Vertex classes (side[v] in {0,1}) or nothing when an odd cycle exists.
std::optional<std::vector<int>> bipartition(const EmbeddedGraph &g);

struct Contraction {
    EmbeddedGraph graph;
    std::vector<int> vertex_map;
    /// Old edge id to new edge id, -1 for removed edges.
    std::vector<int> edge_map;
};

/// Contracts every edge in the set. Edges of the set that close into loops
/// are removed; any other edge becoming a loop raises LoopCreated.
Contraction contract_edges(const EmbeddedGraph &g, const std::vector<int> &edge_set);

/// Deletes edges, merging the faces on their two sides.
Contraction delete_edges(const EmbeddedGraph &g, const std::vector<int> &edge_set);

/// Rotation-system isomorphism, allowing a global orientation reversal.
bool is_isomorphic(const EmbeddedGraph &a, const EmbeddedGraph &b);

/// Face adjacency: faces i and j share an edge. Self adjacency is reported
/// by the returned flag.
std::vector<std::vector<int>> face_adjacency(const EmbeddedGraph &g, bool *self_adjacent = nullptr);

}  // namespace tsc

#endif
