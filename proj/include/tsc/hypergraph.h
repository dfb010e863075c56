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

#ifndef TSC_HYPERGRAPH_H
#define TSC_HYPERGRAPH_H

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsc/colex.h"
#include "tsc/embedded_graph.h"
#include "tsc/gf2.h"

namespace tsc {

/// Closed walk in the derived graph: hedges[i] carries verts[i] to verts[i+1].
struct HFace {
    std::vector<int> verts;
    std::vector<int> hedges;
};

struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;
    /// Empty when the hypergraph is uncolored.
    std::vector<Color> color;
    std::vector<std::string> provenance;
    /// Optional 2-cell embedding of the derived graph.
    std::vector<HFace> faces;

    int num_edges() const {
        return (int)edges.size();
    }
    int rank(int e) const {
        return (int)edges[e].size();
    }
    int num_rank3() const;
    std::vector<std::vector<int>> incident_edges() const;
};

/// The colex viewed as a hypergraph without rank-3 edges.
Hypergraph hypergraph_from_colex(const TwoColex &c);

struct PromotedFace {
    int face = -1;
    /// Boundary vertices p_0, p_1, ... starting at the first promoted edge.
    std::vector<int> boundary;
    std::vector<int> rank3;
    std::vector<int> new_vertices;
    /// inner[j] joins new_vertices[j] and new_vertices[j + 1].
    std::vector<int> inner;
};

struct PromotionInfo {
    TwoColex colex;
    std::vector<int> faces;
    Color promote_color = Color::B;
    /// Colex color to hypergraph color.
    std::vector<Color> color_map;
    /// Colex face id to index in promoted, or -1.
    std::vector<int> promoted_index;
    std::vector<PromotedFace> promoted;
    /// Unordered pair of rank-3 edge ids to the inner edge between them.
    std::map<std::pair<int, int>, int> inner_between;

    int inner_edge(int rank3_a, int rank3_b) const;
};

struct Promotion {
    Hypergraph h;
    PromotionInfo info;
};

/// Promotes the promote_color edges on the boundary of every face in F to
/// rank-3 edges, adding one inner face per promoted face. Colex edge ids are
/// kept as hyperedge ids; the rank-3 class is colored b.
Promotion promote(const TwoColex &colex, const std::vector<int> &F, Color promote_color);

/// Swaps r and g on the inner edges of one promoted face.
void flip_inner_phase(Promotion &p, int colex_face);

struct HReport {
    bool h1 = true;
    bool h2 = true;
    bool h3 = true;
    bool h4 = true;
    bool colored = true;
    bool coloring_proper = true;
    bool rank3_monochrome = true;
    std::vector<std::string> witnesses;

    bool all() const {
        return h1 && h2 && h3 && h4 && colored && coloring_proper && rank3_monochrome;
    }
};

HReport validate_H(const Hypergraph &h);

/// Proper 3-edge-coloring with all rank-3 edges colored b, by exact search.
std::optional<std::vector<Color>> three_edge_color(const Hypergraph &h);

std::vector<BitVec> incidence_rows(const Hypergraph &h);
int incidence_rank(const Hypergraph &h);

struct HypercycleSpace {
    std::vector<BitVec> basis;
    int dim = 0;
    int incidence_rank = 0;
    std::vector<BitVec> trivial;
    int trivial_dim = 0;
};

/// Cycle space; trivial_generators spans the homologically trivial part.
/// Without generators, boundaries of derived faces made of rank-2 edges are used.
HypercycleSpace cycle_space(const Hypergraph &h, const std::vector<BitVec> *trivial_generators = nullptr);

bool is_hypercycle(const Hypergraph &h, const BitVec &sigma, int *bad_vertex = nullptr);

struct DerivedGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> label;
    std::vector<Color> color;
    std::vector<int> origin;
    /// First derived edge id of every hyperedge.
    std::vector<int> first_of;
    std::optional<EmbeddedGraph> embedding;

    /// Derived dart for the step from a to b along hyperedge e.
    int dart(int e, int a, int b) const;
};

DerivedGraph derived_graph(const Hypergraph &h);

/// Collapses every rank-3 triangle of the derived embedding to a vertex.
EmbeddedGraph contract_rank3(const Hypergraph &h);

/// Bombin-style hypergraph: each colex vertex becomes a rank-3 edge on its
/// three corners, each colex edge end becomes a rank-2 connector.
Hypergraph bombin_hypergraph(const TwoColex &c);

enum class PipelineKind { None, Theorem2, Theorem3 };

struct FaceCycles {
    int face = -1;
    std::optional<BitVec> sigma1;
    std::optional<BitVec> sigma2;
};

/// Canonical cycles for one face of the parent colex. The construction map
/// describes how the colex was obtained from its seed.
FaceCycles canonical_face_cycles(
    const Promotion &p, const ConstructionAMap &map, PipelineKind kind, int colex_face);

std::vector<FaceCycles> all_canonical_cycles(const Promotion &p, const ConstructionAMap &map, PipelineKind kind);

}  // namespace tsc

#endif
