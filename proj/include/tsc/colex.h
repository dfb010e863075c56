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

#ifndef TSC_COLEX_H
#define TSC_COLEX_H

#include <optional>
#include <string>
#include <vector>

#include "tsc/embedded_graph.h"

namespace tsc {

enum class Color : int { R = 0, G = 1, B = 2 };

char color_char(Color c);
Color color_from_char(char c);
/// The color different from both arguments (which must differ).
Color third_color(Color a, Color b);

enum class FaceKind { VFace, FFace, EFace };

struct Parentage {
    FaceKind kind;
    int parent;
};

std::string face_kind_name(FaceKind k);

struct TwoColex {
    EmbeddedGraph graph;
    std::vector<Color> face_color;
    std::vector<Color> edge_color;
    std::optional<std::vector<Parentage>> parentage;
};

/// Index bookkeeping for a colex obtained from a seed by vertex and edge
/// truncation. Darts refer to the seed.
struct ConstructionAMap {
    EmbeddedGraph seed;

    static int a_vertex(int d) {
        return 2 * d;
    }
    static int b_vertex(int d) {
        return 2 * d + 1;
    }
    static int short_edge(int d) {
        return 3 * d;
    }
    static int sector_edge(int d) {
        return 3 * d + 1;
    }
    static int long_edge(int d) {
        return 3 * d + 2;
    }
    int v_face(int v) const {
        return v;
    }
    int f_face(int f) const {
        return seed.num_vertices() + f;
    }
    int e_face(int e) const {
        return seed.num_vertices() + seed.num_faces() + e;
    }
};

struct ConstructionA {
    TwoColex colex;
    ConstructionAMap map;
};

ConstructionA construct_A_with_map(const EmbeddedGraph &seed);
TwoColex construct_A(const EmbeddedGraph &seed);

TwoColex construct_1(const EmbeddedGraph &seed);

/// Colors faces and edges if g is trivalent with 3-colorable faces.
std::optional<TwoColex> validate_colex(const EmbeddedGraph &g);

/// Checks trivalence, proper face colors and edge colors of an existing colex.
bool colex_is_consistent(const TwoColex &c, std::string *why = nullptr);

EmbeddedGraph recover_bipartite(const TwoColex &c, Color color);

bool corollary2_check(const TwoColex &c);

}  // namespace tsc

#endif
