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

namespace {

using M = ConstructionAMap;

BitVec boundary_of(const Promotion &p, int f) {
    const auto &g = p.info.colex.graph;
    BitVec s(p.h.num_edges());
    for (int d : g.faces()[f]) {
        s.flip(dart_edge(d));
    }
    return s;
}

bool touches_rank3(const Promotion &p, int f) {
    for (int d : p.info.colex.graph.faces()[f]) {
        if (p.h.rank(dart_edge(d)) == 3) {
            return true;
        }
    }
    return false;
}

FaceCycles promoted_cycles(const Promotion &p, int f) {
    const auto &pf = p.info.promoted[p.info.promoted_index[f]];
    FaceCycles out;
    out.face = f;
    int n = p.h.num_edges();
    BitVec s1(n);
    for (int e : pf.inner) {
        s1.flip(e);
    }
    BitVec s2(n);
    for (int e : pf.rank3) {
        s2.flip(e);
    }
    int outer = -1;
    for (int d : p.info.colex.graph.faces()[f]) {
        int e = dart_edge(d);
        if (p.h.rank(e) == 2) {
            s2.flip(e);
            outer = (int)p.h.color[e];
        }
    }
    for (int e : pf.inner) {
        if ((int)p.h.color[e] == outer) {
            s2.flip(e);
        }
    }
    out.sigma1 = s1;
    out.sigma2 = s2;
    return out;
}

BitVec theorem2_f_sigma2(const Promotion &p, const ConstructionAMap &map, int seed_face) {
    const auto &S = map.seed;
    const auto &walk = S.faces()[seed_face];
    int k = (int)walk.size();
    BitVec s(p.h.num_edges());
    for (int i = 0; i < k; i++) {
        int d = walk[i];
        int prev = walk[(i + k - 1) % k];
        s.flip(M::short_edge(d));
        s.flip(M::short_edge(twin(d)));
        s.flip(M::long_edge(d));
        s.flip(M::long_edge(twin(d)));
        s.flip(p.info.inner_edge(M::short_edge(twin(prev)), M::short_edge(d)));
    }
    return s;
}

BitVec theorem3_v_sigma2(const Promotion &p, const ConstructionAMap &map, int seed_vertex) {
    const auto &S = map.seed;
    const auto &rot = S.rotation()[seed_vertex];
    int k = (int)rot.size();
    BitVec s(p.h.num_edges());
    for (int i = 0; i < k; i++) {
        int t = twin(rot[i]);
        int a = M::sector_edge(S.rot_prev(t));
        int b = M::sector_edge(t);
        s.flip(M::short_edge(t));
        s.flip(a);
        s.flip(b);
        s.flip(p.info.inner_edge(a, b));
        int y_next = rot[(i + 1) % k];
        int z1 = S.phi(y_next);
        int z2 = S.phi(z1);
        if (S.phi(t) != y_next || S.phi(z2) != t) {
            fail(ErrorCode::UnclassifiedFace, "seed face at dart " + std::to_string(t) + " is not a quadrilateral");
        }
        s.flip(M::long_edge(z1));
        s.flip(M::sector_edge(twin(z1)));
        s.flip(M::long_edge(z2));
    }
    return s;
}

}  // namespace

FaceCycles canonical_face_cycles(const Promotion &p, const ConstructionAMap &map, PipelineKind kind, int f) {
    const auto &c = p.info.colex;
    if (f < 0 || f >= c.graph.num_faces()) {
        fail(ErrorCode::UnclassifiedFace, "face " + std::to_string(f) + " does not exist");
    }
    FaceCycles out;
    out.face = f;
    if (p.info.promoted_index[f] >= 0) {
        out = promoted_cycles(p, f);
    } else if (!touches_rank3(p, f)) {
        out.sigma1 = boundary_of(p, f);
    }
    if (kind == PipelineKind::None) {
        return out;
    }
    if (!c.parentage) {
        fail(ErrorCode::UnclassifiedFace, "colex carries no face parentage");
    }
    Parentage par = (*c.parentage)[f];
    if (kind == PipelineKind::Theorem2 && par.kind == FaceKind::FFace) {
        out.sigma2 = theorem2_f_sigma2(p, map, par.parent);
    }
    if (kind == PipelineKind::Theorem3 && par.kind == FaceKind::VFace && p.info.promoted_index[f] < 0) {
        out.sigma2 = theorem3_v_sigma2(p, map, par.parent);
    }
    for (const auto *s : {&out.sigma1, &out.sigma2}) {
        int bad = -1;
        if (*s && !is_hypercycle(p.h, **s, &bad)) {
            fail(ErrorCode::NotACycle, "canonical cycle of face " + std::to_string(f) + " is odd at vertex " +
                                           std::to_string(bad));
        }
    }
    return out;
}

std::vector<FaceCycles> all_canonical_cycles(const Promotion &p, const ConstructionAMap &map, PipelineKind kind) {
    std::vector<FaceCycles> out;
    for (int f = 0; f < p.info.colex.graph.num_faces(); f++) {
        out.push_back(canonical_face_cycles(p, map, kind, f));
    }
    return out;
}

}  // namespace tsc
