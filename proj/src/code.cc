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

#include "tsc/code.h"

#include <string>

#include "tsc/error.h"

namespace tsc {

Pauli cycle_operator(const Hypergraph &h, const BitVec &sigma) {
    int bad = -1;
    if (!is_hypercycle(h, sigma, &bad)) {
        fail(ErrorCode::NotACycle, "edge set has odd incidence at vertex " + std::to_string(bad));
    }
    Pauli w(h.num_vertices);
    for (int e : sigma.ones()) {
        const Color *c = (int)h.color.size() > e ? &h.color[e] : nullptr;
        w *= link_operator(h.edges[e], c, h.num_vertices);
    }
    return w;
}

int commutation_violations(const Hypergraph &h, std::string *witness) {
    std::vector<Pauli> ops;
    for (int e = 0; e < h.num_edges(); e++) {
        const Color *c = (int)h.color.size() > e ? &h.color[e] : nullptr;
        ops.push_back(link_operator(h.edges[e], c, h.num_vertices));
    }
    int bad = 0;
    for (int a = 0; a < h.num_edges(); a++) {
        for (int b = a + 1; b < h.num_edges(); b++) {
            int shared = 0;
            for (int u : h.edges[a]) {
                for (int v : h.edges[b]) {
                    shared += u == v;
                }
            }
            if (commutes(ops[a], ops[b]) != (shared % 2 == 0)) {
                if (bad == 0 && witness) {
                    *witness = "hyperedges " + std::to_string(a) + " and " + std::to_string(b);
                }
                bad++;
            }
        }
    }
    return bad;
}

std::vector<Pauli> gauge_generators(const Hypergraph &h) {
    DerivedGraph dg = derived_graph(h);
    std::vector<Pauli> out;
    for (size_t i = 0; i < dg.edges.size(); i++) {
        Color c = dg.color[i];
        out.push_back(link_operator({dg.edges[i].first, dg.edges[i].second}, &c, h.num_vertices));
    }
    return out;
}

bool SubsystemCode::identities_hold() const {
    return n == k + r + s && dim_gauge == 2 * r + s && dim_centralizer == 2 * k + s;
}

SubsystemCode code_from_gauge(int n, const std::vector<Pauli> &generators, const std::string &provenance) {
    SubsystemCode c;
    c.n = n;
    c.provenance = provenance;
    c.gauge = PauliSpan(n, generators);
    c.dim_gauge = (int)c.gauge.dim();
    PauliSpan cent = centralizer(c.gauge);
    c.dim_centralizer = (int)cent.dim();
    c.stabilizer = center(c.gauge);
    c.s = (int)c.stabilizer.dim();
    int two_r = c.dim_gauge - c.s;
    int two_k = c.dim_centralizer - c.s;
    c.checks["even_gauge_rank"] = two_r % 2 == 0;
    c.checks["even_logical_rank"] = two_k % 2 == 0;
    c.r = two_r / 2;
    c.k = two_k / 2;
    c.checks["rank_nullity"] = c.dim_gauge + c.dim_centralizer == 2 * n;
    c.checks["n_equals_k_r_s"] = c.n == c.k + c.r + c.s;
    c.checks["gauge_dim"] = c.dim_gauge == 2 * c.r + c.s;
    c.checks["centralizer_dim"] = c.dim_centralizer == 2 * c.k + c.s;
    bool central = true;
    for (const auto &z : c.stabilizer.basis()) {
        for (const auto &g : generators) {
            central &= commutes(z, g);
        }
        central &= c.gauge.contains(z) && cent.contains(z);
    }
    c.checks["stabilizer_is_center"] = central;
    return c;
}

SubsystemCode build_code(const Hypergraph &h, const HypercycleSpace *cs_in) {
    auto rep = validate_H(h);
    if (!rep.all()) {
        fail(ErrorCode::GaugeMismatch, "hypergraph fails validation: " +
                                           (rep.witnesses.empty() ? std::string("?") : rep.witnesses[0]));
    }
    SubsystemCode c = code_from_gauge(h.num_vertices, gauge_generators(h), "hypergraph");
    HypercycleSpace local;
    if (cs_in == nullptr) {
        local = cycle_space(h);
        cs_in = &local;
    }
    PauliSpan L(h.num_vertices);
    for (const auto &sigma : cs_in->basis) {
        L.add(cycle_operator(h, sigma));
    }
    bool inside = true;
    for (const auto &g : c.gauge.basis()) {
        for (const auto &w : L.basis()) {
            inside &= commutes(g, w);
        }
    }
    int dim_cl = 2 * h.num_vertices - (int)L.dim();
    if (!inside || dim_cl != c.dim_gauge) {
        fail(ErrorCode::GaugeMismatch, "gauge group has dimension " + std::to_string(c.dim_gauge) +
                                           " but the centralizer of the cycle operators has dimension " +
                                           std::to_string(dim_cl));
    }
    c.checks["gauge_is_centralizer_of_cycles"] = true;
    c.checks["cycle_operators_span_centralizer"] = (int)L.dim() == c.dim_centralizer;
    return c;
}

namespace {

void check_seed_degrees(const EmbeddedGraph &seed) {
    for (int v = 0; v < seed.num_vertices(); v++) {
        int d = seed.degree(v);
        if (d % 2 != 0) {
            fail(ErrorCode::OddDegreeSeed, "seed vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        }
        if (d == 2) {
            fail(ErrorCode::Degree2Seed, "seed vertex " + std::to_string(v) + " has degree 2");
        }
    }
}

std::vector<int> v_faces(const TwoColex &c, int limit) {
    std::vector<int> out;
    for (int f = 0; f < c.graph.num_faces(); f++) {
        auto p = (*c.parentage)[f];
        if (p.kind == FaceKind::VFace && p.parent < limit) {
            out.push_back(f);
        }
    }
    return out;
}

void finish_pipeline(PipelineResult &out) {
    auto &h = out.promotion.h;
    out.canonical = all_canonical_cycles(out.promotion, out.construction.map, out.kind);
    std::vector<BitVec> gens;
    for (const auto &fc : out.canonical) {
        for (const auto *s : {&fc.sigma1, &fc.sigma2}) {
            if (*s) {
                gens.push_back(**s);
            }
        }
    }
    out.cycles = cycle_space(h, &gens);
    out.code = build_code(h, &out.cycles);
    out.code.provenance = out.kind == PipelineKind::Theorem2 ? "theorem2" : "theorem3";
}

}  // namespace

PipelineResult theorem2_pipeline(const EmbeddedGraph &seed) {
    check_seed_degrees(seed);
    PipelineResult out;
    out.kind = PipelineKind::Theorem2;
    out.seed = seed;
    out.chi = seed.euler_characteristic();
    out.dual_sides = bipartition(dual(seed));
    out.delta = out.dual_sides ? 1 : 0;
    out.construction = construct_A_with_map(seed);
    const auto &c = out.construction.colex;
    out.promotion = promote(c, v_faces(c, seed.num_vertices()), Color::R);
    if (out.dual_sides) {
        using M = ConstructionAMap;
        for (int w = 0; w < seed.num_vertices(); w++) {
            int x = seed.rotation()[w][0];
            int y = seed.rot_next(x);
            int e = out.promotion.info.inner_edge(M::short_edge(x), M::short_edge(y));
            bool f1 = (*out.dual_sides)[seed.face_of(y)] == 0;
            if ((out.promotion.h.color[e] == Color::G) != f1) {
                flip_inner_phase(out.promotion, out.construction.map.v_face(w));
            }
        }
    }
    int e = seed.num_edges();
    int v = seed.num_vertices();
    int f = seed.num_faces();
    out.predicted = {6 * e, 1 + out.delta - out.chi, 4 * e - out.chi, 2 * v + 2 * f - 1 - out.delta,
                     2 * e + 1 + out.delta, 6 * e - 1 - out.delta};
    finish_pipeline(out);
    return out;
}

PipelineResult theorem3_pipeline(const EmbeddedGraph &seed) {
    check_seed_degrees(seed);
    PipelineResult out;
    out.kind = PipelineKind::Theorem3;
    out.seed = seed;
    out.chi = seed.euler_characteristic();
    out.dual_sides = bipartition(dual(seed));
    out.delta = out.dual_sides ? 1 : 0;
    EmbeddedGraph radial = dual(medial(seed));
    out.construction = construct_A_with_map(radial);
    const auto &c = out.construction.colex;
    int nv = seed.num_vertices();
    out.promotion = promote(c, v_faces(c, nv), Color::G);
    if (out.dual_sides) {
        using M = ConstructionAMap;
        for (int w = 0; w < nv; w++) {
            int t = radial.rotation()[w][0];
            int e = out.promotion.info.inner_edge(M::sector_edge(radial.rot_prev(t)), M::sector_edge(t));
            int face_vertex = radial.head(t);
            bool f1 = (*out.dual_sides)[face_vertex - nv] == 0;
            if ((out.promotion.h.color[e] == Color::R) != f1) {
                flip_inner_phase(out.promotion, out.construction.map.v_face(w));
            }
        }
    }
    int e = seed.num_edges();
    int v = seed.num_vertices();
    int f = seed.num_faces();
    out.predicted = {10 * e, 1 - out.chi + out.delta, 6 * e - out.chi, 2 * (v + f + e) - 1 - out.delta,
                     4 * e + 1 + out.delta, 10 * e - 1 - out.delta};
    finish_pipeline(out);
    return out;
}

BombinPrediction bombin_check(const TwoColex &c) {
    int V = c.graph.num_vertices();
    int g = genus(c.graph);
    return {3 * V, 2 * g, 2 * V + 2 * g - 2, g};
}

}  // namespace tsc
