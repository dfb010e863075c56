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

#include "tsc/hypergraph.h"

#include <algorithm>
#include <set>

#include "tsc/error.h"

namespace tsc {

int Hypergraph::num_rank3() const {
    int c = 0;
    for (const auto &e : edges) {
        c += e.size() == 3;
    }
    return c;
}

std::vector<std::vector<int>> Hypergraph::incident_edges() const {
    std::vector<std::vector<int>> inc(num_vertices);
    for (int e = 0; e < num_edges(); e++) {
        for (int v : edges[e]) {
            inc[v].push_back(e);
        }
    }
    return inc;
}

int PromotionInfo::inner_edge(int rank3_a, int rank3_b) const {
    auto it = inner_between.find({std::min(rank3_a, rank3_b), std::max(rank3_a, rank3_b)});
    if (it == inner_between.end()) {
        fail(ErrorCode::UnclassifiedFace,
             "no inner edge between rank-3 edges " + std::to_string(rank3_a) + " and " + std::to_string(rank3_b));
    }
    return it->second;
}

Hypergraph hypergraph_from_colex(const TwoColex &c) {
    return promote(c, {}, Color::B).h;
}

Promotion promote(const TwoColex &colex, const std::vector<int> &F_in, Color promote_color) {
    const auto &g = colex.graph;
    std::vector<int> F = F_in;
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    for (int f : F) {
        if (f < 0 || f >= g.num_faces()) {
            fail(ErrorCode::BadFaceSize, "face " + std::to_string(f) + " does not exist");
        }
        if (colex.face_color[f] != colex.face_color[F[0]]) {
            fail(ErrorCode::MixedColorF, "faces " + std::to_string(F[0]) + " and " + std::to_string(f) +
                                             " have different colors");
        }
        size_t k = g.faces()[f].size();
        if (k % 4 != 0 || k <= 4) {
            fail(ErrorCode::BadFaceSize, "face " + std::to_string(f) + " has " + std::to_string(k) + " sides");
        }
    }
    if (!F.empty() && colex.face_color[F[0]] == promote_color) {
        fail(ErrorCode::BadPromoteColor, "promoted edges cannot share the color of the promoted faces");
    }

    Promotion out;
    auto &info = out.info;
    auto &h = out.h;
    info.colex = colex;
    info.faces = F;
    info.promote_color = promote_color;
    info.color_map = {Color::R, Color::G, Color::B};
    std::swap(info.color_map[(int)promote_color], info.color_map[(int)Color::B]);
    info.promoted_index.assign(g.num_faces(), -1);

    h.num_vertices = g.num_vertices();
    for (int e = 0; e < g.num_edges(); e++) {
        h.edges.push_back({g.edges()[e].first, g.edges()[e].second});
        h.color.push_back(info.color_map[(int)colex.edge_color[e]]);
        h.provenance.push_back("colex edge " + std::to_string(e));
    }

    std::vector<HFace> extra;
    h.faces.resize(g.num_faces());
    for (int f = 0; f < g.num_faces(); f++) {
        for (int d : g.faces()[f]) {
            h.faces[f].verts.push_back(g.tail(d));
            h.faces[f].hedges.push_back(dart_edge(d));
        }
    }

    for (int f : F) {
        const auto &walk = g.faces()[f];
        int k = (int)walk.size();
        int s = 0;
        while (colex.edge_color[dart_edge(walk[s])] != promote_color) {
            s++;
        }
        std::vector<int> d(k);
        for (int i = 0; i < k; i++) {
            d[i] = walk[(s + i) % k];
        }
        PromotedFace pf;
        pf.face = f;
        for (int i = 0; i < k; i++) {
            pf.boundary.push_back(g.tail(d[i]));
        }
        int m = k / 2;
        for (int j = 0; j < m; j++) {
            int e = dart_edge(d[2 * j]);
            if (colex.edge_color[e] != promote_color) {
                fail(ErrorCode::BadPromoteColor, "face " + std::to_string(f) + " does not alternate colors");
            }
            int u = h.num_vertices++;
            pf.new_vertices.push_back(u);
            pf.rank3.push_back(e);
            h.edges[e] = {pf.boundary[2 * j], pf.boundary[2 * j + 1], u};
            h.color[e] = Color::B;
            h.provenance[e] = "rank-3 from colex edge " + std::to_string(e) + " in face " + std::to_string(f);
        }
        for (int j = 0; j < m; j++) {
            int id = h.num_edges();
            h.edges.push_back({pf.new_vertices[j], pf.new_vertices[(j + 1) % m]});
            h.color.push_back(j % 2 == 0 ? Color::R : Color::G);
            h.provenance.push_back("inner edge of face " + std::to_string(f));
            pf.inner.push_back(id);
            int a = pf.rank3[j];
            int b = pf.rank3[(j + 1) % m];
            info.inner_between[{std::min(a, b), std::max(a, b)}] = id;
        }
        HFace inner;
        for (int j = 0; j < m; j++) {
            int jn = (j + 1) % m;
            inner.verts.push_back(pf.new_vertices[j]);
            inner.hedges.push_back(pf.inner[j]);
            extra.push_back({{pf.boundary[2 * j], pf.boundary[2 * j + 1], pf.new_vertices[j]},
                             {pf.rank3[j], pf.rank3[j], pf.rank3[j]}});
            extra.push_back({{pf.boundary[2 * j + 1], pf.boundary[(2 * j + 2) % k], pf.new_vertices[jn],
                              pf.new_vertices[j]},
                             {dart_edge(d[2 * j + 1]), pf.rank3[jn], pf.inner[j], pf.rank3[j]}});
        }
        h.faces[f] = std::move(inner);
        info.promoted_index[f] = (int)info.promoted.size();
        info.promoted.push_back(std::move(pf));
    }
    h.faces.insert(h.faces.end(), extra.begin(), extra.end());
    return out;
}

void flip_inner_phase(Promotion &p, int colex_face) {
    int idx = p.info.promoted_index.at(colex_face);
    if (idx < 0) {
        fail(ErrorCode::UnclassifiedFace, "face " + std::to_string(colex_face) + " is not promoted");
    }
    for (int e : p.info.promoted[idx].inner) {
        p.h.color[e] = p.h.color[e] == Color::R ? Color::G : Color::R;
    }
}

HReport validate_H(const Hypergraph &h) {
    HReport r;
    auto note = [&](bool &flag, const std::string &w) {
        if (flag) {
            r.witnesses.push_back(w);
        }
        flag = false;
    };
    for (int e = 0; e < h.num_edges(); e++) {
        int k = h.rank(e);
        if (k != 2 && k != 3) {
            note(r.h1, "H1: edge " + std::to_string(e) + " has rank " + std::to_string(k));
        }
    }
    auto inc = h.incident_edges();
    for (int v = 0; v < h.num_vertices; v++) {
        if (inc[v].size() != 3) {
            note(r.h2, "H2: vertex " + std::to_string(v) + " has " + std::to_string(inc[v].size()) + " edges");
        }
    }
    std::map<std::pair<int, int>, int> pair_owner;
    for (int e = 0; e < h.num_edges(); e++) {
        const auto &vs = h.edges[e];
        for (size_t i = 0; i < vs.size(); i++) {
            for (size_t j = i + 1; j < vs.size(); j++) {
                auto key = std::make_pair(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
                auto [it, fresh] = pair_owner.emplace(key, e);
                if (!fresh && it->second != e) {
                    note(r.h3, "H3: edges " + std::to_string(it->second) + " and " + std::to_string(e) +
                                   " share two vertices");
                }
            }
        }
    }
    std::vector<int> r3_at(h.num_vertices, -1);
    for (int e = 0; e < h.num_edges(); e++) {
        if (h.rank(e) != 3) {
            continue;
        }
        for (int v : h.edges[e]) {
            if (r3_at[v] != -1) {
                note(r.h4, "H4: rank-3 edges " + std::to_string(r3_at[v]) + " and " + std::to_string(e) +
                               " meet at vertex " + std::to_string(v));
            }
            r3_at[v] = e;
        }
    }
    if ((int)h.color.size() != h.num_edges()) {
        note(r.colored, "hypergraph is not colored");
        r.coloring_proper = false;
        r.rank3_monochrome = false;
        return r;
    }
    for (int v = 0; v < h.num_vertices; v++) {
        int mask = 0;
        for (int e : inc[v]) {
            if (mask & (1 << (int)h.color[e])) {
                note(r.coloring_proper, "coloring: two edges of color " + std::string(1, color_char(h.color[e])) +
                                            " at vertex " + std::to_string(v));
            }
            mask |= 1 << (int)h.color[e];
        }
    }
    int first3 = -1;
    for (int e = 0; e < h.num_edges(); e++) {
        if (h.rank(e) != 3) {
            continue;
        }
        if (first3 == -1) {
            first3 = e;
        } else if (h.color[e] != h.color[first3]) {
            note(r.rank3_monochrome, "rank-3 edges " + std::to_string(first3) + " and " + std::to_string(e) +
                                         " have different colors");
        }
    }
    return r;
}

namespace {

struct EdgeColorSearch {
    const Hypergraph &h;
    std::vector<std::vector<int>> inc;
    std::vector<int> col;

    int used_mask(int e) const {
        int mask = 0;
        for (int v : h.edges[e]) {
            for (int f : inc[v]) {
                if (f != e && col[f] != -1) {
                    mask |= 1 << col[f];
                }
            }
        }
        return mask;
    }

    bool run() {
        int best = -1;
        int best_free = 4;
        for (int e = 0; e < h.num_edges(); e++) {
            if (col[e] != -1) {
                continue;
            }
            int free = 3 - __builtin_popcount(used_mask(e));
            if (free < best_free) {
                best_free = free;
                best = e;
                if (free <= 1) {
                    break;
                }
            }
        }
        if (best == -1) {
            return true;
        }
        int mask = used_mask(best);
        for (int c = 0; c < 3; c++) {
            if (mask & (1 << c)) {
                continue;
            }
            col[best] = c;
            if (run()) {
                return true;
            }
        }
        col[best] = -1;
        return false;
    }
};

}  // namespace

std::optional<std::vector<Color>> three_edge_color(const Hypergraph &h) {
    EdgeColorSearch s{h, h.incident_edges(), std::vector<int>(h.num_edges(), -1)};
    for (int e = 0; e < h.num_edges(); e++) {
        if (h.rank(e) == 3) {
            s.col[e] = (int)Color::B;
        }
    }
    for (int v = 0; v < h.num_vertices; v++) {
        int mask = 0;
        for (int e : s.inc[v]) {
            if (s.col[e] != -1) {
                if (mask & (1 << s.col[e])) {
                    return std::nullopt;
                }
                mask |= 1 << s.col[e];
            }
        }
    }
    if (!s.run()) {
        return std::nullopt;
    }
    std::vector<Color> out;
    for (int c : s.col) {
        out.push_back((Color)c);
    }
    return out;
}

std::vector<BitVec> incidence_rows(const Hypergraph &h) {
    std::vector<BitVec> rows(h.num_vertices, BitVec(h.num_edges()));
    for (int e = 0; e < h.num_edges(); e++) {
        for (int v : h.edges[e]) {
            rows[v].flip(e);
        }
    }
    return rows;
}

int incidence_rank(const Hypergraph &h) {
    return (int)gf2_rank(incidence_rows(h));
}

bool is_hypercycle(const Hypergraph &h, const BitVec &sigma, int *bad_vertex) {
    std::vector<int> parity(h.num_vertices, 0);
    for (int e : sigma.ones()) {
        for (int v : h.edges[e]) {
            parity[v] ^= 1;
        }
    }
    for (int v = 0; v < h.num_vertices; v++) {
        if (parity[v]) {
            if (bad_vertex != nullptr) {
                *bad_vertex = v;
            }
            return false;
        }
    }
    return true;
}

HypercycleSpace cycle_space(const Hypergraph &h, const std::vector<BitVec> *trivial_generators) {
    HypercycleSpace cs;
    auto rows = incidence_rows(h);
    cs.incidence_rank = (int)gf2_rank(rows);
    cs.basis = gf2_nullspace(rows, h.num_edges());
    cs.dim = (int)cs.basis.size();
    std::vector<BitVec> gens;
    if (trivial_generators != nullptr) {
        gens = *trivial_generators;
    } else {
        for (const auto &f : h.faces) {
            bool plain = true;
            BitVec s(h.num_edges());
            for (int e : f.hedges) {
                plain &= h.rank(e) == 2;
                s.flip(e);
            }
            if (plain) {
                gens.push_back(s);
            }
        }
    }
    cs.trivial = gf2_basis_of(gens, h.num_edges());
    cs.trivial_dim = (int)cs.trivial.size();
    return cs;
}

}  // namespace tsc
