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

#include <chrono>
#include <cstdio>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "tsc/error.h"
#include "tsc/fixtures.h"
#include "tsc/report.h"

using namespace tsc;

namespace {

using Row = std::vector<uint64_t>;

Row row_of(const BitVec &b) {
    return b.words();
}

int rank_of(std::vector<Row> rows) {
    int rank = 0;
    size_t words = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < 64 * words && rank < (int)rows.size(); col++) {
        uint64_t bit = uint64_t{1} << (col & 63);
        size_t w = col >> 6;
        int piv = -1;
        for (int i = rank; i < (int)rows.size(); i++) {
            if (rows[i][w] & bit) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        for (int i = 0; i < (int)rows.size(); i++) {
            if (i != rank && (rows[i][w] & bit)) {
                for (size_t k = 0; k < words; k++) {
                    rows[i][k] ^= rows[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

bool symp(const Pauli &a, const Pauli &b, int n) {
    BitVec x = a.symplectic();
    BitVec y = b.symplectic();
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += x.get(i) & y.get(n + i);
        s += x.get(n + i) & y.get(i);
    }
    return s & 1;
}

struct Params {
    int n, k, r, s;
};

// dim G from the generator rank, 2r from the rank of the commutation matrix.
Params oracle_params(const Hypergraph &h) {
    int n = h.num_vertices;
    auto gens = gauge_generators(h);
    std::vector<Row> rows;
    for (const auto &g : gens) {
        rows.push_back(row_of(g.symplectic()));
    }
    int dim_g = rank_of(rows);
    size_t m = gens.size();
    std::vector<Row> gram(m, Row((m + 63) / 64, 0));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (symp(gens[i], gens[j], n)) {
                gram[i][j >> 6] |= uint64_t{1} << (j & 63);
                gram[j][i >> 6] |= uint64_t{1} << (i & 63);
            }
        }
    }
    int two_r = rank_of(gram);
    int s = dim_g - two_r;
    int dim_c = 2 * n - dim_g;
    return {n, (dim_c - s) / 2, two_r / 2, s};
}

int oracle_incidence_rank(const Hypergraph &h) {
    std::vector<Row> rows(h.num_vertices, Row((h.num_edges() + 63) / 64, 0));
    for (int e = 0; e < h.num_edges(); e++) {
        for (int v : h.edges[e]) {
            rows[v][e >> 6] ^= uint64_t{1} << (e & 63);
        }
    }
    return rank_of(rows);
}

int oracle_delta(const EmbeddedGraph &g) {
    int nf = g.num_faces();
    std::vector<int> side(nf, -1);
    for (int start = 0; start < nf; start++) {
        if (side[start] >= 0) {
            continue;
        }
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int d : g.faces()[f]) {
                int o = g.face_of(twin(d));
                if (side[o] < 0) {
                    side[o] = 1 - side[f];
                    q.push(o);
                } else if (side[o] == side[f]) {
                    return 0;
                }
            }
        }
    }
    return 1;
}

bool oracle_three_colorable(const EmbeddedGraph &g) {
    const auto &edges = g.edges();
    std::vector<int> col(edges.size(), -1);
    std::function<bool(size_t)> go = [&](size_t e) {
        if (e == edges.size()) {
            return true;
        }
        for (int c = 0; c < 3; c++) {
            bool okc = true;
            for (size_t f = 0; f < e && okc; f++) {
                bool adj = edges[f].first == edges[e].first || edges[f].first == edges[e].second ||
                           edges[f].second == edges[e].first || edges[f].second == edges[e].second;
                okc = !(adj && col[f] == c);
            }
            if (okc) {
                col[e] = c;
                if (go(e + 1)) {
                    return true;
                }
            }
        }
        col[e] = -1;
        return false;
    };
    return go(0);
}

struct Fixture {
    std::string name;
    EmbeddedGraph seed;
    PipelineResult p;
};

std::vector<Fixture> pipeline_fixtures() {
    std::vector<Fixture> out;
    for (int m : {2, 3}) {
        auto seed = torus_grid(m, m);
        std::string sz = std::to_string(m) + "x" + std::to_string(m);
        out.push_back({"theorem2 " + sz, seed, theorem2_pipeline(seed)});
        out.push_back({"theorem3 " + sz, seed, theorem3_pipeline(seed)});
    }
    return out;
}

struct Other {
    std::string name;
    Hypergraph h;
};

std::vector<Other> other_fixtures() {
    return {{"bombin honeycomb 3x3", bombin_hypergraph(*validate_colex(honeycomb_torus(3, 3)))},
            {"bombin honeycomb 3x6", bombin_hypergraph(*validate_colex(honeycomb_torus(3, 6)))},
            {"bombin 4-8", bombin_hypergraph(lattice_4_8(4, 4))},
            {"bombin 4-6-12", bombin_hypergraph(lattice_4_6_12(2, 2))},
            {"honeycomb colex", hypergraph_from_colex(*validate_colex(honeycomb_torus(3, 3)))}};
}

int failures = 0;

void report(int id, const std::string &title, bool pass, const std::string &detail) {
    std::printf("AC%d %s: %s%s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.empty() ? "" : " | ",
                detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

std::string tuple(const Params &p) {
    return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.r) + "," +
           std::to_string(p.s) + ")";
}

bool same(const SubsystemCode &c, const Params &p) {
    return c.n == p.n && c.k == p.k && c.r == p.r && c.s == p.s;
}

}  // namespace

int main() {
    auto fixtures = pipeline_fixtures();
    auto others = other_fixtures();

    {
        bool pass = true;
        std::string detail;
        double worst = 0;
        auto one = [&](const std::string &name, const Hypergraph &h, const SubsystemCode &c) {
            auto t0 = std::chrono::steady_clock::now();
            Params o = oracle_params(h);
            worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            bool ok = same(c, o) && c.identities_hold() && o.n == o.k + o.r + o.s;
            if (!ok) {
                detail += name + " " + tuple(o) + "; ";
            }
            pass &= ok;
        };
        for (const auto &f : fixtures) {
            one(f.name, f.p.promotion.h, f.p.code);
        }
        for (const auto &o : others) {
            one(o.name, o.h, build_code(o.h));
        }
        pass &= worst < 1.0;
        report(1, "parameter identities", pass,
               detail + std::to_string(fixtures.size() + others.size()) + " codes, slowest oracle " +
                   std::to_string(worst) + " s");
    }

    {
        bool pass = true;
        std::string detail;
        const Params published[] = {{48, 2, 32, 14}, {108, 1, 72, 35}};
        int i = 0;
        for (const auto &f : fixtures) {
            if (f.p.kind != PipelineKind::Theorem2) {
                continue;
            }
            int e = f.seed.num_edges();
            int chi = f.seed.euler_characteristic();
            int d = oracle_delta(f.seed);
            Params closed{6 * e, 1 + d - chi, 4 * e - chi, 2 * f.seed.num_vertices() + 2 * f.seed.num_faces() - 1 - d};
            Params o = oracle_params(f.p.promotion.h);
            bool ok = same(f.p.code, closed) && same(f.p.code, o) && same(f.p.code, published[i]) && f.p.delta == d;
            pass &= ok;
            detail += f.name + " " + tuple(o) + " delta=" + std::to_string(d) + "; ";
            i++;
        }
        report(2, "theorem 2 parameters", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (const auto &f : fixtures) {
            if (f.p.kind != PipelineKind::Theorem3) {
                continue;
            }
            int e = f.seed.num_edges();
            int chi = f.seed.euler_characteristic();
            int d = oracle_delta(f.seed);
            int v = f.seed.num_vertices();
            int nf = f.seed.num_faces();
            Params closed{10 * e, 1 - chi + d, 6 * e - chi, 2 * (v + nf + e) - 1 - d};
            const auto &h = f.p.promotion.h;
            int inc = oracle_incidence_rank(h);
            int dim_l = h.num_edges() - inc;
            bool ok = same(f.p.code, closed) && same(f.p.code, oracle_params(h)) && dim_l == 4 * e + 1 + d &&
                      inc == 10 * e - 1 - d && f.p.cycles.dim == dim_l && f.p.cycles.incidence_rank == inc;
            if (e == 8) {
                ok &= f.p.code.n == 80 && f.p.code.k == 2 && f.p.code.r == 48 && f.p.code.s == 30 && dim_l == 34 &&
                      inc == 78;
            }
            pass &= ok;
            detail += f.name + " " + tuple(closed) + " dimL=" + std::to_string(dim_l) + " inc=" + std::to_string(inc) +
                      "; ";
        }
        report(3, "theorem 3 parameters", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 6}}) {
            auto c = *validate_colex(honeycomb_torus(m, n));
            int V = c.graph.num_vertices();
            int g = (2 - c.graph.euler_characteristic()) / 2;
            Params o = oracle_params(bombin_hypergraph(c));
            bool ok = g == 1 && o.n == 3 * V && o.k == 2 * g && o.r == 2 * V + 2 * g - 2;
            pass &= ok;
            detail += "V=" + std::to_string(V) + " " + tuple(o) + "; ";
        }
        report(4, "bombin formula", pass, detail);
    }

    {
        long pairs = 0;
        long bad = 0;
        auto scan = [&](const Hypergraph &h) {
            int n = h.num_vertices;
            std::vector<Pauli> k;
            for (int e = 0; e < h.num_edges(); e++) {
                k.push_back(link_operator(h.edges[e], &h.color[e], n));
            }
            for (int a = 0; a < h.num_edges(); a++) {
                for (int b = a + 1; b < h.num_edges(); b++) {
                    int shared = 0;
                    for (int u : h.edges[a]) {
                        for (int v : h.edges[b]) {
                            shared += u == v;
                        }
                    }
                    bad += symp(k[a], k[b], n) != (shared % 2 == 1);
                    pairs++;
                }
            }
        };
        for (const auto &f : fixtures) {
            scan(f.p.promotion.h);
        }
        for (const auto &o : others) {
            scan(o.h);
        }
        report(5, "commutation law", bad == 0,
               std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations");
    }

    {
        bool pass = true;
        std::string detail;
        for (const auto &f : fixtures) {
            auto dep = dependency_check(f.p);
            std::vector<Row> rows;
            for (const auto &fc : f.p.canonical) {
                for (const auto *s : {&fc.sigma1, &fc.sigma2}) {
                    if (*s) {
                        rows.push_back(row_of(cycle_operator(f.p.promotion.h, **s).symplectic()));
                    }
                }
            }
            int relations = (int)rows.size() - rank_of(rows);
            int d = oracle_delta(f.seed);
            bool ok = dep.ok() && relations == 1 + d && dep.relation_dim == relations;
            bool first = f.p.kind == PipelineKind::Theorem2 ? dep.relations.count("R11") && dep.relations.at("R11")
                                                            : dep.relations.count("R1") && dep.relations.at("R1");
            ok &= first;
            for (const auto &[name, held] : dep.relations) {
                ok &= held;
            }
            ok &= (int)dep.relations.size() == 1 + 2 * d;
            pass &= ok;
            detail += f.name + " relations=" + std::to_string(relations) + "; ";
        }
        report(6, "dependency relations", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        long cosets = 0;
        for (const auto &f : fixtures) {
            auto lem = nontrivial_cycle_checks(f.p.promotion.h, f.p.cycles, f.p.code, f.p.canonical, 20);
            pass &= lem.ok();
            cosets += lem.cosets_checked;
            if (!lem.ok()) {
                detail += f.name + " " + std::to_string(lem.violations) + " violations; ";
            }
        }
        report(7, "nontrivial cycles", pass, detail + std::to_string(cosets) + " cosets checked");
    }

    {
        auto pet = petersen_graph();
        bool pass = !oracle_three_colorable(pet) && !validate_colex(pet).has_value();
        Hypergraph h;
        h.num_vertices = pet.num_vertices();
        for (auto [u, v] : pet.edges()) {
            h.edges.push_back({u, v});
        }
        pass &= !three_edge_color(h).has_value();
        std::string detail = "search returns absence";
        try {
            build_from_json(graph_to_json(pet), PipelineChoice::Custom);
            pass = false;
            detail += "; pipeline did not abort";
        } catch (const Error &e) {
            pass &= e.code() == ErrorCode::NotEdgeColorable;
            detail += "; pipeline aborts with " + std::string(error_code_name(e.code()));
        }
        report(8, "petersen negative test", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (const auto &f : fixtures) {
            const auto &h = f.p.promotion.h;
            auto gens = stabilizer_generators(h, f.p.canonical);
            auto relaxed = build_schedule(h, gens, ScheduleModel::Relaxed);
            auto exclusive = build_schedule(h, gens, ScheduleModel::Exclusive);
            bool ok = relaxed.time_steps == 3 && relaxed.rounds.size() == 3 && exclusive.time_steps == 4;
            for (const auto *sch : {&relaxed, &exclusive}) {
                auto sim = simulate_syndrome(h, gens, *sch, 100, 7);
                ok &= sim.trials >= 100 && sim.agreement == 1.0 && sim.agreements == sim.pairs && sim.idempotent &&
                      sim.direct_agrees;
            }
            pass &= ok;
            detail += f.name + " " + std::to_string(relaxed.rounds.size()) + "/" +
                      std::to_string(exclusive.time_steps) + "; ";
        }
        report(9, "schedule correctness", pass, detail + "100 trials each");
    }

    {
        bool pass = true;
        std::string detail;
        for (const auto &f : fixtures) {
            auto v = distinctness_check(f.p.promotion.h).verdict();
            bool expect_distinct = f.p.kind == PipelineKind::Theorem3 || oracle_delta(f.seed) == 0;
            pass &= v == (expect_distinct ? "distinct from Construction B" : "coincides");
            detail += f.name + ": " + v + "; ";
        }
        report(10, "distinctness", pass, detail);
    }

    return failures == 0 ? 0 : 1;
}
