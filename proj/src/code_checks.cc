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

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "tsc/code.h"
#include "tsc/error.h"

namespace tsc {

namespace {

std::vector<int> rank3_edges(const Hypergraph &h) {
    std::vector<int> out;
    for (int e = 0; e < h.num_edges(); e++) {
        if (h.rank(e) == 3) {
            out.push_back(e);
        }
    }
    return out;
}

BitVec project(const BitVec &s, const std::vector<int> &coords) {
    BitVec out(coords.size());
    for (size_t i = 0; i < coords.size(); i++) {
        if (s.get(coords[i])) {
            out.set(i);
        }
    }
    return out;
}

/// Basis vectors of cs.basis independent modulo the trivial subspace.
std::vector<BitVec> quotient_basis(const HypercycleSpace &cs, size_t width) {
    Gf2Basis b(width);
    for (const auto &t : cs.trivial) {
        b.add(t);
    }
    std::vector<BitVec> out;
    for (const auto &s : cs.basis) {
        if (b.add(s)) {
            out.push_back(s);
        }
    }
    return out;
}

bool next_combination(std::vector<int> &idx, int n) {
    int k = (int)idx.size();
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) {
        i--;
    }
    if (i < 0) {
        return false;
    }
    idx[i]++;
    for (int j = i + 1; j < k; j++) {
        idx[j] = idx[j - 1] + 1;
    }
    return true;
}

}  // namespace

DistanceBound distance_bound(const Hypergraph &h, const HypercycleSpace &cs, int coset_cap) {
    DistanceBound out;
    auto coords = rank3_edges(h);
    auto q = quotient_basis(cs, h.num_edges());
    out.quotient_dim = (int)q.size();
    if (coords.empty()) {
        return out;
    }
    out.applicable = true;
    if (out.quotient_dim > coset_cap) {
        fail(ErrorCode::QuotientTooLarge, "quotient has dimension " + std::to_string(out.quotient_dim) +
                                              ", cap is " + std::to_string(coset_cap));
    }
    if (out.quotient_dim == 0) {
        out.applicable = false;
        return out;
    }
    size_t m = coords.size();
    std::vector<BitVec> ps, pd;
    for (const auto &s : cs.basis) {
        ps.push_back(project(s, coords));
    }
    for (const auto &t : cs.trivial) {
        pd.push_back(project(t, coords));
    }
    int dim_ps = (int)gf2_rank(ps);
    int dim_pd = (int)gf2_rank(pd);
    if (dim_ps - dim_pd != out.quotient_dim) {
        out.ell = 0;
        return out;
    }
    auto h_sigma = gf2_nullspace(ps, m);
    auto h_delta = gf2_nullspace(pd, m);
    int upper = (int)m + 1;
    Gf2Basis pdb(m);
    for (const auto &v : pd) {
        pdb.add(v);
    }
    for (const auto &s : q) {
        upper = std::min(upper, (int)pdb.reduce(project(s, coords)).popcount());
    }
    std::vector<BitVec> cols_s(m, BitVec(h_sigma.size())), cols_d(m, BitVec(h_delta.size()));
    for (size_t i = 0; i < h_sigma.size(); i++) {
        for (size_t j = 0; j < m; j++) {
            if (h_sigma[i].get(j)) {
                cols_s[j].set(i);
            }
        }
    }
    for (size_t i = 0; i < h_delta.size(); i++) {
        for (size_t j = 0; j < m; j++) {
            if (h_delta[i].get(j)) {
                cols_d[j].set(i);
            }
        }
    }
    for (int w = 1; w < upper; w++) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; i++) {
            idx[i] = i;
        }
        do {
            BitVec ss(h_sigma.size()), sd(h_delta.size());
            for (int j : idx) {
                ss ^= cols_s[j];
                sd ^= cols_d[j];
            }
            if (!ss.any() && sd.any()) {
                out.ell = w;
                return out;
            }
        } while (next_combination(idx, (int)m));
    }
    out.ell = upper;
    return out;
}

LemmaReport nontrivial_cycle_checks(const Hypergraph &h,
                                    const HypercycleSpace &cs,
                                    const SubsystemCode &code,
                                    const std::vector<FaceCycles> &canonical,
                                    int coset_cap) {
    LemmaReport rep;
    auto coords = rank3_edges(h);
    auto q = quotient_basis(cs, h.num_edges());
    if ((int)q.size() > coset_cap) {
        fail(ErrorCode::QuotientTooLarge, "quotient has dimension " + std::to_string(q.size()) + ", cap is " +
                                              std::to_string(coset_cap));
    }
    std::vector<BitVec> ps, pd;
    for (const auto &s : cs.basis) {
        ps.push_back(project(s, coords));
    }
    for (const auto &t : cs.trivial) {
        pd.push_back(project(t, coords));
    }
    rep.kernel_contained = (int)gf2_rank(ps) - (int)gf2_rank(pd) == (int)q.size();
    if (!rep.kernel_contained) {
        rep.witnesses.push_back("a nontrivial hypercycle avoids every rank-3 edge");
    }
    std::vector<Pauli> wq;
    for (const auto &s : q) {
        wq.push_back(cycle_operator(h, s));
    }
    BitVec sigma(h.num_edges());
    Pauli w(h.num_vertices);
    long total = (1L << q.size()) - 1;
    for (long i = 1; i <= total; i++) {
        int bit = __builtin_ctzl(i);
        sigma ^= q[bit];
        w *= wq[bit];
        rep.cosets_checked++;
        if (coords.empty() || !project(sigma, coords).any()) {
            if (rep.kernel_contained) {
                rep.violations++;
                rep.witnesses.push_back("coset " + std::to_string(i) + " has a rank-3-free representative");
            }
        }
        if (code.gauge.contains(w)) {
            rep.violations++;
            rep.witnesses.push_back("coset " + std::to_string(i) + " has its cycle operator in the gauge group");
        }
    }
    for (const auto &fc : canonical) {
        for (const auto *s : {&fc.sigma1, &fc.sigma2}) {
            if (!*s) {
                continue;
            }
            rep.trivial_checked++;
            Pauli t = cycle_operator(h, **s);
            if (!code.gauge.contains(t) || !code.stabilizer.contains(t)) {
                rep.violations++;
                rep.witnesses.push_back("canonical cycle of face " + std::to_string(fc.face) +
                                        " is not a stabilizer");
            }
        }
    }
    return rep;
}

bool DependencyReport::ok() const {
    bool all = relation_dim == expected_relation_dim && computed_s == expected_s && pauli_identities;
    for (const auto &[name, held] : relations) {
        all &= held;
    }
    return all && named_rank == expected_relation_dim;
}

namespace {

struct GenTable {
    const PipelineResult &p;
    std::map<int, int> idx1, idx2;
    std::vector<BitVec> vecs;

    explicit GenTable(const PipelineResult &pr) : p(pr) {
        for (const auto &fc : p.canonical) {
            if (fc.sigma1) {
                idx1[fc.face] = (int)vecs.size();
                vecs.push_back(*fc.sigma1);
            }
            if (fc.sigma2) {
                idx2[fc.face] = (int)vecs.size();
                vecs.push_back(*fc.sigma2);
            }
        }
    }

    /// Coefficient vector of sum over faces of the chosen generators.
    BitVec combo(const std::vector<std::pair<int, int>> &terms) const {
        BitVec c(vecs.size());
        for (auto [face, which] : terms) {
            const auto &m = which == 1 ? idx1 : idx2;
            auto it = m.find(face);
            if (it == m.end()) {
                fail(ErrorCode::DependencyViolation, "face " + std::to_string(face) + " lacks generator sigma" +
                                                         std::to_string(which));
            }
            c.flip(it->second);
        }
        return c;
    }

    bool vanishes(const BitVec &coeff) const {
        BitVec s(p.promotion.h.num_edges());
        for (int i : coeff.ones()) {
            s ^= vecs[i];
        }
        return !s.any();
    }

    bool pauli_identity(const BitVec &coeff) const {
        Pauli w(p.promotion.h.num_vertices);
        for (int i : coeff.ones()) {
            w *= cycle_operator(p.promotion.h, vecs[i]);
        }
        return w.is_identity();
    }
};

using Terms = std::vector<std::pair<int, int>>;

void add_terms(Terms &t, const std::vector<int> &faces, std::initializer_list<int> which) {
    for (int f : faces) {
        for (int w : which) {
            t.emplace_back(f, w);
        }
    }
}

}  // namespace

DependencyReport dependency_check(const PipelineResult &p) {
    DependencyReport rep;
    rep.bipartite = p.dual_sides.has_value();
    GenTable gt(p);
    rep.generators = (int)gt.vecs.size();
    rep.relation_dim = rep.generators - (int)gf2_rank(gt.vecs);
    rep.expected_relation_dim = 1 + p.delta;
    int two = 0, one = 0;
    for (const auto &fc : p.canonical) {
        int c = (fc.sigma1 ? 1 : 0) + (fc.sigma2 ? 1 : 0);
        two += c == 2;
        one += c == 1;
    }
    rep.expected_s = 2 * two + one - 1 - p.delta;
    rep.computed_s = p.code.s;

    const auto &colex = p.construction.colex;
    const auto &par = *colex.parentage;
    int nv = p.seed.num_vertices();
    std::vector<int> fv, ff, fe;
    std::vector<int> f_class;
    for (int f = 0; f < colex.graph.num_faces(); f++) {
        if (p.kind == PipelineKind::Theorem2) {
            if (par[f].kind == FaceKind::VFace) {
                fv.push_back(f);
            } else if (par[f].kind == FaceKind::FFace) {
                ff.push_back(f);
                f_class.push_back(rep.bipartite ? (*p.dual_sides)[par[f].parent] : 0);
            }
        } else {
            if (par[f].kind == FaceKind::VFace && par[f].parent < nv) {
                fv.push_back(f);
            } else if (par[f].kind == FaceKind::VFace) {
                ff.push_back(f);
                f_class.push_back(rep.bipartite ? (*p.dual_sides)[par[f].parent - nv] : 0);
            } else if (par[f].kind == FaceKind::EFace) {
                fe.push_back(f);
            }
        }
    }
    auto split = [&](int cls) {
        std::vector<int> out;
        for (size_t i = 0; i < ff.size(); i++) {
            if (f_class[i] == cls) {
                out.push_back(ff[i]);
            }
        }
        return out;
    };

    std::vector<BitVec> named;
    auto record = [&](const std::string &name, const BitVec &coeff) {
        bool held = gt.vanishes(coeff);
        rep.relations[name] = held;
        if (!held) {
            rep.messages.push_back(name + " does not vanish");
        }
        if (held && !gt.pauli_identity(coeff)) {
            rep.pauli_identities = false;
            rep.messages.push_back(name + " cycle operators do not multiply to the identity");
        }
        named.push_back(coeff);
    };

    if (p.kind == PipelineKind::Theorem2) {
        Terms r11;
        add_terms(r11, fv, {1});
        add_terms(r11, ff, {2});
        record("R11", gt.combo(r11));
        if (rep.bipartite) {
            std::optional<int> chosen;
            for (int cls : {0, 1}) {
                Terms r12;
                add_terms(r12, ff, {1});
                add_terms(r12, split(cls), {2});
                add_terms(r12, fv, {2});
                if (gt.vanishes(gt.combo(r12))) {
                    chosen = cls;
                    break;
                }
            }
            int c1 = chosen.value_or(0);
            Terms r12, r13;
            add_terms(r12, ff, {1});
            add_terms(r12, split(c1), {2});
            add_terms(r12, fv, {2});
            add_terms(r13, ff, {1});
            add_terms(r13, split(1 - c1), {2});
            add_terms(r13, fv, {1, 2});
            record("R12", gt.combo(r12));
            record("R13", gt.combo(r13));
        }
    } else if (p.kind == PipelineKind::Theorem3) {
        Terms r1;
        add_terms(r1, fv, {1});
        add_terms(r1, fe, {1});
        add_terms(r1, ff, {1, 2});
        record("R1", gt.combo(r1));
        if (rep.bipartite) {
            const auto &radial = p.construction.map.seed;
            auto e_touching = [&](int cls) {
                std::vector<int> out;
                for (int f : fe) {
                    auto [a, b] = radial.edges()[par[f].parent];
                    int fvx = a >= nv ? a : b;
                    if ((*p.dual_sides)[fvx - nv] == cls) {
                        out.push_back(f);
                    }
                }
                return out;
            };
            std::optional<std::pair<int, int>> chosen;
            for (int c1 : {0, 1}) {
                for (int ce : {0, 1}) {
                    Terms a, b;
                    add_terms(a, fv, {2});
                    add_terms(a, e_touching(ce), {1});
                    add_terms(a, split(c1), {2});
                    add_terms(a, split(1 - c1), {1});
                    add_terms(b, fv, {1, 2});
                    add_terms(b, e_touching(1 - ce), {1});
                    add_terms(b, split(c1), {1});
                    add_terms(b, split(1 - c1), {2});
                    if (!chosen && gt.vanishes(gt.combo(a)) && gt.vanishes(gt.combo(b))) {
                        chosen = {c1, ce};
                    }
                }
            }
            auto [c1, ce] = chosen.value_or(std::make_pair(0, 0));
            Terms a, b;
            add_terms(a, fv, {2});
            add_terms(a, e_touching(ce), {1});
            add_terms(a, split(c1), {2});
            add_terms(a, split(1 - c1), {1});
            add_terms(b, fv, {1, 2});
            add_terms(b, e_touching(1 - ce), {1});
            add_terms(b, split(c1), {1});
            add_terms(b, split(1 - c1), {2});
            record("R2a", gt.combo(a));
            record("R2b", gt.combo(b));
        }
    }
    rep.named_rank = (int)gf2_rank(named);
    if (rep.relation_dim != rep.expected_relation_dim) {
        rep.messages.push_back("relation space has dimension " + std::to_string(rep.relation_dim) + ", expected " +
                               std::to_string(rep.expected_relation_dim));
    }
    if (rep.computed_s != rep.expected_s) {
        rep.messages.push_back("stabilizer dimension " + std::to_string(rep.computed_s) + ", expected " +
                               std::to_string(rep.expected_s));
    }
    return rep;
}

DistinctnessReport distinctness_check(const Hypergraph &h) {
    DistinctnessReport rep;
    EmbeddedGraph g = contract_rank3(h);
    rep.six_valent = true;
    for (int v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) != 6) {
            rep.six_valent = false;
            rep.witness_vertex = v;
            break;
        }
    }
    if (!rep.six_valent) {
        rep.distinct = true;
        return rep;
    }
    std::map<std::pair<int, int>, int> seen;
    std::vector<int> dup;
    for (int e = 0; e < g.num_edges(); e++) {
        auto [a, b] = g.edges()[e];
        auto key = std::minmax(a, b);
        if (!seen.emplace(key, e).second) {
            dup.push_back(e);
        }
    }
    try {
        EmbeddedGraph simple = delete_edges(g, dup).graph;
        rep.simplified_is_colex = validate_colex(simple).has_value();
    } catch (const Error &) {
        rep.simplified_is_colex = false;
    }
    rep.distinct = !rep.simplified_is_colex;
    return rep;
}

std::optional<int> exact_distance(const SubsystemCode &code, int max_n) {
    int n = code.n;
    if (n > max_n || code.k == 0) {
        return std::nullopt;
    }
    auto stab = code.stabilizer.basis();
    for (int w = 1; w <= n; w++) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; i++) {
            idx[i] = i;
        }
        do {
            long total = 1;
            for (int i = 0; i < w; i++) {
                total *= 3;
            }
            for (long code_word = 0; code_word < total; code_word++) {
                Pauli p(n);
                long c = code_word;
                for (int q : idx) {
                    int t = (int)(c % 3) + 1;
                    c /= 3;
                    p.x.set(q, t & 1);
                    p.z.set(q, (t >> 1) & 1);
                }
                bool ok = true;
                for (const auto &s : stab) {
                    if (!commutes(p, s)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && !code.gauge.contains(p)) {
                    return w;
                }
            }
        } while (next_combination(idx, n));
    }
    return std::nullopt;
}

}  // namespace tsc
