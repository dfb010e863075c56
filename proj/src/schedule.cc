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

#include "tsc/schedule.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tsc/error.h"

namespace tsc {

std::string model_name(ScheduleModel m) {
    return m == ScheduleModel::Relaxed ? "relaxed" : "exclusive";
}

ScheduleModel model_from_name(const std::string &s) {
    if (s == "relaxed") {
        return ScheduleModel::Relaxed;
    }
    if (s == "exclusive") {
        return ScheduleModel::Exclusive;
    }
    fail(ErrorCode::BadParams, "unknown model '" + s + "'");
}

std::vector<StabilizerGenerator> stabilizer_generators(const Hypergraph &h, const std::vector<FaceCycles> &canonical) {
    std::vector<StabilizerGenerator> out;
    for (const auto &fc : canonical) {
        int which = 1;
        for (const auto *s : {&fc.sigma1, &fc.sigma2}) {
            if (*s) {
                out.push_back({fc.face, which, **s, cycle_operator(h, **s)});
            }
            which++;
        }
    }
    return out;
}

std::vector<StabilizerGenerator> generic_generators(const Hypergraph &h, const SubsystemCode &code) {
    std::vector<StabilizerGenerator> out;
    Gf2Basis span(2 * h.num_vertices);
    for (int f = 0; f < (int)h.faces.size(); f++) {
        BitVec s(h.num_edges());
        bool rank2 = true;
        for (int e : h.faces[f].hedges) {
            rank2 &= h.rank(e) == 2;
            s.flip(e);
        }
        if (!rank2 || !s.any() || !is_hypercycle(h, s)) {
            continue;
        }
        Pauli w = cycle_operator(h, s);
        if (span.add(w.symplectic())) {
            out.push_back({f, 1, s, w});
        }
    }
    auto incident = h.incident_edges();
    for (int f = 0; f < (int)h.faces.size() && (int)out.size() < code.s; f++) {
        std::set<int> region;
        for (int v : h.faces[f].verts) {
            for (int e : incident[v]) {
                for (int u : h.edges[e]) {
                    region.insert(incident[u].begin(), incident[u].end());
                }
            }
        }
        std::vector<int> ids(region.begin(), region.end());
        std::map<int, BitVec> rows;
        for (size_t i = 0; i < ids.size(); i++) {
            for (int v : h.edges[ids[i]]) {
                rows.try_emplace(v, ids.size()).first->second.set(i);
            }
        }
        std::vector<BitVec> mat;
        for (auto &[v, r] : rows) {
            mat.push_back(r);
        }
        for (const auto &x : gf2_nullspace(mat, ids.size())) {
            BitVec s(h.num_edges());
            for (int i : x.ones()) {
                s.set(ids[i]);
            }
            Pauli w = cycle_operator(h, s);
            if (code.stabilizer.contains(w) && span.add(w.symplectic())) {
                out.push_back({f, 2, s, w});
            }
        }
    }
    for (const auto &z : code.stabilizer.basis()) {
        if (span.add(z.symplectic())) {
            out.push_back({-1, 0, BitVec(h.num_edges()), z});
        }
    }
    return out;
}

Pauli derived_link(const DerivedGraph &dg, int id) {
    Color c = dg.color[id];
    return link_operator({dg.edges[id].first, dg.edges[id].second}, &c, dg.num_vertices);
}

PrefixCheck validate_prefixes(const std::vector<Pauli> &ordered) {
    PrefixCheck out;
    if (ordered.empty()) {
        return out;
    }
    Pauli prefix = ordered[0];
    for (size_t j = 1; j < ordered.size(); j++) {
        if (!commutes(ordered[j], prefix)) {
            out.ok = false;
            out.failing_index = (int)j;
            return out;
        }
        prefix *= ordered[j];
    }
    return out;
}

namespace {

struct Solver {
    const Hypergraph &h;
    const DerivedGraph &dg;
    std::vector<Pauli> links;

    Solver(const Hypergraph &hh, const DerivedGraph &d) : h(hh), dg(d) {
        for (int id = 0; id < (int)dg.edges.size(); id++) {
            links.push_back(derived_link(dg, id));
        }
    }

    int rotated(int id, int rot) const {
        return ((int)dg.color[id] - rot + 3) % 3;
    }

    std::vector<int> ordered(std::vector<int> ids, int rot) const {
        std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
            return std::make_pair(rotated(a, rot), a) < std::make_pair(rotated(b, rot), b);
        });
        return ids;
    }

    bool prefix_ok(const std::vector<int> &ids, int rot) const {
        std::vector<Pauli> ops;
        for (int id : ordered(ids, rot)) {
            ops.push_back(links[id]);
        }
        return validate_prefixes(ops).ok;
    }

    /// Link sets multiplying to target, lightest first. The search region
    /// grows one derived-graph step at a time from the support.
    std::vector<std::vector<int>> candidates(const Pauli &target) const {
        std::vector<char> in(h.num_vertices, 0);
        for (int q = 0; q < h.num_vertices; q++) {
            in[q] = target.x.get(q) || target.z.get(q);
        }
        while (true) {
            std::vector<int> cand;
            for (int id = 0; id < (int)dg.edges.size(); id++) {
                int e = dg.origin[id];
                if (h.rank(e) == 3 && id == dg.first_of[e] + 2) {
                    continue;
                }
                if (in[dg.edges[id].first] && in[dg.edges[id].second]) {
                    cand.push_back(id);
                }
            }
            auto sols = solve(cand, target);
            if (!sols.empty()) {
                return sols;
            }
            auto grown = in;
            for (auto [a, b] : dg.edges) {
                if (in[a] || in[b]) {
                    grown[a] = grown[b] = 1;
                }
            }
            if (grown == in) {
                return {};
            }
            in = std::move(grown);
        }
    }

    std::vector<std::vector<int>> solve(const std::vector<int> &cand, const Pauli &target) const {
        std::set<int> qubits;
        for (int id : cand) {
            qubits.insert(dg.edges[id].first);
            qubits.insert(dg.edges[id].second);
        }
        for (int q : target.x.ones()) {
            qubits.insert(q);
        }
        for (int q : target.z.ones()) {
            qubits.insert(q);
        }
        size_t m = cand.size();
        std::vector<BitVec> rows;
        BitVec rhs(2 * qubits.size());
        int r = 0;
        for (int q : qubits) {
            BitVec rx(m), rz(m);
            for (size_t i = 0; i < m; i++) {
                rx.set(i, links[cand[i]].x.get(q));
                rz.set(i, links[cand[i]].z.get(q));
            }
            rows.push_back(rx);
            rows.push_back(rz);
            rhs.set(r++, target.x.get(q));
            rhs.set(r++, target.z.get(q));
        }
        auto x0 = gf2_solve(rows, rhs, m);
        if (!x0) {
            return {};
        }
        auto kernel = gf2_nullspace(rows, m);
        size_t kd = std::min<size_t>(kernel.size(), 12);
        std::vector<BitVec> xs;
        BitVec x = *x0;
        for (long i = 0; i < (1L << kd); i++) {
            if (i > 0) {
                x ^= kernel[__builtin_ctzl(i)];
            }
            xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end(), [](const BitVec &a, const BitVec &b) {
            size_t pa = a.popcount();
            size_t pb = b.popcount();
            return pa != pb ? pa < pb : b < a;
        });
        std::vector<std::vector<int>> out;
        for (const auto &v : xs) {
            std::vector<int> ids;
            for (int i : v.ones()) {
                ids.push_back(cand[i]);
            }
            out.push_back(std::move(ids));
        }
        return out;
    }

};

}  // namespace

std::vector<int> decompose(const Hypergraph &h, const DerivedGraph &dg, const Pauli &target) {
    Solver sv(h, dg);
    for (const auto &ids : sv.candidates(target)) {
        for (int rot = 0; rot < 3; rot++) {
            if (sv.prefix_ok(ids, rot)) {
                return sv.ordered(ids, rot);
            }
        }
    }
    fail(ErrorCode::NoValidDecomposition, "no ordered link decomposition for " + target.str());
}

MeasurementSchedule build_schedule(const Hypergraph &h,
                                   const std::vector<StabilizerGenerator> &gens,
                                   ScheduleModel model) {
    DerivedGraph dg = derived_graph(h);
    Solver sv(h, dg);
    MeasurementSchedule out;
    out.model = model;
    struct Choice {
        std::vector<int> ids;
        int rot = 0;
    };
    std::vector<Choice> choice;
    for (const auto &g : gens) {
        std::optional<Choice> first;
        for (const auto &ids : sv.candidates(g.op)) {
            for (int rot = 0; rot < 3 && !first; rot++) {
                if (sv.prefix_ok(ids, rot)) {
                    first = Choice{ids, rot};
                }
            }
            if (first) {
                break;
            }
        }
        if (!first) {
            fail(ErrorCode::NoValidDecomposition, "no ordered link decomposition for " + g.op.str());
        }
        choice.push_back(*first);
    }
    std::vector<std::vector<int>> by_color(3);
    std::set<int> all;
    for (const auto &c : choice) {
        all.insert(c.ids.begin(), c.ids.end());
    }
    for (int id : all) {
        by_color[(int)dg.color[id]].push_back(id);
    }
    std::map<int, std::vector<int>> owners;
    for (size_t g = 0; g < gens.size(); g++) {
        for (int id : choice[g].ids) {
            owners[id].push_back((int)g);
        }
    }
    std::vector<std::vector<int>> steps;
    std::vector<int> first_step_of_color(3, -1);
    for (int c = 0; c < 3; c++) {
        const auto &group = by_color[c];
        if (group.empty()) {
            continue;
        }
        first_step_of_color[c] = (int)steps.size();
        if (model == ScheduleModel::Relaxed) {
            steps.push_back(group);
            continue;
        }
        std::vector<std::vector<int>> split;
        std::vector<std::set<int>> busy;
        for (int id : group) {
            auto [a, b] = dg.edges[id];
            size_t t = 0;
            while (t < split.size() && (busy[t].count(a) || busy[t].count(b))) {
                t++;
            }
            if (t == split.size()) {
                split.emplace_back();
                busy.emplace_back();
            }
            split[t].push_back(id);
            busy[t].insert(a);
            busy[t].insert(b);
        }
        steps.insert(steps.end(), split.begin(), split.end());
    }
    for (size_t t = 0; t < steps.size(); t++) {
        std::vector<ScheduledLink> round;
        std::map<int, int> seen;
        for (int id : steps[t]) {
            round.push_back({id, sv.links[id].str(), owners[id]});
            for (int q : {dg.edges[id].first, dg.edges[id].second}) {
                if (model == ScheduleModel::Exclusive && !seen.emplace(q, id).second) {
                    fail(ErrorCode::ScheduleConflict, "qubit " + std::to_string(q) + " measured twice at time " +
                                                          std::to_string(t));
                }
            }
        }
        if (model == ScheduleModel::Relaxed) {
            for (size_t i = 0; i < steps[t].size(); i++) {
                for (size_t j = i + 1; j < steps[t].size(); j++) {
                    if (!commutes(sv.links[steps[t][i]], sv.links[steps[t][j]])) {
                        fail(ErrorCode::ScheduleConflict, "links " + std::to_string(steps[t][i]) + " and " +
                                                              std::to_string(steps[t][j]) +
                                                              " anticommute at time " + std::to_string(t));
                    }
                }
            }
        }
        out.rounds.push_back(std::move(round));
    }
    out.time_steps = (int)out.rounds.size();
    for (const auto &c : choice) {
        int rot = c.rot;
        while (first_step_of_color[rot] < 0) {
            rot = (rot + 1) % 3;
        }
        out.per_stabilizer.push_back(sv.ordered(c.ids, c.rot));
        out.start_step.push_back(first_step_of_color[rot]);
    }
    return out;
}

SimulationReport simulate_syndrome(const Hypergraph &h,
                                   const std::vector<StabilizerGenerator> &gens,
                                   const MeasurementSchedule &schedule,
                                   int trials,
                                   uint64_t seed) {
    if (trials < 1) {
        fail(ErrorCode::BadParams, "trials must be at least 1");
    }
    DerivedGraph dg = derived_graph(h);
    size_t n = h.num_vertices;
    int steps = schedule.time_steps;
    std::map<int, SignedPauli> link_ops;
    std::map<int, int> step_of;
    for (int t = 0; t < steps; t++) {
        for (const auto &l : schedule.rounds[t]) {
            link_ops[l.edge] = SignedPauli(derived_link(dg, l.edge));
            step_of[l.edge] = t;
        }
    }
    std::vector<SignedPauli> products;
    for (const auto &d : schedule.per_stabilizer) {
        SignedPauli acc{Pauli(n)};
        for (int id : d) {
            acc.mul_right(link_ops.at(id));
        }
        products.push_back(acc);
    }
    SimulationReport rep;
    rep.trials = trials;
    std::map<int, int> seen_outcomes;
    long parallel_ok = 0;
    for (int t = 0; t < trials; t++) {
        std::seed_seq ss{seed, (uint64_t)t};
        std::mt19937_64 rng(ss);
        Tableau tab(n);
        tab.randomize(rng, 8 * n + 16);
        auto sequential = [&](bool record) {
            std::vector<bool> combined;
            for (const auto &d : schedule.per_stabilizer) {
                bool v = false;
                for (int id : d) {
                    bool o = tab.measure(link_ops.at(id), rng);
                    if (record) {
                        seen_outcomes[id] |= 1 << (int)o;
                    }
                    v ^= o;
                }
                combined.push_back(v);
            }
            return combined;
        };
        auto first = sequential(true);
        auto second = sequential(false);
        std::vector<bool> direct;
        for (size_t g = 0; g < products.size(); g++) {
            direct.push_back(tab.measure(products[g], rng));
            rep.pairs++;
            bool same = first[g] == second[g];
            rep.idempotent &= same;
            rep.direct_agrees &= direct[g] == second[g];
            if (same && direct[g] == second[g]) {
                rep.agreements++;
            } else if (rep.failures.size() < 10) {
                rep.failures.push_back("generator " + std::to_string(g) + " (face " + std::to_string(gens[g].face) +
                                       ") disagrees in trial " + std::to_string(t));
            }
        }
        std::map<std::pair<int, int>, bool> outcome;
        for (int tau = 0; tau < 2 * steps; tau++) {
            for (const auto &l : schedule.rounds[tau % steps]) {
                outcome[{tau, l.edge}] = tab.measure(link_ops.at(l.edge), rng);
            }
        }
        for (size_t g = 0; g < schedule.per_stabilizer.size(); g++) {
            int s0 = schedule.start_step[g];
            bool v = false;
            for (int id : schedule.per_stabilizer[g]) {
                v ^= outcome.at({s0 + (step_of.at(id) - s0 + steps) % steps, id});
            }
            parallel_ok += v == direct[g];
        }
    }
    rep.agreement = rep.pairs ? (double)rep.agreements / (double)rep.pairs : 1.0;
    rep.parallel_agreement = rep.pairs ? (double)parallel_ok / (double)rep.pairs : 1.0;
    for (const auto &[id, mask] : seen_outcomes) {
        rep.gauge_varies |= mask == 3;
    }
    return rep;
}

void require_consistent(const SimulationReport &r) {
    if (r.agreements != r.pairs) {
        fail(ErrorCode::InconsistentOutcome, r.failures.empty() ? "outcomes disagree" : r.failures[0]);
    }
}

}  // namespace tsc
