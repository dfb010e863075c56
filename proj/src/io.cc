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

#include "tsc/io.h"

#include <fstream>
#include <sstream>

#include "tsc/error.h"

namespace tsc {

namespace {

const char *dot_color(Color c) {
    switch (c) {
        case Color::R:
            return "red";
        case Color::G:
            return "green";
        default:
            return "blue";
    }
}

template <typename T>
T field(const json &j, const char *key) {
    if (!j.contains(key)) {
        fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        fail(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

json graph_to_json(const EmbeddedGraph &g) {
    json j;
    std::vector<int> vs(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) {
        vs[v] = v;
    }
    j["vertices"] = vs;
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = edges;
    json rot = json::object();
    for (int v = 0; v < g.num_vertices(); v++) {
        json ends = json::array();
        for (int d : g.rotation()[v]) {
            ends.push_back({dart_edge(d), d & 1});
        }
        rot[std::to_string(v)] = ends;
    }
    j["rotation"] = rot;
    json faces = json::array();
    for (const auto &walk : g.faces()) {
        json w = json::array();
        for (int d : walk) {
            w.push_back({dart_edge(d), d & 1});
        }
        faces.push_back(w);
    }
    j["faces"] = faces;
    return j;
}

EmbeddedGraph graph_from_json(const json &j) {
    auto verts = field<std::vector<int>>(j, "vertices");
    auto raw_edges = field<std::vector<std::vector<int>>>(j, "edges");
    int n = (int)verts.size();
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : raw_edges) {
        if (e.size() != 2) {
            fail(ErrorCode::ParseError, "edge with " + std::to_string(e.size()) + " ends");
        }
        edges.emplace_back(e[0], e[1]);
    }
    auto dart_of = [&](const json &ref) {
        auto r = ref.get<std::vector<int>>();
        if (r.size() != 2 || r[1] < 0 || r[1] > 1) {
            fail(ErrorCode::ParseError, "edge-end reference must be [edge, side]");
        }
        return 2 * r[0] + r[1];
    };
    try {
        if (j.contains("faces")) {
            std::vector<std::vector<int>> faces;
            for (const auto &w : j.at("faces")) {
                std::vector<int> walk;
                for (const auto &ref : w) {
                    walk.push_back(dart_of(ref));
                }
                faces.push_back(std::move(walk));
            }
            return EmbeddedGraph::from_faces(n, edges, faces);
        }
        std::vector<std::vector<int>> rotation(n);
        const auto &rot = j.at("rotation");
        for (int v = 0; v < n; v++) {
            for (const auto &ref : rot.at(std::to_string(v))) {
                rotation[v].push_back(dart_of(ref));
            }
        }
        return EmbeddedGraph::build(n, edges, rotation);
    } catch (const json::exception &e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

json colex_to_json(const TwoColex &c) {
    json j = graph_to_json(c.graph);
    json fc = json::object();
    for (size_t f = 0; f < c.face_color.size(); f++) {
        fc[std::to_string(f)] = std::string(1, color_char(c.face_color[f]));
    }
    json ec = json::object();
    for (size_t e = 0; e < c.edge_color.size(); e++) {
        ec[std::to_string(e)] = std::string(1, color_char(c.edge_color[e]));
    }
    j["face_color"] = fc;
    j["edge_color"] = ec;
    if (c.parentage) {
        json par = json::object();
        for (size_t f = 0; f < c.parentage->size(); f++) {
            par[std::to_string(f)] = {{"kind", face_kind_name((*c.parentage)[f].kind)},
                                      {"parent", (*c.parentage)[f].parent}};
        }
        j["parentage"] = par;
    }
    return j;
}

TwoColex colex_from_json(const json &j) {
    TwoColex c;
    c.graph = graph_from_json(j);
    auto color_at = [&](const char *key, int i) {
        try {
            auto s = j.at(key).at(std::to_string(i)).get<std::string>();
            return color_from_char(s.empty() ? '?' : s[0]);
        } catch (const json::exception &e) {
            fail(ErrorCode::ParseError, std::string(key) + ": " + e.what());
        }
    };
    for (int f = 0; f < c.graph.num_faces(); f++) {
        c.face_color.push_back(color_at("face_color", f));
    }
    for (int e = 0; e < c.graph.num_edges(); e++) {
        c.edge_color.push_back(color_at("edge_color", e));
    }
    if (j.contains("parentage")) {
        std::vector<Parentage> par;
        for (int f = 0; f < c.graph.num_faces(); f++) {
            const auto &p = j.at("parentage").at(std::to_string(f));
            auto kind = p.at("kind").get<std::string>();
            FaceKind k = FaceKind::VFace;
            if (kind == face_kind_name(FaceKind::FFace)) {
                k = FaceKind::FFace;
            } else if (kind == face_kind_name(FaceKind::EFace)) {
                k = FaceKind::EFace;
            } else if (kind != face_kind_name(FaceKind::VFace)) {
                fail(ErrorCode::ParseError, "unknown face kind '" + kind + "'");
            }
            par.push_back({k, p.at("parent").get<int>()});
        }
        c.parentage = par;
    }
    std::string why;
    if (!colex_is_consistent(c, &why)) {
        fail(ErrorCode::ParseError, "inconsistent colex: " + why);
    }
    return c;
}

json hypergraph_to_json(const Hypergraph &h) {
    std::vector<int> json_id(h.num_edges());
    std::vector<int> order;
    for (int pass = 2; pass <= 3; pass++) {
        for (int e = 0; e < h.num_edges(); e++) {
            if (h.rank(e) == pass) {
                json_id[e] = (int)order.size();
                order.push_back(e);
            }
        }
    }
    json j;
    std::vector<int> vs(h.num_vertices);
    for (int v = 0; v < h.num_vertices; v++) {
        vs[v] = v;
    }
    j["vertices"] = vs;
    json r2 = json::array(), r3 = json::array();
    json colors = json::object(), prov = json::object();
    for (int e : order) {
        (h.rank(e) == 2 ? r2 : r3).push_back(h.edges[e]);
        if ((int)h.color.size() > e) {
            colors[std::to_string(json_id[e])] = std::string(1, color_char(h.color[e]));
        }
        if ((int)h.provenance.size() > e && !h.provenance[e].empty()) {
            prov[std::to_string(json_id[e])] = h.provenance[e];
        }
    }
    j["rank2"] = r2;
    j["rank3"] = r3;
    j["colors"] = colors;
    j["provenance"] = prov;
    if (!h.faces.empty()) {
        json faces = json::array();
        for (const auto &f : h.faces) {
            std::vector<int> he;
            for (int e : f.hedges) {
                he.push_back(json_id[e]);
            }
            faces.push_back({{"vertices", f.verts}, {"edges", he}});
        }
        j["faces"] = faces;
    }
    return j;
}

Hypergraph hypergraph_from_json(const json &j) {
    Hypergraph h;
    h.num_vertices = (int)field<std::vector<int>>(j, "vertices").size();
    for (const char *key : {"rank2", "rank3"}) {
        for (auto e : field<std::vector<std::vector<int>>>(j, key)) {
            size_t want = key[4] == '2' ? 2 : 3;
            if (e.size() != want) {
                fail(ErrorCode::ParseError, std::string(key) + " entry has " + std::to_string(e.size()) + " vertices");
            }
            for (int v : e) {
                if (v < 0 || v >= h.num_vertices) {
                    fail(ErrorCode::ParseError, "vertex " + std::to_string(v) + " out of range");
                }
            }
            h.edges.push_back(e);
        }
    }
    try {
        if (j.contains("colors") && !j.at("colors").empty()) {
            for (int e = 0; e < h.num_edges(); e++) {
                auto key = std::to_string(e);
                if (!j.at("colors").contains(key)) {
                    fail(ErrorCode::ColorMissing, "hyperedge " + key + " has no color");
                }
                auto s = j.at("colors").at(key).get<std::string>();
                h.color.push_back(color_from_char(s.empty() ? '?' : s[0]));
            }
        }
        if (j.contains("provenance")) {
            h.provenance.resize(h.num_edges());
            for (auto &[k, v] : j.at("provenance").items()) {
                int e = std::stoi(k);
                if (e >= 0 && e < h.num_edges()) {
                    h.provenance[e] = v.get<std::string>();
                }
            }
        }
        if (j.contains("faces")) {
            for (const auto &f : j.at("faces")) {
                h.faces.push_back({f.at("vertices").get<std::vector<int>>(), f.at("edges").get<std::vector<int>>()});
            }
        }
    } catch (const json::exception &e) {
        fail(ErrorCode::ParseError, e.what());
    }
    return h;
}

json code_to_json(const SubsystemCode &c) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["r"] = c.r;
    j["s"] = c.s;
    j["dim_gauge"] = c.dim_gauge;
    j["dim_centralizer"] = c.dim_centralizer;
    j["ell"] = c.distance_bound ? json(*c.distance_bound) : json(nullptr);
    j["provenance"] = c.provenance;
    j["checks"] = c.checks;
    return j;
}

json schedule_to_json(const MeasurementSchedule &s) {
    json j;
    j["model"] = model_name(s.model);
    j["time_steps"] = s.time_steps;
    json rounds = json::array();
    for (const auto &round : s.rounds) {
        json r = json::array();
        for (const auto &l : round) {
            r.push_back({{"edge", l.edge}, {"pauli", l.pauli}, {"stabilizers", l.stabilizers}});
        }
        rounds.push_back(r);
    }
    j["rounds"] = rounds;
    j["per_stabilizer"] = s.per_stabilizer;
    j["start_step"] = s.start_step;
    return j;
}

json simulation_to_json(const SimulationReport &r) {
    return {{"trials", r.trials},
            {"pairs", r.pairs},
            {"agreements", r.agreements},
            {"agreement", r.agreement},
            {"idempotent", r.idempotent},
            {"direct_agrees", r.direct_agrees},
            {"gauge_varies", r.gauge_varies},
            {"parallel_agreement", r.parallel_agreement},
            {"failures", r.failures}};
}

JsonKind detect_kind(const json &j) {
    if (!j.is_object()) {
        fail(ErrorCode::UnknownFormat, "document is not a JSON object");
    }
    if (j.contains("rank2") && j.contains("rank3")) {
        return JsonKind::Hypergraph;
    }
    if (j.contains("edges") && j.contains("face_color")) {
        return JsonKind::Colex;
    }
    if (j.contains("edges") && (j.contains("rotation") || j.contains("faces"))) {
        return JsonKind::Graph;
    }
    fail(ErrorCode::UnknownFormat, "document is neither a graph, a colex nor a hypergraph");
}

std::string graph_to_dot(const EmbeddedGraph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int f = 0; f < g.num_faces(); f++) {
        out << "  // face " << f << ":";
        for (int d : g.faces()[f]) {
            out << " " << g.tail(d);
        }
        out << "\n";
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        out << "  " << v << ";\n";
    }
    for (int e = 0; e < g.num_edges(); e++) {
        out << "  " << g.edges()[e].first << " -- " << g.edges()[e].second << " [label=\"e" << e << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string colex_to_dot(const TwoColex &c) {
    const auto &g = c.graph;
    std::ostringstream out;
    out << "graph colex {\n";
    for (int f = 0; f < g.num_faces(); f++) {
        out << "  // face " << f << " color " << color_char(c.face_color[f]) << ":";
        for (int d : g.faces()[f]) {
            out << " " << g.tail(d);
        }
        out << "\n";
    }
    for (int v = 0; v < g.num_vertices(); v++) {
        out << "  " << v << ";\n";
    }
    for (int e = 0; e < g.num_edges(); e++) {
        out << "  " << g.edges()[e].first << " -- " << g.edges()[e].second << " [color=" << dot_color(c.edge_color[e])
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string hypergraph_to_dot(const Hypergraph &h) {
    std::ostringstream out;
    out << "graph hypergraph {\n";
    for (int v = 0; v < h.num_vertices; v++) {
        out << "  " << v << ";\n";
    }
    int t = 0;
    for (int e = 0; e < h.num_edges(); e++) {
        std::string attr = (int)h.color.size() > e ? std::string(" [color=") + dot_color(h.color[e]) + "]" : "";
        const auto &vs = h.edges[e];
        if (vs.size() == 2) {
            out << "  " << vs[0] << " -- " << vs[1] << attr << ";\n";
            continue;
        }
        out << "  subgraph cluster_t" << t++ << " {\n    label=\"h" << e << "\";\n";
        for (int i = 0; i < 3; i++) {
            out << "    " << vs[i] << " -- " << vs[(i + 1) % 3] << attr << ";\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace tsc
