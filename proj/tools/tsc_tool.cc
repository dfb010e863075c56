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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tsc/error.h"
#include "tsc/fixtures.h"
#include "tsc/report.h"

using namespace tsc;

namespace {

enum class Level { Error, Info, Debug };

Level log_level() {
    const char *env = std::getenv("TSC_LOG_LEVEL");
    std::string s = env ? env : "info";
    if (s == "debug") {
        return Level::Debug;
    }
    if (s == "error" || s == "quiet") {
        return Level::Error;
    }
    return Level::Info;
}

void log(Level at, const std::string &msg) {
    if (at <= log_level()) {
        std::cerr << "tsc: " << msg << "\n";
    }
}

struct Config {
    std::string input;
    std::string out;
    std::string pipeline = "theorem2";
    std::string model = "relaxed";
    int trials = 100;
    uint64_t seed = 20240611;
    int coset_cap = 20;
    std::string family;
    std::vector<int> dims;
};

void emit(const Config &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(cfg.out, text);
        log(Level::Info, "wrote " + cfg.out);
    }
}

void require_params(const Config &cfg) {
    if (cfg.trials < 1) {
        fail(ErrorCode::BadParams, "trials must be at least 1");
    }
    if (cfg.coset_cap < 1) {
        fail(ErrorCode::BadParams, "coset cap must be at least 1");
    }
}

int dim(const Config &cfg, size_t i, int fallback) {
    return cfg.dims.size() > i ? cfg.dims[i] : fallback;
}

int cmd_gen(const Config &cfg) {
    const auto &f = cfg.family;
    int m = dim(cfg, 0, 2);
    int n = dim(cfg, 1, m);
    json j;
    if (f == "torus-grid") {
        j = graph_to_json(torus_grid(m, n));
    } else if (f == "theta") {
        j = graph_to_json(theta_graph());
    } else if (f == "petersen") {
        j = graph_to_json(petersen_graph());
    } else if (f == "honeycomb-torus") {
        j = graph_to_json(honeycomb_torus(dim(cfg, 0, 3), dim(cfg, 1, dim(cfg, 0, 3))));
    } else if (f == "lattice-4-6-12") {
        j = colex_to_json(lattice_4_6_12(m, n));
    } else if (f == "lattice-4-8") {
        j = colex_to_json(lattice_4_8(m, n));
    } else {
        fail(ErrorCode::BadParams, "unknown family '" + f + "'");
    }
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

BuiltCode load(const Config &cfg) {
    auto b = build_from_json(read_json_file(cfg.input), pipeline_from_name(cfg.pipeline));
    log(Level::Debug, "built n=" + std::to_string(b.code.n) + " k=" + std::to_string(b.code.k));
    return b;
}

int cmd_build(const Config &cfg) {
    require_params(cfg);
    bool ok = true;
    auto b = load(cfg);
    emit(cfg, build_report(b, cfg.coset_cap, &ok).dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_schedule(const Config &cfg) {
    require_params(cfg);
    auto model = model_from_name(cfg.model);
    bool ok = true;
    auto b = load(cfg);
    json j = schedule_report(b, model, cfg.trials, cfg.seed, &ok);
    j["pipeline"] = cfg.pipeline;
    j["seed"] = cfg.seed;
    emit(cfg, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_verify(const Config &cfg) {
    require_params(cfg);
    bool ok = true;
    auto b = load(cfg);
    json j = verify_report(b, cfg.trials, cfg.seed, cfg.coset_cap, &ok);
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["all_passed"] = ok;
    emit(cfg, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_export(const Config &cfg) {
    json j = read_json_file(cfg.input);
    switch (detect_kind(j)) {
        case JsonKind::Graph:
            emit(cfg, graph_to_dot(graph_from_json(j)));
            break;
        case JsonKind::Colex:
            emit(cfg, colex_to_dot(colex_from_json(j)));
            break;
        case JsonKind::Hypergraph:
            emit(cfg, hypergraph_to_dot(hypergraph_from_json(j)));
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Topological subsystem code construction and verification"};
    app.require_subcommand(1);
    Config cfg;

    auto *gen = app.add_subcommand("gen", "Write a fixture graph or colex as JSON");
    gen->add_option("family", cfg.family, "torus-grid, theta, petersen, honeycomb-torus, lattice-4-6-12, lattice-4-8")
        ->required();
    gen->add_option("dims", cfg.dims, "Lattice dimensions m n");
    gen->add_option("--out", cfg.out, "Output path (stdout when omitted)");

    auto add_common = [&](CLI::App *sub, bool with_model) {
        sub->add_option("input", cfg.input, "Input JSON")->required();
        sub->add_option("--pipeline", cfg.pipeline, "theorem2, theorem3, bombin or custom");
        sub->add_option("--trials", cfg.trials, "Simulation trials");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--coset-cap", cfg.coset_cap, "Largest quotient dimension to enumerate");
        sub->add_option("--out", cfg.out, "Output path (stdout when omitted)");
        if (with_model) {
            sub->add_option("--model", cfg.model, "relaxed or exclusive");
        }
    };
    auto *build = app.add_subcommand("build", "Build a code and report its parameters");
    add_common(build, false);
    auto *schedule = app.add_subcommand("schedule", "Schedule stabilizer measurements and simulate them");
    add_common(schedule, true);
    auto *verify = app.add_subcommand("verify", "Run every check on a built code");
    add_common(verify, false);
    auto *exp = app.add_subcommand("export", "Render graph, colex or hypergraph JSON as DOT");
    exp->add_option("input", cfg.input, "Input JSON")->required();
    exp->add_option("--out", cfg.out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            return cmd_gen(cfg);
        }
        if (*build) {
            return cmd_build(cfg);
        }
        if (*schedule) {
            return cmd_schedule(cfg);
        }
        if (*verify) {
            return cmd_verify(cfg);
        }
        return cmd_export(cfg);
    } catch (const Error &e) {
        log(Level::Error, e.what());
        return 2;
    } catch (const std::exception &e) {
        log(Level::Error, e.what());
        return 2;
    }
}
