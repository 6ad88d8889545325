// Command-line front end for constructing, verifying and analyzing
// stationary states of discrete-time quantum walk search on undirected
// graphs. Exit codes: 0 success, 1 existence/verification failure, 2 input
// error.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/acceptance.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/serialize.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/walk.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerdictFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qwalk::Graph generate_from_tokens(const std::vector<std::string>& tokens) {
    auto to_int = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InputError("expected an integer, got '" + s + "'");
        }
    };
    const std::string& kind = tokens.front();
    auto need = [&](std::size_t n) {
        if (tokens.size() != n + 1)
            throw InputError("generator '" + kind + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (kind == "torus") {
        need(2);
        return qwalk::torus_graph(to_int(tokens[1]), to_int(tokens[2]));
    }
    if (kind == "complete") {
        need(1);
        return qwalk::complete_graph(to_int(tokens[1]));
    }
    if (kind == "path") {
        need(1);
        return qwalk::path_graph(to_int(tokens[1]));
    }
    if (kind == "cycle") {
        need(1);
        return qwalk::cycle_graph(to_int(tokens[1]));
    }
    if (kind == "simplex") {
        need(2);
        return qwalk::simplex_of_cliques(to_int(tokens[1]), to_int(tokens[2]));
    }
    throw InputError("unknown generator '" + kind + "' (try torus/complete/path/cycle/simplex)");
}

/// --graph accepts a file path, generator tokens ("torus 4 3"), or a compact
/// single token like "path2".
qwalk::Graph load_graph(const std::vector<std::string>& spec) {
    if (spec.empty()) throw InputError("--graph is required");
    if (spec.size() == 1) {
        const std::string& token = spec.front();
        if (std::filesystem::exists(token)) {
            std::ifstream in(token);
            if (!in) throw InputError("cannot open graph file '" + token + "'");
            return qwalk::read_graph(in);
        }
        auto digits = token.find_first_of("0123456789");
        if (digits != std::string::npos && digits > 0) {
            std::vector<std::string> tokens{token.substr(0, digits)};
            std::istringstream rest(token.substr(digits));
            for (std::string t; rest >> t;) tokens.push_back(t);
            return generate_from_tokens(tokens);
        }
        throw InputError("graph '" + token + "' is neither a file nor a generator spec");
    }
    return generate_from_tokens(spec);
}

std::vector<qwalk::Vertex> parse_marked(const std::string& csv) {
    std::vector<qwalk::Vertex> out;
    if (csv.empty()) return out;
    std::istringstream in(csv);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad vertex id '" + item + "' in --marked");
        }
    }
    return out;
}

/// --assign entries look like U0=1.5 or 0=1.5, comma- or space-separated,
/// one per unmarked component; unmentioned components stay at 1.
std::vector<double> parse_assignment(const std::vector<std::string>& raw_entries,
                                     const qwalk::MarkedSet& m) {
    std::vector<std::string> entries;
    for (const std::string& chunk : raw_entries) {
        std::istringstream in(chunk);
        for (std::string item; std::getline(in, item, ',');)
            if (!item.empty()) entries.push_back(item);
    }
    std::vector<double> values(m.unmarked_components().size(), 1.0);
    for (const std::string& entry : entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw InputError("--assign entry '" + entry + "' is not of the form U<i>=<value>");
        std::string key = entry.substr(0, eq);
        if (!key.empty() && (key[0] == 'U' || key[0] == 'u')) key.erase(0, 1);
        try {
            std::size_t idx = std::stoul(key);
            if (idx >= values.size())
                throw InputError("--assign component index " + std::to_string(idx) +
                                 " out of range (have " + std::to_string(values.size()) + ")");
            values[idx] = std::stod(entry.substr(eq + 1));
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("cannot parse --assign entry '" + entry + "'");
        }
    }
    return values;
}

qwalk::StepVariant parse_variant(const std::string& oracle) {
    if (oracle == "grover") return qwalk::StepVariant::grover;
    if (oracle == "skw") return qwalk::StepVariant::skw;
    throw InputError("--oracle must be 'grover' or 'skw'");
}

double default_tolerance() {
    if (const char* env = std::getenv("QWALK_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw InputError("QWALK_TOL is set but not a positive number");
    }
    return qwalk::kDefaultStationaryTol;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write to '" + out_path + "'");
    out << text;
}

qwalk::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return qwalk::json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("cannot parse '" + path + "': " + e.what());
    }
}

/// Accept both a bare state document and the combined construct output.
qwalk::json load_state_json(const std::string& path) {
    qwalk::json j = load_json(path);
    if (j.is_object() && j.contains("state") && !j.contains("amplitudes")) return j["state"];
    return j;
}

struct CommonArgs {
    std::vector<std::string> graph_spec;
    std::string marked_csv;
    std::string oracle = "grover";
    std::string out_path;
    std::string format = "csv";
    double tolerance = 0.0;  // 0 means "use default/env"

    double tol() const { return tolerance > 0 ? tolerance : default_tolerance(); }
};

void add_graph_options(CLI::App* cmd, CommonArgs& args, bool with_marked = true) {
    cmd->add_option("--graph", args.graph_spec,
                    "graph file, or generator spec like 'torus 4 3', 'complete 8', 'path 2'")
        ->required()
        ->expected(1, 3);
    if (with_marked)
        cmd->add_option("--marked", args.marked_csv, "comma-separated marked vertex ids");
    cmd->add_option("--tol", args.tolerance, "stationarity tolerance (default 1e-10, env QWALK_TOL)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", args.out_path, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum walk search stationary-state toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<std::string> generator_tokens;
    std::vector<std::string> assign_entries;
    std::string state_path;
    int steps = 0;
    int arc_cap = qwalk::kDefaultArcCap;
    bool dump_basis = false;
    std::vector<int> criterion_ids;

    CLI::App* generate = app.add_subcommand("generate", "emit a graph file");
    generate->add_option("spec", generator_tokens,
                         "generator spec (torus R C | complete N | path N | cycle N | simplex K M) "
                         "or an existing graph file to re-emit canonically")
        ->required()
        ->expected(1, 3);
    generate->add_option("--out", args.out_path, "output path (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "run the walk and emit the time series");
    add_graph_options(simulate, args);
    simulate->add_option("--steps", steps, "number of walk steps")->required();
    simulate->add_option("--oracle", args.oracle, "grover|skw");
    simulate->add_option("--format", args.format, "csv|json");

    CLI::App* construct = app.add_subcommand("construct", "build the maximal-overlap stationary state");
    add_graph_options(construct, args);
    construct->add_option("--assign", assign_entries,
                          "per-component uniform values, e.g. U0=1,U1=0.5 (default balanced "
                          "solution when it exists, otherwise all 1)");

    CLI::App* verify = app.add_subcommand("verify", "check a state file for stationarity");
    add_graph_options(verify, args);
    verify->add_option("--state", state_path, "state JSON file")->required();
    verify->add_option("--oracle", args.oracle, "grover|skw");

    CLI::App* optimize = app.add_subcommand("optimize", "project a stationary state to maximal overlap");
    add_graph_options(optimize, args);
    optimize->add_option("--state", state_path, "state JSON file")->required();

    CLI::App* exists = app.add_subcommand("exists", "existence verdict and balance solution");
    add_graph_options(exists, args);

    CLI::App* eigen = app.add_subcommand("eigen", "brute-force stationary subspace of a small graph");
    add_graph_options(eigen, args);
    eigen->add_option("--oracle", args.oracle, "grover|skw");
    eigen->add_option("--cap", arc_cap, "maximum arc count for the dense operator");
    eigen->add_flag("--dump-basis", dump_basis, "write the basis as JSON to --out");

    CLI::App* reproduce = app.add_subcommand("reproduce", "run the built-in acceptance checks");
    reproduce->add_option("ids", criterion_ids, "criteria to run (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (*generate) {
            std::ostringstream text;
            qwalk::write_graph(text, load_graph(generator_tokens));
            emit(text.str(), args.out_path);
            return kExitSuccess;
        }

        if (*reproduce) {
            std::vector<qwalk::acceptance::CheckResult> results;
            if (criterion_ids.empty()) {
                results = qwalk::acceptance::run_all();
            } else {
                for (int id : criterion_ids) {
                    bool found = false;
                    for (const auto& c : qwalk::acceptance::criteria())
                        if (c.id == id) {
                            results.push_back(qwalk::acceptance::run_one(c));
                            found = true;
                        }
                    if (!found) throw InputError("no acceptance check with id " + std::to_string(id));
                }
            }
            bool all_passed = true;
            for (const auto& r : results) {
                all_passed = all_passed && r.passed;
                std::printf("%s  %2d  %-38s  %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.seconds, r.detail.c_str());
            }
            return all_passed ? kExitSuccess : kExitVerdictFailure;
        }

        qwalk::Graph graph = load_graph(args.graph_spec);
        qwalk::MarkedSet marked(graph, parse_marked(args.marked_csv));

        if (*simulate) {
            auto series = qwalk::simulate(graph, marked, parse_variant(args.oracle), steps);
            std::ostringstream text;
            if (args.format == "csv") {
                qwalk::write_simulation_csv(text, series);
            } else if (args.format == "json") {
                text << qwalk::simulation_to_json(series).dump(2) << '\n';
            } else {
                throw InputError("--format must be 'csv' or 'json'");
            }
            emit(text.str(), args.out_path);
            return kExitSuccess;
        }

        if (*construct) {
            std::vector<double> values;
            if (assign_entries.empty()) {
                auto balanced = qwalk::balance_unmarked_assignment(graph, marked);
                values = balanced ? *balanced
                                  : std::vector<double>(marked.unmarked_components().size(), 1.0);
            } else {
                values = parse_assignment(assign_entries, marked);
            }
            try {
                qwalk::ConstructResult result =
                    qwalk::construct_optimal(graph, marked, values, args.tol());
                qwalk::json doc{{"state", qwalk::state_to_json(result.state, marked, true)},
                                {"report", qwalk::report_to_json(result.report)},
                                {"assignment", values}};
                emit(doc.dump(2) + "\n", args.out_path);
            } catch (const qwalk::ExistenceError& e) {
                throw VerdictFailure(std::string("no stationary state: ") + e.what());
            }
            return kExitSuccess;
        }

        if (*verify) {
            auto parsed = qwalk::state_from_json(graph, load_state_json(state_path));
            if (args.marked_csv.empty())
                marked = qwalk::MarkedSet(graph, parsed.marked);
            auto report = qwalk::check_stationary(parsed.state, marked,
                                                  parse_variant(args.oracle), args.tol());
            emit(qwalk::report_to_json(report).dump(2) + "\n", args.out_path);
            if (!report.is_stationary) {
                std::cerr << "not stationary: max residual " << report.max_residual << "\n";
                return kExitVerdictFailure;
            }
            return kExitSuccess;
        }

        if (*optimize) {
            auto parsed = qwalk::state_from_json(graph, load_state_json(state_path));
            if (args.marked_csv.empty())
                marked = qwalk::MarkedSet(graph, parsed.marked);
            qwalk::WalkState projected(graph);
            try {
                projected = qwalk::optimize_stationary(parsed.state, marked, args.tol());
            } catch (const qwalk::ExistenceError& e) {
                throw VerdictFailure(e.what());
            } catch (const std::invalid_argument& e) {
                throw VerdictFailure(e.what());
            }
            auto report = qwalk::check_stationary(projected, marked, qwalk::StepVariant::grover,
                                                  args.tol());
            qwalk::json doc{{"state", qwalk::state_to_json(projected, marked, true)},
                            {"report", qwalk::report_to_json(report)}};
            emit(doc.dump(2) + "\n", args.out_path);
            return kExitSuccess;
        }

        if (*exists) {
            auto balanced = qwalk::balance_unmarked_assignment(graph, marked);
            std::vector<double> probe =
                balanced ? *balanced : std::vector<double>(marked.unmarked_components().size(), 1.0);
            auto shortages = qwalk::compute_shortages(graph, marked, probe);
            qwalk::json components = qwalk::json::array();
            for (const auto& component : marked.marked_components()) {
                qwalk::Bipartition bip = qwalk::bipartition(graph, component);
                qwalk::json entry{{"vertices", component}, {"bipartite", bip.valid}};
                if (bip.valid) {
                    qwalk::KahanSum x_sum, y_sum;
                    for (qwalk::Vertex v : component)
                        (bip.in_x(v) ? x_sum : y_sum).add(shortages.at(v));
                    entry["x_shortage_sum"] = x_sum.value();
                    entry["y_shortage_sum"] = y_sum.value();
                }
                components.push_back(entry);
            }
            qwalk::json doc{{"feasible", balanced.has_value()},
                            {"assignment", balanced ? qwalk::json(*balanced) : qwalk::json(nullptr)},
                            {"marked_components", components}};
            emit(doc.dump(2) + "\n", args.out_path);
            return balanced ? kExitSuccess : kExitVerdictFailure;
        }

        if (*eigen) {
            auto variant = parse_variant(args.oracle);
            auto matrix = qwalk::materialize(graph, marked, variant, arc_cap);
            auto basis = qwalk::one_eigenspace(matrix);
            auto projection = qwalk::project_initial(basis, graph);
            std::printf("dimension %d\n", basis.dimension());
            std::printf("projection_norm %.17g\n", projection.norm);
            if (dump_basis) {
                qwalk::json doc = qwalk::basis_to_json(basis, graph);
                doc["projection_norm"] = projection.norm;
                emit(doc.dump(2) + "\n", args.out_path);
            }
            return kExitSuccess;
        }

    } catch (const VerdictFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdictFailure;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
