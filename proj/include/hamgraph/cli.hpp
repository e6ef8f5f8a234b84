// Command-line surface.  Every command is pure: the same inputs and seed
// produce byte-identical output.  Results go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 2 validation error, 3 budget exhausted,
// 64 unknown command.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bounds.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "transitions.hpp"

namespace hamgraph::cli {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_budget = 3;
constexpr int exit_unknown_command = 64;

namespace detail {

inline std::vector<std::string> reversed(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    return args;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty()) {
        out << bytes;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw validation_error("cannot write file '" + path + "'");
    file << bytes;
}

// --coloring accepts coord:i,j,...  |  construct:<name>  |  file:<path>
inline Coloring load_coloring(const HammingGraph& g, const std::string& spec) {
    if (spec.rfind("coord:", 0) == 0) {
        std::vector<int> indices;
        std::stringstream ss(spec.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                indices.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw validation_error("bad coordinate list in '" + spec + "'");
            }
        }
        return coordinate_coloring(g, indices);
    }
    if (spec.rfind("construct:", 0) == 0) {
        auto named = construct_by_name(spec.substr(10));
        if (named.coloring.params != g.params())
            throw validation_error("construction '" + named.name + "' lives on " +
                                   named.coloring.params.label() + ", not " + g.params().label());
        return named.coloring;
    }
    if (spec.rfind("file:", 0) == 0) {
        auto coloring = read_coloring(read_file(spec.substr(5)));
        if (coloring.params != g.params())
            throw validation_error("coloring file is for " + coloring.params.label() + ", not " +
                                   g.params().label());
        return coloring;
    }
    throw validation_error("coloring spec must start with coord:, construct: or file:");
}

inline nlohmann::json vertex_set_to_json(const GraphParams& p, const std::vector<Vertex>& vs) {
    nlohmann::json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["d"] = p.d;
    j["vertices"] = vs;
    return j;
}

inline std::vector<Vertex> vertex_set_from_json(const GraphParams& p, const std::string& bytes) {
    nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw validation_error("vertex-set input is not valid JSON");
    try {
        GraphParams fp(j.at("q").get<int>(), j.at("n").get<int>(), j.at("d").get<int>());
        if (fp != p) throw validation_error("vertex set is for " + fp.label());
        auto vs = j.at("vertices").get<std::vector<Vertex>>();
        for (auto v : vs) hamgraph::detail::check_index(p, v);
        return vs;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("malformed vertex-set JSON: ") + e.what());
    }
}

struct CommonFlags {
    int q = 0, n = 0, d = 0;

    void attach(CLI::App& app) {
        app.add_option("-q", q, "alphabet size")->required();
        app.add_option("-n", n, "word length")->required();
        app.add_option("-d", d, "distance threshold")->required();
    }

    GraphParams params() const { return GraphParams(q, n, d); }
};

struct SearchFlags {
    std::optional<double> budget;
    int threads = 1;
    bool no_symmetry = false;

    void attach(CLI::App& app) {
        if (const char* env = std::getenv("HAMGRAPH_THREADS")) {
            try {
                threads = std::max(1, std::stoi(env));
            } catch (const std::exception&) {
            }
        }
        app.add_option("--budget-seconds", budget, "time budget in seconds");
        app.add_option("--threads", threads, "worker threads for set searches");
        app.add_flag("--no-symmetry", no_symmetry, "disable symmetry breaking");
    }

    SearchConfig config() const {
        SearchConfig cfg;
        cfg.time_budget_seconds = budget;
        cfg.thread_count = threads;
        cfg.symmetry_breaking = !no_symmetry;
        return cfg;
    }
};

// Range token: "K", "A..B", or (relative to n) "n", "n-1", "n-2".
inline std::vector<int> expand_range(const std::string& token, int n) {
    auto parse_part = [&](const std::string& s) -> int {
        if (s == "n") return n;
        if (s.rfind("n-", 0) == 0) {
            try {
                return n - std::stoi(s.substr(2));
            } catch (const std::exception&) {
                throw validation_error("bad range token '" + s + "'");
            }
        }
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw validation_error("bad range token '" + s + "'");
        }
    };
    auto dots = token.find("..");
    if (dots == std::string::npos) return {parse_part(token)};
    int lo = parse_part(token.substr(0, dots));
    int hi = parse_part(token.substr(dots + 2));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

inline std::string status_string(SearchStatus s) {
    return s == SearchStatus::proven ? "proven" : "budget-exhausted";
}

} // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> commands = {
        "info",       "export",    "color-make", "color-verify", "transitions", "robustness",
        "generator",  "tiling",    "maxrobust-check", "propagate", "bounds",    "chromatic",
        "alpha",      "omega",     "enumerate",  "construct",    "sweep"};

    if (argv.empty()) {
        err << "usage: hamgraph <command> [options]\ncommands:";
        for (const auto& c : commands) err << " " << c;
        err << "\n";
        return exit_validation;
    }
    const std::string command = argv[0];
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        err << "unknown command '" << command << "'\n";
        return exit_unknown_command;
    }
    std::vector<std::string> rest(argv.begin() + 1, argv.end());

    try {
        CLI::App app{"hamgraph " + command};
        detail::CommonFlags common;
        detail::SearchFlags search_flags;
        std::string coloring_spec, output_path, format = "dimacs", name, quantity = "chi";
        std::string witness_path, clique_path, indep_path, vword, wword, seed_spec = "0,1,2,3";
        std::string q_range, n_range, d_range;
        int k = 0;
        bool as_json = false;

        const bool needs_params = command != "construct" && command != "sweep";
        if (needs_params) common.attach(app);
        if (command == "export") {
            app.add_option("--format", format, "dimacs | dot | json");
            app.add_option("-o,--output", output_path, "output file (default stdout)");
        } else if (command == "color-make" || command == "transitions") {
            app.add_option("--coloring", coloring_spec)->required();
            app.add_option("-o,--output", output_path);
        } else if (command == "color-verify" || command == "robustness" || command == "generator" ||
                   command == "tiling" || command == "maxrobust-check") {
            app.add_option("--coloring", coloring_spec)->required();
        } else if (command == "propagate") {
            app.add_option("--v", vword)->required();
            app.add_option("--w", wword)->required();
            app.add_option("--seed-colors", seed_spec, "four distinct colors, default 0,1,2,3");
            app.add_option("-o,--output", output_path);
        } else if (command == "bounds") {
            app.add_option("--clique", clique_path, "clique certificate (vertex-set JSON file)");
            app.add_option("--independent-set", indep_path, "independent-set certificate file");
            app.add_flag("--json", as_json);
        } else if (command == "chromatic" || command == "alpha" || command == "omega") {
            search_flags.attach(app);
            app.add_option("--witness", witness_path, "write the witness to this file");
        } else if (command == "enumerate") {
            search_flags.attach(app);
            app.add_option("-k", k, "palette size")->required();
        } else if (command == "construct") {
            app.add_option("--name", name)->required();
            app.add_option("-o,--output", output_path);
        } else if (command == "sweep") {
            search_flags.attach(app);
            app.add_option("--q", q_range)->required();
            app.add_option("--n", n_range)->required();
            app.add_option("--d", d_range)->required();
            app.add_option("--quantity", quantity, "chi | alpha | degree | edges | girth");
        }

        try {
            app.parse(detail::reversed(rest));
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err << e.what() << "\n";
            return exit_validation;
        }

        if (command == "info") {
            HammingGraph g(common.params());
            out << "vertices " << g.vertex_count() << "\n";
            out << "edges " << g.edge_count() << "\n";
            out << "degree " << g.degree() << "\n";
            out << "girth " << g.girth() << "\n";
            return exit_ok;
        }
        if (command == "export") {
            HammingGraph g(common.params());
            detail::write_output(output_path, export_graph(g, parse_export_format(format)), out);
            return exit_ok;
        }
        if (command == "color-make") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            detail::write_output(output_path, write_coloring(coloring) + "\n", out);
            return exit_ok;
        }
        if (command == "color-verify") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto classes = color_classes(coloring);
            out << "proper " << (is_proper(g, coloring) ? "true" : "false") << "\n";
            out << "even " << (is_even(coloring) ? "true" : "false") << "\n";
            out << "k " << coloring.k << "\n";
            out << "used " << coloring.used_colors() << "\n";
            out << "class-sizes";
            for (const auto& cls : classes)
                if (!cls.empty()) out << " " << cls.size();
            out << "\n";
            return exit_ok;
        }
        if (command == "transitions") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto space = transition_space(g, coloring);
            detail::write_output(output_path, transition_space_to_json(g, space).dump() + "\n", out);
            return exit_ok;
        }
        if (command == "robustness") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto report = robustness(g, coloring);
            out << report.transition_edge_count << "/" << report.edge_count << "\n";
            return exit_ok;
        }
        if (command == "generator") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto generator = generator_set(g, coloring);
            if (!generator) {
                out << "not-generated\n";
            } else {
                out << "generator";
                for (Vertex v : *generator) out << " " << word_string(g.params(), v);
                out << "\n";
            }
            return exit_ok;
        }
        if (command == "tiling") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto space = transition_space(g, coloring);
            out << (tiles_in_4cycles(g, space.edges) ? "tiles" : "does-not-tile") << "\n";
            return exit_ok;
        }
        if (command == "maxrobust-check") {
            HammingGraph g(common.params());
            auto coloring = detail::load_coloring(g, coloring_spec);
            auto check = max_robust_check(g, coloring);
            out << "two-element-generator " << (check.two_element_generator ? "true" : "false") << "\n";
            out << "robustness-maximal " << (check.robustness_maximal ? "true" : "false") << "\n";
            out << "tiles-in-4cycles " << (check.tiles ? "true" : "false") << "\n";
            return exit_ok;
        }
        if (command == "propagate") {
            HammingGraph g(common.params());
            std::array<std::uint32_t, 4> seed{};
            {
                std::stringstream ss(seed_spec);
                std::string tok;
                std::size_t i = 0;
                while (std::getline(ss, tok, ',')) {
                    if (i >= 4) throw validation_error("seed needs exactly four colors");
                    try {
                        seed[i++] = static_cast<std::uint32_t>(std::stoul(tok));
                    } catch (const std::exception&) {
                        throw validation_error("bad seed color '" + tok + "'");
                    }
                }
                if (i != 4) throw validation_error("seed needs exactly four colors");
            }
            Vertex v = parse_word(g.params(), vword);
            Vertex w = parse_word(g.params(), wword);
            auto result = propagate_from_cycle(g, v, w, seed);
            if (result.ok()) {
                detail::write_output(output_path, write_coloring(*result.coloring) + "\n", out);
            } else {
                out << "contradiction " << word_string(g.params(), *result.conflict) << "\n";
            }
            return exit_ok;
        }
        if (command == "bounds") {
            auto params = common.params();
            std::optional<std::vector<Vertex>> clique, indep;
            if (!clique_path.empty())
                clique = detail::vertex_set_from_json(params, detail::read_file(clique_path));
            if (!indep_path.empty())
                indep = detail::vertex_set_from_json(params, detail::read_file(indep_path));
            auto report = chi_bounds(params, clique, indep);
            if (as_json) {
                out << bound_report_to_json(report).dump() << "\n";
            } else {
                out << "lower " << report.lower << "\n";
                out << "upper " << report.upper << "\n";
                if (report.exact)
                    out << "exact " << *report.exact << "\n";
                else
                    out << "exact none\n";
                for (const auto& rule : report.rules)
                    out << "rule [" << rule.kind << "] " << rule.value << " : " << rule.name << "\n";
            }
            return exit_ok;
        }
        if (command == "chromatic") {
            HammingGraph g(common.params());
            auto result = chromatic_number(g, search_flags.config());
            if (result.status == SearchStatus::proven) {
                out << "chi " << result.value() << "\n";
            } else {
                out << "chi-lower " << result.lower << "\n";
                out << "chi-upper " << result.upper << "\n";
            }
            out << "status " << detail::status_string(result.status) << "\n";
            if (!witness_path.empty() && result.witness)
                detail::write_output(witness_path, write_coloring(*result.witness) + "\n", out);
            return result.status == SearchStatus::proven ? exit_ok : exit_budget;
        }
        if (command == "alpha" || command == "omega") {
            HammingGraph g(common.params());
            auto result = command == "alpha" ? max_independent_set(g, search_flags.config())
                                             : max_clique(g, search_flags.config());
            out << (command == "alpha" ? "alpha " : "omega ") << result.value << "\n";
            out << "status " << detail::status_string(result.status) << "\n";
            if (!witness_path.empty())
                detail::write_output(witness_path,
                                     detail::vertex_set_to_json(g.params(), result.witness).dump() + "\n",
                                     out);
            return result.status == SearchStatus::proven ? exit_ok : exit_budget;
        }
        if (command == "enumerate") {
            HammingGraph g(common.params());
            if (k < 0) throw validation_error("palette size must be nonnegative");
            auto result = enumerate_colorings(g, static_cast<std::uint32_t>(k), search_flags.config());
            for (const auto& part : result.partitions) {
                out << "partition ";
                for (std::size_t c = 0; c < part.classes.size(); ++c) {
                    if (c) out << "|";
                    for (std::size_t i = 0; i < part.classes[c].size(); ++i) {
                        if (i) out << " ";
                        out << word_string(g.params(), part.classes[c][i]);
                    }
                }
                out << "\n";
            }
            out << "count " << result.partitions.size() << "\n";
            out << "status " << detail::status_string(result.status) << "\n";
            return result.status == SearchStatus::proven ? exit_ok : exit_budget;
        }
        if (command == "construct") {
            auto named = construct_by_name(name);
            detail::write_output(output_path, write_coloring(named.coloring) + "\n", out);
            return exit_ok;
        }
        if (command == "sweep") {
            static const std::vector<std::string> quantities = {"chi", "alpha", "degree", "edges",
                                                                "girth"};
            if (std::find(quantities.begin(), quantities.end(), quantity) == quantities.end())
                throw validation_error("unknown quantity '" + quantity + "'");
            out << "q,n,d,quantity,value,status,provenance\n";
            bool any_budget_hit = false;
            for (int q : detail::expand_range(q_range, 0))
                for (int n : detail::expand_range(n_range, 0))
                    for (int d : detail::expand_range(d_range, n)) {
                        out << q << "," << n << "," << d << "," << quantity << ",";
                        try {
                            GraphParams params(q, n, d);
                            if (quantity == "chi") {
                                HammingGraph g(params);
                                auto result = chromatic_number(g, search_flags.config());
                                if (result.status == SearchStatus::proven) {
                                    out << result.value() << ",proven,";
                                } else {
                                    out << result.lower << ".." << result.upper
                                        << ",budget-exhausted,";
                                    any_budget_hit = true;
                                }
                                auto report = chi_bounds(params);
                                out << (report.exact ? "\"closed-form rules; search confirms\""
                                                     : "\"exact search between counting bounds\"");
                            } else if (quantity == "alpha") {
                                auto alpha = alpha_formula(params);
                                out << alpha.value << "," << (alpha.exact ? "exact" : "upper-bound")
                                    << ",\"" << alpha.rule << "\"";
                            } else if (quantity == "degree") {
                                out << closed_form_degree(params) << ",closed-form,regular degree";
                            } else if (quantity == "edges") {
                                HammingGraph g(params);
                                out << g.edge_count() << ",closed-form,handshake count";
                            } else if (quantity == "girth") {
                                HammingGraph g(params);
                                out << g.girth() << ",closed-form,girth dichotomy";
                            }
                        } catch (const validation_error& e) {
                            out << ",\"excluded: " << e.what() << "\",";
                        }
                        out << "\n";
                    }
            return any_budget_hit ? exit_budget : exit_ok;
        }
        err << "command '" << command << "' fell through\n";
        return exit_validation;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_validation;
    }
}

} // namespace hamgraph::cli
