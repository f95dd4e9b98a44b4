#include "chordalkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chordalkit/asteroidal.hpp"
#include "chordalkit/chordal.hpp"
#include "chordalkit/families.hpp"
#include "chordalkit/graph6.hpp"
#include "chordalkit/sun_system.hpp"
#include "chordalkit/tree_oracle.hpp"
#include "chordalkit/validate.hpp"

namespace chordalkit {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-" || path.empty()) return read_stream(stdin_stream);
    std::ifstream file(path);
    if (!file) throw graph_error("cannot open input file '" + path + "'");
    return read_stream(file);
}

// One edge-list graph, or one graph per graph6 line.
std::vector<Graph> parse_graphs(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    while (std::getline(in, first)) {
        std::size_t start = first.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (first[start] == '#') continue;
        break;
    }
    if (first.rfind("n ", 0) == 0 || first.rfind("n\t", 0) == 0)
        return {from_edge_list_text(text)};
    std::vector<Graph> graphs;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const graph_error& e) {
            throw graph_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return graphs;
}

int default_cap(int fallback) {
    if (const char* env = std::getenv("CHORDALKIT_CAP_CLIQUES")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return fallback;
}

struct RecognizeFlags {
    std::string input = "-";
    std::string cls = "all";
    std::string engine = "auto";
    std::string tree_dot;
    int cap_cliques = 0;
};

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_recognize(const RecognizeFlags& flags, std::istream& stdin_stream, std::ostream& out) {
    std::vector<Graph> graphs = parse_graphs(read_input(flags.input, stdin_stream));
    const int cap = flags.cap_cliques > 0 ? flags.cap_cliques : default_cap(12);
    bool violation = false;

    struct Row {
        std::string text;
        bool violation = false;
    };
    std::vector<Row> rows(graphs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
        const Graph& g = graphs[i];
        std::ostringstream line;
        line << "graph " << (i + 1) << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
             << "):";
        bool use_oracle = flags.engine == "oracle" || flags.engine == "both" ||
                          (flags.engine == "auto" && g.vertex_count() <= 7);
        bool use_char = flags.engine != "oracle";
        try {
            RecognitionProfile profile;
            if (use_char) profile = recognize(g);
            bool oracle_path = false, oracle_interval = false;
            if (use_oracle) {
                OracleOptions oracle;
                oracle.max_cliques = cap;
                oracle_path = is_path_graph_oracle(g, oracle).is_path_graph;
                oracle_interval = is_interval_oracle(g, std::min(cap, 10));
            }
            if (!use_char) {
                profile.chordal = is_chordal(g).chordal;
                profile.path = oracle_path;
                profile.interval = oracle_interval;
                profile.directed_path =
                    oracle_path && !contains_induced_odd_sun(g).found;
            }
            auto emit = [&](const char* name, bool value) {
                if (flags.cls == "all" || flags.cls == name)
                    line << " " << name << "=" << yesno(value);
            };
            emit("chordal", profile.chordal);
            emit("interval", profile.interval);
            emit("directed-path", profile.directed_path);
            emit("path", profile.path);
            if (use_char && use_oracle) {
                if (profile.path != oracle_path) {
                    line << " DISAGREEMENT path: characterization=" << yesno(profile.path)
                         << " oracle=" << yesno(oracle_path);
                    rows[i].violation = true;
                }
                if (profile.interval != oracle_interval) {
                    line << " DISAGREEMENT interval: characterization="
                         << yesno(profile.interval) << " oracle=" << yesno(oracle_interval);
                    rows[i].violation = true;
                }
            }
        } catch (const size_cap_error& e) {
            line << " size-cap: " << e.what();
        }
        rows[i].text = line.str();
    }
    for (const Row& row : rows) {
        out << row.text << "\n";
        violation = violation || row.violation;
    }

    if (!flags.tree_dot.empty()) {
        if (graphs.size() != 1)
            throw graph_error("--tree-dot expects exactly one input graph");
        std::ofstream dot(flags.tree_dot);
        if (!dot) throw graph_error("cannot write '" + flags.tree_dot + "'");
        dot << to_dot(build_clique_tree(graphs[0]));
    }
    return violation ? exit_violation : exit_ok;
}

struct CertifyFlags {
    std::string input = "-";
    std::string cls = "path";
    bool oracle_engine = false;
    int cap_cliques = 0;
};

int cmd_certify(const CertifyFlags& flags, std::istream& stdin_stream, std::ostream& out) {
    std::vector<Graph> graphs = parse_graphs(read_input(flags.input, stdin_stream));
    GraphClass cls = parse_graph_class(flags.cls);
    CertifyOptions opts;
    opts.oracle_engine = flags.oracle_engine;
    opts.max_cliques = flags.cap_cliques > 0 ? flags.cap_cliques : default_cap(12);
    opts.max_host_vertices = flags.cap_cliques > 0 ? flags.cap_cliques : default_cap(12);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        out << "graph " << (i + 1) << " (n=" << graphs[i].vertex_count()
            << ", m=" << graphs[i].edge_count() << ", class=" << graph_class_name(cls)
            << ")\n";
        try {
            CertifyOutcome outcome = certify(graphs[i], cls, opts);
            if (outcome.member)
                out << "no certificate: member\n";
            else
                out << describe_certificate(graphs[i], *outcome.certificate);
        } catch (const size_cap_error& e) {
            out << "size-cap: " << e.what() << "\n";
        }
    }
    return exit_ok;
}

struct GenFlags {
    std::string family;
    std::string format = "g6";
    int param = -1; // positional shorthand for --k or --n
    int k = 3;
    int type = 1;
    int t = 1;
    int n = 6;
    int cliques = 5;
    int samples = 1;
    std::uint64_t seed = 0;
};

std::string graph_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

int cmd_gen(GenFlags flags, std::ostream& out) {
    if (flags.param > 0) {
        if (flags.family == "ksun" || flags.family == "f11")
            flags.k = flags.param;
        else
            flags.n = flags.param;
    }
    std::vector<Graph> graphs;
    std::string annotation;
    if (flags.family == "ksun") {
        graphs.push_back(k_sun(flags.k));
    } else if (flags.family == "g1") {
        graphs.push_back(g1());
    } else if (flags.family == "g2") {
        graphs.push_back(g2());
    } else if (flags.family == "g3") {
        graphs.push_back(g3());
    } else if (flags.family == "f11") {
        graphs.push_back(flags.k == 2 ? f11_8() : f11_4k(flags.k));
    } else if (flags.family == "sdirected") {
        PointedGraph shape = s_directed_pointed(flags.type, flags.t);
        annotation = "u=" + shape.graph.label(shape.u) + " v=" + shape.graph.label(shape.v);
        graphs.push_back(std::move(shape.graph));
    } else if (flags.family == "corpus") {
        graphs = enumerate_small_chordal(flags.n);
    } else if (flags.family == "random") {
        for (int s = 0; s < flags.samples; ++s)
            graphs.push_back(random_chordal(flags.n, flags.cliques, flags.seed + s));
    } else {
        throw graph_error("unknown family '" + flags.family +
                          "' (ksun, g1, g2, g3, f11, sdirected, corpus, random)");
    }

    for (const Graph& g : graphs) {
        if (flags.format == "g6") {
            out << to_graph6(g);
            if (!annotation.empty()) out << " # " << annotation;
            out << "\n";
        } else if (flags.format == "edges") {
            if (!annotation.empty()) out << "# " << annotation << "\n";
            out << to_edge_list_text(g);
        } else if (flags.format == "dot") {
            if (!annotation.empty()) out << "// " << annotation << "\n";
            out << graph_dot(g);
        } else {
            throw graph_error("unknown format '" + flags.format + "' (g6, edges, dot)");
        }
    }
    return exit_ok;
}

struct ValidateFlags {
    std::string suite = "all";
    int n_max = 7;
    int samples = 500;
    std::uint64_t seed = 2026;
    int cap_cliques = 0;
};

int cmd_validate(const ValidateFlags& flags, std::ostream& out) {
    ValidateOptions opts;
    opts.n_max = flags.n_max;
    opts.lemma_n_max = std::min(flags.n_max, 6);
    opts.samples = flags.samples;
    opts.seed = flags.seed;
    opts.oracle_clique_cap = flags.cap_cliques > 0 ? flags.cap_cliques : default_cap(12);
    bool all_passed = true;
    for (const CriterionResult& r : run_validation_suite(flags.suite, opts)) {
        out << format_criterion(r) << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? exit_ok : exit_violation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chordal hierarchy recognizer: chordal, path, directed path, and "
                 "interval graphs with machine-checkable certificates"};
    app.require_subcommand(1);

    RecognizeFlags rec;
    CLI::App* recognize_cmd =
        app.add_subcommand("recognize", "class membership for each input graph");
    recognize_cmd->add_option("input", rec.input, "graph6 lines or edge list ('-' = stdin)");
    recognize_cmd->add_option("--class", rec.cls, "chordal|interval|directed-path|path|all")
        ->check(CLI::IsMember({"chordal", "interval", "directed-path", "path", "all"}));
    recognize_cmd->add_option("--engine", rec.engine, "characterization|oracle|both|auto")
        ->check(CLI::IsMember({"characterization", "oracle", "both", "auto"}));
    recognize_cmd->add_option("--tree-dot", rec.tree_dot, "write the clique tree as DOT");
    recognize_cmd->add_option("--cap-cliques", rec.cap_cliques, "oracle clique cap");

    CertifyFlags cert;
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "non-membership witnesses, re-verified before printing");
    certify_cmd->add_option("input", cert.input, "graph6 lines or edge list ('-' = stdin)");
    certify_cmd->add_option("--class", cert.cls, "chordal|interval|directed-path|path")
        ->check(CLI::IsMember({"chordal", "interval", "directed-path", "path"}));
    certify_cmd->add_flag("--oracle", cert.oracle_engine,
                          "exhaustion trace instead of a sun system (path class)");
    certify_cmd->add_option("--cap-cliques", cert.cap_cliques, "search caps");

    GenFlags gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "graph family generators");
    gen_cmd->add_option("family", gen.family, "ksun|g1|g2|g3|f11|sdirected|corpus|random")
        ->required();
    gen_cmd->add_option("param", gen.param, "shorthand for --k (ksun, f11) or --n");
    gen_cmd->add_option("--k", gen.k, "order for ksun/f11");
    gen_cmd->add_option("--type", gen.type, "special connection type 1..4");
    gen_cmd->add_option("--t", gen.t, "type-4 parameter");
    gen_cmd->add_option("--n", gen.n, "vertex count for corpus/random");
    gen_cmd->add_option("--cliques", gen.cliques, "clique budget for random");
    gen_cmd->add_option("--samples", gen.samples, "number of random samples");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--format", gen.format, "g6|edges|dot")
        ->check(CLI::IsMember({"g6", "edges", "dot"}));

    ValidateFlags val;
    CLI::App* validate_cmd = app.add_subcommand("validate", "property suites");
    validate_cmd->add_option("--suite", val.suite, "hierarchy|theorem|lemmas|prop44|all")
        ->check(CLI::IsMember({"hierarchy", "theorem", "lemmas", "prop44", "all"}));
    validate_cmd->add_option("--n-max", val.n_max, "exhaustive corpus bound");
    validate_cmd->add_option("--samples", val.samples, "random sample count");
    validate_cmd->add_option("--seed", val.seed, "random seed");
    validate_cmd->add_option("--cap-cliques", val.cap_cliques, "oracle clique cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        if (recognize_cmd->parsed()) return cmd_recognize(rec, std::cin, out);
        if (certify_cmd->parsed()) return cmd_certify(cert, std::cin, out);
        if (gen_cmd->parsed()) return cmd_gen(gen, out);
        return cmd_validate(val, out);
    } catch (const graph_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace chordalkit
