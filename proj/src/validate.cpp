#include "chordalkit/validate.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "chordalkit/canonical.hpp"
#include "chordalkit/chordal.hpp"
#include "chordalkit/families.hpp"
#include "chordalkit/graph6.hpp"
#include "chordalkit/tree_oracle.hpp"

namespace chordalkit {

GraphClass parse_graph_class(const std::string& name) {
    if (name == "chordal") return GraphClass::chordal;
    if (name == "interval") return GraphClass::interval;
    if (name == "directed-path") return GraphClass::directed_path;
    if (name == "path") return GraphClass::path;
    throw graph_error("unknown graph class '" + name + "'");
}

const char* graph_class_name(GraphClass cls) {
    switch (cls) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::interval: return "interval";
    case GraphClass::directed_path: return "directed-path";
    default: return "path";
    }
}

RecognitionProfile recognize(const Graph& g, const CertifyOptions& opts) {
    RecognitionProfile p;
    p.chordal = is_chordal(g).chordal;
    if (!p.chordal) return p;
    p.interval = is_interval(g);
    SunSearchOptions sun{opts.max_host_vertices, opts.exec};
    p.path = is_path_graph_via_theorem(g, sun).is_path_graph;
    p.directed_path = is_directed_path(g);
    return p;
}

CertifyOutcome certify(const Graph& g, GraphClass cls, const CertifyOptions& opts) {
    ChordalityResult chordality = is_chordal(g);
    if (!chordality.chordal) {
        Certificate cert = InducedCycleCertificate{chordality.induced_cycle};
        if (!verify_certificate(g, cert))
            throw graph_error("internal error: chordality certificate failed re-verification");
        return {false, cert};
    }
    SunSearchOptions sun{opts.max_host_vertices, opts.exec};

    std::optional<Certificate> cert;
    switch (cls) {
    case GraphClass::chordal:
        return {true, std::nullopt};
    case GraphClass::interval: {
        auto triples = find_asteroidal_triples(g);
        if (triples.empty()) return {true, std::nullopt};
        cert = AsteroidalCertificate{triples.front(), {}};
        break;
    }
    case GraphClass::directed_path: {
        OddSunResult sun_hit = contains_induced_odd_sun(g, opts.exec);
        if (sun_hit.found) {
            cert = OddSunCertificate{sun_hit.vertices, sun_hit.k};
            break;
        }
        auto s_at = find_s_asteroidal_triple(g);
        if (!s_at) return {true, std::nullopt};
        cert = AsteroidalCertificate{
            s_at->triple, {s_at->links[0], s_at->links[1], s_at->links[2]}};
        break;
    }
    case GraphClass::path: {
        if (opts.oracle_engine) {
            OracleOptions oracle{opts.max_cliques, true};
            PathOracleResult result = is_path_graph_oracle(g, oracle);
            if (result.is_path_graph) return {true, std::nullopt};
            cert = OracleExhaustionCertificate{result.trees_examined, result.valid_trees,
                                               opts.max_cliques};
        } else {
            TheoremResult result = is_path_graph_via_theorem(g, sun);
            if (result.is_path_graph) return {true, std::nullopt};
            cert = BadSunSystemCertificate{std::move(*result.witness)};
        }
        break;
    }
    }
    if (!verify_certificate(g, *cert))
        throw graph_error("internal error: certificate failed re-verification");
    return {false, std::move(cert)};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

void record(CriterionResult& r, const std::string& violation, std::size_t cap = 5) {
    if (r.violations.size() < cap) r.violations.push_back(violation);
}

std::string quadruple(const RecognitionProfile& p) {
    std::ostringstream out;
    out << "(interval=" << p.interval << ", directed-path=" << p.directed_path
        << ", path=" << p.path << ", chordal=" << p.chordal << ")";
    return out.str();
}

} // namespace

CriterionResult criterion_hierarchy_witnesses() {
    Timer timer;
    CriterionResult r{1, "hierarchy witnesses", true, "", {}, 0.0};
    struct Expected {
        const char* name;
        Graph graph;
        bool interval, directed, path, chordal;
    };
    std::vector<Expected> cases;
    cases.push_back({"g1", g1(), false, true, true, true});
    cases.push_back({"g2", g2(), false, false, true, true});
    cases.push_back({"g3", g3(), false, false, false, true});
    for (const Expected& c : cases) {
        RecognitionProfile p = recognize(c.graph);
        if (p.interval != c.interval || p.directed_path != c.directed ||
            p.path != c.path || p.chordal != c.chordal) {
            r.passed = false;
            record(r, std::string(c.name) + " -> " + quadruple(p));
        }
    }
    r.detail = "three fixed witnesses, exact quadruples";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_theorem_cross_validation(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{2, "sun-system recognizer vs clique-tree oracle", true, "", {}, 0.0};
    SunSearchOptions sun{12, opts.exec};
    std::uint64_t corpus_checked = 0;
    for (int n = 1; n <= opts.n_max; ++n) {
        std::vector<Graph> corpus = enumerate_small_chordal(n, opts.exec);
        std::vector<int> verdicts(corpus.size(), -1);
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
        for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i) {
            bool theorem = is_path_graph_via_theorem(corpus[i], sun).is_path_graph;
            bool oracle = is_path_graph_oracle(corpus[i]).is_path_graph;
            verdicts[i] = theorem == oracle ? 1 : 0;
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            ++corpus_checked;
            if (verdicts[i] == 0) {
                r.passed = false;
                record(r, "n=" + std::to_string(n) + " " + to_graph6(corpus[i]));
            }
        }
    }

    int skipped = 0;
    int random_checked = 0;
    for (int s = 0; s < opts.samples; ++s) {
        Graph g = random_chordal(opts.random_n, opts.clique_budget, opts.seed + s);
        if (maximal_cliques(g).size() > opts.oracle_clique_cap) {
            ++skipped;
            continue;
        }
        ++random_checked;
        bool theorem = is_path_graph_via_theorem(g, sun).is_path_graph;
        bool oracle = is_path_graph_oracle(g).is_path_graph;
        if (theorem != oracle) {
            r.passed = false;
            record(r, "random seed=" + std::to_string(opts.seed + s) + " " + to_graph6(g));
        }
    }
    double skipped_fraction = opts.samples ? double(skipped) / opts.samples : 0.0;
    if (skipped_fraction >= 0.20) {
        r.passed = false;
        record(r, "skipped fraction " + std::to_string(skipped_fraction) + " >= 0.20");
    }
    std::ostringstream detail;
    detail << corpus_checked << " corpus graphs (n <= " << opts.n_max << "), "
           << random_checked << " random graphs at n = " << opts.random_n << ", "
           << skipped << " skipped (fraction " << skipped_fraction << ")";
    r.detail = detail.str();
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_directed_double_characterization(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{3, "directed-path double characterization", true, "", {}, 0.0};
    SunSearchOptions sun{12, opts.exec};
    std::uint64_t checked = 0;
    for (int n = 1; n <= opts.n_max; ++n) {
        std::vector<Graph> corpus = enumerate_small_chordal(n, opts.exec);
        std::vector<int> verdicts(corpus.size(), -1);
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
        for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i) {
            bool special = is_directed_path(corpus[i]);
            bool via_suns = is_directed_path_via_odd_sun(corpus[i], sun);
            verdicts[i] = special == via_suns ? 1 : 0;
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            ++checked;
            if (verdicts[i] == 0) {
                r.passed = false;
                record(r, "n=" + std::to_string(n) + " " + to_graph6(corpus[i]));
            }
        }
    }
    r.detail = std::to_string(checked) + " corpus graphs (n <= " +
               std::to_string(opts.n_max) + ")";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_interval_double_characterization(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{4, "interval double characterization", true, "", {}, 0.0};
    std::uint64_t checked = 0;
    for (int n = 1; n <= opts.n_max; ++n) {
        std::vector<Graph> corpus = enumerate_small_chordal(n, opts.exec);
        std::vector<int> verdicts(corpus.size(), -1);
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
        for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i)
            verdicts[i] = is_interval(corpus[i]) == is_interval_oracle(corpus[i]) ? 1 : 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            ++checked;
            if (verdicts[i] == 0) {
                r.passed = false;
                record(r, "n=" + std::to_string(n) + " " + to_graph6(corpus[i]));
            }
        }
    }
    r.detail = std::to_string(checked) + " corpus graphs (n <= " +
               std::to_string(opts.n_max) + ")";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_three_leaves_lemma(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{5, "asteroidal triples span three-leaf subtrees", true, "", {}, 0.0};
    std::uint64_t trees_checked = 0, triples_checked = 0;
    for (int n = 1; n <= opts.lemma_n_max; ++n) {
        for (const Graph& g : enumerate_small_chordal(n, opts.exec)) {
            auto triples = find_asteroidal_triples(g);
            if (triples.empty()) continue;
            triples_checked += triples.size();
            for_each_clique_tree(g, 12, [&](const CliqueTree& t) {
                ++trees_checked;
                for (auto& triple : triples) {
                    SubtreeView view = steiner_subtree(
                        t, VertexSet::of({triple[0], triple[1], triple[2]}));
                    bool ok = view.leaves.size() == 3;
                    if (ok) {
                        // each leaf holds exactly one triple vertex
                        for (int member : triple) {
                            int holders = 0;
                            for (int leaf : view.leaves)
                                if (t.cliques.cliques[leaf].contains(member)) ++holders;
                            if (holders != 1) ok = false;
                        }
                    }
                    if (!ok) {
                        r.passed = false;
                        record(r, to_graph6(g) + " triple {" + std::to_string(triple[0]) +
                                      "," + std::to_string(triple[1]) + "," +
                                      std::to_string(triple[2]) + "}");
                    }
                }
                return true;
            });
        }
    }
    r.detail = std::to_string(triples_checked) + " triples over " +
               std::to_string(trees_checked) + " clique trees (n <= " +
               std::to_string(opts.lemma_n_max) + ")";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_common_neighborhood(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{6, "triples inside one neighborhood defeat path trees", true, "", {}, 0.0};
    std::uint64_t hits = 0;
    for (int n = 1; n <= opts.n_max; ++n) {
        for (const Graph& g : enumerate_small_chordal(n, opts.exec)) {
            bool covered_triple = false;
            for (auto& triple : find_asteroidal_triples(g)) {
                for (int x = 0; x < g.vertex_count() && !covered_triple; ++x) {
                    VertexSet nb = g.neighbors(x);
                    if (nb.contains(triple[0]) && nb.contains(triple[1]) &&
                        nb.contains(triple[2]))
                        covered_triple = true;
                }
                if (covered_triple) break;
            }
            if (!covered_triple) continue;
            ++hits;
            if (is_path_graph_oracle(g).is_path_graph) {
                r.passed = false;
                record(r, to_graph6(g));
            }
        }
    }
    r.detail = std::to_string(hits) + " corpus graphs with a covered triple (n <= " +
               std::to_string(opts.n_max) + ")";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_ta_construction() {
    Timer timer;
    CriterionResult r{7, "per-triple clique trees for the f11 family", true, "", {}, 0.0};
    std::uint64_t triples_checked = 0;
    for (int k : {3, 4}) {
        Graph f = f11_4k(k);
        if (is_path_graph_oracle(f).is_path_graph) {
            r.passed = false;
            record(r, "f11_4k(" + std::to_string(k) + ") accepted by the path oracle");
        }
        for (auto& triple : find_asteroidal_triples(f)) {
            ++triples_checked;
            std::string tag = "k=" + std::to_string(k) + " triple {" +
                              std::to_string(triple[0]) + "," + std::to_string(triple[1]) +
                              "," + std::to_string(triple[2]) + "}";
            TaResult result = build_ta(f, triple);
            if (!result.tree) {
                r.passed = false;
                record(r, tag + ": " + result.infeasible, 12);
                continue;
            }
            if (!validate_clique_tree(*result.tree)) {
                r.passed = false;
                record(r, tag + ": tree failed validation", 12);
                continue;
            }
            std::vector<VertexSet> adj = result.tree->adjacency();
            for (int ray : triple)
                for (int v : f.neighbors(ray)) {
                    VertexSet nodes = result.tree->nodes_containing(v);
                    for (int q : nodes)
                        if ((adj[q] & nodes).count() >= 3) {
                            r.passed = false;
                            record(r, tag + ": subtree of vertex " + std::to_string(v) +
                                          " is not a path", 12);
                        }
                }
        }
    }
    r.detail = std::to_string(triples_checked) + " asteroidal triples over k in {3,4}";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_reconstruction_gate() {
    Timer timer;
    CriterionResult r{8, "f11 reconstruction gate", true, "", {}, 0.0};
    if (canonical_code(f11_4k(2)) != canonical_code(f11_8())) {
        r.passed = false;
        record(r, "f11_4k(2) is not isomorphic to the drawn eight-vertex instance");
    }
    for (int k : {2, 3, 4}) {
        int rays = 2 * k - 1;
        int cliques = maximal_cliques(f11_4k(k)).size();
        if (cliques != rays + 2) {
            r.passed = false;
            record(r, "f11_4k(" + std::to_string(k) + ") has " + std::to_string(cliques) +
                          " maximal cliques, expected " + std::to_string(rays + 2));
        }
    }
    r.detail = "isomorphism at k=2 and clique counts for k in {2,3,4}";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_certificate_soundness(const ValidateOptions& opts) {
    Timer timer;
    CriterionResult r{9, "certificate soundness", true, "", {}, 0.0};
    std::uint64_t emitted = 0, verified = 0;

    std::vector<Graph> bag;
    // every 5-vertex graph, chordal or not
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++k)
                if ((bits >> k) & 1) edges.emplace_back(i, j);
        bag.push_back(Graph::from_edge_list(5, edges));
    }
    bag.push_back(g1());
    bag.push_back(g2());
    bag.push_back(g3());
    bag.push_back(f11_8());
    bag.push_back(f11_4k(3));
    bag.push_back(k_sun(4));
    bag.push_back(k_sun(5));
    for (int s = 0; s < std::min(opts.samples, 100); ++s)
        bag.push_back(random_chordal(opts.random_n, opts.clique_budget, opts.seed + s));

    CertifyOptions copts;
    copts.exec = opts.exec;
    for (const Graph& g : bag) {
        for (GraphClass cls : {GraphClass::chordal, GraphClass::interval,
                               GraphClass::directed_path, GraphClass::path}) {
            CertifyOutcome outcome = certify(g, cls, copts);
            if (outcome.member) continue;
            ++emitted;
            if (verify_certificate(g, *outcome.certificate))
                ++verified;
            else {
                r.passed = false;
                record(r, std::string(graph_class_name(cls)) + " " + to_graph6(g));
            }
        }
        // the oracle-engine route on a couple of non-path carriers
        if (g.vertex_count() == 8) {
            CertifyOptions oracle_opts = copts;
            oracle_opts.oracle_engine = true;
            CertifyOutcome outcome = certify(g, GraphClass::path, oracle_opts);
            if (!outcome.member) {
                ++emitted;
                if (verify_certificate(g, *outcome.certificate))
                    ++verified;
                else {
                    r.passed = false;
                    record(r, "oracle-engine " + to_graph6(g));
                }
            }
        }
    }
    r.detail = std::to_string(verified) + "/" + std::to_string(emitted) +
               " certificates re-verified";
    if (emitted == 0) r.passed = false;
    r.seconds = timer.seconds();
    return r;
}

std::vector<Graph> split_ray_instances(int minimum) {
    std::vector<Graph> instances;
    std::vector<std::string> seen_codes;
    // two petal cliques over a shared core; candidate ray neighbourhoods are
    // core pairs (intersecting) or a core vertex plus one petal-exclusive
    // vertex (split); every triple of candidates is screened by the
    // recognizers before it counts as an instance
    for (int core = 2; core <= 3; ++core) {
        for (int left = 2; left <= 3 - (core - 2); ++left) {
            for (int right = 2; right <= 2; ++right) {
                const int lo = core, ro = core + left;
                const int flower_n = core + left + right;
                if (flower_n + 3 > 10) continue;

                std::vector<VertexSet> candidates;
                for (int c = 0; c < core; ++c) {
                    for (int i = 0; i < left; ++i)
                        candidates.push_back(VertexSet::of({c, lo + i}));
                    for (int i = 0; i < right; ++i)
                        candidates.push_back(VertexSet::of({c, ro + i}));
                }
                for (int a = 0; a < core; ++a)
                    for (int b = a + 1; b < core; ++b)
                        candidates.push_back(VertexSet::of({a, b}));

                const int m = static_cast<int>(candidates.size());
                for (int a = 0; a < m; ++a)
                    for (int b = a + 1; b < m; ++b)
                        for (int c = b + 1; c < m; ++c) {
                            GraphBuilder builder(flower_n + 3);
                            VertexSet core_set = VertexSet::first_n(core);
                            VertexSet left_clique = core_set;
                            for (int i = 0; i < left; ++i) left_clique.insert(lo + i);
                            VertexSet right_clique = core_set;
                            for (int i = 0; i < right; ++i) right_clique.insert(ro + i);
                            builder.clique(left_clique);
                            builder.clique(right_clique);
                            std::array<VertexSet, 3> picks{candidates[a], candidates[b],
                                                           candidates[c]};
                            for (int i = 0; i < 3; ++i)
                                for (int v : picks[i]) builder.edge(flower_n + i, v);
                            Graph g = builder.build();

                            VertexSet ray_set = VertexSet::of(
                                {flower_n, flower_n + 1, flower_n + 2});
                            SunSystemResult ss =
                                is_sun_system(g, VertexSet::first_n(flower_n), ray_set);
                            if (!ss.system || !ss.system->flower.non_trivial()) continue;
                            bool has_split = false;
                            for (const RayClass& cls : ss.system->ray_class)
                                if (cls.kind == RayKind::split) has_split = true;
                            if (!has_split) continue;
                            CliqueList cliques = maximal_cliques(g);
                            bool petals_maximal = true;
                            for (const VertexSet& petal : ss.system->flower.petal_cliques)
                                if (std::find(cliques.cliques.begin(), cliques.cliques.end(),
                                              petal) == cliques.cliques.end())
                                    petals_maximal = false;
                            if (!petals_maximal) continue;
                            if (!is_path_graph_oracle(g).is_path_graph) continue;
                            std::string code = canonical_code(g);
                            if (std::find(seen_codes.begin(), seen_codes.end(), code) !=
                                seen_codes.end())
                                continue;
                            seen_codes.push_back(code);
                            instances.push_back(g);
                            if (static_cast<int>(instances.size()) >= minimum + 4)
                                return instances;
                        }
            }
        }
    }
    if (static_cast<int>(instances.size()) < minimum)
        throw graph_error("split-ray instance generator produced only " +
                          std::to_string(instances.size()) + " graphs");
    return instances;
}

CriterionResult criterion_split_ray_adjacency() {
    Timer timer;
    CriterionResult r{10, "split rays sit next to their petal in every tree", true, "", {}, 0.0};
    std::vector<Graph> instances = split_ray_instances(20);
    std::uint64_t trees_checked = 0, pairs_checked = 0;
    for (const Graph& g : instances) {
        VertexSet ray_set;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v >= g.vertex_count() - 3) ray_set.insert(v);
        SunSystemResult ss = is_sun_system(g, g.vertices() - ray_set, ray_set);
        const SunSystem& system = *ss.system;
        std::vector<int> rays(system.rays.begin(), system.rays.end());
        for_each_clique_tree(g, 12, [&](const CliqueTree& t) {
            ++trees_checked;
            std::vector<VertexSet> adj = t.adjacency();
            auto node_of = [&](VertexSet clique) {
                for (int q = 0; q < t.node_count(); ++q)
                    if (t.cliques.cliques[q] == clique) return q;
                return -1;
            };
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (system.ray_class[i].kind != RayKind::split) continue;
                ++pairs_checked;
                int ray_node = node_of(g.closed_neighborhood(rays[i]));
                int petal_node =
                    node_of(system.flower.petal_cliques[system.ray_class[i].petal]);
                if (ray_node < 0 || petal_node < 0 || !adj[ray_node].contains(petal_node)) {
                    r.passed = false;
                    record(r, to_graph6(g) + " ray " + std::to_string(rays[i]));
                }
            }
            return true;
        });
    }
    r.detail = std::to_string(instances.size()) + " instances, " +
               std::to_string(trees_checked) + " trees, " + std::to_string(pairs_checked) +
               " split-ray checks";
    r.seconds = timer.seconds();
    return r;
}

std::vector<CriterionResult> run_validation_suite(const std::string& suite,
                                                  const ValidateOptions& opts) {
    std::vector<CriterionResult> results;
    bool all = suite == "all";
    if (suite == "hierarchy" || all) {
        results.push_back(criterion_hierarchy_witnesses());
        results.push_back(criterion_directed_double_characterization(opts));
        results.push_back(criterion_interval_double_characterization(opts));
    }
    if (suite == "theorem" || all) results.push_back(criterion_theorem_cross_validation(opts));
    if (suite == "lemmas" || all) {
        results.push_back(criterion_three_leaves_lemma(opts));
        results.push_back(criterion_common_neighborhood(opts));
        results.push_back(criterion_split_ray_adjacency());
    }
    if (suite == "prop44" || all) {
        results.push_back(criterion_ta_construction());
        results.push_back(criterion_reconstruction_gate());
    }
    if (all) results.push_back(criterion_certificate_soundness(opts));
    if (results.empty())
        throw graph_error("unknown validation suite '" + suite +
                          "' (expected hierarchy, theorem, lemmas, prop44, or all)");
    std::sort(results.begin(), results.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
    return results;
}

std::string format_criterion(const CriterionResult& r) {
    std::ostringstream out;
    out << "criterion " << r.id << " (" << r.name << "): " << (r.passed ? "PASS" : "FAIL");
    if (!r.detail.empty()) out << " -- " << r.detail;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " [" << r.seconds << "s]";
    for (const std::string& v : r.violations) out << "\n  violation: " << v;
    return out.str();
}

} // namespace chordalkit
