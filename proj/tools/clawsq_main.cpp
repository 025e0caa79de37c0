// Command line front door: generation, squaring, colouring, structure
// selection, recognition, verification and the acceptance bench.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error.

#include "clawsq/coloring.hpp"
#include "clawsq/generators.hpp"
#include "clawsq/graph.hpp"
#include "clawsq/interval.hpp"
#include "clawsq/io.hpp"
#include "clawsq/rational.hpp"
#include "clawsq/recognition.hpp"
#include "clawsq/selector.hpp"
#include "clawsq/suite.hpp"
#include "clawsq/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace clawsq;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Output sink: --out file or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw UsageError("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
};

bool is_named_instance(const std::string& name) {
    static const char* names[] = {"c5", "paw", "diamond", "wheel5", "icosahedron",
                                  "petersen_line"};
    for (const char* s : names)
        if (name == s) return true;
    return false;
}

// Reads a graph file, sniffing simple (2-field rows) vs multigraph (3-field).
struct LoadedGraph {
    bool is_multi = false;
    SimpleGraph simple;
    Multigraph multi{0};
};

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream probe(text);
    std::string line;
    if (!detail::next_payload_line(probe, line)) throw UsageError("empty graph file: " + path);
    bool multi = false;
    if (detail::next_payload_line(probe, line)) {
        std::istringstream fields(line);
        std::string tok;
        int count = 0;
        while (fields >> tok) ++count;
        multi = count == 3;
    }
    LoadedGraph g;
    std::istringstream body(text);
    try {
        if (multi) {
            g.is_multi = true;
            g.multi = read_multigraph(body);
        } else {
            g.simple = read_simple(body);
        }
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string(ex.what()) + " in " + path);
    }
    return g;
}

SimpleGraph load_simple_input(const std::string& src) {
    if (is_named_instance(src)) return named_instance(src);
    auto g = load_graph_file(src);
    if (g.is_multi) throw UsageError("expected a simple graph, got a multigraph: " + src);
    return g.simple;
}

Multigraph load_multigraph_input(const std::string& src) {
    if (is_named_instance(src)) return as_multigraph(named_instance(src));
    auto g = load_graph_file(src);
    return g.is_multi ? g.multi : as_multigraph(g.simple);
}

Rational parse_eps(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

// CSV margin column: exact rational always rendered p/q.
std::string csv_rational(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

struct CsvWriter {
    std::ostream& out;
    long long failures = 0;

    explicit CsvWriter(std::ostream& o) : out(o) {
        out << "instance-id,check-name,result,lhs,rhs,margin\n";
    }
    void row(const std::string& id, const std::string& check, bool pass, const std::string& lhs,
             const std::string& rhs, const Rational& margin) {
        if (!pass) failures += 1;
        out << id << ',' << check << ',' << (pass ? "pass" : "fail") << ',' << lhs << ',' << rhs
            << ',' << csv_rational(margin) << '\n';
    }
};

// ---- generate ----

int cmd_generate(const std::vector<std::string>& args, std::uint64_t seed,
                 const std::string& out_path) {
    if (args.empty()) throw UsageError("generate needs a family name");
    Sink sink(out_path);
    const std::string& family = args[0];
    auto want = [&](size_t k) {
        if (args.size() != k + 1)
            throw UsageError("generate " + family + " takes " + std::to_string(k) +
                             " parameter(s)");
    };
    auto num = [&](size_t i) {
        try {
            return std::stoi(args.at(i));
        } catch (const std::exception&) {
            throw UsageError("bad numeric parameter: " + args.at(i));
        }
    };
    if (family == "c5_blowup") {
        want(1);
        write_multigraph(sink.stream(), c5_blowup(num(1)));
    } else if (family == "complete_bipartite") {
        want(2);
        write_multigraph(sink.stream(), complete_bipartite(num(1), num(2)));
    } else if (family == "random") {
        want(3);
        write_multigraph(sink.stream(), random_multigraph(num(1), num(2), num(3), seed));
    } else if (family == "regular") {
        want(2);
        write_multigraph(sink.stream(), random_regular_multigraph(num(1), num(2), seed));
    } else if (family == "circular") {
        want(2);
        write_interval_rep(sink.stream(), random_circular_rep(num(1), num(2), seed));
    } else if (family == "linear") {
        want(2);
        write_interval_rep(sink.stream(), random_linear_rep(num(1), num(2), seed));
    } else if (family == "scheme") {
        want(1);
        write_scheme(sink.stream(), random_scheme(num(1), seed));
    } else if (family == "named") {
        want(1);
        write_simple(sink.stream(), named_instance(args[1]));
    } else {
        throw UsageError("unknown family: " + family);
    }
    return 0;
}

// ---- square ----

int cmd_square(const std::string& input, const std::string& out_path) {
    Sink sink(out_path);
    write_simple(sink.stream(), square(load_simple_input(input)));
    return 0;
}

// ---- color ----

int cmd_color(const std::string& input, const std::string& method, const Rational& eps,
              const std::string& out_path) {
    auto g = load_simple_input(input);
    Sink sink(out_path);
    auto& out = sink.stream();
    auto comps = connected_components(g);
    bool annotate = comps.size() > 1;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        auto sub = induced(g, comps[ci]);
        if (annotate) out << "component " << ci << "\n";
        auto emit = [&](const Coloring& local, int colors, const std::string& name) {
            std::vector<std::pair<int, int>> rows;
            for (int v = 0; v < sub.graph.n(); ++v)
                rows.emplace_back(sub.to_original[size_t(v)], local.color[size_t(v)]);
            std::sort(rows.begin(), rows.end());
            for (auto [v, c] : rows) out << v << ' ' << c << '\n';
            out << "colors " << colors << " method " << name << '\n';
        };
        if (method == "exact") {
            auto ex = chromatic_exact(square(sub.graph));
            emit(ex.coloring, ex.chi, "exact");
        } else if (method == "greedy") {
            auto r = greedy_trivial_square_coloring(sub.graph);
            emit(r.coloring, r.colors_used, "greedy");
            out << "bound " << r.bound_value << " from " << r.bound_expression << '\n';
        } else if (method == "main") {
            auto rep = main_square_coloring_traced(sub.graph, eps);
            emit(rep.result.coloring, rep.result.colors_used, "main");
            out << "trace " << rep.case_trace << '\n';
            out << "palette " << rep.palette << " omega " << rep.omega << '\n';
            out << "epsilon_palette " << rep.epsilon_palette << " achieved "
                << (rep.epsilon_palette_achieved ? "yes" : "no") << '\n';
        } else {
            throw UsageError("unknown colouring method: " + method);
        }
    }
    return 0;
}

// ---- select ----

int cmd_select(const std::string& input, bool strict, const std::string& out_path) {
    auto g = load_simple_input(input);
    Sink sink(out_path);
    auto& out = sink.stream();
    auto comps = connected_components(g);
    bool annotate = comps.size() > 1;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        auto sub = induced(g, comps[ci]);
        if (annotate) out << "component " << ci << "\n";
        SelectorWitness w = is_quasi_line(sub.graph).ok
                                ? select_quasiline(sub.graph, strict)
                                : select_nonquasiline(sub.graph);
        out << "kind "
            << (w.kind == SelectorWitness::Kind::quasi_line ? "quasi_line" : "non_quasi_line")
            << '\n';
        out << "vertex " << sub.to_original[size_t(w.v)] << " omega " << w.omega
            << " square_degree " << w.v_square_degree << '\n';
        if (w.kind == SelectorWitness::Kind::quasi_line) {
            out << "bounded_set";
            for (int u : w.s) out << ' ' << sub.to_original[size_t(u)];
            out << '\n';
        }
        out << "residual_clique_size " << w.residual_clique.size() << '\n';
        if (!selector_witness_valid(sub.graph, w))
            throw CheckFailure("selector witness failed re-validation");
    }
    return 0;
}

// ---- recognize ----

int cmd_recognize(const std::string& input, const std::string& out_path) {
    auto g = load_simple_input(input);
    Sink sink(out_path);
    auto& out = sink.stream();
    auto comps = connected_components(g);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        auto sub = induced(g, comps[ci]);
        out << "component " << ci << " n " << sub.graph.n() << " m " << sub.graph.edge_count()
            << '\n';
        auto claw = find_claw(sub.graph);
        if (claw) {
            out << "claw_free no witness " << sub.to_original[size_t(claw->center)];
            for (int v : claw->leaves) out << ' ' << sub.to_original[size_t(v)];
            out << '\n';
        } else {
            out << "claw_free yes\n";
        }
        auto ql = is_quasi_line(sub.graph);
        if (ql.ok)
            out << "quasi_line yes\n";
        else
            out << "quasi_line no failing_vertex " << sub.to_original[size_t(ql.failing_vertex)]
                << '\n';
        auto kr = krausz_partition(sub.graph);
        if (kr)
            out << "line_graph yes cliques " << kr->cliques.size() << '\n';
        else
            out << "line_graph no\n";
    }
    return 0;
}

// ---- verify ----

struct ExhaustiveParams {
    int n = 6;
    int dmax = 4;
    int mmax = 3;
};

ExhaustiveParams parse_exhaustive(const std::vector<std::string>& tokens) {
    ExhaustiveParams p;
    for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError("expected key=value, got: " + t);
        std::string key = t.substr(0, eq);
        int value;
        try {
            value = std::stoi(t.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("bad value in: " + t);
        }
        if (key == "n")
            p.n = value;
        else if (key == "dmax")
            p.dmax = value;
        else if (key == "mmax")
            p.mmax = value;
        else
            throw UsageError("unknown exhaustive parameter: " + key);
    }
    return p;
}

int cmd_verify(const std::string& check, const std::vector<std::string>& inputs, bool exhaustive,
               const std::vector<std::string>& exhaustive_params, const Config& cfg,
               std::uint64_t seed, const std::string& out_path) {
    Sink sink(out_path);
    CsvWriter csv(sink.stream());

    auto instance_rows_identity = [&](const Multigraph& f, const std::string& id) {
        auto h = strong_conflict_graph(f);
        auto instances = f.edge_instances();
        for (size_t k = 0; k < instances.size(); ++k) {
            const auto& e = instances[k];
            long long formula = edge_square_degree_formula(f, e);
            long long direct = h.degree(int(k));
            std::ostringstream eid;
            eid << id << ":e" << e.u << '-' << e.v << '/' << e.copy;
            csv.row(eid.str(), "degree-identity", formula == direct, std::to_string(formula),
                    std::to_string(direct), rat(formula - direct));
        }
    };

    if (check == "identity") {
        if (inputs.empty()) throw UsageError("verify identity needs an input file");
        std::vector<Multigraph> loaded;
        for (const auto& src : inputs) {
            auto f = load_multigraph_input(src);
            for (int v = 0; v < f.n(); ++v)
                if (f.degree(v) != f.degree(0))
                    throw UsageError("degree identity needs a regular multigraph: " + src);
            loaded.push_back(std::move(f));
        }
        for (size_t i = 0; i < loaded.size(); ++i) instance_rows_identity(loaded[i], inputs[i]);
    } else if (check == "sparsity") {
        if (inputs.empty()) throw UsageError("verify sparsity needs an input file");
        for (const auto& src : inputs) {
            auto f = load_multigraph_input(src);
            auto h = strong_conflict_graph(f);
            for (const auto& e : f.edge_instances()) {
                auto r = sparsity_report(f, e, cfg, &h);
                std::ostringstream eid;
                eid << src << ":e" << e.u << '-' << e.v << '/' << e.copy;
                long long slots = detail::choose2(2LL * r.delta * (r.delta - 1));
                csv.row(eid.str(), "sparsity-case" + std::to_string(r.case_label),
                        r.failures.empty(), std::to_string(r.induced_edges),
                        std::to_string(slots), rat(1) - r.ratio);
            }
        }
    } else if (check == "interval") {
        if (inputs.empty()) throw UsageError("verify interval needs rep files");
        for (const auto& src : inputs) {
            std::ifstream in(src);
            if (!in) throw UsageError("cannot open input file: " + src);
            IntervalRep rep;
            try {
                rep = read_interval_rep(in);
            } catch (const std::invalid_argument& ex) {
                throw UsageError(std::string(ex.what()) + " in " + src);
            }
            IntervalBoundCheck r;
            std::string name;
            if (rep.kind == IntervalRep::Kind::circular) {
                r = check_interval_bounds(rep);
                name = "interval-circular";
            } else {
                r = check_interval_bounds(make_strip(rep));
                name = "interval-strip";
            }
            csv.row(src, name, r.ok, std::to_string(r.max_square_degree),
                    std::to_string(r.bound), rat(r.bound - r.max_square_degree));
        }
    } else if (check == "extremal") {
        if (exhaustive) {
            auto p = parse_exhaustive(exhaustive_params);
            long long total = 0;
            long long bad = 0;
            long long equal = 0;
            enumerate_connected_multigraphs(p.n, p.dmax, p.mmax, true, [&](const Multigraph& f) {
                total += 1;
                auto r = check_extremal_edges(f);
                if (!r.ok) {
                    bad += 1;
                    std::ostringstream eid;
                    eid << "exhaustive:" << total;
                    csv.row(eid.str(), "extremal-branch" + std::to_string(r.branch), false,
                            std::to_string(r.edge_count), std::to_string(r.bound),
                            rat(r.bound - r.edge_count));
                }
                if (r.equality) equal += 1;
            });
            std::ostringstream id;
            id << "exhaustive-n" << p.n << "-d" << p.dmax << "-m" << p.mmax;
            csv.row(id.str(), "extremal-exhaustive", bad == 0, std::to_string(total),
                    std::to_string(equal), rat(bad));
        } else {
            if (inputs.empty()) throw UsageError("verify extremal needs an input file");
            for (const auto& src : inputs) {
                auto r = check_extremal_edges(load_multigraph_input(src));
                if (!r.applicable) throw UsageError("instance outside the theorem class: " + src);
                csv.row(src, "extremal-branch" + std::to_string(r.branch), r.ok,
                        std::to_string(r.edge_count), std::to_string(r.bound),
                        rat(r.bound - r.edge_count));
            }
        }
    } else if (check == "conjecture") {
        if (inputs.empty()) throw UsageError("verify conjecture needs an input file");
        for (const auto& src : inputs) {
            auto g = load_simple_input(src);
            auto comps = connected_components(g);
            for (size_t ci = 0; ci < comps.size(); ++ci) {
                auto r = check_five_quarters_bound(induced(g, comps[ci]).graph);
                bool pass = r.within && r.order_bound_ok;
                std::string id = comps.size() > 1 ? src + ":c" + std::to_string(ci) : src;
                csv.row(id, "five-quarters", pass, std::to_string(r.chi_square),
                        std::to_string(r.bound), rat(r.bound - r.chi_square));
            }
        }
    } else if (check == "cliquesecond") {
        if (inputs.empty()) throw UsageError("verify cliquesecond needs an input file");
        for (const auto& src : inputs) {
            auto g = load_simple_input(src);
            auto comps = connected_components(g);
            for (size_t ci = 0; ci < comps.size(); ++ci) {
                bool pass = check_second_neighborhood_cliques(induced(g, comps[ci]).graph);
                std::string id = comps.size() > 1 ? src + ":c" + std::to_string(ci) : src;
                csv.row(id, "second-neighborhood-cliques", pass, pass ? "1" : "0", "1",
                        rat(pass ? 0 : -1));
            }
        }
    } else if (check == "twok2") {
        if (inputs.empty()) throw UsageError("verify twok2 needs an input file");
        for (const auto& src : inputs) {
            auto g = load_simple_input(src);
            auto w = find_induced_two_k2(g);
            csv.row(src, "two-k2-free", !w.has_value(), w ? "1" : "0", "0", rat(w ? -1 : 0));
        }
    } else if (check == "config") {
        Rational gain = -rat(2) * cfg.eps1 + cfg.eps1 * cfg.eps1 / rat(2);
        Rational surplus = rat(1) - cfg.eps1 - cfg.eps2 / (rat(2) * (rat(1) - cfg.eps3));
        csv.row("config", "case1-gain", gain < rat(0), to_string(gain), "0", -gain);
        csv.row("config", "case3-surplus", surplus > rat(0), to_string(surplus), "0", surplus);
        csv.row("config", "feasible", cfg.feasible(), cfg.feasible() ? "1" : "0", "1",
                rat(cfg.feasible() ? 0 : -1));
    } else {
        throw UsageError("unknown verify check: " + check);
    }
    (void)seed;
    return csv.failures == 0 ? 0 : 1;
}

// ---- bench ----

int cmd_bench(const std::string& out_path) {
    auto results = run_all_criteria();
    Sink sink(out_path);
    CsvWriter csv(sink.stream());
    int failed = 0;
    for (const auto& r : results) {
        if (!r.pass) failed += 1;
        csv.row("criterion-" + std::to_string(r.index), r.label, r.pass, r.pass ? "1" : "0", "1",
                rat(r.pass ? 0 : -1));
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.label << ": "
                  << r.detail << " (" << r.seconds << " s)\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free square colouring workbench"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 0;
    std::string eps_text = "1/36";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--seed", seed, "64-bit seed");
    };

    auto* gen = app.add_subcommand("generate", "write a generated instance");
    gen->alias("gen");
    std::vector<std::string> gen_args;
    gen->add_option("family", gen_args, "family name and numeric parameters")->expected(-1);
    add_common(gen);

    auto* sq = app.add_subcommand("square", "square of a simple graph");
    std::string sq_input;
    sq->add_option("input", sq_input, "named instance or file")->required();
    add_common(sq);

    auto* col = app.add_subcommand("color", "colour the square of a claw-free graph");
    std::string col_input, col_method = "main";
    col->add_option("input", col_input, "named instance or file")->required();
    col->add_option("--method", col_method, "exact | greedy | main");
    col->add_option("--eps", eps_text, "epsilon as p/q");
    add_common(col);

    auto* sel = app.add_subcommand("select", "structure selector with witness");
    std::string sel_input;
    bool sel_strict = false;
    sel->add_option("input", sel_input, "named instance or file")->required();
    sel->add_flag("--strict", sel_strict, "require the line-graph search to fail first");
    add_common(sel);

    auto* rec = app.add_subcommand("recognize", "class membership report");
    std::string rec_input;
    rec->add_option("input", rec_input, "named instance or file")->required();
    add_common(rec);

    auto* ver = app.add_subcommand("verify", "checks with CSV output");
    std::string ver_check;
    std::vector<std::string> ver_inputs;
    bool ver_exhaustive = false;
    std::vector<std::string> ver_params;
    std::string eps1_text = "1/30", eps2_text = "1/9", eps3_text = "2/3";
    ver->add_option("check", ver_check,
                    "identity | sparsity | interval | extremal | conjecture | cliquesecond | "
                    "twok2 | config")
        ->required();
    ver->add_option("inputs", ver_inputs, "instance files or key=value parameters")->expected(-1);
    ver->add_flag("--exhaustive", ver_exhaustive, "enumerate all small multigraphs");
    ver->add_option("--eps", eps_text, "epsilon as p/q");
    ver->add_option("--eps1", eps1_text, "case 1 threshold as p/q");
    ver->add_option("--eps2", eps2_text, "case 2 threshold as p/q");
    ver->add_option("--eps3", eps3_text, "heavy ring threshold as p/q");
    add_common(ver);

    auto* bench = app.add_subcommand("bench", "run the acceptance corpus, CSV summary");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_args, seed, out_path);
        if (sq->parsed()) return cmd_square(sq_input, out_path);
        if (col->parsed()) return cmd_color(col_input, col_method, parse_eps(eps_text), out_path);
        if (sel->parsed()) return cmd_select(sel_input, sel_strict, out_path);
        if (rec->parsed()) return cmd_recognize(rec_input, out_path);
        if (ver->parsed()) {
            Config cfg;
            cfg.eps = parse_eps(eps_text);
            cfg.eps1 = parse_eps(eps1_text);
            cfg.eps2 = parse_eps(eps2_text);
            cfg.eps3 = parse_eps(eps3_text);
            return cmd_verify(ver_check, ver_inputs, ver_exhaustive, ver_inputs, cfg, seed,
                              out_path);
        }
        if (bench->parsed()) return cmd_bench(out_path);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const CheckFailure& ex) {
        std::cerr << "check failed: " << ex.what() << '\n';
        return 1;
    } catch (const SelectorExhausted& ex) {
        std::cerr << "selector exhausted: " << ex.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
