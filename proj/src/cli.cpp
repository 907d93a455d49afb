#include "jaco/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jaco/brush.hpp"
#include "jaco/cleaning.hpp"
#include "jaco/errors.hpp"
#include "jaco/experiments.hpp"
#include "jaco/io.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracle.hpp"

namespace jaco::cli {

namespace {

enum class Format { Md, Csv, Json };

struct Options {
    std::string format = "md";
    std::size_t n = 0;
    std::size_t max_n = 0;
    std::size_t complete = 0;
    std::optional<std::size_t> cap_eps;
    std::string graph_path;
    std::string allocation_path;
    std::string experiment;
};

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    return Format::Md;
}

std::string arc_text(const Arc& a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

std::string joined(const std::vector<Brushes>& values, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) s += sep;
        s += std::to_string(values[k]);
    }
    return s;
}

std::string arcs_text(const std::vector<Arc>& arcs) {
    std::string s;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (k > 0) s += ' ';
        s += arc_text(arcs[k]);
    }
    return s;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// Markdown table with a header row and left-aligned separator.
void md_table(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto line = [&out](const std::vector<std::string>& cells) {
        out << '|';
        for (const auto& c : cells) out << ' ' << c << " |";
        out << '\n';
    };
    line(header);
    out << '|';
    for (std::size_t k = 0; k < header.size(); ++k) out << "---|";
    out << '\n';
    for (const auto& r : rows) line(r);
}

void csv_table(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void emit_table(std::ostream& out, Format f, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (f == Format::Csv) {
        csv_table(out, header, rows);
    } else {
        md_table(out, header, rows);
    }
}

template <class T>
std::string str(const T& v) {
    return std::to_string(v);
}

Json read_json_path(const std::string& path, std::istream& in) {
    if (path == "-") return read_json(in);
    std::ifstream file(path);
    if (!file) throw DomainError("cannot open " + path);
    return read_json(file);
}

std::size_t resolve_cap(const Options& opt, const Environment& env) {
    if (opt.cap_eps) return *opt.cap_eps;
    if (env.cap_eps) {
        std::size_t cap = 0;
        const std::string& s = *env.cap_eps;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw DomainError("JACO_CAP_EPS must be a non-negative integer, got \"" + s + "\"");
        }
        return cap;
    }
    return kDefaultCapEps;
}

// The graph a command works on: J_n(1) for --n, otherwise the --graph file.
DiGraph target_graph(const Options& opt, std::istream& in) {
    if (!opt.graph_path.empty()) return digraph_from_json(read_json_path(opt.graph_path, in));
    return build_jaco(opt.n).to_digraph();
}

void cmd_graph(const Options& opt, Format f, std::ostream& out) {
    const JacoGraph g = build_jaco(opt.n);
    if (f == Format::Json) return emit_json(out, to_json(g));
    if (f == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        for (const Arc& a : g.arcs()) rows.push_back({str(a.tail), str(a.head)});
        return csv_table(out, {"tail", "head"}, rows);
    }
    out << "J_" << g.n() << "(1): " << g.n() << " vertices, " << g.eps() << " arcs\n\n";
    std::vector<std::vector<std::string>> rows;
    for (Vertex i = 1; i <= g.n(); ++i) {
        const VertexRange nb = g.out_neighbours(i);
        rows.push_back({"v_" + str(i), str(g.in_deg(i)), str(g.out_deg(i)), str(g.inf_out_deg(i)),
                        str(finite_degree(g, i)),
                        nb.empty() ? "-" : "v_" + str(nb.first) + "..v_" + str(nb.last)});
    }
    md_table(out, {"v", "d^-", "d^+", "d^+ (infinite)", "d", "out-neighbours"}, rows);
}

void cmd_br(const Options& opt, Format f, std::ostream& out) {
    const BrushReport r = brush_number(build_jaco(opt.n));
    if (f == Format::Json) return emit_json(out, to_json(r));
    const std::vector<std::string> header{"n", "prime_index", "sum_prefix", "sum_hope", "br", "allocation"};
    if (f == Format::Csv) {
        return csv_table(out, header,
                         {{str(r.n), str(r.prime_index), str(r.sum_prefix), str(r.sum_hope), str(r.br),
                           joined(r.allocation.values(), " ")}});
    }
    out << "b_r(J_" << r.n << "(1)) = " << r.br << "\n\n";
    md_table(out, header,
             {{str(r.n), "v_" + str(r.prime_index), str(r.sum_prefix), str(r.sum_hope), str(r.br),
               "(" + joined(r.allocation.values(), ",") + ")"}});
}

void cmd_allocation(const Options& opt, Format f, std::ostream& out) {
    const BrushAllocation a = brush_number(build_jaco(opt.n)).allocation;
    if (f == Format::Json) return emit_json(out, to_json(a));
    std::vector<std::vector<std::string>> rows;
    for (Vertex v = 1; v <= a.size(); ++v) rows.push_back({str(v), str(a[v])});
    if (f == Format::Md) out << "total " << a.total() << "\n\n";
    emit_table(out, f, {"vertex", "brushes"}, rows);
}

void cmd_simulate(const Options& opt, Format f, std::istream& in, std::ostream& out) {
    const DiGraph g = target_graph(opt, in);
    const BrushAllocation alloc = opt.allocation_path.empty()
                                      ? minimal_allocation(g)
                                      : allocation_from_json(read_json_path(opt.allocation_path, in));
    const CleaningTrace t = simulate(g, alloc);
    if (f == Format::Json) return emit_json(out, to_json(t));

    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const FiringStep& s = t.steps[k];
        rows.push_back({str(k + 1), str(s.vertex), str(s.held), arcs_text(s.cleaned)});
    }
    const char* outcome = t.cleaned() ? "cleaned" : "undoable";
    if (f == Format::Csv) {
        csv_table(out, {"step", "vertex", "held", "cleaned"}, rows);
        out << "# outcome: " << outcome << '\n';
        return;
    }
    out << "outcome: " << outcome << "\nbrushes: " << alloc.total() << "\n\n";
    md_table(out, {"step", "vertex", "held", "cleaned"}, rows);
    if (!t.remaining_dirty.empty()) out << "\nremaining dirty: " << arcs_text(t.remaining_dirty) << '\n';
}

void cmd_census(const Options& opt, Format f, const Environment& env, std::istream& in,
                std::ostream& out) {
    const OrientationCensus c = census(UnderlyingGraph(target_graph(opt, in)), resolve_cap(opt, env));
    if (f == Format::Json) return emit_json(out, to_json(c));

    std::vector<std::string> header{"mask"};
    for (std::size_t k = 1; k <= c.edge_order.size(); ++k) header.push_back("e_" + str(k) + "-dir");
    header.push_back("cost");
    const std::size_t eps = c.edge_order.size();
    std::vector<std::vector<std::string>> rows;
    rows.reserve(c.entries.size());
    for (const CensusEntry& e : c.entries) {
        std::vector<std::string> row{str(e.mask)};
        for (std::size_t k = 0; k < eps; ++k) {
            const Arc& edge = c.edge_order[k];
            const bool flipped = (e.mask >> (eps - 1 - k)) & 1U;
            row.push_back(arc_text(flipped ? Arc{edge.head, edge.tail} : edge));
        }
        row.push_back(e.cost.to_string());
        rows.push_back(std::move(row));
    }
    if (f == Format::Md) {
        out << c.entries.size() << " orientations, min " << c.minimum << ", undoable " << c.undoable_count
            << "\n\n";
    }
    emit_table(out, f, header, rows);
}

void cmd_oracle(const Options& opt, Format f, const Environment& env, std::istream& in,
                std::ostream& out) {
    const DiGraph g = opt.complete > 0 ? complete_graph(opt.complete) : target_graph(opt, in);
    const UnderlyingGraph u(g);
    const Brushes br = brute_force_brush_number(u, resolve_cap(opt, env));
    if (f == Format::Json) {
        Json j;
        j["nu"] = u.nu();
        j["eps"] = u.eps();
        j["orientations"] = std::uint64_t{1} << u.eps();
        j["br"] = br;
        return emit_json(out, j);
    }
    emit_table(out, f, {"nu", "eps", "orientations", "br"},
               {{str(u.nu()), str(u.eps()), str(std::uint64_t{1} << u.eps()), str(br)}});
}

void cmd_table(const Options& opt, Format f, std::ostream& out) {
    const auto rows = table1(opt.max_n);
    if (f == Format::Json) return emit_json(out, to_json(rows));
    std::vector<std::vector<std::string>> cells;
    for (const TableRow& r : rows) {
        cells.push_back({str(r.i), str(r.d_minus), str(r.d_plus_inf), "v_" + str(r.prime_vertex), str(r.br)});
    }
    emit_table(out, f, {"i", "d^-(v_i)", "d^+(v_i)", "v_j^*", "b_r(J_i(1))"}, cells);
}

void cmd_experiment(const Options& opt, Format f, std::ostream& out) {
    const auto rows = hope_bound_experiment(opt.max_n);
    if (opt.experiment == "hope") {
        if (f == Format::Json) return emit_json(out, to_json(rows));
        std::vector<std::vector<std::string>> cells;
        for (const HopeBoundRow& r : rows) {
            cells.push_back({str(r.n), str(r.prime_index), str(r.br_jaco), str(r.hope_size), str(r.br_hope),
                             r.bound_holds ? "yes" : "no"});
        }
        return emit_table(out, f, {"n", "i", "b_r(J_n(1))", "n-i", "b_r(K_{n-i})", "holds"}, cells);
    }

    if (f == Format::Json) {
        Json arr = Json::array();
        for (const HopeBoundRow& r : rows) {
            Json j;
            j["n"] = r.n;
            j["prime_index"] = r.prime_index;
            j["eps"] = build_jaco(r.n).eps();
            j["linking_edges"] = r.linking_edges;
            j["br"] = r.br_jaco;
            arr.push_back(std::move(j));
        }
        return emit_json(out, arr);
    }
    std::vector<std::vector<std::string>> cells;
    for (const HopeBoundRow& r : rows) {
        cells.push_back({str(r.n), str(r.prime_index), str(build_jaco(r.n).eps()), str(r.linking_edges),
                         str(r.br_jaco)});
    }
    emit_table(out, f, {"n", "i", "eps(J_n(1))", "linking_edges", "b_r(J_n(1))"}, cells);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
    CLI::App app{"Jaco graph brush numbers: construction, cleaning simulation, orientation census",
                 "jaco"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"md", "csv", "json"}))
            ->capture_default_str();
    };
    auto add_n = [&opt](CLI::App* sub) {
        return sub->add_option("--n", opt.n, "number of vertices of J_n(1)")->check(CLI::PositiveNumber);
    };
    auto add_max_n = [&opt](CLI::App* sub) {
        sub->add_option("--max-n", opt.max_n, "largest n")->required()->check(CLI::PositiveNumber);
    };
    auto add_cap = [&opt](CLI::App* sub) {
        sub->add_option("--cap-eps", opt.cap_eps, "largest edge count to enumerate (default 24)");
    };

    auto* graph = app.add_subcommand("graph", "print J_n(1)");
    add_n(graph)->required();
    add_format(graph);

    auto* br = app.add_subcommand("br", "brush number of J_n(1) by closed form");
    add_n(br)->required();
    add_format(br);

    auto* allocation = app.add_subcommand("allocation", "minimal brush allocation of J_n(1)");
    add_n(allocation)->required();
    add_format(allocation);

    auto* sim = app.add_subcommand("simulate", "run the cleaning process");
    {
        auto* n_opt = add_n(sim);
        auto* g_opt = sim->add_option("--graph", opt.graph_path, "graph JSON file, - for stdin");
        n_opt->excludes(g_opt);
        sim->add_option("--allocation", opt.allocation_path, "allocation JSON file, - for stdin");
        sim->require_option(1, 3);
        add_format(sim);
    }

    auto* cen = app.add_subcommand("census", "cost of every orientation");
    {
        auto* n_opt = add_n(cen);
        auto* g_opt = cen->add_option("--graph", opt.graph_path, "graph JSON file, - for stdin");
        n_opt->excludes(g_opt);
        add_cap(cen);
        add_format(cen);
    }

    auto* ora = app.add_subcommand("oracle", "brush number by exhaustive orientation search");
    {
        auto* n_opt = add_n(ora);
        auto* g_opt = ora->add_option("--graph", opt.graph_path, "graph JSON file, - for stdin");
        auto* k_opt = ora->add_option("--complete", opt.complete, "use K_m")->check(CLI::PositiveNumber);
        n_opt->excludes(g_opt)->excludes(k_opt);
        g_opt->excludes(k_opt);
        add_cap(ora);
        add_format(ora);
    }

    auto* table = app.add_subcommand("table", "degree, prime vertex and brush number table");
    add_max_n(table);
    add_format(table);

    auto* exp = app.add_subcommand("experiment", "Hope-subgraph bound or linking-edge data");
    exp->add_option("kind", opt.experiment, "hope | linking")
        ->required()
        ->check(CLI::IsMember({"hope", "linking"}));
    add_max_n(exp);
    add_format(exp);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if ((sim->parsed() || cen->parsed() || ora->parsed()) && opt.n == 0 && opt.graph_path.empty() &&
            opt.complete == 0) {
            throw CLI::ValidationError("one of --n or --graph is required");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInvalidInput;
    }

    const Format f = parse_format(opt.format);
    try {
        if (graph->parsed()) cmd_graph(opt, f, out);
        else if (br->parsed()) cmd_br(opt, f, out);
        else if (allocation->parsed()) cmd_allocation(opt, f, out);
        else if (sim->parsed()) cmd_simulate(opt, f, in, out);
        else if (cen->parsed()) cmd_census(opt, f, env, in, out);
        else if (ora->parsed()) cmd_oracle(opt, f, env, in, out);
        else if (table->parsed()) cmd_table(opt, f, out);
        else if (exp->parsed()) cmd_experiment(opt, f, out);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kOk;
}

}  // namespace jaco::cli
