#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <omp.h>

#include "CLI11.hpp"
#include "commands.hpp"
#include "stc/bounds.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"
#include "stc/oracle.hpp"

using namespace stc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCap = 4;

struct GenArgs {
    std::string family;
    std::optional<int> n, m, d, k;
    std::vector<int> parts;
    std::optional<double> prob;
    std::uint64_t seed = 1;
    std::string weights = "unit";
    std::string output;
};

int need(const std::optional<int>& v, const char* flag)
{
    if (!v) throw Error(ErrorCode::InvalidParams, std::string("missing --") + flag);
    return *v;
}

FamilySpec spec_from(const GenArgs& a)
{
    FamilySpec s;
    s.family = parse_family(a.family);
    s.seed = a.seed;
    s.weights = parse_weight_mode(a.weights);
    switch (s.family) {
    case Family::Multipartite:
        if (!a.parts.empty()) {
            s.sizes = a.parts;
        } else {
            s.sizes = {need(a.m, "m"), need(a.n, "n")};
            std::sort(s.sizes.rbegin(), s.sizes.rend());
        }
        break;
    case Family::Hypercube: s.sizes = {a.d ? *a.d : need(a.n, "d")}; break;
    case Family::RectGrid:
    case Family::HexRect:
    case Family::Torus2: s.sizes = {need(a.m, "m"), need(a.n, "n")}; break;
    case Family::Torus3:
    case Family::CubeGrid: s.sizes = {a.k ? *a.k : need(a.n, "k")}; break;
    case Family::Gnp: {
        const int n = need(a.n, "n");
        s.sizes = {n};
        s.probability = a.prob ? *a.prob : 2.0 * std::log(n) / n;
        break;
    }
    default: s.sizes = {need(a.n, "n")};
    }
    return s;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    out << text << '\n';
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spanning tree congestion: generators, heuristics, bounds and exact oracle"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (default: all cores)");

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a test graph as JSON");
    cmd_gen->add_option("--family", gen.family, "complete|multipartite|hypercube|rect_grid|tri_grid|hex_tri|hex_rect|torus2|torus3|cube_grid|gnp|pu")->required();
    cmd_gen->add_option("--n", gen.n, "Size parameter");
    cmd_gen->add_option("--m", gen.m, "Second size parameter");
    cmd_gen->add_option("--d", gen.d, "Hypercube dimension");
    cmd_gen->add_option("--k", gen.k, "3D grid side");
    cmd_gen->add_option("--parts", gen.parts, "Multipartite part sizes, descending")->delimiter(',');
    cmd_gen->add_option("--prob", gen.prob, "G(n,p) edge probability (default 2 ln n / n)");
    cmd_gen->add_option("--seed", gen.seed, "Seed for gnp and pu");
    cmd_gen->add_option("--weights", gen.weights, "unit|plus|minus|euclidean");
    cmd_gen->add_option("-o,--output", gen.output, "Output file (default stdout)");

    std::string graph_file, p_text = "inf", q_text, alg, csv_file, tree_out, label;
    std::uint64_t seed = 1;
    int restarts = 10;
    auto* cmd_run = app.add_subcommand("run", "Run a heuristic and print a CSV row");
    cmd_run->add_option("graph", graph_file, "Graph JSON")->required();
    cmd_run->add_option("--alg", alg, "scd|scd-deep|locbfs|roc")->required();
    cmd_run->add_option("--p", p_text, "Norm exponent or inf");
    cmd_run->add_option("--q", q_text, "Secondary norm for scd-deep (default inf)");
    cmd_run->add_option("--seed", seed, "Base seed");
    cmd_run->add_option("--restarts", restarts, "sCD restarts");
    cmd_run->add_option("--csv", csv_file, "Append the row to this CSV file");
    cmd_run->add_option("--tree-out", tree_out, "Write the tree JSON here");
    cmd_run->add_option("--name", label, "Graph label for the CSV row");

    bool no_cheeger = false;
    std::string prefactor = "proposition";
    auto* cmd_bounds = app.add_subcommand("bounds", "Lower bounds for C_p");
    cmd_bounds->add_option("graph", graph_file, "Graph JSON")->required();
    cmd_bounds->add_option("--p", p_text, "Norm exponent or inf");
    cmd_bounds->add_flag("--no-cheeger", no_cheeger, "Skip the exhaustive Cheeger scan");
    cmd_bounds->add_option("--prefactor", prefactor, "proposition|inline|edge (scaled Cheeger entry)");

    double cap = kDefaultTreeCap;
    auto* cmd_oracle = app.add_subcommand("oracle", "Exact C_p by spanning tree enumeration");
    cmd_oracle->add_option("graph", graph_file, "Graph JSON")->required();
    cmd_oracle->add_option("--p", p_text, "Norm exponent or inf");
    cmd_oracle->add_option("--cap", cap, "Largest tree count to enumerate");
    cmd_oracle->add_option("--tree-out", tree_out, "Write the witness tree JSON here");

    std::string table_name, budget = "small", table_out;
    auto* cmd_table = app.add_subcommand("table", "Reproduce a results table as CSV");
    cmd_table->add_option("--name", table_name, "table2|table3|table4|table5")->required();
    cmd_table->add_option("--budget", budget, "small|medium|full");
    cmd_table->add_option("-o,--output", table_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*cmd_gen) {
            const FamilySpec s = spec_from(gen);
            emit(graph_to_json(generate(s)), gen.output);
            return 0;
        }
        if (*cmd_run) {
            const WeightedGraph g = read_graph_file(graph_file);
            cli::AlgRun run{alg, Norm::parse(p_text), std::nullopt, seed, restarts};
            if (!q_text.empty()) run.q = Norm::parse(q_text);
            const cli::AlgOutcome r = cli::run_algorithm(g, run);
            if (!tree_out.empty()) write_tree_file(tree_out, g, r.tree);
            std::string shown = alg;
            if (alg == "scd-deep") shown += "(q=" + run.q.value_or(Norm::infinity()).to_string() + ")";
            const std::string row = (label.empty() ? stem(graph_file) : label) + "," + std::to_string(g.vertex_count()) + "," +
                                    std::to_string(g.edge_count()) + "," + shown + "," + run.p.to_string() + "," + fmt(r.value) + "," +
                                    fmt(r.seconds) + "," + fmt(cli::empirical_degree(r.seconds, g.edge_count())) + "," +
                                    std::to_string(seed) + "," + tree_out;
            std::cout << cli::kCsvHeader << '\n' << row << '\n';
            if (!csv_file.empty()) {
                const bool fresh = !std::filesystem::exists(csv_file) || std::filesystem::file_size(csv_file) == 0;
                std::ofstream out(csv_file, std::ios::app);
                if (fresh) out << cli::kCsvHeader << '\n';
                out << row << '\n';
            }
            return 0;
        }
        if (*cmd_bounds) {
            const WeightedGraph g = read_graph_file(graph_file);
            BoundOptions o;
            o.cheeger = !no_cheeger;
            if (prefactor == "inline")
                o.prefactor = CheegerPrefactor::InlineDisplay;
            else if (prefactor == "edge")
                o.prefactor = CheegerPrefactor::EdgeCut;
            else if (prefactor != "proposition")
                throw Error(ErrorCode::InvalidParams, "unknown prefactor '" + prefactor + "'");
            const BoundReport rep = all_bounds(g, Norm::parse(p_text), o);
            std::cout << "bound,value,kind,heuristic,counted\n";
            for (const BoundEntry& e : rep.entries)
                std::cout << e.name << "," << fmt(e.value) << "," << (e.lower ? "lower" : "upper") << "," << (e.heuristic ? 1 : 0) << ","
                          << (e.counted ? 1 : 0) << '\n';
            std::cout << "best_lower," << fmt(rep.best_lower()) << ",lower,0,1\n";
            return 0;
        }
        if (*cmd_oracle) {
            const WeightedGraph g = read_graph_file(graph_file);
            const OracleResult r = exact_lp_stc(g, Norm::parse(p_text), cap);
            if (!tree_out.empty()) write_tree_file(tree_out, g, r.witness);
            std::cout << "value," << fmt(r.value) << "\ntrees," << r.trees << "\noptimal_trees," << r.optimal.size() << "\nwitness,"
                      << tree_to_json(g, r.witness) << '\n';
            return 0;
        }
        if (*cmd_table) {
            bool ok = false;
            if (table_out.empty()) {
                ok = cli::run_table(table_name, budget, std::cout);
            } else {
                std::ofstream out(table_out);
                ok = cli::run_table(table_name, budget, out);
            }
            if (!ok) {
                std::cerr << "unknown table or budget\n";
                return kExitUsage;
            }
            return 0;
        }
    } catch (const CapExceededError& e) {
        std::cerr << e.what() << '\n';
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == ErrorCode::InvalidParams ? kExitUsage : kExitDomain;
    }
    return 0;
}
