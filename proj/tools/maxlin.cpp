#include "maxlin/errors.hpp"
#include "maxlin/io.hpp"
#include "maxlin/pseudobool.hpp"
#include "maxlin/solver.hpp"
#include "maxlin/testkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using maxlin::Assignment;
using maxlin::Rational;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string hex64(std::uint64_t v) {
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(v));
    return out;
}

std::string witness_string(const Assignment& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ' ';
        out += 'x';
        out += std::to_string(i + 1);
        out += '=';
        out += x.values[i] > 0 ? "1" : "-1";
    }
    return out;
}

struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    nlohmann::ordered_json json = nlohmann::ordered_json::object();

    void add(const std::string& key, const std::string& value) {
        lines.emplace_back(key, value);
        json[key] = value;
    }
    void add(const std::string& key, long long value) {
        lines.emplace_back(key, std::to_string(value));
        json[key] = value;
    }
    void add(const std::string& key, std::size_t value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, const Rational& value) { add(key, value.str()); }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << json.dump(2) << '\n';
        } else {
            for (const auto& [k, v] : lines) std::cout << k << ": " << v << '\n';
        }
    }
};

struct CommonOptions {
    bool json = false;
    bool timing = false;
    bool parallel = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void finish(Report& report, const CommonOptions& common) {
    if (common.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - common.start)
                            .count();
        report.add("wall_ms", static_cast<long long>(ms));
    }
    report.print(common.json);
}

Report base_report(const std::string& command, const std::string& path) {
    Report r;
    r.add("command", command);
    r.add("input", path);
    r.add("digest", hex64(fnv1a(read_file(path))));
    return r;
}

void report_verdict(Report& report, const maxlin::LinearSystem& s, const maxlin::Verdict& v,
                    int k) {
    report.add("answer", v.yes ? std::string("yes") : std::string("no"));
    report.add("regime", v.stats.regime);
    report.add("nodes", static_cast<long long>(v.stats.nodes));
    report.add("reductions", static_cast<long long>(v.stats.reductions));
    if (v.yes) {
        // Re-validation gate: the claim must hold against the raw input.
        const Rational check = excess(s, *v.witness);
        if (check != *v.achieved_excess || check < Rational(2 * k))
            throw std::logic_error("witness failed re-validation against the input");
        report.add("excess", *v.achieved_excess);
        report.add("sat_weight", (s.total_weight() + *v.achieved_excess) / 2);
        report.add("witness", witness_string(*v.witness));
    }
}

int run_decision(const std::string& command, const std::string& path, int k,
                 const CommonOptions& common) {
    const maxlin::LinearSystem s = maxlin::parse_lin2_file(path);
    Report report = base_report(command, path);
    report.add("n", s.n_vars());
    report.add("m", s.size());
    report.add("total_weight", s.total_weight());
    report.add("k", static_cast<long long>(k));
    report.add("threshold", Rational(2 * k));

    maxlin::SolveOptions options;
    options.parallel = common.parallel;
    const maxlin::Verdict v = command == "search" ? maxlin::solve_search_tree(s, k, options)
                                                  : maxlin::solve(s, k, options);
    report_verdict(report, s, v, k);
    finish(report, common);
    return v.yes ? kExitYes : kExitNo;
}

int run_kernelize(const std::string& path, int k, std::optional<int> r,
                  const std::string& out_path, const CommonOptions& common) {
    const maxlin::LinearSystem s = maxlin::parse_lin2_file(path);
    Report report = base_report("kernelize", path);
    report.add("n", s.n_vars());
    report.add("m", s.size());
    report.add("k", static_cast<long long>(k));
    if (r) report.add("r", static_cast<long long>(*r));

    const maxlin::KernelOutcome out = r ? maxlin::kernelize_r(s, k, *r) : maxlin::kernelize(s, k);
    report.add("regime", out.regime);
    int exit_code = kExitYes;
    if (out.solved()) {
        report_verdict(report, s, out.verdict(), k);
        exit_code = out.verdict().yes ? kExitYes : kExitNo;
    } else {
        const maxlin::Kernel& kern = out.kernel();
        report.add("kernel_vars", kern.system.n_vars());
        report.add("kernel_equations", kern.system.size());
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
            f << maxlin::serialize_lin2(kern.system);
            report.add("output", out_path);
        }
    }
    finish(report, common);
    return exit_code;
}

int run_excess(const std::string& path, int k, const CommonOptions& common) {
    const maxlin::LinearSystem s = maxlin::parse_lin2_file(path);
    Report report = base_report("excess", path);
    report.add("n", s.n_vars());
    report.add("m", s.size());
    report.add("k", static_cast<long long>(k));

    auto [reduced, log] = maxlin::reduce(s);
    if (reduced.empty())
        throw maxlin::PreconditionError("system reduces to empty; no equation to mark");
    const Assignment local = maxlin::guaranteed_excess_assignment(reduced, k);
    const Assignment witness = maxlin::lift_assignment(log, local);
    const Rational guarantee = Rational(k) * reduced.min_weight();
    const Rational achieved = excess(s, witness);
    if (achieved < guarantee)
        throw std::logic_error("witness failed re-validation against the input");

    report.add("r", reduced.max_arity());
    report.add("reduced_vars", reduced.n_vars());
    report.add("w_min", reduced.min_weight());
    report.add("guarantee", guarantee);
    report.add("excess", achieved);
    report.add("witness", witness_string(witness));
    finish(report, common);
    return kExitYes;
}

int run_pb_bound(const std::string& path, const CommonOptions& common) {
    const maxlin::FourierPolynomial f = maxlin::parse_pbf_file(path);
    Report report = base_report("pb-bound", path);
    report.add("n", f.n_vars());
    report.add("terms", f.terms().size());
    report.add("degree", f.degree());

    const maxlin::BoundResult b = maxlin::lower_bound(f);
    const Rational value = maxlin::evaluate(f, b.witness);
    if (value < b.bound) throw std::logic_error("witness failed re-validation against the input");

    report.add("rank", b.rank_used);
    report.add("k_star", static_cast<long long>(b.k_star));
    report.add("bound", b.bound);
    report.add("value", value);
    report.add("witness", witness_string(b.witness));
    finish(report, common);
    return kExitYes;
}

std::string coloring_string(const Assignment& x) { return witness_string(x); }

int run_cut(const std::string& command, const std::string& path, const CommonOptions& common) {
    const maxlin::ParsedGraph parsed = maxlin::parse_graph_file(path);
    if (command == "maxcut" && !parsed.graph.all_neq_labels())
        throw std::invalid_argument("maxcut requires all edges labeled '!='; use balance");

    Report report = base_report(command, path);
    report.add("n", static_cast<long long>(parsed.graph.n_vertices));
    report.add("m", parsed.graph.edges.size());
    report.add("components", static_cast<long long>(parsed.graph.components()));

    const maxlin::CutResult cut = command == "maxcut"
                                      ? maxlin::max_cut_assignment(parsed.graph)
                                      : maxlin::balanced_subgraph_assignment(parsed.graph);
    if (maxlin::count_satisfied(parsed.graph, cut.coloring) != cut.satisfied)
        throw std::logic_error("coloring failed re-validation against the input");

    report.add("guarantee", cut.guarantee);
    report.add(command == "maxcut" ? "cut" : "satisfied", static_cast<long long>(cut.satisfied));
    report.add("coloring", coloring_string(cut.coloring));
    finish(report, common);
    return kExitYes;
}

int run_oracle(const std::string& path, const CommonOptions& common) {
    const maxlin::LinearSystem s = maxlin::parse_lin2_file(path);
    Report report = base_report("oracle", path);
    report.add("n", s.n_vars());
    report.add("m", s.size());
    report.add("total_weight", s.total_weight());

    const auto [best, witness] = maxlin::brute_force_max_excess(s);
    if (excess(s, witness) != best)
        throw std::logic_error("witness failed re-validation against the input");
    report.add("max_excess", best);
    report.add("sat_weight", (s.total_weight() + best) / 2);
    report.add("witness", witness_string(witness));
    finish(report, common);
    return kExitYes;
}

int emit_instance(const maxlin::LinearSystem& s, const std::string& out_path) {
    const std::string text = maxlin::serialize_lin2(s);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
        f << text;
        std::cout << "output: " << out_path << '\n';
    }
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MaxLin2 above-average solver toolkit"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_flag("--json", common.json, "emit the report as a single JSON object");
    app.add_flag("--timing", common.timing, "include wall-clock time in the report");
    app.add_flag("--parallel", common.parallel, "evaluate sibling search branches concurrently");

    std::string path, out_path;
    int k = 0;
    std::optional<int> opt_r;

    auto* solve_cmd = app.add_subcommand("solve", "decide sat(S) >= W/2 + k with a witness");
    solve_cmd->add_option("--k", k, "parameter k")->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("file", path, ".lin2 instance")->required();

    auto* search_cmd = app.add_subcommand("search", "decide via the search tree alone");
    search_cmd->add_option("--k", k, "parameter k")->required()->check(CLI::NonNegativeNumber);
    search_cmd->add_option("file", path, ".lin2 instance")->required();

    auto* kern_cmd = app.add_subcommand("kernelize", "kernelize (variable bound from k, or k and r)");
    kern_cmd->add_option("--k", k, "parameter k")->required()->check(CLI::NonNegativeNumber);
    int r_value = 0;
    auto* r_opt = kern_cmd->add_option("--r", r_value, "arity bound r")->check(CLI::PositiveNumber);
    kern_cmd->add_option("file", path, ".lin2 instance")->required();
    kern_cmd->add_option("-o,--output", out_path, "write the kernel as .lin2");

    auto* excess_cmd = app.add_subcommand("excess", "guaranteed-excess assignment (k * w_min)");
    excess_cmd->add_option("--k", k, "parameter k")->required()->check(CLI::PositiveNumber);
    excess_cmd->add_option("file", path, ".lin2 instance")->required();

    auto* pb_cmd = app.add_subcommand("pb-bound", "pseudo-boolean lower bound with witness");
    pb_cmd->add_option("file", path, ".pbf polynomial")->required();

    auto* maxcut_cmd = app.add_subcommand("maxcut", "bipartite subgraph above m/2 + (n-1)/4");
    maxcut_cmd->add_option("file", path, ".cut or all-'!=' .bsg graph")->required();

    auto* balance_cmd = app.add_subcommand("balance", "balanced subgraph coloring");
    balance_cmd->add_option("file", path, ".bsg labeled graph")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force maximum excess (n <= 24)");
    oracle_cmd->add_option("file", path, ".lin2 instance")->required();

    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd->require_subcommand(1);
    int kappa = 2, gr = 1;
    auto* tight_cmd = gen_cmd->add_subcommand("tight", "tight guaranteed-excess instance");
    tight_cmd->add_option("--kappa", kappa, "block count + 1")->required()->check(CLI::PositiveNumber);
    tight_cmd->add_option("--r", gr, "block size")->required()->check(CLI::PositiveNumber);
    tight_cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");

    maxlin::RandomSpec spec;
    bool have_seed = false;
    auto* random_cmd = gen_cmd->add_subcommand("random", "seeded random instance");
    random_cmd->add_option("--n", spec.n_vars, "variables")->required();
    random_cmd->add_option("--m", spec.n_equations, "equations")->required();
    random_cmd->add_option("--r", spec.max_arity, "maximum arity")->required();
    random_cmd->add_option("--max-weight", spec.max_weight, "maximum weight")->required();
    random_cmd->add_option("--seed", spec.seed, "PRNG seed (required)")
        ->required()
        ->each([&](const std::string&) { have_seed = true; });
    random_cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_decision("solve", path, k, common);
        if (search_cmd->parsed()) return run_decision("search", path, k, common);
        if (kern_cmd->parsed()) {
            if (r_opt->count() > 0) opt_r = r_value;
            return run_kernelize(path, k, opt_r, out_path, common);
        }
        if (excess_cmd->parsed()) return run_excess(path, k, common);
        if (pb_cmd->parsed()) return run_pb_bound(path, common);
        if (maxcut_cmd->parsed()) return run_cut("maxcut", path, common);
        if (balance_cmd->parsed()) return run_cut("balance", path, common);
        if (oracle_cmd->parsed()) return run_oracle(path, common);
        if (tight_cmd->parsed()) return emit_instance(maxlin::tight_instance(kappa, gr), out_path);
        if (random_cmd->parsed()) {
            (void)have_seed;
            return emit_instance(maxlin::random_instance(spec), out_path);
        }
    } catch (const maxlin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const maxlin::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
