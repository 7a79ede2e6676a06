// metric-repair: repair, verify, detect, gen, bench.
//
// Exit codes: 0 success, 1 no solution / rejected / not metric,
// 2 malformed input or usage, 3 precondition violation.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "metric_repair/bench.hpp"
#include "metric_repair/detect.hpp"
#include "metric_repair/errors.hpp"
#include "metric_repair/exact.hpp"
#include "metric_repair/gadgets.hpp"
#include "metric_repair/io.hpp"
#include "metric_repair/solve.hpp"

namespace mr = metric_repair;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNone = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;

mr::Omega omega_arg(const std::string& text) {
    const auto omega = mr::parse_omega(text);
    if (!omega) throw mr::ParseError("unknown omega: " + text);
    return *omega;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-") {
        std::cout << content;
    } else {
        mr::write_file(out, content);
    }
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw mr::ParseError("parameter must look like key=value: " + item);
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

struct RepairArgs {
    std::string input;
    std::string omega;
    std::string algo;
    std::string format = "tsv";
    std::string out;
    bool exact_L = false;
};

int cmd_repair(const RepairArgs& a) {
    const mr::WeightedGraph g = mr::load_graph(a.input);
    const mr::Omega omega = omega_arg(a.omega);
    const mr::Algorithm algo = mr::parse_algorithm(a.algo);
    mr::RunOptions options;
    options.oracle_edge_limit = mr::oracle_edge_limit_from_env();
    const mr::RepairReport r = mr::run_algo(g, omega, algo, options);

    std::ostringstream summary;
    summary << "n=" << g.vertex_count() << " m=" << g.edge_count() << " algo=" << mr::to_string(algo)
            << " omega=" << mr::to_string(omega);
    if (r.found) {
        summary << " support_size=" << r.support.size();
    } else {
        summary << " support_size=NONE";
    }
    summary << " iterations=" << r.iterations << " time_ms=" << r.time_ms << " L=";
    if (a.exact_L && g.vertex_count() <= mr::kDefaultCycleBudget) {
        const auto len = mr::longest_broken_cycle_len(g, mr::kDefaultCycleBudget);
        summary << (len ? *len - 1 : 0);
    } else {
        summary << "not computed";
    }
    summary << '\n';

    if (!r.found) {
        std::cerr << "NONE: no repair found\n" << summary.str();
        return kExitNone;
    }
    mr::DeltaDocument doc{r.delta, r.support.size(), r.is_metric_after, g.decimals()};
    const std::string body = a.format == "json" ? mr::serialize_delta_json(doc) : mr::serialize_delta_tsv(doc);
    emit(a.out, body);
    (a.out.empty() || a.out == "-" ? std::cerr : std::cout) << summary.str();
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& support_path, const std::string& omega_text) {
    const mr::WeightedGraph g = mr::load_graph(input);
    const mr::Omega omega = omega_arg(omega_text);
    const auto pairs = mr::parse_support(mr::read_file(support_path));
    const mr::Support support = mr::Support::from_pairs(g, pairs);
    const mr::VerifierOutcome outcome = mr::verify_support(g, support, omega);
    if (!outcome.accepted()) {
        std::cout << "Rejected: " << mr::to_string(*outcome.rejection()) << '\n';
        return kExitNone;
    }
    std::cout << "Accepted\n";
    const bool metric = mr::is_metric(mr::apply_delta(g, outcome.delta()));
    std::cout << mr::serialize_delta_tsv({outcome.delta(), support.size(), metric, g.decimals()});
    return kExitOk;
}

int cmd_detect(const std::string& input, bool triangles_only) {
    const mr::WeightedGraph g = mr::load_graph(input);
    const bool metric = mr::is_metric(g);
    std::cout << "is_metric: " << (metric ? "true" : "false") << '\n';
    if (!triangles_only) {
        if (const auto w = mr::find_broken_witness(g)) {
            std::cout << "witness:";
            for (mr::Vertex v : w->cycle) std::cout << ' ' << v;
            std::cout << " top " << w->top.u << ' ' << w->top.v << '\n';
        }
    }
    for (const mr::TriangleRecord& t : mr::enumerate_broken_triangles(g)) {
        const mr::Edge& top = g.edge(t.top);
        std::cout << "triangle " << t.vertices[0] << ' ' << t.vertices[1] << ' ' << t.vertices[2] << " top " << top.u
                  << ' ' << top.v << '\n';
    }
    return metric ? kExitOk : kExitNone;
}

int cmd_gen(const std::string& kind_text, const std::string& params, std::optional<std::uint64_t> seed,
            const std::string& out) {
    const mr::GadgetKind kind = mr::parse_gadget_kind(kind_text);
    mr::GadgetSpec spec = mr::GadgetSpec::from_params(kind, parse_params(params), seed);
    if (mr::is_random_kind(kind) && !seed && !(kind == mr::GadgetKind::VertexCoverSuspension && !spec.base_edges.empty())) {
        throw mr::ParseError(std::string(mr::to_string(kind)) + " requires --seed");
    }
    const mr::GadgetInstance inst = mr::gen(spec);
    emit(out, inst.matrix_form ? mr::serialize_matrix_csv(inst.graph) : mr::serialize_edge_list(inst.graph));
    if (inst.planted_support && mr::is_random_kind(kind)) {
        std::cerr << "planted_support=" << *inst.planted_support << '\n';
    }
    return kExitOk;
}

int cmd_bench(const std::string& suite, const std::string& out) {
    const mr::BenchSuite s = mr::parse_bench_suite(suite);
    emit(out, mr::bench_csv(mr::run_bench(s)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse metric repair of weighted graphs"};
    app.require_subcommand(1);

    RepairArgs repair;
    auto* repair_cmd = app.add_subcommand("repair", "Compute a repair");
    repair_cmd->add_option("input", repair.input, "Edge list or matrix CSV")->required();
    repair_cmd->add_option("--omega", repair.omega, "decrease | increase | general")->required();
    repair_cmd->add_option("--algo", repair.algo, "dmr | fpt | spc | gspc | 5cc | iomr | oracle")->required();
    repair_cmd->add_option("--format", repair.format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
    repair_cmd->add_option("--out", repair.out, "Output path (default stdout)");
    repair_cmd->add_flag("--exact-L", repair.exact_L, "Report L by exhaustive cycle enumeration (small n)");

    std::string verify_input, verify_support, verify_omega;
    auto* verify_cmd = app.add_subcommand("verify", "Check whether a support admits a repair");
    verify_cmd->add_option("input", verify_input)->required();
    verify_cmd->add_option("--support", verify_support, "Lines 'u v'")->required();
    verify_cmd->add_option("--omega", verify_omega, "increase | general")->required();

    std::string detect_input;
    bool triangles_only = false;
    auto* detect_cmd = app.add_subcommand("detect", "Report broken cycles");
    detect_cmd->add_option("input", detect_input)->required();
    detect_cmd->add_flag("--triangles-only", triangles_only);

    std::string gen_kind, gen_params, gen_out;
    std::optional<std::uint64_t> gen_seed;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a gadget instance");
    gen_cmd->add_option("--kind", gen_kind)->required();
    gen_cmd->add_option("--params", gen_params, "key=value,... (n, L, k, attach, alpha, base)");
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--out", gen_out);

    std::string bench_suite, bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite, CSV output");
    bench_cmd->add_option("--suite", bench_suite, "table1 | scaling | ratios")->required();
    bench_cmd->add_option("--out", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (*repair_cmd) return cmd_repair(repair);
        if (*verify_cmd) return cmd_verify(verify_input, verify_support, verify_omega);
        if (*detect_cmd) return cmd_detect(detect_input, triangles_only);
        if (*gen_cmd) return cmd_gen(gen_kind, gen_params, gen_seed, gen_out);
        if (*bench_cmd) return cmd_bench(bench_suite, bench_out);
    } catch (const mr::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const mr::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const mr::EnumerationLimitError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const mr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return kExitMalformed;
}
