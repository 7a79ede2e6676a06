#include "metric_repair/solve.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "metric_repair/approx.hpp"
#include "metric_repair/detect.hpp"
#include "metric_repair/errors.hpp"

namespace metric_repair {
namespace {

Support support_of(const WeightedGraph& g, const RepairDelta& delta) {
    std::vector<EdgeId> ids;
    for (const DeltaEntry& e : delta.entries()) ids.push_back(g.find_edge(e.u, e.v));
    return Support(std::move(ids));
}

void run(const WeightedGraph& g, RepairReport& r, const RunOptions& options) {
    switch (r.algo) {
    case Algorithm::Dmr:
        r.delta = dmr(g);
        r.support = support_of(g, r.delta);
        r.iterations = 1;
        r.found = true;
        return;
    case Algorithm::Fpt: {
        FptSolution s = fpt_auto(g, r.omega);
        r.support = std::move(s.support);
        r.delta = std::move(s.delta);
        r.iterations = s.k + 1;
        r.fpt_stats = s.stats;
        r.found = true;
        return;
    }
    case Algorithm::Spc:
    case Algorithm::Gspc: {
        ApproxReport a = r.algo == Algorithm::Spc ? spc(g) : general_spc(g);
        r.iterations = a.iterations;
        if (r.algo == Algorithm::Gspc && r.omega == Omega::IncreaseOnly) {
            VerifierOutcome outcome = verify_support(g, a.support, Omega::IncreaseOnly);
            if (!outcome.accepted()) return;
            a.delta = outcome.delta();
        }
        r.support = std::move(a.support);
        r.delta = std::move(a.delta);
        r.found = true;
        return;
    }
    case Algorithm::FiveCycleCover: {
        ApproxReport a = five_cycle_cover(DistanceMatrix::from_graph(g));
        r.iterations = a.iterations;
        if (!a.accepted) return;
        r.support = std::move(a.support);
        r.delta = std::move(a.delta);
        r.found = true;
        return;
    }
    case Algorithm::Iomr:
        r.delta = iomr_fixed(DistanceMatrix::from_graph(g));
        r.support = support_of(g, r.delta);
        r.iterations = 1;
        r.found = true;
        return;
    case Algorithm::Oracle: {
        if (r.omega == Omega::DecreaseOnly) {
            r.delta = dmr(g);
            r.support = support_of(g, r.delta);
            r.iterations = 1;
            r.found = true;
            return;
        }
        auto s = oracle_opt(g, r.omega, options.oracle_max_support, options.oracle_edge_limit);
        r.iterations = 1;
        if (!s) return;
        r.support = std::move(s->support);
        r.delta = std::move(s->delta);
        r.found = true;
        return;
    }
    }
}

} // namespace

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
    case Algorithm::Dmr: return "dmr";
    case Algorithm::Fpt: return "fpt";
    case Algorithm::Spc: return "spc";
    case Algorithm::Gspc: return "gspc";
    case Algorithm::FiveCycleCover: return "5cc";
    case Algorithm::Iomr: return "iomr";
    case Algorithm::Oracle: return "oracle";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "dmr") return Algorithm::Dmr;
    if (text == "fpt") return Algorithm::Fpt;
    if (text == "spc") return Algorithm::Spc;
    if (text == "gspc") return Algorithm::Gspc;
    if (text == "5cc" || text == "fivecc") return Algorithm::FiveCycleCover;
    if (text == "iomr") return Algorithm::Iomr;
    if (text == "oracle") return Algorithm::Oracle;
    throw ParseError("unknown algorithm: " + std::string(text));
}

bool compatible(Algorithm algo, Omega omega) noexcept {
    switch (algo) {
    case Algorithm::Dmr: return omega == Omega::DecreaseOnly;
    case Algorithm::Spc:
    case Algorithm::FiveCycleCover:
    case Algorithm::Iomr: return omega == Omega::IncreaseOnly;
    case Algorithm::Gspc:
    case Algorithm::Fpt: return omega != Omega::DecreaseOnly;
    case Algorithm::Oracle: return true;
    }
    return false;
}

RepairReport run_algo(const WeightedGraph& g, Omega omega, Algorithm algo, const RunOptions& options) {
    if (!compatible(algo, omega)) {
        throw PreconditionError(std::string(to_string(algo)) + " does not solve " + std::string(to_string(omega)) +
                                " repairs");
    }
    RepairReport r;
    r.algo = algo;
    r.omega = omega;
    const auto start = std::chrono::steady_clock::now();
    run(g, r, options);
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!r.found) return r;

    for (const DeltaEntry& e : r.delta.entries()) {
        if (!sign_compatible(omega, e.delta)) throw std::logic_error(std::string(to_string(algo)) + " broke the sign class");
    }
    r.is_metric_after = is_metric(apply_delta(g, r.delta));
    if (!r.is_metric_after) throw std::logic_error(std::string(to_string(algo)) + " returned a non-metric repair");
    return r;
}

} // namespace metric_repair
