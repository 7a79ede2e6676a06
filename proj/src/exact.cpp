#include "metric_repair/exact.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>

#include "metric_repair/errors.hpp"

namespace metric_repair {

Support::Support(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Support Support::from_pairs(const WeightedGraph& g, std::span<const VertexPair> pairs) {
    std::vector<EdgeId> ids;
    ids.reserve(pairs.size());
    for (const VertexPair& p : pairs) {
        const EdgeId id = g.find_edge(p.u, p.v);
        if (id == kNoEdge) {
            throw PreconditionError("support pair " + std::to_string(p.u) + " " + std::to_string(p.v) +
                                    " is not an edge");
        }
        ids.push_back(id);
    }
    return Support(std::move(ids));
}

bool Support::contains(EdgeId id) const noexcept { return std::binary_search(ids_.begin(), ids_.end(), id); }

std::vector<VertexPair> Support::pairs(const WeightedGraph& g) const {
    std::vector<VertexPair> out;
    out.reserve(ids_.size());
    for (EdgeId id : ids_) out.push_back(g.edge(id).pair());
    return out;
}

RepairDelta dmr(const WeightedGraph& g) {
    const DistanceTable dist = shortest_distances(g);
    std::vector<DeltaEntry> entries;
    for (const Edge& e : g.edges()) {
        const Units d = dist.at(e.u, e.v);
        if (d < e.w.units()) entries.push_back({e.u, e.v, d - e.w.units()});
    }
    return RepairDelta(Omega::DecreaseOnly, std::move(entries));
}

std::string_view to_string(Rejection reason) noexcept {
    switch (reason) {
    case Rejection::ChangedOutsideSupport: return "changed-outside-support";
    case Rejection::DecreasedInIncreaseMode: return "decreased-in-increase-mode";
    }
    return "unknown";
}

SupportVerifier::SupportVerifier(const WeightedGraph& g)
    : g_(&g), original_(g.weight_units()), modified_(original_), in_support_(g.edge_count(), false) {}

bool SupportVerifier::run(std::span<const EdgeId> support, Omega omega, Rejection& reason) {
    if (omega == Omega::DecreaseOnly) throw PreconditionError("the verifier handles increase and general repairs only");
    const Units ceiling = g_->max_weight().units();
    std::copy(original_.begin(), original_.end(), modified_.begin());
    std::fill(in_support_.begin(), in_support_.end(), false);
    for (EdgeId id : support) {
        modified_[id] = ceiling;
        in_support_[id] = true;
    }
    dist_ = shortest_distances(*g_, modified_);

    for (EdgeId id = 0; id < g_->edge_count(); ++id) {
        const Edge& e = g_->edge(id);
        if (!in_support_[id] && dist_.at(e.u, e.v) != original_[id]) {
            reason = Rejection::ChangedOutsideSupport;
            return false;
        }
    }
    if (omega == Omega::IncreaseOnly) {
        for (EdgeId id : support) {
            const Edge& e = g_->edge(id);
            if (dist_.at(e.u, e.v) < original_[id]) {
                reason = Rejection::DecreasedInIncreaseMode;
                return false;
            }
        }
    }
    return true;
}

bool SupportVerifier::accepts(std::span<const EdgeId> support, Omega omega) {
    Rejection reason{};
    return run(support, omega, reason);
}

VerifierOutcome SupportVerifier::check(std::span<const EdgeId> support, Omega omega) {
    Rejection reason{};
    if (!run(support, omega, reason)) return VerifierOutcome::reject(reason);
    std::vector<DeltaEntry> entries;
    for (EdgeId id : support) {
        const Edge& e = g_->edge(id);
        entries.push_back({e.u, e.v, dist_.at(e.u, e.v) - original_[id]});
    }
    return VerifierOutcome::accept(RepairDelta(omega, std::move(entries)));
}

VerifierOutcome verify_support(const WeightedGraph& g, const Support& support, Omega omega) {
    SupportVerifier verifier(g);
    return verifier.check(support.ids(), omega);
}

BrokenCycleIndex::BrokenCycleIndex(const WeightedGraph& g, std::size_t budget)
    : cycles_(enumerate_broken_cycles(g, budget)), edge_count_(g.edge_count()) {}

bool BrokenCycleIndex::covers(const Support& support, Omega omega) const {
    if (omega == Omega::DecreaseOnly) throw PreconditionError("the structure characterization covers increase and general repairs");
    std::vector<bool> member(edge_count_, false);
    for (EdgeId id : support.ids()) member[id] = true;
    return std::all_of(cycles_.begin(), cycles_.end(), [&](const BrokenCycle& c) {
        return std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeId id) {
            return member[id] && (omega == Omega::General || id != c.top);
        });
    });
}

bool check_structure_theorem(const WeightedGraph& g, const Support& support, Omega omega, std::size_t budget) {
    return BrokenCycleIndex(g, budget).covers(support, omega);
}

std::optional<OracleSolution> oracle_opt(const WeightedGraph& g, Omega omega, std::size_t max_support,
                                         std::size_t edge_limit) {
    if (omega == Omega::DecreaseOnly) {
        RepairDelta delta = dmr(g);
        if (delta.size() > max_support) return std::nullopt;
        std::vector<EdgeId> ids;
        for (const DeltaEntry& e : delta.entries()) ids.push_back(g.find_edge(e.u, e.v));
        return OracleSolution{Support(std::move(ids)), std::move(delta)};
    }
    const std::size_t m = g.edge_count();
    if (m > edge_limit) {
        throw EnumerationLimitError("oracle refused: " + std::to_string(m) + " edges exceeds limit " +
                                    std::to_string(edge_limit));
    }
    SupportVerifier verifier(g);
    std::vector<EdgeId> combo;
    for (std::size_t size = 0; size <= std::min(max_support, m); ++size) {
        combo.resize(size);
        std::iota(combo.begin(), combo.end(), EdgeId{0});
        while (true) {
            if (verifier.accepts(combo, omega)) {
                VerifierOutcome outcome = verifier.check(combo, omega);
                return OracleSolution{Support(combo), outcome.delta()};
            }
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0 && combo[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::size_t oracle_edge_limit_from_env() {
    const char* text = std::getenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT");
    if (text == nullptr) return kDefaultOracleEdgeLimit;
    std::size_t value = 0;
    const std::string_view view(text);
    const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
    if (ec != std::errc{} || ptr != view.data() + view.size()) {
        throw ParseError("METRIC_REPAIR_ORACLE_EDGE_LIMIT is not a nonnegative integer");
    }
    return value;
}

} // namespace metric_repair
