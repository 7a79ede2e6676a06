#include "metric_repair/fpt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "metric_repair/detect.hpp"
#include "metric_repair/errors.hpp"

namespace metric_repair {
namespace {

struct CommonNeighbor {
    Vertex l;
    EdgeId il;
    EdgeId jl;
};

std::vector<CommonNeighbor> common_neighbors(const WeightedGraph& g, const Edge& e) {
    std::vector<CommonNeighbor> out;
    const auto ni = g.neighbors(e.u);
    const auto nj = g.neighbors(e.v);
    auto a = ni.begin();
    auto b = nj.begin();
    while (a != ni.end() && b != nj.end()) {
        if (a->to < b->to) {
            ++a;
        } else if (b->to < a->to) {
            ++b;
        } else {
            out.push_back({a->to, a->edge, b->edge});
            ++a;
            ++b;
        }
    }
    return out;
}

Units magnitude(Units x) { return x < 0 ? -x : x; }

/// The `count` entries with the largest |w_il - w_jl|, ties by vertex id.
std::vector<CommonNeighbor> largest_differences(const WeightedGraph& g, std::vector<CommonNeighbor> around,
                                                std::size_t count) {
    auto key = [&](const CommonNeighbor& c) { return magnitude(g.weight(c.il).units() - g.weight(c.jl).units()); };
    std::stable_sort(around.begin(), around.end(),
                     [&](const CommonNeighbor& x, const CommonNeighbor& y) { return key(x) > key(y); });
    if (around.size() > count) around.resize(count);
    return around;
}

/// The `count` entries with the smallest w_il + w_jl, ties by vertex id.
std::vector<CommonNeighbor> smallest_sums(const WeightedGraph& g, std::vector<CommonNeighbor> around,
                                          std::size_t count) {
    auto key = [&](const CommonNeighbor& c) { return g.weight(c.il).units() + g.weight(c.jl).units(); };
    std::stable_sort(around.begin(), around.end(),
                     [&](const CommonNeighbor& x, const CommonNeighbor& y) { return key(x) < key(y); });
    if (around.size() > count) around.resize(count);
    return around;
}

class CoverSearch {
public:
    CoverSearch(const WeightedGraph& g, Omega omega, std::size_t k)
        : g_(g), omega_(omega), k_(k), verifier_(g) {
        stats_.candidate_bound = (omega == Omega::IncreaseOnly ? 5 : 12) * k * k;
    }

    FptResult run() {
        const std::vector<TriangleRecord> triangles = enumerate_broken_triangles(g_);
        const std::size_t m = g_.edge_count();

        // Forced edges: in more than k broken triangles (as a bottom edge
        // for increase-only, in any role for the general case).
        std::vector<std::size_t> count(m, 0);
        for (const TriangleRecord& t : triangles) {
            ++count[t.bottoms[0]];
            ++count[t.bottoms[1]];
            if (omega_ == Omega::General) ++count[t.top];
        }
        Node root;
        root.in_support.assign(m, false);
        root.in_candidates.assign(m, false);
        for (EdgeId id = 0; id < m; ++id) {
            if (count[id] > k_) {
                root.support.push_back(id);
                root.in_support[id] = true;
            }
        }
        stats_.seeded = root.support.size();
        if (root.support.size() > k_) return finish(false, {});

        for (const TriangleRecord& t : triangles) {
            const bool touched = root.in_support[t.bottoms[0]] || root.in_support[t.bottoms[1]] ||
                                 (omega_ == Omega::General && root.in_support[t.top]);
            if (touched) continue;
            if (omega_ == Omega::General && !add_candidate(root, t.top)) return finish(false, {});
            if (!add_candidate(root, t.bottoms[0]) || !add_candidate(root, t.bottoms[1])) return finish(false, {});
        }
        for (EdgeId id : root.support) {
            const Edge& e = g_.edge(id);
            for (const CommonNeighbor& c : largest_differences(g_, common_neighbors(g_, e), k_)) {
                if (omega_ == Omega::General) {
                    if (!add_candidate(root, c.il) || !add_candidate(root, c.jl)) return finish(false, {});
                    continue;
                }
                // The triangle stays broken with this edge as a bottom edge;
                // an increase-only fix must raise the other bottom edge.
                const EdgeId other_bottom = g_.weight(c.il) <= g_.weight(c.jl) ? c.il : c.jl;
                if (!add_candidate(root, other_bottom)) return finish(false, {});
            }
            if (omega_ == Omega::General) {
                for (const CommonNeighbor& c : smallest_sums(g_, common_neighbors(g_, e), k_)) {
                    if (!add_candidate(root, c.il) || !add_candidate(root, c.jl)) return finish(false, {});
                }
            }
        }
        root.expanded.assign(root.support.size(), false);

        std::vector<EdgeId> found;
        const bool ok = cover(std::move(root), found);
        return finish(ok, std::move(found));
    }

private:
    struct Node {
        std::vector<EdgeId> support;
        std::vector<bool> expanded;  // parallel to support
        std::vector<bool> in_support;
        std::vector<EdgeId> candidates;
        std::vector<bool> in_candidates;
    };

    bool add_candidate(Node& node, EdgeId id) {
        if (node.in_support[id] || node.in_candidates[id]) return true;
        node.candidates.push_back(id);
        node.in_candidates[id] = true;
        stats_.max_candidates = std::max(stats_.max_candidates, node.candidates.size());
        if (node.candidates.size() > stats_.candidate_bound) {
            stats_.bound_exceeded = true;
            return false;
        }
        return true;
    }

    bool expand(Node& node, std::size_t index) {
        const EdgeId id = node.support[index];
        const Edge& e = g_.edge(id);
        const std::vector<CommonNeighbor> around = common_neighbors(g_, e);
        for (const CommonNeighbor& c : smallest_sums(g_, around, k_)) {
            if (!add_candidate(node, c.il) || !add_candidate(node, c.jl)) return false;
        }
        if (omega_ != Omega::General) return true;
        for (const CommonNeighbor& c : largest_differences(g_, around, k_)) {
            if (!add_candidate(node, c.il) || !add_candidate(node, c.jl)) return false;
        }
        // Two support edges sharing an endpoint: their closing edge.
        for (const CommonNeighbor& c : around) {
            if (node.in_support[c.il] && !add_candidate(node, c.jl)) return false;
            if (node.in_support[c.jl] && !add_candidate(node, c.il)) return false;
        }
        return true;
    }

    bool leaf(const std::vector<EdgeId>& support, std::vector<EdgeId>& found) {
        std::vector<EdgeId> key = support;
        std::sort(key.begin(), key.end());
        if (failed_.contains(key)) return false;
        ++stats_.verifier_calls;
        if (verifier_.accepts(key, omega_)) {
            found = std::move(key);
            return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

    bool cover(Node node, std::vector<EdgeId>& found) {
        if (aborted_) return false;
        ++stats_.nodes;
        if (node.support.size() > k_) return false;
        if (node.support.size() == k_) return leaf(node.support, found);

        std::vector<EdgeId> key = node.support;
        std::sort(key.begin(), key.end());
        // The candidate set depends only on the support set, so a support
        // that failed once fails again.
        if (failed_.contains(key)) return false;

        for (std::size_t i = 0; i < node.support.size(); ++i) {
            if (node.expanded[i]) continue;
            node.expanded[i] = true;
            if (!expand(node, i)) {
                aborted_ = true;
                return false;
            }
        }
        if (node.candidates.empty()) return leaf(node.support, found);

        const std::vector<EdgeId> branches = node.candidates;
        for (EdgeId e : branches) {
            Node child = node;
            std::erase(child.candidates, e);
            child.in_candidates[e] = false;
            child.support.push_back(e);
            child.expanded.push_back(false);
            child.in_support[e] = true;
            if (cover(std::move(child), found)) return true;
            if (aborted_) return false;
        }
        failed_.insert(std::move(key));
        return false;
    }

    FptResult finish(bool ok, std::vector<EdgeId> found) {
        FptResult result;
        result.stats = stats_;
        if (!ok) return result;
        result.found = true;
        result.support = Support(std::move(found));
        VerifierOutcome outcome = verifier_.check(result.support.ids(), omega_);
        result.delta = outcome.delta();
        return result;
    }

    const WeightedGraph& g_;
    Omega omega_;
    std::size_t k_;
    SupportVerifier verifier_;
    FptStats stats_;
    std::set<std::vector<EdgeId>> failed_;
    bool aborted_ = false;
};

void require_fpt_input(const WeightedGraph& g, int k) {
    if (k < 0) throw PreconditionError("the solution-size parameter must be nonnegative");
    if (!is_chordal(g)) throw PreconditionError("the FPT solvers require a chordal graph");
}

FptResult bounded_search(const WeightedGraph& g, Omega omega, std::size_t k) {
    return CoverSearch(g, omega, k).run();
}

} // namespace

FptResult fpimr(const WeightedGraph& g, int k) {
    require_fpt_input(g, k);
    return bounded_search(g, Omega::IncreaseOnly, static_cast<std::size_t>(k));
}

FptResult fpt_general(const WeightedGraph& g, int k) {
    require_fpt_input(g, k);
    return bounded_search(g, Omega::General, static_cast<std::size_t>(k));
}

FptSolution fpt_auto(const WeightedGraph& g, Omega omega) {
    if (omega == Omega::DecreaseOnly) throw PreconditionError("fpt solves increase-only and general repairs");
    require_fpt_input(g, 0);
    for (std::size_t k = 0; k <= g.edge_count(); ++k) {
        FptResult r = bounded_search(g, omega, k);
        if (r.found) return FptSolution{k, std::move(r.support), std::move(r.delta), r.stats};
    }
    throw std::logic_error("fpt search exhausted every budget without a repair");
}

} // namespace metric_repair
