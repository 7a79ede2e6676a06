#include "metric_repair/gadgets.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <set>

#include "metric_repair/apsp.hpp"
#include "metric_repair/errors.hpp"

namespace metric_repair {
namespace {

constexpr std::array<std::pair<GadgetKind, std::string_view>, 9> kKindNames{{
    {GadgetKind::CycleFig1, "CycleFig1"},
    {GadgetKind::CycleTight, "CycleTight"},
    {GadgetKind::CompletedCycle, "CompletedCycle"},
    {GadgetKind::VertexCoverSuspension, "VertexCoverSuspension"},
    {GadgetKind::ComponentL, "ComponentL"},
    {GadgetKind::IomrWorst, "IomrWorst"},
    {GadgetKind::DenseGamma, "DenseGamma"},
    {GadgetKind::PlantedChordal, "PlantedChordal"},
    {GadgetKind::PlantedComplete, "PlantedComplete"},
}};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("parameter " + std::string(key) + " is not a nonnegative integer: " + std::string(text));
    }
    return value;
}

std::vector<VertexPair> parse_base(std::string_view text) {
    std::vector<VertexPair> out;
    while (!text.empty()) {
        const std::size_t colon = text.find(':');
        const std::string_view item = text.substr(0, colon);
        const std::size_t dash = item.find('-');
        if (dash == std::string_view::npos) throw ParseError("base edge must look like u-v: " + std::string(item));
        const auto a = parse_number<Vertex>("base", item.substr(0, dash));
        const auto b = parse_number<Vertex>("base", item.substr(dash + 1));
        if (a == b) throw ParseError("base edge is a self-loop: " + std::string(item));
        out.push_back(VertexPair::of(a, b));
        if (colon == std::string_view::npos) break;
        text.remove_prefix(colon + 1);
    }
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw PreconditionError(message);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Edge> cycle_edges(std::size_t n, Units top, Units rest) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Weight{rest}});
    edges.push_back({0, n - 1, Weight{top}});
    return edges;
}

WeightedGraph from_matrix(std::size_t n, const std::vector<Units>& d) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, Weight{d[i * n + j]}});
    }
    return WeightedGraph(n, std::move(edges));
}

std::vector<VertexPair> random_connected(std::size_t n, std::mt19937_64& rng) {
    std::set<VertexPair> edges;
    for (Vertex v = 1; v < n; ++v) edges.insert(VertexPair::of(v, draw(rng, v)));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (draw(rng, 2) == 0) edges.insert({u, v});
        }
    }
    return {edges.begin(), edges.end()};
}

/// Lowers `count` distinct random edges to a value in [0, w).
std::size_t perturb(std::vector<Units>& weights, std::size_t count, std::mt19937_64& rng) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0) eligible.push_back(i);
    }
    require(count <= eligible.size(), "not enough positive edges to perturb");
    std::shuffle(eligible.begin(), eligible.end(), rng);
    for (std::size_t i = 0; i < count; ++i) {
        Units& w = weights[eligible[i]];
        w = static_cast<Units>(draw(rng, static_cast<std::uint64_t>(w)));
    }
    return count;
}

GadgetInstance planted_chordal(const GadgetSpec& spec) {
    require(spec.n >= 2, "PlantedChordal needs n >= 2");
    require(spec.attach >= 1, "PlantedChordal needs attach >= 1");
    std::mt19937_64 rng(*spec.seed);

    // Each new vertex joins a random subset of a random existing clique, so
    // it is simplicial when added and the reverse order is a PEO.
    std::vector<std::vector<Vertex>> bags{{0}};
    std::set<VertexPair> pairs;
    for (Vertex v = 1; v < spec.n; ++v) {
        std::vector<Vertex> bag = bags[draw(rng, bags.size())];
        std::shuffle(bag.begin(), bag.end(), rng);
        const std::size_t size = 1 + draw(rng, std::min(bag.size(), spec.attach));
        bag.resize(size);
        for (Vertex u : bag) pairs.insert(VertexPair::of(u, v));
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
    }

    std::vector<Edge> edges;
    for (const VertexPair& p : pairs) edges.push_back({p.u, p.v, Weight{static_cast<Units>(1 + draw(rng, 9))}});
    const WeightedGraph raw(spec.n, std::move(edges));
    const DistanceTable dist = shortest_distances(raw);
    std::vector<Units> weights;
    for (const Edge& e : raw.edges()) weights.push_back(dist.at(e.u, e.v));
    const std::size_t planted = perturb(weights, spec.k, rng);
    return {raw.with_weights(weights), false, planted};
}

GadgetInstance planted_complete(const GadgetSpec& spec) {
    require(spec.n >= 2, "PlantedComplete needs n >= 2");
    std::mt19937_64 rng(*spec.seed);
    std::vector<std::array<Units, 2>> points(spec.n);
    for (auto& p : points) p = {static_cast<Units>(draw(rng, 10)), static_cast<Units>(draw(rng, 10))};

    std::vector<Edge> edges;
    for (Vertex i = 0; i < spec.n; ++i) {
        for (Vertex j = i + 1; j < spec.n; ++j) {
            const Units d = std::abs(points[i][0] - points[j][0]) + std::abs(points[i][1] - points[j][1]);
            edges.push_back({i, j, Weight{d}});
        }
    }
    const WeightedGraph raw(spec.n, std::move(edges));
    std::vector<Units> weights = raw.weight_units();
    const std::size_t planted = perturb(weights, spec.k, rng);
    return {raw.with_weights(weights), true, planted};
}

GadgetInstance suspension(const GadgetSpec& spec) {
    require(spec.n >= 1, "VertexCoverSuspension needs n >= 1");
    require(spec.alpha > 0, "VertexCoverSuspension needs alpha > 0");
    std::vector<VertexPair> base = spec.base_edges;
    if (base.empty()) {
        std::mt19937_64 rng(*spec.seed);
        base = random_connected(spec.n, rng);
    }
    std::vector<Edge> edges;
    for (const VertexPair& p : base) {
        require(p.v < spec.n, "base edge endpoint out of range");
        edges.push_back({p.u, p.v, Weight{3 * spec.alpha}});
    }
    for (Vertex v = 0; v < spec.n; ++v) edges.push_back({v, spec.n, Weight{spec.alpha}});
    return {WeightedGraph(spec.n + 1, std::move(edges)), false, std::nullopt};
}

GadgetInstance component_l(const GadgetSpec& spec) {
    require(spec.L >= 2 && spec.L % 2 == 0, "ComponentL needs an even L >= 2");
    require(spec.n >= spec.L && spec.n % spec.L == 0, "ComponentL needs L to divide n");
    const std::size_t n = spec.n;
    std::vector<Units> d(n * n, 0);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i / spec.L != j / spec.L) {
                d[i * n + j] = 2;
            } else if (i / 2 == j / 2) {
                d[i * n + j] = 1;  // the L/2 disjoint weight-1 edges
            }
        }
    }
    return {from_matrix(n, d), true, std::nullopt};
}

GadgetInstance iomr_worst(const GadgetSpec& spec) {
    require(spec.n >= 2 && spec.n <= 56, "IomrWorst needs 2 <= n <= 56");
    const std::size_t n = spec.n;
    std::vector<Units> d(n * n, 0);
    for (Vertex j = 1; j < n; ++j) d[j] = d[j * n] = Units{1} << (j + 1);
    return {from_matrix(n, d), true, std::nullopt};
}

GadgetInstance dense_gamma(const GadgetSpec& spec) {
    require(spec.k >= 1 && 2 * spec.k < spec.n, "DenseGamma needs 1 <= k and k/n < 0.5");
    const std::size_t n = spec.n;
    const std::size_t k = spec.k;
    std::vector<Units> d(n * n, 0);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i == j || (i < k && j < k)) continue;
            if (i < k) {
                d[i * n + j] = static_cast<Units>(k - i);
            } else if (j < k) {
                d[i * n + j] = static_cast<Units>(k - j);
            } else {
                d[i * n + j] = 1;
            }
        }
    }
    return {from_matrix(n, d), true, std::nullopt};
}

} // namespace

std::string_view to_string(GadgetKind kind) noexcept {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

GadgetKind parse_gadget_kind(std::string_view text) {
    for (const auto& [k, name] : kKindNames) {
        if (iequals(name, text)) return k;
    }
    throw ParseError("unknown gadget kind: " + std::string(text));
}

bool is_random_kind(GadgetKind kind) noexcept {
    return kind == GadgetKind::PlantedChordal || kind == GadgetKind::PlantedComplete ||
           kind == GadgetKind::VertexCoverSuspension;
}

GadgetSpec GadgetSpec::from_params(GadgetKind kind, const std::map<std::string, std::string>& params,
                                   std::optional<std::uint64_t> seed) {
    GadgetSpec spec;
    spec.kind = kind;
    spec.seed = seed;
    for (const auto& [key, value] : params) {
        if (key == "n") {
            spec.n = parse_number<std::size_t>(key, value);
        } else if (key == "L") {
            spec.L = parse_number<std::size_t>(key, value);
        } else if (key == "k") {
            spec.k = parse_number<std::size_t>(key, value);
        } else if (key == "attach") {
            spec.attach = parse_number<std::size_t>(key, value);
        } else if (key == "alpha") {
            spec.alpha = parse_number<Units>(key, value);
        } else if (key == "base") {
            spec.base_edges = parse_base(value);
        } else {
            throw ParseError("unknown gadget parameter: " + key);
        }
    }
    return spec;
}

GadgetInstance gen(const GadgetSpec& spec) {
    const bool needs_seed = spec.kind == GadgetKind::PlantedChordal || spec.kind == GadgetKind::PlantedComplete ||
                            (spec.kind == GadgetKind::VertexCoverSuspension && spec.base_edges.empty());
    require(!needs_seed || spec.seed.has_value(), std::string(to_string(spec.kind)) + " requires a seed");

    switch (spec.kind) {
    case GadgetKind::CycleFig1:
        require(spec.n >= 3, "CycleFig1 needs n >= 3");
        return {WeightedGraph(spec.n, cycle_edges(spec.n, 1, 0)), false, 1};
    case GadgetKind::CycleTight:
        require(spec.n >= 3, "CycleTight needs n >= 3");
        return {WeightedGraph(spec.n, cycle_edges(spec.n, static_cast<Units>(spec.n), 1)), false, 1};
    case GadgetKind::CompletedCycle: {
        require(spec.n >= 3, "CompletedCycle needs n >= 3");
        std::vector<Units> d(spec.n * spec.n, 0);
        d[spec.n - 1] = d[(spec.n - 1) * spec.n] = 1;
        return {from_matrix(spec.n, d), true, std::nullopt};
    }
    case GadgetKind::VertexCoverSuspension: return suspension(spec);
    case GadgetKind::ComponentL: return component_l(spec);
    case GadgetKind::IomrWorst: return iomr_worst(spec);
    case GadgetKind::DenseGamma: return dense_gamma(spec);
    case GadgetKind::PlantedChordal: return planted_chordal(spec);
    case GadgetKind::PlantedComplete: return planted_complete(spec);
    }
    throw PreconditionError("unknown gadget kind");
}

RepairDelta dense_gamma_reference_repair(std::size_t n, std::size_t k) {
    require(k >= 1 && 2 * k < n, "DenseGamma needs 1 <= k and k/n < 0.5");
    std::vector<DeltaEntry> entries;
    for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k; ++j) entries.push_back({i, j, static_cast<Units>(j - i)});
    }
    return RepairDelta(Omega::IncreaseOnly, std::move(entries));
}

} // namespace metric_repair
