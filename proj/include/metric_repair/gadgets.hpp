#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metric_repair/exact.hpp"
#include "metric_repair/graph.hpp"

namespace metric_repair {

enum class GadgetKind {
    CycleFig1,              ///< C_n, edge (0, n-1) weight 1, the rest 0
    CycleTight,             ///< C_n, edge (0, n-1) weight n, the rest 1
    CompletedCycle,         ///< CycleFig1 completed by shortest distances (K_n)
    VertexCoverSuspension,  ///< base edges 3a, apex edges a
    ComponentL,             ///< n/L components of size L
    IomrWorst,              ///< first row/column 2^(j+1), zeros elsewhere
    DenseGamma,             ///< zero k x k block, k+1-i cross block, ones
    PlantedChordal,
    PlantedComplete,
};

std::string_view to_string(GadgetKind kind) noexcept;
/// Accepts the enumerator names, case-insensitively. Throws ParseError.
GadgetKind parse_gadget_kind(std::string_view text);
/// Kinds whose output depends on a seed.
bool is_random_kind(GadgetKind kind) noexcept;

struct GadgetSpec {
    GadgetKind kind = GadgetKind::CycleFig1;
    std::size_t n = 0;       ///< vertices; base vertices for VertexCoverSuspension
    std::size_t L = 0;       ///< component size
    std::size_t k = 0;       ///< DenseGamma block size; planted perturbations
    std::size_t attach = 3;  ///< PlantedChordal: largest clique a new vertex joins
    Units alpha = 1;
    std::optional<std::uint64_t> seed;
    /// VertexCoverSuspension base graph; drawn at random from the seed when empty.
    std::vector<VertexPair> base_edges;

    /// Builds a spec from "key=value" parameters (n, L, k, attach, alpha,
    /// base). base is "0-1:1-2:...". Throws ParseError on unknown keys.
    static GadgetSpec from_params(GadgetKind kind, const std::map<std::string, std::string>& params,
                                  std::optional<std::uint64_t> seed);
};

struct GadgetInstance {
    WeightedGraph graph;
    bool matrix_form = false;  ///< complete instance, serialized as a matrix
    std::optional<std::size_t> planted_support;
};

/// Throws PreconditionError on invalid parameters.
GadgetInstance gen(const GadgetSpec& spec);

/// The explicit optimal repair of DenseGamma(n, k): the zero block entries
/// (i, j) become |i - j|.
RepairDelta dense_gamma_reference_repair(std::size_t n, std::size_t k);

} // namespace metric_repair
