#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "metric_repair/graph.hpp"

namespace metric_repair {

/// Largest number of fractional digits accepted in a decimal.
inline constexpr int kMaxDecimals = 9;

struct Decimal {
    Units mantissa = 0;  ///< signed, scaled by 10^digits
    int digits = 0;
};

/// Digit-wise parse of [-]ddd[.ddd]; never goes through floating point.
/// Throws ParseError.
Decimal parse_decimal(std::string_view text);
/// mantissa * 10^(decimals - digits); throws ParseError if digits > decimals
/// or the result leaves the supported range.
Units rescale(const Decimal& value, int decimals);

/// Lines "u v w"; '#' starts a comment. A "# n=N" comment fixes the vertex
/// count, otherwise it is one more than the largest id. The scale is the
/// largest number of fractional digits seen.
WeightedGraph parse_edge_list(std::string_view text);
/// "# n=N" then one line per edge in id order, weights printed at the
/// graph's scale.
std::string serialize_edge_list(const WeightedGraph& g);

/// n x n CSV; an empty cell or "nan" marks a missing edge. The matrix must
/// be symmetric (including which cells are missing) with a zero diagonal.
WeightedGraph parse_matrix_csv(std::string_view text);
std::string serialize_matrix_csv(const WeightedGraph& g);

struct DeltaDocument {
    RepairDelta delta;
    std::size_t support_size = 0;
    bool is_metric_after = false;
    int decimals = 0;

    friend bool operator==(const DeltaDocument&, const DeltaDocument&) = default;
};

/// "u v delta" lines closed by
/// "# omega=... support_size=... is_metric_after=... decimals=...".
std::string serialize_delta_tsv(const DeltaDocument& doc);
DeltaDocument parse_delta_tsv(std::string_view text);

/// {omega, entries: [{u, v, delta}], support_size, is_metric_after, decimals};
/// deltas are decimal strings so they stay exact.
std::string serialize_delta_json(const DeltaDocument& doc);
DeltaDocument parse_delta_json(std::string_view text);

/// Lines "u v"; '#' comments and blank lines ignored.
std::vector<VertexPair> parse_support(std::string_view text);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
/// Throws Error when the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Matrix CSV when the name ends in ".csv" or the first data line holds a
/// comma, otherwise an edge list.
WeightedGraph load_graph(const std::filesystem::path& path);
bool looks_like_matrix(const std::filesystem::path& path, std::string_view text);

} // namespace metric_repair
