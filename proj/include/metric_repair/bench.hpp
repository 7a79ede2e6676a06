#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metric_repair/graph.hpp"
#include "metric_repair/solve.hpp"

namespace metric_repair {

enum class BenchSuite {
    Table1,   ///< every compatible algorithm on a mixed instance set
    Scaling,  ///< dmr, iomr and spc on growing complete instances
    Ratios,   ///< support sizes against the optimum on the gadgets
};

/// table1, scaling or ratios. Throws ParseError.
BenchSuite parse_bench_suite(std::string_view text);

struct BenchRow {
    std::string instance;
    std::string kind;
    std::size_t n = 0;
    std::size_t m = 0;
    Algorithm algo = Algorithm::Dmr;
    Omega omega = Omega::General;
    std::optional<std::size_t> support_size;  ///< empty when no repair was found
    std::optional<std::size_t> opt;
    std::optional<std::size_t> L;
    std::size_t iterations = 0;
    double time_ms = 0.0;
    /// "edges", or "entries" for matrix instances (both triangles counted).
    std::string count_unit = "edges";
};

std::vector<BenchRow> run_bench(BenchSuite suite);

/// Header "instance,kind,n,m,algo,omega,support_size,opt,L,iterations,
/// time_ms,count_unit"; absent values are empty cells.
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace metric_repair
