#include "metric_repair/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "metric_repair/errors.hpp"

namespace metric_repair {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        out.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::vector<std::string_view> fields_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

Vertex parse_vertex(std::string_view text, std::size_t line_no) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(where(line_no) + "bad vertex id '" + std::string(text) + "'");
    }
    if (v > (std::size_t{1} << 24)) throw ParseError(where(line_no) + "vertex id too large");
    return v;
}

/// Comment text after '#', or npos-free empty view; strips the comment from `line`.
std::string_view split_comment(std::string_view& line) {
    const std::size_t hash = line.find('#');
    if (hash == std::string_view::npos) return {};
    std::string_view comment = line.substr(hash + 1);
    line = line.substr(0, hash);
    return trim(comment);
}

bool is_missing(std::string_view cell) {
    if (cell.empty()) return true;
    if (cell.size() != 3) return false;
    return std::tolower(static_cast<unsigned char>(cell[0])) == 'n' &&
           std::tolower(static_cast<unsigned char>(cell[1])) == 'a' &&
           std::tolower(static_cast<unsigned char>(cell[2])) == 'n';
}

WeightedGraph build(std::size_t n, std::vector<Edge> edges, int decimals) {
    try {
        return WeightedGraph(n, std::move(edges), decimals);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

struct RawEdge {
    Vertex u;
    Vertex v;
    Decimal w;
};

WeightedGraph assemble(std::size_t n, const std::vector<RawEdge>& raw, int decimals = 0) {
    for (const RawEdge& e : raw) decimals = std::max(decimals, e.w.digits);
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const RawEdge& e : raw) edges.push_back({e.u, e.v, Weight{rescale(e.w, decimals)}});
    return build(n, std::move(edges), decimals);
}

void parse_summary(std::string_view comment, DeltaDocument& doc, bool& seen) {
    bool omega_seen = false;
    for (std::string_view field : fields_of(comment)) {
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) return;
        const std::string_view key = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        if (key == "omega") {
            const auto omega = parse_omega(value);
            if (!omega) throw ParseError("unknown omega '" + std::string(value) + "'");
            doc.delta = RepairDelta(*omega);
            omega_seen = true;
        } else if (key == "support_size") {
            doc.support_size = parse_vertex(value, 0);
        } else if (key == "is_metric_after") {
            if (value != "true" && value != "false") throw ParseError("is_metric_after must be true or false");
            doc.is_metric_after = value == "true";
        } else if (key == "decimals") {
            const Decimal d = parse_decimal(value);
            if (d.digits != 0 || d.mantissa < 0 || d.mantissa > kMaxDecimals) throw ParseError("bad decimals");
            doc.decimals = static_cast<int>(d.mantissa);
        }
    }
    seen = seen || omega_seen;
}

RepairDelta make_delta(Omega omega, std::vector<DeltaEntry> entries) {
    try {
        return RepairDelta(omega, std::move(entries));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Decimal parse_decimal(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw ParseError("bad number '" + original + "'");
    Decimal out;
    bool any_digit = false;
    bool after_point = false;
    for (char c : text) {
        if (c == '.') {
            if (after_point) throw ParseError("bad number '" + original + "'");
            after_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw ParseError("bad number '" + original + "'");
        any_digit = true;
        if (after_point && ++out.digits > kMaxDecimals) {
            throw ParseError("too many fractional digits in '" + original + "'");
        }
        if (out.mantissa > (kMaxTotalUnits - (c - '0')) / 10) throw ParseError("number out of range '" + original + "'");
        out.mantissa = out.mantissa * 10 + (c - '0');
    }
    if (!any_digit) throw ParseError("bad number '" + original + "'");
    if (negative) out.mantissa = -out.mantissa;
    return out;
}

Units rescale(const Decimal& value, int decimals) {
    if (value.digits > decimals) throw ParseError("value has more fractional digits than the scale");
    Units m = value.mantissa;
    for (int i = value.digits; i < decimals; ++i) {
        if (m > kMaxTotalUnits / 10 || m < -kMaxTotalUnits / 10) throw ParseError("number out of range");
        m *= 10;
    }
    return m;
}

WeightedGraph parse_edge_list(std::string_view text) {
    std::vector<RawEdge> raw;
    std::optional<std::size_t> declared;
    std::size_t line_no = 0;
    for (std::string_view line : lines_of(text)) {
        ++line_no;
        const std::string_view comment = split_comment(line);
        if (comment.starts_with("n=")) declared = parse_vertex(trim(comment.substr(2)), line_no);
        const std::vector<std::string_view> f = fields_of(line);
        if (f.empty()) continue;
        if (f.size() != 3) throw ParseError(where(line_no) + "expected 'u v w'");
        RawEdge e{parse_vertex(f[0], line_no), parse_vertex(f[1], line_no), parse_decimal(f[2])};
        if (e.w.mantissa < 0) throw ParseError(where(line_no) + "negative weight");
        if (e.u == e.v) throw ParseError(where(line_no) + "self-loop");
        raw.push_back(e);
    }
    std::size_t n = 0;
    for (const RawEdge& e : raw) n = std::max({n, e.u + 1, e.v + 1});
    if (declared) {
        if (*declared < n) throw ParseError("declared n=" + std::to_string(*declared) + " is smaller than a vertex id");
        n = *declared;
    }
    return assemble(n, raw);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::ostringstream out;
    out << "# n=" << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_units(e.w.units(), g.decimals()) << '\n';
    return out.str();
}

WeightedGraph parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<std::string_view>> rows;
    for (std::string_view line : lines_of(text)) {
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string_view> cells;
        while (true) {
            const std::size_t comma = line.find(',');
            cells.push_back(trim(line.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        rows.push_back(std::move(cells));
    }
    const std::size_t n = rows.size();
    std::vector<std::optional<Decimal>> cell(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ParseError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " cells, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_missing(rows[i][j])) cell[i * n + j] = parse_decimal(rows[i][j]);
        }
    }
    std::vector<RawEdge> raw;
    int diagonal_digits = 0;
    for (Vertex i = 0; i < n; ++i) {
        if (!cell[i * n + i] || cell[i * n + i]->mantissa != 0) throw ParseError("matrix diagonal must be 0");
        diagonal_digits = std::max(diagonal_digits, cell[i * n + i]->digits);
        for (Vertex j = i + 1; j < n; ++j) {
            const auto& a = cell[i * n + j];
            const auto& b = cell[j * n + i];
            if (a.has_value() != b.has_value()) throw ParseError("matrix is not symmetric at " + std::to_string(i) + "," + std::to_string(j));
            if (!a) continue;
            const int scale = std::max(a->digits, b->digits);
            if (rescale(*a, scale) != rescale(*b, scale)) {
                throw ParseError("matrix is not symmetric at " + std::to_string(i) + "," + std::to_string(j));
            }
            if (a->mantissa < 0) throw ParseError("negative matrix entry");
            raw.push_back({i, j, a->digits >= b->digits ? *a : *b});
        }
    }
    return assemble(n, raw, diagonal_digits);
}

std::string serialize_matrix_csv(const WeightedGraph& g) {
    std::ostringstream out;
    const std::size_t n = g.vertex_count();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (j > 0) out << ',';
            if (i == j) {
                out << format_units(0, g.decimals());
            } else if (const EdgeId id = g.find_edge(i, j); id != kNoEdge) {
                out << format_units(g.weight(id).units(), g.decimals());
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_delta_tsv(const DeltaDocument& doc) {
    std::ostringstream out;
    for (const DeltaEntry& e : doc.delta.entries()) {
        out << e.u << '\t' << e.v << '\t' << format_units(e.delta, doc.decimals) << '\n';
    }
    out << "# omega=" << to_string(doc.delta.omega()) << " support_size=" << doc.support_size
        << " is_metric_after=" << (doc.is_metric_after ? "true" : "false") << " decimals=" << doc.decimals << '\n';
    return out.str();
}

DeltaDocument parse_delta_tsv(std::string_view text) {
    DeltaDocument doc;
    bool seen = false;
    std::vector<std::pair<VertexPair, Decimal>> raw;
    std::size_t line_no = 0;
    for (std::string_view line : lines_of(text)) {
        ++line_no;
        const std::string_view comment = split_comment(line);
        if (!comment.empty()) parse_summary(comment, doc, seen);
        const std::vector<std::string_view> f = fields_of(line);
        if (f.empty()) continue;
        if (f.size() != 3) throw ParseError(where(line_no) + "expected 'u v delta'");
        raw.push_back({{parse_vertex(f[0], line_no), parse_vertex(f[1], line_no)}, parse_decimal(f[2])});
    }
    if (!seen) throw ParseError("delta file lacks the '# omega=...' summary line");
    std::vector<DeltaEntry> entries;
    for (const auto& [p, d] : raw) entries.push_back({p.u, p.v, rescale(d, doc.decimals)});
    doc.delta = make_delta(doc.delta.omega(), std::move(entries));
    return doc;
}

std::string serialize_delta_json(const DeltaDocument& doc) {
    nlohmann::ordered_json j;
    j["omega"] = std::string(to_string(doc.delta.omega()));
    j["entries"] = nlohmann::ordered_json::array();
    for (const DeltaEntry& e : doc.delta.entries()) {
        j["entries"].push_back({{"u", e.u}, {"v", e.v}, {"delta", format_units(e.delta, doc.decimals)}});
    }
    j["support_size"] = doc.support_size;
    j["is_metric_after"] = doc.is_metric_after;
    j["decimals"] = doc.decimals;
    return j.dump(2) + "\n";
}

DeltaDocument parse_delta_json(std::string_view text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        DeltaDocument doc;
        const auto omega = parse_omega(j.at("omega").get<std::string>());
        if (!omega) throw ParseError("unknown omega");
        doc.support_size = j.at("support_size").get<std::size_t>();
        doc.is_metric_after = j.at("is_metric_after").get<bool>();
        doc.decimals = j.value("decimals", 0);
        if (doc.decimals < 0 || doc.decimals > kMaxDecimals) throw ParseError("bad decimals");
        std::vector<DeltaEntry> entries;
        for (const auto& e : j.at("entries")) {
            const auto& d = e.at("delta");
            const std::string delta_text = d.is_string() ? d.get<std::string>() : d.dump();
            entries.push_back({e.at("u").get<Vertex>(), e.at("v").get<Vertex>(), rescale(parse_decimal(delta_text), doc.decimals)});
        }
        doc.delta = make_delta(*omega, std::move(entries));
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad delta JSON: ") + e.what());
    }
}

std::vector<VertexPair> parse_support(std::string_view text) {
    std::vector<VertexPair> out;
    std::size_t line_no = 0;
    for (std::string_view line : lines_of(text)) {
        ++line_no;
        split_comment(line);
        const std::vector<std::string_view> f = fields_of(line);
        if (f.empty()) continue;
        if (f.size() != 2) throw ParseError(where(line_no) + "expected 'u v'");
        const Vertex u = parse_vertex(f[0], line_no);
        const Vertex v = parse_vertex(f[1], line_no);
        if (u == v) throw ParseError(where(line_no) + "self-loop");
        out.push_back(VertexPair::of(u, v));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write " + path.string());
}

bool looks_like_matrix(const std::filesystem::path& path, std::string_view text) {
    if (path.extension() == ".csv") return true;
    for (std::string_view line : lines_of(text)) {
        split_comment(line);
        line = trim(line);
        if (!line.empty()) return line.find(',') != std::string_view::npos;
    }
    return false;
}

WeightedGraph load_graph(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    return looks_like_matrix(path, text) ? parse_matrix_csv(text) : parse_edge_list(text);
}

} // namespace metric_repair
