#include "qtharm/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "qtharm/errors.hpp"

namespace qtharm {

namespace {

constexpr int kGraph6MaxOrder = 62;

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
    throw ParseError("graph6: " + what + " (byte offset " + std::to_string(offset) + ")");
}

}  // namespace

Graph decode_graph6(std::string_view line) {
    // tolerate one trailing LF/CRLF so file lines can be passed through as-is
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) parse_fail(0, "empty record");

    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126) parse_fail(0, "multi-byte size header not supported (n > 62)");
    if (header < 63 || header > 126) parse_fail(0, "size header byte out of range 63..126");
    int n = header - 63;

    std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t payload = (bit_count + 5) / 6;
    if (line.size() != 1 + payload)
        parse_fail(line.size() < 1 + payload ? line.size() : 1 + payload,
                   "expected " + std::to_string(payload) + " payload bytes for n = " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    std::size_t p = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++p) {
            std::size_t byte_index = 1 + p / 6;
            unsigned char b = static_cast<unsigned char>(line[byte_index]);
            if (b < 63 || b > 126) parse_fail(byte_index, "payload byte out of range 63..126");
            if ((b - 63) >> (5 - p % 6) & 1) edges.emplace_back(i, j);
        }
    }
    // all padding bits in the final byte must be zero
    for (; p < payload * 6; ++p) {
        std::size_t byte_index = 1 + p / 6;
        unsigned char b = static_cast<unsigned char>(line[byte_index]);
        if (b < 63 || b > 126) parse_fail(byte_index, "payload byte out of range 63..126");
        if ((b - 63) >> (5 - p % 6) & 1) parse_fail(byte_index, "nonzero padding bit");
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds single-byte header cap 62");
    std::string out;
    out += static_cast<char>(63 + n);
    std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t payload = (bit_count + 5) / 6;
    out.append(payload, static_cast<char>(63));
    std::size_t p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.has_edge(i, j)) out[1 + p / 6] += static_cast<char>(1 << (5 - p % 6));
    return out;
}

namespace {

[[noreturn]] void line_fail(std::size_t line_no, const std::string& what) {
    throw ParseError("edge list: " + what + " (line " + std::to_string(line_no) + ")");
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
    std::istringstream in(s);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string row(text.substr(start, end - start));
        if (!row.empty() && row.back() == '\r') row.pop_back();
        lines.push_back(std::move(row));
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty()) line_fail(1, "missing 'n m' header");
    long n = 0, m = 0;
    if (!parse_two_ints(lines[0], n, m) || n < 0 || m < 0)
        line_fail(1, "malformed 'n m' header");
    if (n > Graph::kMaxOrder) line_fail(1, "order exceeds cap 64");
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        line_fail(lines.size(), "expected " + std::to_string(m) + " edge lines, found " +
                                    std::to_string(lines.size() - 1));

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        long u = 0, v = 0;
        if (!parse_two_ints(lines[k], u, v)) line_fail(k + 1, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) line_fail(k + 1, "vertex id out of range");
        if (u == v) line_fail(k + 1, "self-loop");
        if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
            line_fail(k + 1, "duplicate edge");
        seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace qtharm
