#include "pps/graph6.hpp"

#include <string>

namespace pps {

namespace {

constexpr int kOffset = 63;
constexpr int kLongSizeLimit = 63 * 4096; // 258048: top 6-bit group would read as '~'

int decode_char(char c, std::size_t pos) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw InvalidCharacter("graph6 byte " + std::to_string(static_cast<int>(u)) +
                               " at position " + std::to_string(pos) + " outside 63..126");
    return static_cast<int>(u) - kOffset;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw MalformedHeader("empty graph6 line");

    const auto size_group = [&](std::size_t pos) {
        const unsigned char u = static_cast<unsigned char>(line[pos]);
        if (u < 63 || u > 126)
            throw MalformedHeader("graph6 size byte " + std::to_string(static_cast<int>(u)) +
                                  " outside 63..126");
        return static_cast<long long>(u) - kOffset;
    };

    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw SizeUnsupported("graph6 6-byte size class (n >= 258048) not supported");
        if (line.size() < 4) throw MalformedHeader("truncated graph6 size bytes");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = n * 64 + size_group(pos);
        if (n < 63) throw MalformedHeader("non-canonical graph6 size encoding");
    } else {
        n = size_group(0);
        pos = 1;
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < body)
        throw TruncatedBody("graph6 body has " + std::to_string(line.size() - pos) +
                            " bytes, need " + std::to_string(body));
    if (line.size() - pos > body)
        throw ParseError("trailing data after graph6 body");

    std::vector<Edge> edges;
    long long bit = 0;
    int col = 1, row = 0;
    for (std::size_t i = 0; i < body; ++i) {
        int group = decode_char(line[pos + i], pos + i);
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if (group & (1 << b)) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n < kLongSizeLimit) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    } else {
        throw SizeUnsupported("graph6 encoding supports n <= 258047");
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    std::vector<int> groups(body, 0);
    for (const auto& [u, v] : g.edges()) {
        // bit index of (u, v), u < v, in column-major upper-triangle order
        const long long idx = static_cast<long long>(v) * (v - 1) / 2 + u;
        groups[static_cast<std::size_t>(idx / 6)] |= 1 << (5 - idx % 6);
    }
    for (int grp : groups) out.push_back(static_cast<char>(grp + kOffset));
    return out;
}

} // namespace pps
