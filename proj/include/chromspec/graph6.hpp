#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chromspec/graph.hpp"

namespace chromspec {

inline constexpr int kGraph6MaxOrder = 512;

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {
inline int graph6_sixbits(std::string_view s, std::size_t i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range 63..126", i);
    return c - 63;
}
}  // namespace detail

/// Parses one graph6 line. A leading ">>graph6<<" header and trailing
/// CR/LF are tolerated.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (pos >= text.size()) throw Graph6Error("missing order header", pos);

    long n = 0;
    const std::size_t header_at = pos;
    if (text[pos] != '~') {
        n = detail::graph6_sixbits(text, pos);
        pos += 1;
    } else {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw Graph6Error("order exceeds supported cap of 512", pos);
        if (pos + 4 > text.size()) throw Graph6Error("truncated extended order header", text.size());
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | detail::graph6_sixbits(text, pos + k);
        if (n <= 62) throw Graph6Error("non-canonical extended order header", pos);
        pos += 4;
    }
    if (n > kGraph6MaxOrder) throw Graph6Error("order exceeds supported cap of 512", header_at);

    const std::size_t nbits = n > 0 ? static_cast<std::size_t>(n * (n - 1) / 2) : 0;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes)
        throw Graph6Error("expected " + std::to_string(nbytes) + " data bytes, found " +
                              std::to_string(text.size() - pos),
                          text.size() < pos + nbytes ? text.size() : pos + nbytes);

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + bit / 6;
            if ((detail::graph6_sixbits(text, at) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (nbytes > 0) {
        const std::size_t last = pos + nbytes - 1;
        const int pad = static_cast<int>(nbytes * 6 - nbits);
        if (detail::graph6_sixbits(text, last) & ((1 << pad) - 1))
            throw Graph6Error("nonzero padding bits", last);
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw std::length_error("graph order exceeds graph6 cap of 512");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace chromspec
