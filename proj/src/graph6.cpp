#include "qsr/graph6.hpp"

#include <string>

namespace qsr {

namespace {

constexpr int kOffset = 63;
constexpr int kLongForm = 126;  // '~'

bool in_range(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        // 4-byte long form: '~' then n in three big-endian 6-bit groups
        out.push_back(static_cast<char>(kLongForm));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    }
    int group = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((group << (6 - nbits)) + kOffset));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw MalformedHeader("empty graph6 string");
    std::size_t pos = 0;
    long n = 0;
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (!in_range(first)) throw MalformedHeader("header byte out of range");
    if (first == kLongForm) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongForm)
            throw CapacityExceeded("8-byte order header implies n >= 258048, capacity is 64");
        if (text.size() < 4) throw MalformedHeader("long-form header truncated");
        for (int t = 1; t <= 3; ++t) {
            const unsigned char c = static_cast<unsigned char>(text[t]);
            if (!in_range(c)) throw MalformedHeader("long-form header byte out of range");
            n = (n << 6) | (c - kOffset);
        }
        pos = 4;
    } else {
        n = first - kOffset;
        pos = 1;
    }
    if (n > kMaxVertices) throw CapacityExceeded("graph6 order " + std::to_string(n) + " exceeds capacity 64");
    if (n < 1) throw MalformedHeader("graph6 order " + std::to_string(n) + " not supported");

    const long bits_needed = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() - pos < body_bytes) throw TruncatedBody("graph6 body shorter than n(n-1)/2 bits");
    if (text.size() - pos > body_bytes) throw TrailingGarbage("bytes after graph6 body");

    // unpack the bit stream in the encoder's order: column j, then row i < j
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    std::size_t t = 0;
    int group = 0, have = 0;
    auto next_bit = [&]() {
        if (have == 0) {
            const unsigned char c = static_cast<unsigned char>(text[pos + t++]);
            if (!in_range(c)) throw MalformedBody("body byte out of range");
            group = c - kOffset;
            have = 6;
        }
        --have;
        return (group >> have) & 1;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) {
                rows[static_cast<std::size_t>(i)].add(j);
                rows[static_cast<std::size_t>(j)].add(i);
            }
    while (have-- > 0)
        if ((group >> have) & 1) throw MalformedBody("nonzero padding bits");
    return Graph::from_adjacency(std::move(rows));
}

}  // namespace qsr
