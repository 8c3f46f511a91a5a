#include "specham/codec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <vector>

namespace specham {

namespace {

constexpr int kOffset = 63;   // printable range starts at '?'
constexpr int kHighByte = 126; // '~' introduces the multi-byte order form

void check_byte(unsigned char c, std::size_t pos) {
    if (c < kOffset || c > kHighByte) {
        throw ParseError("graph6: out-of-range byte 0x" + [&] {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "%02x", c);
            return std::string(buf);
        }() + " at position " + std::to_string(pos));
    }
}

} // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(static_cast<char>(kHighByte));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        group <<= (6 - filled); // canonical form pads with zero bits
        out.push_back(static_cast<char>(group + kOffset));
    }
    return out;
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) {
        throw ParseError("graph6: truncated input (empty string)");
    }
    std::size_t pos = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        check_byte(static_cast<unsigned char>(text[i]), i);
    }
    long long n;
    if (static_cast<unsigned char>(text[0]) == kHighByte) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kHighByte) {
            throw ParseError("graph6: malformed header (eight-byte order form exceeds "
                             "the supported maximum order)");
        }
        if (text.size() < 4) {
            throw ParseError("graph6: malformed header (order form '~' needs three "
                             "following bytes)");
        }
        n = (static_cast<long long>(text[1] - kOffset) << 12) |
            (static_cast<long long>(text[2] - kOffset) << 6) |
            static_cast<long long>(text[3] - kOffset);
        pos = 4;
    } else {
        n = text[0] - kOffset;
        pos = 1;
    }
    if (n > Graph::kMaxVertices) {
        throw ParseError("graph6: malformed header (order " + std::to_string(n) +
                         " exceeds maximum " + std::to_string(Graph::kMaxVertices) + ")");
    }
    const long long bits_needed = n * (n - 1) / 2;
    const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() - pos < bytes_needed) {
        throw ParseError("graph6: truncated bit payload (need " +
                         std::to_string(bytes_needed) + " bytes after the header, got " +
                         std::to_string(text.size() - pos) + ")");
    }
    if (text.size() - pos > bytes_needed) {
        throw ParseError("graph6: unexpected trailing bytes after the bit payload");
    }
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[pos + static_cast<std::size_t>(bit / 6)] - kOffset;
            int shift = 5 - static_cast<int>(bit % 6);
            if ((byte >> shift) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) {
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
            }
        }
    }
    return out;
}

Graph parse_edgelist(const std::string& text) {
    std::vector<std::string> tokens;
    {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream words(line);
            std::string tok;
            while (words >> tok) tokens.push_back(tok);
        }
    }
    long long declared_n = -1;
    std::size_t start = 0;
    if (!tokens.empty() && tokens[0].rfind("n=", 0) == 0) {
        const std::string num = tokens[0].substr(2);
        try {
            std::size_t used = 0;
            declared_n = std::stoll(num, &used);
            if (used != num.size()) throw std::invalid_argument(num);
        } catch (const std::exception&) {
            throw ParseError("edgelist: malformed order header '" + tokens[0] + "'");
        }
        if (declared_n < 0 || declared_n > Graph::kMaxVertices) {
            throw ParseError("edgelist: order " + std::to_string(declared_n) +
                             " out of range [0, " + std::to_string(Graph::kMaxVertices) + "]");
        }
        start = 1;
    }
    if ((tokens.size() - start) % 2 != 0) {
        throw ParseError("edgelist: odd number of vertex tokens (every edge needs two "
                         "endpoints)");
    }
    std::vector<std::pair<long long, long long>> edges;
    long long max_vertex = -1;
    for (std::size_t i = start; i < tokens.size(); i += 2) {
        auto parse_vertex = [](const std::string& tok) -> long long {
            try {
                std::size_t used = 0;
                long long value = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return value;
            } catch (const std::exception&) {
                throw ParseError("edgelist: malformed vertex token '" + tok + "'");
            }
        };
        long long u = parse_vertex(tokens[i]);
        long long v = parse_vertex(tokens[i + 1]);
        if (u < 0 || v < 0) {
            throw ParseError("edgelist: negative vertex in edge " + tokens[i] + " " +
                             tokens[i + 1]);
        }
        if (u == v) {
            throw ParseError("edgelist: self loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    long long n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (max_vertex >= n) {
        throw ParseError("edgelist: vertex " + std::to_string(max_vertex) +
                         " exceeds declared order " + std::to_string(n));
    }
    if (n > Graph::kMaxVertices) {
        throw ParseError("edgelist: order " + std::to_string(n) + " exceeds maximum " +
                         std::to_string(Graph::kMaxVertices));
    }
    Graph g(static_cast<int>(n));
    for (auto [u, v] : edges) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

} // namespace specham
