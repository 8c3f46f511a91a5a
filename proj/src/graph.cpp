#include "specham/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace specham {

Graph::Graph(int n) {
    if (n < 0) {
        throw PreconditionError("Graph: negative order " + std::to_string(n));
    }
    if (n > kMaxVertices) {
        throw PreconditionError("Graph: order " + std::to_string(n) + " exceeds maximum " +
                                std::to_string(kMaxVertices));
    }
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw PreconditionError("Graph: vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw PreconditionError("Graph: self loop at vertex " + std::to_string(u));
    }
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> out = degrees();
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

namespace {

// Iterative DFS over bit rows; marks every vertex reachable from start.
void reach(const Graph& g, int start, std::vector<char>& seen) {
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
}

} // namespace

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    reach(*this, 0, seen);
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    std::vector<char> seen(n_, 0);
    for (int v = 0; v < n_; ++v) {
        if (seen[v]) continue;
        std::vector<char> mark(n_, 0);
        reach(*this, v, mark);
        VertexSet comp;
        for (int u = 0; u < n_; ++u) {
            if (mark[u]) {
                comp.push_back(u);
                seen[u] = 1;
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_two_connected() const {
    if (n_ < 3) return false;
    if (!is_connected()) return false;
    // Articulation points via iterative Tarjan lowlink.
    std::vector<int> disc(n_, -1), low(n_, 0), parent(n_, -1), child_count(n_, 0);
    std::vector<int> stack;
    std::vector<std::size_t> next_idx(n_, 0);
    std::vector<VertexSet> adj(n_);
    for (int v = 0; v < n_; ++v) adj[v] = neighbors(v);

    int timer = 0;
    stack.push_back(0);
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int v = stack.back();
        if (next_idx[v] < adj[v].size()) {
            int u = adj[v][next_idx[v]++];
            if (disc[u] == -1) {
                parent[u] = v;
                ++child_count[v];
                disc[u] = low[u] = timer++;
                stack.push_back(u);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) return false; // p is a cut vertex
            }
        }
    }
    if (child_count[0] > 1) return false; // DFS root with >1 child is a cut vertex
    return true;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        for (int u = v + 1; u < n_; ++u) {
            if (!has_edge(v, u)) out.add_edge(v, u);
        }
    }
    return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) check_vertex(vertices[i]);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) {
                throw PreconditionError("induced: duplicate vertex " + std::to_string(vertices[i]));
            }
            if (has_edge(vertices[i], vertices[j])) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph: need n >= 3, got " + std::to_string(n));
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw PreconditionError("star_graph: negative leaf count");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw PreconditionError("complete_bipartite: negative part size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph claw() { return complete_bipartite(1, 3); }

Graph combine(const Graph& g1, const Graph& g2, CombineMode mode) {
    int n1 = g1.order(), n2 = g2.order();
    Graph out(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v : g1.neighbors(u))
            if (u < v) out.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v : g2.neighbors(u))
            if (u < v) out.add_edge(n1 + u, n1 + v);
    if (mode == CombineMode::Join) {
        for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    }
    return out;
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    Graph out(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

} // namespace specham
