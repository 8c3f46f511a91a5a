#pragma once

#include <cstdint>
#include <vector>

#include "specham/errors.hpp"

namespace specham {

// Ordered set of vertex ids (unique, ascending unless stated otherwise).
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1 with dense bit-row adjacency.
// Invariants: no self loops, adjacency is symmetric,
// edge_count() == sum(degree)/2.
class Graph {
public:
    static constexpr int kMaxVertices = 4096;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);    // idempotent; rejects self loops
    void remove_edge(int u, int v); // idempotent

    int degree(int v) const;
    std::vector<int> degrees() const;         // by vertex id
    std::vector<int> degree_sequence() const; // sorted descending
    VertexSet neighbors(int v) const;         // ascending

    bool is_connected() const;     // true for n <= 1
    bool is_two_connected() const; // connected, n >= 3, no cut vertex
    std::vector<VertexSet> components() const;

    Graph complement() const;
    Graph induced(const VertexSet& vertices) const;

    // Labeled equality (same order and same edge set).
    bool operator==(const Graph& other) const;

    // Raw word access for hot loops; row v spans row_words() uint64 words.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int row_words() const { return words_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Named constructors.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);            // n >= 3
Graph star_graph(int leaves);        // K_{1,leaves}, center = vertex 0
Graph complete_bipartite(int a, int b);
Graph claw();                        // K_{1,3}

enum class CombineMode { DisjointUnion, Join };

// disjoint_union relabels g2's vertices after g1's; join additionally adds
// every edge between the two vertex sets.
Graph combine(const Graph& g1, const Graph& g2, CombineMode mode);

// Line graph: one vertex per edge of g (edges enumerated ascending by
// (min endpoint, max endpoint)); two vertices adjacent iff the edges share
// an endpoint.
Graph line_graph(const Graph& g);

} // namespace specham
