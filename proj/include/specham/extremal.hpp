#pragma once

#include <array>
#include <string>
#include <vector>

#include "specham/errors.hpp"
#include "specham/graph.hpp"

namespace specham {

// How one {a_i, b_i} pair of the two base triangles is connected: by a
// triangle (extra apex vertex adjacent to both, plus the edge a_i b_i) or by
// a path of the given order (order counts both endpoints, so order k inserts
// k-2 new internal vertices and a_i b_i stays a non-edge).
struct ConnectionKind {
    bool is_triangle = true;
    int path_order = 0;

    static ConnectionKind triangle() { return {true, 0}; }
    static ConnectionKind path(int order) { return {false, order}; }
};

// Clique K_{n-3} on vertices 0..n-4 with pendant vertices n-3, n-2, n-1
// attached to clique vertices 0, 1, 2. Requires n >= 6.
Graph build_en(int n);

// Two vertex-disjoint triangles 012 and 345, with pair (i, 3+i) connected
// per x[i]. Apex/internal vertices are appended in connector order, so the
// all-triangle graph has apexes 6, 7, 8.
Graph build_brousek(const std::array<ConnectionKind, 3>& x);

// Adds m new vertices forming a clique together with the given triangle.
Graph blow_up_triangle(const Graph& g, const VertexSet& tri, int m);

enum class EpVariant { Standard, Prime };

// Standard: blow up the end triangle {3,4,5} of the all-triangle base graph
// by n-9 vertices. Prime: blow up the connecting triangle {0,3,6} instead.
// Either way the clique K_{n-6} sits on the blown-up triangle plus vertices
// 9..n-1. Requires n >= 9.
Graph build_ep(int n, EpVariant variant);

// All pairwise non-isomorphic graphs obtained from the four order-9 base
// graphs (connectors TTT, 3TT, 33T, 333) by blowing up one triangle with
// n-9 vertices. Deterministic order: bases as listed, triangles ascending,
// first representative of each isomorphism class kept.
std::vector<Graph> ep_family(int n);

struct ExtremalSpec {
    enum class Kind { EN, EP, EPPrime, Brousek, FamilyMember };
    Kind kind = Kind::EN;
    int n = 0;                                // EN / EP / EPPrime / FamilyMember
    std::array<ConnectionKind, 3> connectors; // Brousek
    int member_index = 0;                     // FamilyMember
};

// Accepted forms: "en:20", "ep:20", "ep':20", "brousek:T,3,T", "family:12/3"
// (order 12, member index 3 into ep_family(12)).
ExtremalSpec parse_extremal_spec(const std::string& text);
Graph build_extremal(const ExtremalSpec& spec);
std::string to_string(const ExtremalSpec& spec);

} // namespace specham
