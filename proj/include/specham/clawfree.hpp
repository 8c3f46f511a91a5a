#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specham/errors.hpp"
#include "specham/graph.hpp"

namespace specham {

// Injective map pattern -> host whose image induces an exact copy of the
// pattern (edges and non-edges both preserved).
struct InducedEmbedding {
    std::vector<int> map; // map[p] = host vertex carrying pattern vertex p
};

// Deterministic: returns the lexicographically smallest embedding by the
// mapped tuple (map[0], map[1], ...). Pattern order is capped at 12.
std::optional<InducedEmbedding> find_induced(const Graph& host, const Graph& pattern);

// True iff no vertex has three pairwise nonadjacent neighbors. Agrees with
// find_induced(g, claw()) but runs as a direct neighborhood scan.
bool is_claw_free(const Graph& g);

// Vertices whose neighborhood induces a connected, non-complete subgraph.
// Requires a claw-free input (checked).
VertexSet eligible_vertices(const Graph& g);

// Adds every missing edge inside N(x); x must be eligible (checked). The
// result of a completion step in a claw-free graph is again claw-free; this
// is re-verified and a violation reported as a logic error.
Graph local_completion(const Graph& g, int x);

struct ClosureStep {
    int vertex;
    std::vector<std::pair<int, int>> added_edges;
};

struct ClosureTrace {
    Graph initial;
    Graph result;
    std::vector<ClosureStep> steps;
};

struct ClosureResult {
    Graph graph;
    ClosureTrace trace;
};

// Iterates local completion at the smallest-index eligible vertex until no
// eligible vertex remains. Input must be claw-free (checked).
ClosureResult closure(const Graph& g);

// Same fixpoint reached through a caller-chosen eligible vertex each step
// (used to demonstrate order-independence). The selector receives the
// current eligible set and must return one of its members.
ClosureResult closure_with_selector(const Graph& g,
                                    const std::function<int(const VertexSet&)>& select);

bool is_closed(const Graph& g); // no eligible vertices; claw-free input (checked)

enum class ShapeKind { Clique, TwoCliques, Other };

struct NeighborhoodShape {
    ShapeKind kind;
    std::vector<VertexSet> parts; // connected components of the induced neighborhood
};

// Classifies the induced neighborhood of v: a single clique, the disjoint
// union of exactly two cliques, or anything else. Claw-free input (checked).
NeighborhoodShape neighborhood_shape(const Graph& g, int v);

inline constexpr long long kDefaultCliqueBudget = 50'000'000;

// Exact maximum-clique order via branch and bound with a greedy coloring
// bound; throws BudgetExceeded if the node budget runs out.
int clique_number(const Graph& g, long long budget = kDefaultCliqueBudget);

// Vertices v with 2 d(v) >= n.
VertexSet heavy_vertices(const Graph& g);

// Exact isomorphism test by invariant refinement plus backtracking. The
// default order cap keeps worst cases bounded; callers handling the larger
// structured families may raise it explicitly.
bool is_isomorphic(const Graph& g, const Graph& h, int max_order = 64);

// True iff some bijection of the (equal) vertex sets maps every edge of sub
// onto an edge of host (host may have more edges).
bool is_spanning_subgraph_of(const Graph& sub, const Graph& host, int max_order = 64);

std::string to_json(const ClosureTrace& trace);

} // namespace specham
