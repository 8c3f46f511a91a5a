#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specham/errors.hpp"
#include "specham/graph.hpp"

namespace specham {

enum class HamiltonKind { Cycle, Path };
enum class HamiltonStatus { Found, Absent, BudgetExceeded };

struct HamiltonResult {
    HamiltonKind kind = HamiltonKind::Cycle;
    HamiltonStatus status = HamiltonStatus::Absent;
    std::optional<std::vector<int>> witness; // each vertex exactly once
    long long nodes_expanded = 0;
};

inline constexpr long long kDefaultHamiltonBudget = 100'000'000;

// Exact backtracking search. Cycles are anchored at vertex 0; paths try every
// start vertex in ascending order. Children are explored in ascending vertex
// order, so witnesses are deterministic. Pruning: the unvisited remainder
// must stay connected, and at most two of its vertices may have remainder
// degree <= 1. Status Absent means the search space was exhausted, i.e. a
// proof of non-existence; BudgetExceeded means neither answer was reached
// within the node budget.
HamiltonResult hamilton(const Graph& g, HamiltonKind kind,
                        long long budget = kDefaultHamiltonBudget);

// Independent witness validation (not part of the search).
bool valid_witness(const Graph& g, HamiltonKind kind, const std::vector<int>& witness);

std::string to_json(const HamiltonResult& result);

} // namespace specham
