#include "specham/hamilton.hpp"

#include <algorithm>
#include <stdexcept>

#include "specham/jsonio.hpp"

namespace specham {

namespace {

// Two vertices whose neighborhoods agree outside the pair itself are
// interchangeable: transposing them is an automorphism that fixes every other
// vertex.  Grouping such twins and only ever extending the path through the
// lowest unvisited member of each class prunes the search without affecting
// the answer, and collapses large cliques of interchangeable vertices (the
// blown-up extremal families) to constant branching.
std::vector<int> twin_classes(const Graph& g) {
    const int n = g.order();
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v;
    const auto find = [&](int v) {
        while (cls[v] != v) v = cls[v] = cls[cls[v]];
        return v;
    };
    const std::size_t words = g.row_words();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t* ru = g.row(u);
            const std::uint64_t* rv = g.row(v);
            bool twins = true;
            for (std::size_t w = 0; w < words && twins; ++w) {
                std::uint64_t diff = ru[w] ^ rv[w];
                if (static_cast<std::size_t>(u / 64) == w) diff &= ~(1ULL << (u % 64));
                if (static_cast<std::size_t>(v / 64) == w) diff &= ~(1ULL << (v % 64));
                twins = diff == 0;
            }
            if (twins) {
                int a = find(u), b = find(v);
                if (a != b) cls[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    for (int v = 0; v < n; ++v) cls[v] = find(v);
    return cls;
}

struct Searcher {
    const Graph& g;
    int n;
    HamiltonKind kind;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<int> path;
    std::vector<char> visited;
    std::vector<int> twin_class;

    Searcher(const Graph& graph, HamiltonKind k, long long b)
        : g(graph),
          n(graph.order()),
          kind(k),
          budget(b),
          visited(graph.order(), 0),
          twin_class(twin_classes(graph)) {}

    // Class representatives are the lowest-indexed roots, so the lowest
    // unvisited member of v's class is found by scanning upward from the root.
    bool is_class_minimum(int v) const {
        for (int u = twin_class[v]; u < v; ++u) {
            if (twin_class[u] == twin_class[v] && !visited[u]) return false;
        }
        return true;
    }

    // The unvisited remainder must induce a connected graph traversable as a
    // single subpath, so at most two remainder vertices may have remainder
    // degree <= 1 (when more than one vertex remains).
    bool remainder_feasible() const {
        int remaining = 0, first = -1;
        for (int v = 0; v < n; ++v) {
            if (!visited[v]) {
                ++remaining;
                if (first == -1) first = v;
            }
        }
        if (remaining <= 1) return true;
        std::vector<int> stack{first};
        std::vector<char> seen(n, 0);
        seen[first] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!visited[u] && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        if (reached != remaining) return false;
        int low_degree = 0;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            int d = 0;
            for (int u : g.neighbors(v)) {
                if (!visited[u]) ++d;
            }
            if (d <= 1 && ++low_degree > 2) return false;
        }
        return true;
    }

    bool extend() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (static_cast<int>(path.size()) == n) {
            return kind == HamiltonKind::Path || g.has_edge(path.back(), path.front());
        }
        if (!remainder_feasible()) return false;
        int current = path.back();
        for (int next : g.neighbors(current)) {
            if (visited[next] || !is_class_minimum(next)) continue;
            path.push_back(next);
            visited[next] = 1;
            if (extend()) return true;
            visited[next] = 0;
            path.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }

    bool run_from(int start) {
        path.assign(1, start);
        std::fill(visited.begin(), visited.end(), 0);
        visited[start] = 1;
        return extend();
    }
};

} // namespace

bool valid_witness(const Graph& g, HamiltonKind kind, const std::vector<int>& witness) {
    const int n = g.order();
    if (static_cast<int>(witness.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : witness) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
        if (!g.has_edge(witness[i], witness[i + 1])) return false;
    }
    if (kind == HamiltonKind::Cycle && !g.has_edge(witness.back(), witness.front())) {
        return false;
    }
    return true;
}

HamiltonResult hamilton(const Graph& g, HamiltonKind kind, long long budget) {
    const int n = g.order();
    if (kind == HamiltonKind::Cycle && n < 3) {
        throw PreconditionError("hamilton: cycle search needs n >= 3, got " +
                                std::to_string(n));
    }
    if (kind == HamiltonKind::Path && n < 1) {
        throw PreconditionError("hamilton: path search needs n >= 1");
    }
    if (budget <= 0) {
        throw PreconditionError("hamilton: budget must be positive");
    }
    HamiltonResult result;
    result.kind = kind;

    Searcher search(g, kind, budget);
    bool found = false;
    if (kind == HamiltonKind::Cycle) {
        found = search.run_from(0);
    } else {
        for (int start = 0; start < n && !found && !search.out_of_budget; ++start) {
            if (search.twin_class[start] != start) continue; // start from one twin per class
            found = search.run_from(start);
        }
    }
    result.nodes_expanded = search.nodes;
    if (found) {
        if (!valid_witness(g, kind, search.path)) {
            throw std::logic_error("hamilton: search produced an invalid witness");
        }
        result.status = HamiltonStatus::Found;
        result.witness = search.path;
    } else if (search.out_of_budget) {
        result.status = HamiltonStatus::BudgetExceeded;
    } else {
        result.status = HamiltonStatus::Absent;
    }
    return result;
}

std::string to_json(const HamiltonResult& result) {
    jsonio::Value doc = jsonio::Value::object();
    doc.set("kind", result.kind == HamiltonKind::Cycle ? "cycle" : "path");
    const char* status = result.status == HamiltonStatus::Found     ? "found"
                         : result.status == HamiltonStatus::Absent ? "absent"
                                                                    : "budget_exceeded";
    doc.set("status", status);
    if (result.witness) {
        jsonio::Value seq = jsonio::Value::array();
        for (int v : *result.witness) seq.push(v);
        doc.set("witness", std::move(seq));
    } else {
        doc.set("witness", jsonio::Value());
    }
    doc.set("nodes_expanded", result.nodes_expanded);
    return doc.dump();
}

} // namespace specham
