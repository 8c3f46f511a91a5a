#include "specham/clawfree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "specham/codec.hpp"
#include "specham/jsonio.hpp"

namespace specham {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(int words) { return Mask(static_cast<std::size_t>(words), 0); }

void mask_set(Mask& m, int v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }
void mask_clear(Mask& m, int v) { m[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

bool mask_empty(const Mask& m) {
    for (std::uint64_t w : m)
        if (w) return false;
    return true;
}

int mask_lowest(const Mask& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i]) return static_cast<int>(i * 64) + std::countr_zero(m[i]);
    }
    return -1;
}

} // namespace

std::optional<InducedEmbedding> find_induced(const Graph& host, const Graph& pattern) {
    const int k = pattern.order();
    const int n = host.order();
    if (k > 12) {
        throw PreconditionError("find_induced: pattern order " + std::to_string(k) +
                                " exceeds the search cap 12");
    }
    if (k > n) {
        throw PreconditionError("find_induced: pattern larger than host");
    }
    std::vector<int> pattern_deg = pattern.degrees();
    std::vector<int> host_deg = host.degrees();
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);

    // Depth-first over pattern vertices in index order with ascending host
    // candidates: the first embedding found is lexicographically smallest.
    std::function<bool(int)> place = [&](int p) -> bool {
        if (p == k) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || host_deg[cand] < pattern_deg[p]) continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
                ok = pattern.has_edge(q, p) == host.has_edge(map[q], cand);
            }
            if (!ok) continue;
            map[p] = cand;
            used[cand] = 1;
            if (place(p + 1)) return true;
            used[cand] = 0;
            map[p] = -1;
        }
        return false;
    };
    if (place(0)) return InducedEmbedding{map};
    return std::nullopt;
}

bool is_claw_free(const Graph& g) {
    const int n = g.order();
    const int words = g.row_words();
    for (int v = 0; v < n; ++v) {
        VertexSet nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.has_edge(u, w)) continue;
                // Third pairwise-nonadjacent neighbor? x in N(v) with x not
                // adjacent to u or w and distinct from both.
                const std::uint64_t* rv = g.row(v);
                const std::uint64_t* ru = g.row(u);
                const std::uint64_t* rw = g.row(w);
                for (int word = 0; word < words; ++word) {
                    std::uint64_t cand = rv[word] & ~ru[word] & ~rw[word];
                    if ((u >> 6) == word) cand &= ~(std::uint64_t{1} << (u & 63));
                    if ((w >> 6) == word) cand &= ~(std::uint64_t{1} << (w & 63));
                    if (cand) return false;
                }
            }
        }
    }
    return true;
}

namespace {

void require_claw_free(const Graph& g, const char* op) {
    if (!is_claw_free(g)) {
        throw PreconditionError(std::string(op) + ": input graph is not claw-free");
    }
}

// Assumes claw-freeness was already validated by the caller.
bool is_eligible(const Graph& g, int x) {
    VertexSet nb = g.neighbors(x);
    Graph local = g.induced(nb);
    if (!local.is_connected()) return false;
    long long k = local.order();
    return local.edge_count() < k * (k - 1) / 2;
}

Graph complete_at(const Graph& g, int x, std::vector<std::pair<int, int>>* added) {
    Graph out = g;
    VertexSet nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!out.has_edge(nb[i], nb[j])) {
                out.add_edge(nb[i], nb[j]);
                if (added) added->emplace_back(nb[i], nb[j]);
            }
        }
    }
    return out;
}

} // namespace

VertexSet eligible_vertices(const Graph& g) {
    require_claw_free(g, "eligible_vertices");
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        if (is_eligible(g, v)) out.push_back(v);
    }
    return out;
}

Graph local_completion(const Graph& g, int x) {
    require_claw_free(g, "local_completion");
    if (x < 0 || x >= g.order() || !is_eligible(g, x)) {
        throw PreconditionError("local_completion: vertex " + std::to_string(x) +
                                " is not eligible");
    }
    Graph out = complete_at(g, x, nullptr);
    if (!is_claw_free(out)) {
        throw std::logic_error("local_completion: completion broke claw-freeness");
    }
    return out;
}

ClosureResult closure_with_selector(const Graph& g,
                                    const std::function<int(const VertexSet&)>& select) {
    require_claw_free(g, "closure");
    ClosureTrace trace;
    trace.initial = g;
    Graph current = g;
    while (true) {
        VertexSet eligible;
        for (int v = 0; v < current.order(); ++v) {
            if (is_eligible(current, v)) eligible.push_back(v);
        }
        if (eligible.empty()) break;
        int x = select(eligible);
        if (std::find(eligible.begin(), eligible.end(), x) == eligible.end()) {
            throw PreconditionError("closure: selector returned a non-eligible vertex " +
                                    std::to_string(x));
        }
        ClosureStep step;
        step.vertex = x;
        current = complete_at(current, x, &step.added_edges);
        if (!is_claw_free(current)) {
            throw std::logic_error("closure: completion broke claw-freeness");
        }
        trace.steps.push_back(std::move(step));
    }
    trace.result = current;
    return ClosureResult{current, std::move(trace)};
}

ClosureResult closure(const Graph& g) {
    return closure_with_selector(g, [](const VertexSet& eligible) { return eligible[0]; });
}

bool is_closed(const Graph& g) {
    require_claw_free(g, "is_closed");
    for (int v = 0; v < g.order(); ++v) {
        if (is_eligible(g, v)) return false;
    }
    return true;
}

NeighborhoodShape neighborhood_shape(const Graph& g, int v) {
    require_claw_free(g, "neighborhood_shape");
    VertexSet nb = g.neighbors(v);
    Graph local = g.induced(nb);
    NeighborhoodShape shape;
    std::vector<VertexSet> comps = local.components();
    auto is_clique = [&](const VertexSet& comp) {
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!local.has_edge(comp[i], comp[j])) return false;
        return true;
    };
    for (const VertexSet& comp : comps) {
        VertexSet original;
        for (int idx : comp) original.push_back(nb[idx]);
        shape.parts.push_back(std::move(original));
    }
    if (comps.size() <= 1) {
        bool clique = comps.empty() || is_clique(comps[0]);
        shape.kind = clique ? ShapeKind::Clique : ShapeKind::Other;
    } else if (comps.size() == 2 && is_clique(comps[0]) && is_clique(comps[1])) {
        shape.kind = ShapeKind::TwoCliques;
    } else {
        shape.kind = ShapeKind::Other;
    }
    return shape;
}

int clique_number(const Graph& g, long long budget) {
    const int n = g.order();
    if (n == 0) return 0;
    // Reorder by degree (descending) so large cliques are found early and the
    // coloring bound prunes aggressively.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> deg = g.degrees();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    const int words = (n + 63) / 64;
    std::vector<Mask> adj(n, make_mask(words));
    for (int i = 0; i < n; ++i) {
        for (int v : g.neighbors(order[i])) {
            int j = static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
            mask_set(adj[i], j);
        }
    }
    int best = 0;
    long long nodes = 0;
    std::function<void(Mask, int)> expand = [&](Mask p, int size) {
        if (++nodes > budget) {
            throw BudgetExceeded("clique_number: node budget " + std::to_string(budget) +
                                 " exhausted");
        }
        if (mask_empty(p)) {
            best = std::max(best, size);
            return;
        }
        // Greedy coloring of the candidate set; color index bounds the size
        // of any clique inside it.
        std::vector<int> seq, color;
        Mask uncolored = p;
        int c = 0;
        while (!mask_empty(uncolored)) {
            ++c;
            Mask cls = uncolored;
            while (!mask_empty(cls)) {
                int v = mask_lowest(cls);
                seq.push_back(v);
                color.push_back(c);
                mask_clear(uncolored, v);
                for (int w = 0; w < words; ++w) cls[w] &= ~adj[v][w];
                mask_clear(cls, v);
            }
        }
        for (std::size_t i = seq.size(); i-- > 0;) {
            int v = seq[i];
            if (size + color[i] <= best) return;
            Mask next = p;
            for (int w = 0; w < words; ++w) next[w] &= adj[v][w];
            expand(std::move(next), size + 1);
            mask_clear(p, v);
        }
    };
    Mask all = make_mask(words);
    for (int v = 0; v < n; ++v) mask_set(all, v);
    expand(std::move(all), 0);
    return best;
}

VertexSet heavy_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        if (2 * g.degree(v) >= g.order()) out.push_back(v);
    }
    return out;
}

namespace {

// Iterated color refinement: vertices get classes by (class, sorted multiset
// of neighbor classes). Returns one class vector per graph; classes share a
// numbering across both graphs so they are directly comparable.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& g, const Graph& h) {
    std::vector<int> cg(g.order()), ch(h.order());
    for (int v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
    for (int v = 0; v < h.order(); ++v) ch[v] = h.degree(v);
    int classes = -1;
    for (int round = 0; round < g.order() + 1; ++round) {
        using Signature = std::pair<int, std::vector<int>>;
        std::map<Signature, int> ids;
        auto signature = [](const Graph& graph, const std::vector<int>& colors, int v) {
            std::vector<int> nb_colors;
            for (int u : graph.neighbors(v)) nb_colors.push_back(colors[u]);
            std::sort(nb_colors.begin(), nb_colors.end());
            return Signature{colors[v], std::move(nb_colors)};
        };
        std::vector<Signature> sg(g.order()), sh(h.order());
        for (int v = 0; v < g.order(); ++v) sg[v] = signature(g, cg, v);
        for (int v = 0; v < h.order(); ++v) sh[v] = signature(h, ch, v);
        for (const auto& s : sg) ids.emplace(s, 0);
        for (const auto& s : sh) ids.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (int v = 0; v < g.order(); ++v) cg[v] = ids[sg[v]];
        for (int v = 0; v < h.order(); ++v) ch[v] = ids[sh[v]];
        if (next == classes) break;
        classes = next;
    }
    return {std::move(cg), std::move(ch)};
}

} // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int max_order) {
    if (g.order() != h.order()) return false;
    if (g.order() > max_order) {
        throw PreconditionError("is_isomorphic: order " + std::to_string(g.order()) +
                                " exceeds the cap " + std::to_string(max_order));
    }
    if (g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;

    auto [cg, ch] = joint_refinement(g, h);
    std::vector<int> sorted_g = cg, sorted_h = ch;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return false;

    const int n = g.order();
    std::map<int, int> size_of;
    for (int c : cg) ++size_of[c];
    // Assign the most constrained vertices first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (size_of[cg[a]] != size_of[cg[b]]) return size_of[cg[a]] < size_of[cg[b]];
        if (cg[a] != cg[b]) return cg[a] < cg[b];
        return a < b;
    });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || ch[cand] != cg[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                ok = g.has_edge(u, v) == h.has_edge(map[u], cand);
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (place(idx + 1)) return true;
            used[cand] = 0;
            map[v] = -1;
        }
        return false;
    };
    return place(0);
}

bool is_spanning_subgraph_of(const Graph& sub, const Graph& host, int max_order) {
    if (sub.order() != host.order()) return false;
    if (sub.order() > max_order) {
        throw PreconditionError("is_spanning_subgraph_of: order " +
                                std::to_string(sub.order()) + " exceeds the cap " +
                                std::to_string(max_order));
    }
    if (sub.edge_count() > host.edge_count()) return false;
    const int n = sub.order();
    std::vector<int> sub_deg = sub.degrees(), host_deg = host.degrees();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sub_deg[a] != sub_deg[b]) return sub_deg[a] > sub_deg[b];
        return a < b;
    });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || host_deg[cand] < sub_deg[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (sub.has_edge(u, v)) ok = host.has_edge(map[u], cand);
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (place(idx + 1)) return true;
            used[cand] = 0;
            map[v] = -1;
        }
        return false;
    };
    return place(0);
}

std::string to_json(const ClosureTrace& trace) {
    jsonio::Value steps = jsonio::Value::array();
    for (const ClosureStep& step : trace.steps) {
        jsonio::Value added = jsonio::Value::array();
        for (auto [u, v] : step.added_edges) {
            added.push(jsonio::Value::array().push(u).push(v));
        }
        steps.push(jsonio::Value::object()
                       .set("vertex", step.vertex)
                       .set("added_edges", std::move(added)));
    }
    jsonio::Value doc = jsonio::Value::object();
    doc.set("initial", emit_graph6(trace.initial));
    doc.set("result", emit_graph6(trace.result));
    doc.set("steps", std::move(steps));
    return doc.dump();
}

} // namespace specham
