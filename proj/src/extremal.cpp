#include "specham/extremal.hpp"

#include <algorithm>

#include "specham/clawfree.hpp"

namespace specham {

Graph build_en(int n) {
    if (n < 6) throw PreconditionError("build_en: need n >= 6, got " + std::to_string(n));
    Graph g(n);
    for (int u = 0; u <= n - 4; ++u)
        for (int v = u + 1; v <= n - 4; ++v) g.add_edge(u, v);
    g.add_edge(0, n - 3);
    g.add_edge(1, n - 2);
    g.add_edge(2, n - 1);
    return g;
}

Graph build_brousek(const std::array<ConnectionKind, 3>& x) {
    int extra = 0;
    for (const ConnectionKind& c : x) {
        if (c.is_triangle) {
            extra += 1;
        } else if (c.path_order >= 3) {
            extra += c.path_order - 2;
        } else {
            throw PreconditionError("build_brousek: path order must be >= 3, got " +
                                    std::to_string(c.path_order));
        }
    }
    Graph g(6 + extra);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        int a = i, b = 3 + i;
        if (x[i].is_triangle) {
            int c = next++;
            g.add_edge(a, b);
            g.add_edge(a, c);
            g.add_edge(b, c);
        } else {
            int prev = a;
            for (int j = 0; j < x[i].path_order - 2; ++j) {
                int m = next++;
                g.add_edge(prev, m);
                prev = m;
            }
            g.add_edge(prev, b);
        }
    }
    return g;
}

Graph blow_up_triangle(const Graph& g, const VertexSet& tri, int m) {
    if (tri.size() != 3) {
        throw PreconditionError("blow_up_triangle: need exactly 3 vertices, got " +
                                std::to_string(tri.size()));
    }
    if (m < 0) throw PreconditionError("blow_up_triangle: negative blow-up size");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (tri[i] == tri[j] || !g.has_edge(tri[i], tri[j])) {
                throw PreconditionError("blow_up_triangle: given vertices do not induce "
                                        "a triangle");
            }
        }
    }
    const int n = g.order();
    Graph out(n + m);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) out.add_edge(u, v);
    for (int i = 0; i < m; ++i) {
        for (int t : tri) out.add_edge(n + i, t);
        for (int j = 0; j < i; ++j) out.add_edge(n + j, n + i);
    }
    return out;
}

namespace {

Graph base_all_triangles() {
    return build_brousek({ConnectionKind::triangle(), ConnectionKind::triangle(),
                          ConnectionKind::triangle()});
}

std::vector<VertexSet> all_triangles(const Graph& g) {
    std::vector<VertexSet> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) {
            if (!g.has_edge(i, j)) continue;
            for (int k = j + 1; k < g.order(); ++k) {
                if (g.has_edge(i, k) && g.has_edge(j, k)) out.push_back({i, j, k});
            }
        }
    return out;
}

} // namespace

Graph build_ep(int n, EpVariant variant) {
    if (n < 9) throw PreconditionError("build_ep: need n >= 9, got " + std::to_string(n));
    Graph base = base_all_triangles();
    VertexSet tri = variant == EpVariant::Standard ? VertexSet{3, 4, 5} : VertexSet{0, 3, 6};
    return blow_up_triangle(base, tri, n - 9);
}

std::vector<Graph> ep_family(int n) {
    if (n < 9) throw PreconditionError("ep_family: need n >= 9, got " + std::to_string(n));
    const std::array<std::array<ConnectionKind, 3>, 4> bases = {{
        {ConnectionKind::triangle(), ConnectionKind::triangle(), ConnectionKind::triangle()},
        {ConnectionKind::path(3), ConnectionKind::triangle(), ConnectionKind::triangle()},
        {ConnectionKind::path(3), ConnectionKind::path(3), ConnectionKind::triangle()},
        {ConnectionKind::path(3), ConnectionKind::path(3), ConnectionKind::path(3)},
    }};
    std::vector<Graph> members;
    for (const auto& connectors : bases) {
        Graph base = build_brousek(connectors);
        for (const VertexSet& tri : all_triangles(base)) {
            Graph candidate = blow_up_triangle(base, tri, n - 9);
            bool fresh = true;
            for (const Graph& known : members) {
                if (is_isomorphic(candidate, known, std::max(n, 64))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) members.push_back(std::move(candidate));
        }
    }
    return members;
}

namespace {

int parse_int(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError("extremal spec: malformed integer '" + text + "' in " + context);
    }
}

} // namespace

ExtremalSpec parse_extremal_spec(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("extremal spec: expected '<kind>:<params>', got '" + text + "'");
    }
    const std::string kind = text.substr(0, colon);
    const std::string params = text.substr(colon + 1);
    ExtremalSpec spec;
    if (kind == "en") {
        spec.kind = ExtremalSpec::Kind::EN;
        spec.n = parse_int(params, text);
    } else if (kind == "ep") {
        spec.kind = ExtremalSpec::Kind::EP;
        spec.n = parse_int(params, text);
    } else if (kind == "ep'") {
        spec.kind = ExtremalSpec::Kind::EPPrime;
        spec.n = parse_int(params, text);
    } else if (kind == "brousek") {
        spec.kind = ExtremalSpec::Kind::Brousek;
        std::array<std::string, 3> parts;
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t comma = params.find(',', start);
            if (i < 2 && comma == std::string::npos) {
                throw ParseError("extremal spec: brousek needs three comma-separated "
                                 "connectors, got '" + params + "'");
            }
            if (i == 2 && comma != std::string::npos) {
                throw ParseError("extremal spec: brousek takes exactly three connectors");
            }
            parts[i] = params.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
            start = comma + 1;
        }
        for (int i = 0; i < 3; ++i) {
            if (parts[i] == "T") {
                spec.connectors[i] = ConnectionKind::triangle();
            } else {
                int k = parse_int(parts[i], text);
                if (k < 3) {
                    throw ParseError("extremal spec: path connector order must be >= 3");
                }
                spec.connectors[i] = ConnectionKind::path(k);
            }
        }
    } else if (kind == "family") {
        spec.kind = ExtremalSpec::Kind::FamilyMember;
        std::size_t slash = params.find('/');
        if (slash == std::string::npos) {
            throw ParseError("extremal spec: family needs '<n>/<index>', got '" + params +
                             "'");
        }
        spec.n = parse_int(params.substr(0, slash), text);
        spec.member_index = parse_int(params.substr(slash + 1), text);
    } else {
        throw ParseError("extremal spec: unknown kind '" + kind + "'");
    }
    return spec;
}

Graph build_extremal(const ExtremalSpec& spec) {
    switch (spec.kind) {
        case ExtremalSpec::Kind::EN: return build_en(spec.n);
        case ExtremalSpec::Kind::EP: return build_ep(spec.n, EpVariant::Standard);
        case ExtremalSpec::Kind::EPPrime: return build_ep(spec.n, EpVariant::Prime);
        case ExtremalSpec::Kind::Brousek: return build_brousek(spec.connectors);
        case ExtremalSpec::Kind::FamilyMember: {
            std::vector<Graph> members = ep_family(spec.n);
            if (spec.member_index < 0 ||
                spec.member_index >= static_cast<int>(members.size())) {
                throw PreconditionError("extremal spec: family index " +
                                        std::to_string(spec.member_index) +
                                        " out of range [0, " +
                                        std::to_string(members.size()) + ")");
            }
            return members[static_cast<std::size_t>(spec.member_index)];
        }
    }
    throw PreconditionError("extremal spec: unhandled kind");
}

std::string to_string(const ExtremalSpec& spec) {
    switch (spec.kind) {
        case ExtremalSpec::Kind::EN: return "en:" + std::to_string(spec.n);
        case ExtremalSpec::Kind::EP: return "ep:" + std::to_string(spec.n);
        case ExtremalSpec::Kind::EPPrime: return "ep':" + std::to_string(spec.n);
        case ExtremalSpec::Kind::Brousek: {
            std::string out = "brousek:";
            for (int i = 0; i < 3; ++i) {
                if (i) out += ",";
                out += spec.connectors[i].is_triangle
                           ? "T"
                           : std::to_string(spec.connectors[i].path_order);
            }
            return out;
        }
        case ExtremalSpec::Kind::FamilyMember:
            return "family:" + std::to_string(spec.n) + "/" +
                   std::to_string(spec.member_index);
    }
    return "";
}

} // namespace specham
