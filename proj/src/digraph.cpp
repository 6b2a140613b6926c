#include "pathhom/digraph.hpp"

#include <algorithm>
#include <functional>

namespace pathhom {

namespace {
bool bad_identifier(const Vertex& v) {
    if (v.empty()) return true;
    for (char c : v)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
    return false;
}
}  // namespace

Digraph Digraph::validate(std::string name, const std::vector<Vertex>& raw_vertices,
                          const std::vector<Edge>& raw_edges) {
    Digraph g;
    g.name_ = std::move(name);
    for (const auto& v : raw_vertices) {
        if (bad_identifier(v)) throw InputError("EmptyIdentifier: bad vertex identifier");
        g.vset_.insert(v);
    }
    for (const auto& [u, v] : raw_edges) {
        if (bad_identifier(u) || bad_identifier(v))
            throw InputError("EmptyIdentifier: bad vertex identifier in edge");
        if (u == v) throw InputError("SelfLoop(" + u + ")");
        if (!g.eset_.insert({u, v}).second)
            throw InputError("DuplicateEdge(" + u + "," + v + ")");
        g.vset_.insert(u);
        g.vset_.insert(v);
    }
    g.vertices_.assign(g.vset_.begin(), g.vset_.end());
    g.edges_.assign(g.eset_.begin(), g.eset_.end());
    for (const auto& v : g.vertices_) {
        g.out_[v];
        g.in_[v];
    }
    for (const auto& [u, v] : g.edges_) {
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    return g;
}

const std::vector<Vertex>& Digraph::out(const Vertex& v) const {
    auto it = out_.find(v);
    if (it == out_.end()) throw InputError("UnknownVertex(" + v + ")");
    return it->second;
}

const std::vector<Vertex>& Digraph::in(const Vertex& v) const {
    auto it = in_.find(v);
    if (it == in_.end()) throw InputError("UnknownVertex(" + v + ")");
    return it->second;
}

bool Digraph::subgraph_of(const Digraph& g) const {
    for (const auto& v : vertices_)
        if (!g.has_vertex(v)) return false;
    for (const auto& [u, v] : edges_)
        if (!g.has_edge(u, v)) return false;
    return true;
}

bool Digraph::same_as(const Digraph& g) const {
    return vertices_ == g.vertices_ && edges_ == g.edges_;
}

void VertexMap::check_total() const {
    for (const auto& v : source.vertices()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw InputError("VertexMap not total: no image for " + v);
        if (!target.has_vertex(it->second))
            throw InputError("VertexMap image " + it->second + " not in target");
    }
}

const Vertex& VertexMap::operator()(const Vertex& v) const {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw InputError("VertexMap missing " + v);
    return it->second;
}

Vertex pair_vertex(const Vertex& u, const Vertex& v) { return "(" + u + "," + v + ")"; }

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    for (const auto& u : g.vertices())
        for (const auto& w : h.vertices()) verts.push_back(pair_vertex(u, w));
    for (const auto& u : g.vertices())
        for (const auto& [w, w2] : h.edges())
            edges.push_back({pair_vertex(u, w), pair_vertex(u, w2)});
    for (const auto& [u, u2] : g.edges())
        for (const auto& w : h.vertices())
            edges.push_back({pair_vertex(u, w), pair_vertex(u2, w)});
    return Digraph::validate(g.name() + "*" + h.name(), verts, edges);
}

Digraph strong_product(const Digraph& g, const Digraph& h) {
    Digraph c = cartesian_product(g, h);
    std::vector<Edge> edges = c.edges();
    for (const auto& [u, u2] : g.edges())
        for (const auto& [w, w2] : h.edges())
            edges.push_back({pair_vertex(u, w), pair_vertex(u2, w2)});
    return Digraph::validate(g.name() + "x" + h.name(), c.vertices(), edges);
}

Digraph line_digraph(const std::string& spec) {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    for (size_t k = 0; k <= spec.size(); ++k) verts.push_back(std::to_string(k));
    for (size_t k = 0; k < spec.size(); ++k) {
        if (spec[k] == '+')
            edges.push_back({std::to_string(k), std::to_string(k + 1)});
        else if (spec[k] == '-')
            edges.push_back({std::to_string(k + 1), std::to_string(k)});
        else
            throw InputError(std::string("InvalidCharacter in line spec: ") + spec[k]);
    }
    return Digraph::validate("I" + std::to_string(spec.size()), verts, edges);
}

Digraph subgraph_combine(const Digraph& a, const Digraph& b, CombineMode mode) {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    if (mode == CombineMode::Union) {
        verts = a.vertices();
        verts.insert(verts.end(), b.vertices().begin(), b.vertices().end());
        edges = a.edges();
        edges.insert(edges.end(), b.edges().begin(), b.edges().end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    } else {
        for (const auto& v : a.vertices())
            if (b.has_vertex(v)) verts.push_back(v);
        for (const auto& [u, v] : a.edges())
            if (b.has_edge(u, v)) edges.push_back({u, v});
    }
    return Digraph::validate(a.name() + (mode == CombineMode::Union ? "+" : "&") + b.name(),
                             verts, edges);
}

Digraph transitive_closure(const Digraph& g) {
    std::vector<Edge> edges;
    for (const auto& s : g.vertices()) {
        // BFS from s
        std::set<Vertex> seen;
        std::vector<Vertex> stack = {s};
        seen.insert(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& w : g.out(v)) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        for (const auto& t : seen)
            if (t != s) edges.push_back({s, t});
    }
    return Digraph::validate(g.name() + "_cl", g.vertices(), edges);
}

std::optional<std::map<Vertex, Vertex>> is_isomorphic(const Digraph& g, const Digraph& h,
                                                      size_t max_vertices) {
    if (g.num_vertices() > max_vertices || h.num_vertices() > max_vertices)
        throw InputError("TooLarge: isomorphism search bounded at " +
                         std::to_string(max_vertices) + " vertices");
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
        return std::nullopt;

    auto degrees = [](const Digraph& d) {
        std::map<Vertex, std::pair<size_t, size_t>> m;
        for (const auto& v : d.vertices()) m[v] = {d.out(v).size(), d.in(v).size()};
        return m;
    };
    auto dg = degrees(g), dh = degrees(h);
    {
        std::vector<std::pair<size_t, size_t>> a, b;
        for (auto& [v, d] : dg) a.push_back(d);
        for (auto& [v, d] : dh) b.push_back(d);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    const auto& gv = g.vertices();
    std::map<Vertex, Vertex> phi;
    std::set<Vertex> used;

    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == gv.size()) return true;
        const Vertex& v = gv[i];
        for (const auto& w : h.vertices()) {
            if (used.count(w)) continue;
            if (dg[v] != dh[w]) continue;
            bool ok = true;
            // check consistency with already-placed vertices
            for (size_t j = 0; j < i && ok; ++j) {
                const Vertex& u = gv[j];
                if (g.has_edge(u, v) != h.has_edge(phi[u], w)) ok = false;
                if (g.has_edge(v, u) != h.has_edge(w, phi[u])) ok = false;
            }
            if (!ok) continue;
            phi[v] = w;
            used.insert(w);
            if (place(i + 1)) return true;
            phi.erase(v);
            used.erase(w);
        }
        return false;
    };
    if (place(0)) return phi;
    return std::nullopt;
}

}  // namespace pathhom
