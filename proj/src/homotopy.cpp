#include "pathhom/homotopy.hpp"

#include <algorithm>
#include <sstream>

#include "pathhom/homology.hpp"

namespace pathhom {

namespace {

// edge-or-equal in the target digraph
bool eoe(const Digraph& h, const Vertex& a, const Vertex& b) {
    return a == b || h.has_edge(a, b);
}

}  // namespace

bool check_digraph_map(const VertexMap& m) {
    m.check_total();
    for (const auto& [u, v] : m.source.edges())
        if (!eoe(m.target, m(u), m(v))) return false;
    return true;
}

bool check_homotopy(const HomotopyWitness& w) {
    if (!check_digraph_map(w.f) || !check_digraph_map(w.g)) return false;
    if (!w.f.source.same_as(w.g.source) || !w.f.target.same_as(w.g.target)) return false;
    const Digraph& src = w.f.source;
    const Digraph& tgt = w.f.target;
    int n = (int)w.line.size();

    auto at = [&](const Vertex& v, int k) -> const Vertex& {
        auto it = w.F.find({v, k});
        if (it == w.F.end())
            throw InputError("HomotopyWitness: F undefined at (" + v + "," + std::to_string(k) + ")");
        if (!tgt.has_vertex(it->second))
            throw InputError("HomotopyWitness: F(" + v + "," + std::to_string(k) +
                             ") is not a target vertex");
        return it->second;
    };

    // boundary restrictions
    for (const auto& v : src.vertices()) {
        if (at(v, 0) != w.f(v)) return false;
        if (at(v, n) != w.g(v)) return false;
    }
    // digraph map on src x I_n: edges within a level, and level k <-> k+1
    for (int k = 0; k <= n; ++k)
        for (const auto& [u, v] : src.edges())
            if (!eoe(tgt, at(u, k), at(v, k))) return false;
    for (int k = 0; k < n; ++k) {
        bool fwd = w.line[k] == '+';
        for (const auto& v : src.vertices()) {
            const Vertex& a = at(v, k);
            const Vertex& b = at(v, k + 1);
            if (fwd ? !eoe(tgt, a, b) : !eoe(tgt, b, a)) return false;
        }
    }
    return true;
}

bool check_retraction(const Digraph& g, const Digraph& h, const VertexMap& r, RetractMode mode,
                      const std::vector<VertexMap>& sequence) {
    if (!h.subgraph_of(g)) throw InputError("RetractFixityError: H is not a sub-digraph of G");
    r.check_total();
    for (const auto& v : h.vertices())
        if (r(v) != v) throw InputError("RetractFixityError: r moves " + v + " to " + r(v));
    for (const auto& v : g.vertices())
        if (!h.has_vertex(r(v))) return false;
    if (!check_digraph_map(r)) return false;

    if (mode == RetractMode::OneStep) {
        bool all_down = true, all_up = true;  // r(x) ->= x  /  x ->= r(x)
        for (const auto& x : g.vertices()) {
            if (!eoe(g, r(x), x)) all_down = false;
            if (!eoe(g, x, r(x))) all_up = false;
        }
        return all_down || all_up;
    }

    // sequence mode
    if (sequence.empty()) throw InputError("RetractFixityError: sequence mode with no maps");
    for (size_t k = 0; k < sequence.size(); ++k)
        if (!check_digraph_map(sequence[k]))
            throw InputError("NotDigraphMap(" + std::to_string(k) + ")");
    for (const auto& v : g.vertices()) {
        if (sequence.front()(v) != v) return false;
        if (sequence.back()(v) != r(v)) return false;
    }
    for (size_t k = 1; k < sequence.size(); ++k) {
        bool all_fwd = true, all_bwd = true;
        for (const auto& x : g.vertices()) {
            const Vertex& a = sequence[k - 1](x);
            const Vertex& b = sequence[k](x);
            if (!eoe(g, a, b)) all_fwd = false;
            if (!eoe(g, b, a)) all_bwd = false;
        }
        if (!all_fwd && !all_bwd) return false;
    }
    return true;
}

VertexMap identity_map(const Digraph& g) {
    VertexMap m;
    m.source = g;
    m.target = g;
    for (const auto& v : g.vertices()) m.assignment[v] = v;
    return m;
}

VertexMap compose(const VertexMap& first, const VertexMap& then) {
    first.check_total();
    then.check_total();
    VertexMap m;
    m.source = first.source;
    m.target = then.target;
    for (const auto& v : first.source.vertices()) m.assignment[v] = then(first(v));
    return m;
}

HomotopyWitness induced_one_step_witness(const Digraph& g, const Digraph& h, const VertexMap& r) {
    bool all_down = true;  // r(x) ->= x
    for (const auto& x : g.vertices())
        if (!(r(x) == x || g.has_edge(r(x), x))) {
            all_down = false;
            break;
        }
    HomotopyWitness w;
    w.f = identity_map(g);
    VertexMap ir;  // i . r as a self-map of G
    ir.source = g;
    ir.target = g;
    for (const auto& v : g.vertices()) ir.assignment[v] = r(v);
    w.g = ir;
    w.line = all_down ? "-" : "+";
    for (const auto& v : g.vertices()) {
        w.F[{v, 0}] = v;
        w.F[{v, 1}] = r(v);
    }
    (void)h;
    return w;
}

std::string HomotopyEquivReport::str() const {
    std::ostringstream os;
    os << (pass ? "homotopy equivalence: PASS" : "homotopy equivalence: FAIL") << "\n";
    for (const auto& f : failures) os << "  failure: " << f << "\n";
    for (const auto& n : notes) os << "  " << n << "\n";
    return os.str();
}

HomotopyEquivReport homotopy_equiv_report(const Digraph& g, const Digraph& h, const VertexMap& f,
                                          const VertexMap& gmap, const HomotopyWitness& hfg,
                                          const HomotopyWitness& hgf) {
    HomotopyEquivReport rep;
    if (!check_digraph_map(f)) rep.failures.push_back("WitnessFailure(f): not a digraph map");
    if (!check_digraph_map(gmap)) rep.failures.push_back("WitnessFailure(g): not a digraph map");
    if (rep.failures.empty()) {
        // boundary maps of the supplied homotopies must be f.g / id_H and g.f / id_G
        if (!check_homotopy(hfg)) rep.failures.push_back("WitnessFailure(fg): homotopy rejected");
        if (!check_homotopy(hgf)) rep.failures.push_back("WitnessFailure(gf): homotopy rejected");
    }
    if (rep.failures.empty()) {
        VertexMap fg = compose(gmap, f);   // H -> H
        VertexMap gf = compose(f, gmap);   // G -> G
        auto same_map = [](const VertexMap& a, const VertexMap& b) {
            return a.assignment == b.assignment;
        };
        bool fg_ok = (same_map(hfg.f, fg) && same_map(hfg.g, identity_map(h))) ||
                     (same_map(hfg.g, fg) && same_map(hfg.f, identity_map(h)));
        bool gf_ok = (same_map(hgf.f, gf) && same_map(hgf.g, identity_map(g))) ||
                     (same_map(hgf.g, gf) && same_map(hgf.f, identity_map(g)));
        if (!fg_ok) rep.failures.push_back("WitnessFailure(fg): endpoints are not f.g and id");
        if (!gf_ok) rep.failures.push_back("WitnessFailure(gf): endpoints are not g.f and id");
    }

    int dg = std::max<int>(0, (int)g.num_vertices() - 1);
    int dh = std::max<int>(0, (int)h.num_vertices() - 1);
    HomologyResult hog = homology_of(g, dg, Coeff::Z, false);
    HomologyResult hoh = homology_of(h, dh, Coeff::Z, false);
    int top = std::max(dg, dh);
    bool hom_ok = true;
    for (int n = 0; n <= top; ++n) {
        long bg = n <= dg ? hog.betti(n) : 0;
        long bh = n <= dh ? hoh.betti(n) : 0;
        std::vector<Int> tg = n <= dg ? hog.degrees[n].torsion : std::vector<Int>{};
        std::vector<Int> th = n <= dh ? hoh.degrees[n].torsion : std::vector<Int>{};
        std::ostringstream line;
        line << "H_" << n << ": " << g.name() << " betti=" << bg << " vs " << h.name()
             << " betti=" << bh;
        rep.notes.push_back(line.str());
        if (bg != bh || tg != th) {
            hom_ok = false;
            rep.failures.push_back("WitnessFailure(homology): degree " + std::to_string(n) +
                                   " disagrees");
        }
    }
    rep.pass = rep.failures.empty() && hom_ok;
    return rep;
}

std::optional<VertexMap> search_one_step_retraction(const Digraph& g, const Digraph& h,
                                                    size_t max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw InputError("one-step retraction search limited to " + std::to_string(max_vertices) +
                         " vertices");
    if (!h.subgraph_of(g)) return std::nullopt;
    std::vector<Vertex> moving;
    for (const auto& v : g.vertices())
        if (!h.has_vertex(v)) moving.push_back(v);
    const auto& targets = h.vertices();
    if (targets.empty()) return std::nullopt;

    std::vector<size_t> pick(moving.size(), 0);
    while (true) {
        VertexMap r;
        r.source = g;
        r.target = h;
        for (const auto& v : targets) r.assignment[v] = v;
        for (size_t i = 0; i < moving.size(); ++i) r.assignment[moving[i]] = targets[pick[i]];
        if (check_retraction(g, h, r, RetractMode::OneStep)) return r;
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == targets.size()) pick[i++] = 0;
        if (i == pick.size()) break;
        if (pick.empty()) break;
    }
    return std::nullopt;
}

std::optional<std::pair<Digraph, VertexMap>> one_step_retractable(const Digraph& g,
                                                                  size_t max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw InputError("one-step retraction search limited to " + std::to_string(max_vertices) +
                         " vertices");
    const auto& vs = g.vertices();
    size_t n = vs.size();
    // proper nonempty vertex subsets, larger first (cheapest retractions)
    std::vector<unsigned> masks;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });
    for (unsigned m : masks) {
        std::vector<Vertex> sub;
        for (size_t i = 0; i < n; ++i)
            if (m & (1u << i)) sub.push_back(vs[i]);
        std::vector<Edge> es;
        for (const auto& [u, v] : g.edges())
            if (std::count(sub.begin(), sub.end(), u) && std::count(sub.begin(), sub.end(), v))
                es.push_back({u, v});
        Digraph h = Digraph::validate(g.name() + "|sub", sub, es);
        if (auto r = search_one_step_retraction(g, h, max_vertices)) return {{h, *r}};
    }
    return std::nullopt;
}

}  // namespace pathhom
