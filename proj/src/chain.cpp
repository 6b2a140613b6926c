#include "pathhom/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pathhom {

template <class C>
std::string BasicChain<C>::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (c > 0 && !first) os << " +";
        if (c > 0) os << c;
        else os << (first ? "-" : " -") << C(-c);
        os << ' ' << path_str(p);
        first = false;
    }
    return os.str();
}

QChain to_rational(const Chain& c) {
    QChain q(c.dim);
    for (const auto& [p, v] : c.terms) q.terms[p] = Rat(v);
    return q;
}

bool path_regular(const ElemPath& p) {
    std::set<Vertex> seen(p.begin(), p.end());
    return seen.size() == p.size();
}

bool path_allowed(const Digraph& g, const ElemPath& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (!g.has_edge(p[i - 1], p[i])) return false;
    return true;
}

PathFlags classify_path(const Digraph& g, const ElemPath& p) {
    if (p.empty()) throw InputError("empty elementary path");
    for (const auto& v : p)
        if (!g.has_vertex(v)) throw InputError("UnknownVertex(" + v + ")");
    return {path_allowed(g, p), path_regular(p)};
}

template <class C>
BasicChain<C> boundary(const BasicChain<C>& c) {
    BasicChain<C> r(c.dim - 1);
    if (c.dim == 0) {
        r.dim = -1;
        return r;
    }
    for (const auto& [p, coef] : c.terms) {
        ElemPath face;
        face.reserve(p.size() - 1);
        for (size_t j = 0; j < p.size(); ++j) {
            face.clear();
            for (size_t k = 0; k < p.size(); ++k)
                if (k != j) face.push_back(p[k]);
            r.add(face, (j % 2 == 0) ? coef : C(-coef));
        }
    }
    return r;
}

template <class C>
BasicChain<C> delta_component(const BasicChain<C>& c, int i) {
    if (i < 0 || i > c.dim) throw InputError("IndexOutOfRange in delta_component");
    BasicChain<C> r(c.dim - 1);
    for (const auto& [p, coef] : c.terms) {
        ElemPath face;
        face.reserve(p.size() - 1);
        for (size_t k = 0; k < p.size(); ++k)
            if (static_cast<int>(k) != i) face.push_back(p[k]);
        r.add(face, (i % 2 == 0) ? coef : C(-coef));
    }
    return r;
}

std::vector<ElemPath> allowed_basis(const Digraph& g, int n) {
    std::vector<ElemPath> out;
    if (n < 0 || static_cast<size_t>(n) >= g.num_vertices()) return out;
    ElemPath cur;
    std::set<Vertex> used;
    // DFS extends lexicographically; output order is lexicographic.
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.push_back(cur);
            return;
        }
        const auto& nexts = cur.empty() ? g.vertices() : g.out(cur.back());
        for (const auto& v : nexts) {
            if (used.count(v)) continue;
            cur.push_back(v);
            used.insert(v);
            self(self);
            used.erase(v);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::vector<ElemPath> allowed_paths_between(const Digraph& g, int n, const Vertex& s,
                                            const Vertex& e) {
    std::vector<ElemPath> out;
    for (auto& p : allowed_basis(g, n))
        if (p.front() == s && p.back() == e) out.push_back(std::move(p));
    return out;
}

template <class C>
BasicChain<C> concatenate(const BasicChain<C>& u, const BasicChain<C>& v) {
    BasicChain<C> r(u.dim + v.dim);
    for (const auto& [pu, cu] : u.terms)
        for (const auto& [pv, cv] : v.terms) {
            if (pu.back() != pv.front())
                throw InputError("EndpointMismatch: " + path_str(pu) + " . " + path_str(pv));
            ElemPath joined = pu;
            joined.insert(joined.end(), pv.begin() + 1, pv.end());
            r.add(joined, C(cu * cv));
        }
    return r;
}

Form coboundary_d(const std::vector<Vertex>& verts, const Form& w) {
    Form r(w.dim + 1);
    for (const auto& [p, coef] : w.terms) {
        std::set<Vertex> in_path(p.begin(), p.end());
        for (const auto& k : verts) {
            if (in_path.count(k)) continue;  // irregular insertion dropped
            for (size_t pos = 0; pos <= p.size(); ++pos) {
                ElemPath q;
                q.reserve(p.size() + 1);
                q.insert(q.end(), p.begin(), p.begin() + pos);
                q.push_back(k);
                q.insert(q.end(), p.begin() + pos, p.end());
                r.add(q, (pos % 2 == 0) ? coef : Rat(-coef));
            }
        }
    }
    return r;
}

Rat pair_form_chain(const Form& w, const QChain& u) {
    if (w.dim != u.dim) throw InputError("DimMismatch in pairing");
    Rat s = 0;
    const auto& small = w.terms.size() < u.terms.size() ? w.terms : u.terms;
    const auto& big = w.terms.size() < u.terms.size() ? u.terms : w.terms;
    for (const auto& [p, c] : small) {
        auto it = big.find(p);
        if (it != big.end()) s += c * it->second;
    }
    return s;
}

Rat pair_form_chain(const Form& w, const Chain& u) { return pair_form_chain(w, to_rational(u)); }

template struct BasicChain<Int>;
template struct BasicChain<Rat>;
template BasicChain<Int> boundary(const BasicChain<Int>&);
template BasicChain<Rat> boundary(const BasicChain<Rat>&);
template BasicChain<Int> delta_component(const BasicChain<Int>&, int);
template BasicChain<Rat> delta_component(const BasicChain<Rat>&, int);
template BasicChain<Int> concatenate(const BasicChain<Int>&, const BasicChain<Int>&);
template BasicChain<Rat> concatenate(const BasicChain<Rat>&, const BasicChain<Rat>&);

}  // namespace pathhom
