#ifndef PATHHOM_CHAIN_HPP
#define PATHHOM_CHAIN_HPP

#include <map>

#include "pathhom/digraph.hpp"
#include "pathhom/types.hpp"

namespace pathhom {

// Finite coefficient combination of elementary paths of one fixed length.
// No zero coefficients are stored; term order is lexicographic.
template <class C>
struct BasicChain {
    int dim = 0;
    std::map<ElemPath, C> terms;

    BasicChain() = default;
    explicit BasicChain(int n) : dim(n) {}

    static BasicChain unit(const ElemPath& p, C c = C(1)) {
        BasicChain ch(static_cast<int>(p.size()) - 1);
        if (c != 0) ch.terms[p] = std::move(c);
        return ch;
    }

    bool zero() const { return terms.empty(); }

    void add(const ElemPath& p, const C& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    BasicChain& operator+=(const BasicChain& o) {
        for (const auto& [p, c] : o.terms) add(p, c);
        return *this;
    }
    BasicChain& operator-=(const BasicChain& o) {
        for (const auto& [p, c] : o.terms) add(p, C(-c));
        return *this;
    }
    friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
    friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
    friend BasicChain operator*(const C& k, BasicChain a) {
        if (k == 0) return BasicChain(a.dim);
        for (auto& [p, c] : a.terms) c *= k;
        return a;
    }
    friend BasicChain operator-(BasicChain a) {
        for (auto& [p, c] : a.terms) c = -c;
        return a;
    }
    friend bool operator==(const BasicChain& a, const BasicChain& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }

    // Sign-canonical form: first (lexicographically smallest) term positive.
    BasicChain canonical_sign() const {
        if (terms.empty()) return *this;
        if (terms.begin()->second < 0) return -*this;
        return *this;
    }

    std::string str() const;
};

using Chain = BasicChain<Int>;
using QChain = BasicChain<Rat>;

// Dual forms carry rational coefficients; same term layout as chains.
using Form = BasicChain<Rat>;

QChain to_rational(const Chain& c);

struct PathFlags {
    bool allowed = false;
    bool regular = false;
};

// allowed: each consecutive pair an edge; regular: all vertices distinct.
// Throws InputError(UnknownVertex) for vertices outside G.
PathFlags classify_path(const Digraph& g, const ElemPath& p);

bool path_regular(const ElemPath& p);
bool path_allowed(const Digraph& g, const ElemPath& p);  // no vertex check

// Boundary in the free module: alternating face sum. dim 0 -> zero chain.
template <class C>
BasicChain<C> boundary(const BasicChain<C>& c);

// i-th face with sign (-1)^i; sum over i equals boundary.
template <class C>
BasicChain<C> delta_component(const BasicChain<C>& c, int i);

// All allowed regular n-paths of G, lexicographic.
std::vector<ElemPath> allowed_basis(const Digraph& g, int n);

// Allowed regular n-paths from s to e.
std::vector<ElemPath> allowed_paths_between(const Digraph& g, int n, const Vertex& s,
                                            const Vertex& e);

// Join at the shared endpoint vertex (written once); bilinear.
// Throws InputError(EndpointMismatch) if any term pair disagrees.
template <class C>
BasicChain<C> concatenate(const BasicChain<C>& u, const BasicChain<C>& v);

// Coboundary d on forms over the vertex set, restricted to regular dual
// paths (irregular insertions dropped).
Form coboundary_d(const std::vector<Vertex>& verts, const Form& w);

// Dual pairing; throws InputError(DimMismatch).
Rat pair_form_chain(const Form& w, const QChain& u);
Rat pair_form_chain(const Form& w, const Chain& u);

extern template struct BasicChain<Int>;
extern template struct BasicChain<Rat>;

}  // namespace pathhom

#endif
