#include "pathhom/cochain.hpp"

#include "pathhom/homology.hpp"

namespace pathhom {

namespace {

// Regular vertex sequences of length n+1 with exactly one non-edge
// consecutive pair. Only these members of N^n can have an allowed
// coordinate in their coboundary (a single insertion repairs at most one
// bad pair), so the rest of N^n contributes nothing to W^{n+1}.
void near_allowed_rec(const Digraph& g, ElemPath& cur, std::set<Vertex>& used, int bad, int len,
                      std::vector<ElemPath>& out) {
    if (static_cast<int>(cur.size()) == len) {
        if (bad == 1) out.push_back(cur);
        return;
    }
    for (const Vertex& v : g.vertices()) {
        if (used.count(v)) continue;
        int nb = bad;
        if (!cur.empty() && !g.has_edge(cur.back(), v)) ++nb;
        if (nb > 1) continue;
        cur.push_back(v);
        used.insert(v);
        near_allowed_rec(g, cur, used, nb, len, out);
        used.erase(v);
        cur.pop_back();
    }
}

std::vector<ElemPath> near_allowed(const Digraph& g, int n) {
    std::vector<ElemPath> out;
    if (n < 1) return out;  // a single vertex is always allowed
    ElemPath cur;
    std::set<Vertex> used;
    near_allowed_rec(g, cur, used, 0, n + 1, out);
    return out;
}

}  // namespace

CochainContext::CochainContext(const Digraph& g, int maxdim) : g_(g), maxdim_(maxdim) {
    if (maxdim < 0) throw InputError("maxdim must be >= 0");
    int top = maxdim + 1;
    ix_.resize(top + 1);
    w_.resize(top + 1);
    img_.resize(top + 1);
    dbar_rank_.assign(maxdim + 1, 0);
    h_basis_.resize(maxdim + 1);

    for (int n = 0; n <= top; ++n)
        for (auto& p : allowed_basis(g_, n)) ix_[n].get(p);

    // W^n = allowed parts of coboundaries of non-allowed regular paths
    for (int n = 1; n <= top; ++n) {
        for (auto& nu : near_allowed(g_, n - 1)) {
            Form df = coboundary_d(g_.vertices(), Form::unit(nu));
            QVec v;
            for (auto& [p, c] : df.terms) {
                int k = ix_[n].find(p);
                if (k >= 0) v[k] = c;
            }
            if (!v.empty()) w_[n].add(std::move(v));
        }
    }

    // img^n = W^n + dbar(A^{n-1}), generators tagged for witnesses
    img_[0] = w_[0];
    for (int n = 1; n <= top; ++n) {
        img_[n] = w_[n];
        for (size_t a = 0; a < ix_[n - 1].size(); ++a) {
            Form df = coboundary_d(g_.vertices(), Form::unit(ix_[n - 1].paths[a]));
            img_[n].add(to_vec(project_allowed(df), n), QVec{{static_cast<int>(a), Rat(1)}});
        }
        if (n - 1 <= maxdim) dbar_rank_[n - 1] = img_[n].rank() - w_[n].rank();
    }

    // cohomology representatives
    for (int n = 0; n <= maxdim; ++n) {
        QEchelon ker = w_[n + 1];
        std::vector<QVec> cocycles;
        for (size_t a = 0; a < ix_[n].size(); ++a) {
            Form df = coboundary_d(g_.vertices(), Form::unit(ix_[n].paths[a]));
            auto rel = ker.add(to_vec(project_allowed(df), n + 1), QVec{{static_cast<int>(a), Rat(1)}});
            if (rel) cocycles.push_back(std::move(*rel));
        }
        QEchelon mod = img_[n];
        for (auto& z : cocycles)
            if (!mod.add(z).has_value()) h_basis_[n].push_back(from_vec(z, n));
        if (static_cast<long>(h_basis_[n].size()) != h_rank(n))
            throw PropertyFailure("cohomology representative count disagrees with rank bookkeeping");
    }
}

long CochainContext::quotient_rank(int n) const {
    if (n < 0 || n > maxdim_ + 1) return 0;
    return static_cast<long>(ix_[n].size()) - w_[n].rank();
}

long CochainContext::dbar_rank(int n) const {
    if (n < 0 || n > maxdim_) return 0;
    return dbar_rank_[n];
}

long CochainContext::h_rank(int n) const {
    if (n < 0 || n > maxdim_) return 0;
    return quotient_rank(n) - dbar_rank(n) - (n > 0 ? dbar_rank(n - 1) : 0);
}

const std::vector<Form>& CochainContext::h_basis(int n) const {
    if (n < 0 || n > maxdim_) throw InputError("degree out of range for h_basis");
    return h_basis_[n];
}

QVec CochainContext::to_vec(const Form& f, int n) const {
    QVec v;
    for (auto& [p, c] : f.terms) {
        int k = ix_[n].find(p);
        if (k < 0) throw InputError("form has a non-allowed coordinate: " + path_str(p));
        v[k] = c;
    }
    return v;
}

Form CochainContext::from_vec(const QVec& v, int n) const {
    Form f = Form(n);
    for (auto& [k, c] : v) f.terms[ix_[n].paths[k]] = c;
    return f;
}

Form CochainContext::project_allowed(const Form& f) const {
    Form out = Form(f.dim);
    for (auto& [p, c] : f.terms)
        if (static_cast<int>(p.size()) == f.dim + 1 && path_regular(p) && path_allowed(g_, p))
            out.terms[p] = c;
    return out;
}

Form CochainContext::reduce_mod_w(const Form& f) const {
    int n = f.dim;
    if (n < 0 || n > maxdim_ + 1) throw InputError("degree out of range");
    return from_vec(w_[n].residue(to_vec(project_allowed(f), n)), n);
}

Form CochainContext::dbar(const Form& f) const {
    Form df = coboundary_d(g_.vertices(), project_allowed(f));
    return reduce_mod_w(project_allowed(df));
}

bool CochainContext::is_coboundary(const Form& f, Form* witness) const {
    int n = f.dim;
    if (n < 0 || n > maxdim_ + 1) throw InputError("degree out of range");
    QVec combo;
    if (!img_[n].in_span(to_vec(project_allowed(f), n), &combo)) return false;
    if (witness) *witness = from_vec(combo, n - 1);
    return true;
}

CohomologyReport cohomology(const Digraph& g, int maxdim) {
    CochainContext ctx(g, maxdim);
    CohomologyReport rep;
    for (int n = 0; n <= maxdim; ++n) rep.ranks_quotient.push_back(ctx.h_rank(n));
    HomologyResult h = homology_of(g, maxdim, Coeff::Q, false);
    for (auto& d : h.degrees) rep.ranks_dual.push_back(d.betti);
    rep.agree = (rep.ranks_quotient == rep.ranks_dual);
    if (!rep.agree)
        throw PropertyFailure("DualityMismatch: quotient cochain ranks disagree with homology");
    return rep;
}

}  // namespace pathhom
