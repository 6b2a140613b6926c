#include "pathhom/omega.hpp"

namespace pathhom {

int PathIndexer::get(const ElemPath& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(paths.size());
    index.emplace(p, id);
    paths.push_back(p);
    return id;
}

int PathIndexer::find(const ElemPath& p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
}

QVec chain_to_qvec(const QChain& c, PathIndexer& ix) {
    QVec v;
    for (auto& [p, coef] : c.terms) v[ix.get(p)] = coef;
    return v;
}

QVec chain_to_qvec(const Chain& c, PathIndexer& ix) {
    QVec v;
    for (auto& [p, coef] : c.terms) v[ix.get(p)] = Rat(coef);
    return v;
}

QChain qvec_to_chain(const QVec& v, const PathIndexer& ix, int dim) {
    QChain c = QChain(dim);
    for (auto& [k, coef] : v) c.terms[ix.paths[k]] = coef;
    return c;
}

std::vector<Chain> omega_basis(const Digraph& g, int n) {
    if (n < 0) return {};
    std::vector<ElemPath> allowed = allowed_basis(g, n);
    if (allowed.empty()) return {};
    if (n == 0) {
        std::vector<Chain> out;
        for (auto& p : allowed) out.push_back(Chain::unit(p));
        return out;
    }

    // rows: non-allowed faces that must cancel in the boundary
    PathIndexer bad;
    std::vector<std::map<int, Int>> cols(allowed.size());
    for (size_t j = 0; j < allowed.size(); ++j) {
        const ElemPath& p = allowed[j];
        for (int i = 0; i <= n; ++i) {
            ElemPath face = p;
            face.erase(face.begin() + i);
            if (path_allowed(g, face)) continue;
            Int sign = (i % 2 == 0) ? 1 : -1;
            Int& slot = cols[j][bad.get(face)];
            slot += sign;
            if (slot == 0) cols[j].erase(bad.get(face));
        }
    }
    ZMat m(bad.size(), std::vector<Int>(allowed.size(), 0));
    for (size_t j = 0; j < allowed.size(); ++j)
        for (auto& [r, v] : cols[j]) m[r][j] = v;

    std::vector<Chain> out;
    for (auto& x : int_kernel(m, allowed.size())) {
        Chain c = Chain(n);
        for (size_t j = 0; j < allowed.size(); ++j)
            if (x[j] != 0) c.terms[allowed[j]] = x[j];
        c.canonical_sign();
        out.push_back(std::move(c));
    }
    return out;
}

bool omega_membership(const Digraph& g, const Chain& c) {
    if (c.dim < 0) throw InputError("omega membership needs dim >= 0");
    for (auto& [p, coef] : c.terms) {
        PathFlags f = classify_path(g, p);
        if (!f.regular || !f.allowed) return false;
    }
    bool by_boundary = true;
    if (c.dim > 0) {
        Chain b = boundary(c);
        for (auto& [p, coef] : b.terms)
            if (!path_allowed(g, p)) {
                by_boundary = false;
                break;
            }
    }
    // cross-check: every face component must individually stay allowed
    bool by_faces = true;
    if (c.dim > 0) {
        for (int i = 0; i <= c.dim && by_faces; ++i) {
            Chain di = delta_component(c, i);
            for (auto& [p, coef] : di.terms)
                if (!path_allowed(g, p)) {
                    by_faces = false;
                    break;
                }
        }
    }
    if (by_boundary != by_faces)
        throw PropertyFailure("face criterion disagrees with boundary criterion for " + c.str());
    return by_boundary;
}

long OmegaComplex::rank(int n) const {
    if (n == -1) return reduced ? 1 : 0;
    if (n < 0 || n > maxdim) return 0;
    return static_cast<long>(bases[n].size());
}

OmegaComplex build_complex(const Digraph& g, int maxdim, bool reduced) {
    if (maxdim < 0) throw InputError("maxdim must be >= 0");
    OmegaComplex cx;
    cx.g = g;
    cx.maxdim = maxdim;
    cx.reduced = reduced;
    long nv = static_cast<long>(g.vertices().size());
    cx.complete = (maxdim >= nv - 1);

    cx.bases.resize(maxdim + 1);
    for (int n = 0; n <= maxdim && n <= nv - 1; ++n) cx.bases[n] = omega_basis(g, n);

    cx.boundary.resize(maxdim + 1);
    if (reduced && !cx.bases[0].empty())
        cx.boundary[0] = ZMat(1, std::vector<Int>(cx.bases[0].size(), 1));

    for (int n = 1; n <= maxdim; ++n) {
        size_t rows = cx.bases[n - 1].size();
        size_t ncols = cx.bases[n].size();
        cx.boundary[n] = ZMat(rows, std::vector<Int>(ncols, 0));
        if (rows == 0 || ncols == 0) continue;

        PathIndexer ix;
        QEchelon prev;
        for (size_t i = 0; i < rows; ++i)
            prev.add(chain_to_qvec(cx.bases[n - 1][i], ix), QVec{{static_cast<int>(i), Rat(1)}});
        for (size_t j = 0; j < ncols; ++j) {
            Chain b = boundary(cx.bases[n][j]);
            QVec combo;
            if (!prev.in_span(chain_to_qvec(b, ix), &combo))
                throw PropertyFailure("boundary of an omega basis chain left the previous omega");
            for (auto& [i, v] : combo) {
                if (denominator(v) != 1)
                    throw PropertyFailure("non-integral boundary coordinate; omega basis not saturated");
                cx.boundary[n][i][j] = numerator(v);
            }
        }
    }

    // d o d == 0 on the assembled matrices (including the augmentation row)
    for (int n = 1; n <= maxdim; ++n) {
        const ZMat& a = cx.boundary[n - 1];
        const ZMat& b = cx.boundary[n];
        if (a.empty() || b.empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b[0].size(); ++j) {
                Int acc = 0;
                for (size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
                if (acc != 0) throw PropertyFailure("boundary matrices do not compose to zero");
            }
    }
    return cx;
}

}  // namespace pathhom
