#include "pathhom/products.hpp"

#include <functional>
#include <sstream>

#include "pathhom/minimal.hpp"

namespace pathhom {

namespace {

ElemPath slice(const ElemPath& p, int from, int to) {
    return ElemPath(p.begin() + from, p.begin() + to + 1);
}

// staircases from (0,0) to (p,q); L = sum over horizontal steps of the
// height at which the step is taken
template <class C>
void cross_elem(const ElemPath& x, const ElemPath& y, const C& coeff, BasicChain<C>& out) {
    int p = (int)x.size() - 1, q = (int)y.size() - 1;
    ElemPath z;
    z.reserve(p + q + 1);
    std::function<void(int, int, int)> rec = [&](int i, int j, int cells) {
        z.push_back(pair_vertex(x[i], y[j]));
        if (i == p && j == q) {
            C c = (cells % 2 ? C(-1) : C(1)) * coeff;
            out.add(z, c);
        } else {
            if (i < p) rec(i + 1, j, cells + j);  // horizontal at height j
            if (j < q) rec(i, j + 1, cells);
        }
        z.pop_back();
    };
    rec(0, 0, 0);
}

template <class C>
BasicChain<C> cross_impl(const BasicChain<C>& u, const BasicChain<C>& v) {
    BasicChain<C> out(u.dim + v.dim);
    for (const auto& [x, cx] : u.terms)
        for (const auto& [y, cy] : v.terms) cross_elem(x, y, C(cx * cy), out);
    return out;
}

Chain diagonal_raw(const Chain& u, bool transposed) {
    Chain out(u.dim);
    for (int i = 0; i <= u.dim; ++i) out += diagonal_slice(u, i, transposed);
    return out;
}

// clear denominators for an integral membership certificate
Chain integerize(const QChain& c) {
    Int lcm = 1;
    for (const auto& [p, r] : c.terms) {
        Int d = boost::multiprecision::denominator(r);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    Chain out(c.dim);
    for (const auto& [p, r] : c.terms)
        out.add(p, boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r)));
    return out;
}

// Solve dv = z with v supported on allowed (z.dim+1)-paths of prod; the
// face coefficients on non-allowed paths are forced to zero because only
// allowed faces carry a right-hand side.
std::optional<QChain> solve_boundary(const Digraph& prod, const QChain& z) {
    int n1 = z.dim + 1;
    std::vector<ElemPath> cols = allowed_basis(prod, n1);
    PathIndexer rows;
    QEchelon ech;
    for (size_t k = 0; k < cols.size(); ++k) {
        QChain bc = boundary(QChain::unit(cols[k]));
        ech.add(chain_to_qvec(bc, rows), {{(int)k, Rat(1)}});
    }
    QVec combo;
    QVec bz;
    {
        QChain zz = z;
        bz = chain_to_qvec(zz, rows);
    }
    if (!ech.in_span(bz, &combo)) return std::nullopt;
    QChain v(n1);
    for (const auto& [k, c] : combo) v.add(cols[k], c);
    if (!(boundary(v) == z)) return std::nullopt;
    return v;
}

}  // namespace

Chain cross_product(const Chain& u, const Chain& v) { return cross_impl(u, v); }
QChain cross_product(const QChain& u, const QChain& v) { return cross_impl(u, v); }

Form star_product(const Form& a, const Form& b) {
    Form out(a.dim + b.dim);
    for (const auto& [x, cx] : a.terms)
        for (const auto& [y, cy] : b.terms) {
            ElemPath z;
            z.reserve(x.size() + y.size() - 1);
            for (const auto& i : x) z.push_back(pair_vertex(i, y.front()));
            for (size_t j = 1; j < y.size(); ++j) z.push_back(pair_vertex(x.back(), y[j]));
            if (path_regular(z)) out.add(z, Rat(cx * cy));
        }
    return out;
}

Chain diagonal_slice(const Chain& u, int i, bool transposed) {
    int n = u.dim;
    Chain out(n);
    for (const auto& [path, c] : u.terms) {
        Chain a = Chain::unit(slice(path, 0, i));
        Chain b = Chain::unit(slice(path, i, n));
        if (transposed) {
            Int sgn = ((Int)i * (n - i)) % 2 ? -1 : 1;
            out += (c * sgn) * cross_product(b, a);
        } else {
            out += c * cross_product(a, b);
        }
    }
    return out;
}

Chain diagonal(const Digraph& g, const Chain& u, bool transposed) {
    if (!omega_membership(g, u))
        throw InputError("NotOmegaMember: diagonal input is not in Omega_" +
                         std::to_string(u.dim));
    Chain out = diagonal_raw(u, transposed);
    Digraph prod = cartesian_product(g, g);
    if (!omega_membership(prod, out))
        throw PropertyFailure("diagonal image escaped Omega of the product");
    return out;
}

Form concat_forms(const Form& a, const Form& b) {
    Form out(a.dim + b.dim);
    for (const auto& [x, cx] : a.terms)
        for (const auto& [y, cy] : b.terms) {
            if (x.back() != y.front()) continue;
            ElemPath z = x;
            z.insert(z.end(), y.begin() + 1, y.end());
            if (path_regular(z)) out.add(z, Rat(cx * cy));
        }
    return out;
}

Form cup(const CochainContext& ctx, const Form& a, const Form& b) {
    Form ra = ctx.reduce_mod_w(ctx.project_allowed(a));
    Form rb = ctx.reduce_mod_w(ctx.project_allowed(b));
    Form prod = concat_forms(ra, rb);
    return ctx.reduce_mod_w(ctx.project_allowed(prod));
}

Form cup(const Digraph& g, const Form& a, const Form& b) {
    CochainContext ctx(g, a.dim + b.dim);
    return cup(ctx, a, b);
}

QChain GradedMapF::apply(const QChain& u) const {
    int n = u.dim;
    if (u.zero()) return QChain(n + 1);
    if (n < 0 || n > maxdim || basis[n].empty())
        throw PropertyFailure("chain homotopy applied outside its basis span");
    PathIndexer ix;
    QEchelon ech;
    for (size_t k = 0; k < basis[n].size(); ++k)
        ech.add(chain_to_qvec(basis[n][k], ix), {{(int)k, Rat(1)}});
    QVec combo;
    QChain uu = u;
    if (!ech.in_span(chain_to_qvec(uu, ix), &combo))
        throw PropertyFailure("chain homotopy applied outside its basis span");
    QChain out(n + 1);
    for (const auto& [k, c] : combo) out += c * image[n][k];
    return out;
}

GradedMapF build_chain_homotopy(const Digraph& g, int maxdim) {
    GradedMapF F;
    F.g = g;
    F.product = cartesian_product(g, g);
    F.maxdim = maxdim;
    F.basis.resize(maxdim + 1);
    F.image.resize(maxdim + 1);

    // degree 0: one fixed cycle for every vertex
    QChain f0(1);
    if (!g.edges().empty()) {
        const auto& [a, b] = g.edges().front();  // lexicographically smallest
        F.base_edge = Edge{a, b};
        Chain ea = Chain::unit({a}), eb = Chain::unit({b}), eab = Chain::unit({a, b});
        Chain c = cross_product(ea, eab) - cross_product(eb, eab) + cross_product(eab, eb) -
                  cross_product(eab, ea);
        f0 = to_rational(c);
    }
    for (const auto& v : g.vertices()) {
        F.basis[0].push_back(Chain::unit({v}));
        F.image[0].push_back(f0);
    }

    if (maxdim >= 1) {
        for (const auto& [a, b] : g.edges()) {
            Chain e = Chain::unit({a, b});
            F.basis[1].push_back(e);
            F.image[1].push_back(to_rational(cross_product(e, e)));
        }
    }

    for (int n = 2; n <= maxdim; ++n) {
        long target = (long)omega_basis(g, n).size();
        if (target == 0) continue;
        // basis of minimal paths; top up from minimal summands of the raw
        // Omega basis if the bound-1 enumeration does not span
        std::vector<Chain> candidates = enumerate_minimal(g, n);
        if ((long)candidates.size() < target)
            for (const auto& w : omega_basis(g, n))
                for (const auto& piece : minimal_decompose(g, w))
                    candidates.push_back(piece);
        PathIndexer ix;
        QEchelon span;
        for (const auto& u : candidates) {
            Chain uu = u;
            if (!span.add(chain_to_qvec(uu, ix))) {
                F.basis[n].push_back(u);
                if (span.rank() == target) break;
            }
        }
        if (span.rank() != target)
            throw PropertyFailure("SolveFailure: minimal paths do not span Omega_" +
                                  std::to_string(n));

        for (const auto& u : F.basis[n]) {
            QChain fdu = F.apply(to_rational(boundary(u)));
            QChain z = to_rational(diagonal_raw(u, true)) - to_rational(diagonal_raw(u, false));
            z -= fdu;
            if (!boundary(z).zero())
                throw PropertyFailure("SolveFailure: homotopy defect is not a cycle at " +
                                      u.str());
            std::optional<QChain> v;
            if (!z.zero()) {
                Digraph s = supp(u);
                v = solve_boundary(cartesian_product(s, s), z);
                if (!v) v = solve_boundary(F.product, z);
                if (!v)
                    throw PropertyFailure("SolveFailure: no preimage in Omega_" +
                                          std::to_string(n + 1) + " for " + u.str());
            } else {
                v = QChain(n + 2);
            }
            F.image[n].push_back(*v);
        }
    }
    return F;
}

bool verify_chain_homotopy(const GradedMapF& f) {
    for (int n = 0; n <= f.maxdim; ++n) {
        for (size_t k = 0; k < f.basis[n].size(); ++k) {
            const Chain& u = f.basis[n][k];
            QChain lhs = boundary(f.image[n][k]);
            if (n > 0) lhs += f.apply(to_rational(boundary(u)));
            QChain rhs =
                to_rational(diagonal_raw(u, true)) - to_rational(diagonal_raw(u, false));
            if (!(lhs == rhs)) return false;
            if (!f.image[n][k].zero() &&
                !omega_membership(f.product, integerize(f.image[n][k])))
                return false;
        }
    }
    return true;
}

std::string SkewReport::str() const {
    std::ostringstream os;
    os << "skew check p=" << p << " q=" << q << " (h^p=" << hp << ", h^q=" << hq << "): "
       << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& pr : pairs)
        os << "  pair (" << pr.i << "," << pr.j << "): "
           << (pr.coboundary ? "coboundary, witness " + pr.witness.str() : "NOT a coboundary")
           << "\n";
    return os.str();
}

SkewReport skew_check(const Digraph& g, int p, int q) {
    SkewReport rep;
    rep.p = p;
    rep.q = q;
    CochainContext ctx(g, p + q);
    rep.hp = ctx.h_rank(p);
    rep.hq = ctx.h_rank(q);
    bool neg = (p * q) % 2 != 0;
    rep.pass = true;
    for (size_t i = 0; i < ctx.h_basis(p).size(); ++i)
        for (size_t j = 0; j < ctx.h_basis(q).size(); ++j) {
            const Form& phi = ctx.h_basis(p)[i];
            const Form& psi = ctx.h_basis(q)[j];
            Form c = cup(ctx, phi, psi);
            Form d = cup(ctx, psi, phi);
            Form comm = neg ? c + d : c - d;
            SkewPair pr;
            pr.i = (int)i;
            pr.j = (int)j;
            pr.coboundary = ctx.is_coboundary(comm, &pr.witness);
            rep.pass = rep.pass && pr.coboundary;
            rep.pairs.push_back(pr);
        }
    return rep;
}

}  // namespace pathhom
