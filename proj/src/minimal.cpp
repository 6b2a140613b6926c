#include "pathhom/minimal.hpp"

#include <functional>
#include <sstream>

namespace pathhom {

Int width(const Chain& c) {
    Int w = 0;
    for (auto& [p, v] : c.terms) w += (v < 0 ? Int(-v) : v);
    return w;
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

bool chain_leq(const Chain& u, const Chain& v) {
    if (u.dim != v.dim) throw InputError("DimMismatch: cannot compare chains of unequal dimension");
    for (auto& [p, up] : u.terms) {
        auto it = v.terms.find(p);
        Int vp = (it == v.terms.end()) ? Int(0) : it->second;
        if (iabs(up) > iabs(vp) || iabs(up - vp) > iabs(vp)) return false;
    }
    return width(u) <= width(v);
}

namespace {

// Odometer over d with d_p in the closed interval between 0 and c_p, the
// first term varying fastest and values ordered by increasing magnitude.
// visit(chain) returning true stops the scan.
template <class Visit>
void scan_dominated(const Chain& p, Visit visit) {
    std::vector<ElemPath> paths;
    std::vector<Int> coef;
    for (auto& [q, c] : p.terms) {
        paths.push_back(q);
        coef.push_back(c);
    }
    size_t m = paths.size();
    std::vector<Int> digit(m, 0);  // |digit| magnitude; actual value = sign(coef)*digit
    for (;;) {
        // advance
        size_t i = 0;
        while (i < m) {
            digit[i] += 1;
            if (digit[i] <= iabs(coef[i])) break;
            digit[i] = 0;
            ++i;
        }
        if (i == m) return;  // wrapped around: all combinations seen
        Chain cand(p.dim);
        for (size_t k = 0; k < m; ++k) {
            if (digit[k] == 0) continue;
            cand.terms[paths[k]] = coef[k] < 0 ? Int(-digit[k]) : digit[k];
        }
        if (visit(cand)) return;
    }
}

}  // namespace

MinimalityResult is_minimal(const Digraph& g, const Chain& p) {
    if (!omega_membership(g, p))
        throw InputError("NotOmegaMember: " + p.str());
    MinimalityResult res;
    res.minimal = true;
    res.witness = Chain(p.dim);
    if (p.zero()) return res;
    Int w = width(p);
    scan_dominated(p, [&](const Chain& cand) {
        if (width(cand) >= w) return false;
        if (!omega_membership(g, cand)) return false;
        res.minimal = false;
        res.witness = cand;
        return true;
    });
    return res;
}

std::vector<Chain> minimal_decompose(const Digraph& g, const Chain& c) {
    std::vector<Chain> out;
    Chain rest = c;
    while (!rest.zero()) {
        Chain m = rest;
        for (;;) {
            MinimalityResult r = is_minimal(g, m);
            if (r.minimal) break;
            m = r.witness;  // strictly smaller width; terminates
        }
        out.push_back(m);
        rest -= m;
    }
    return out;
}

namespace {

// Sign assignments over the allowed n-paths from s to e whose non-allowed
// faces cancel, i.e. the Omega-members within the stratum.
void stratum_scan(const Digraph& g, int n, const Vertex& s, const Vertex& e, int bound,
                  const std::function<void(const Chain&)>& visit) {
    std::vector<ElemPath> paths =
        (n == 0) ? std::vector<ElemPath>{{s}} : allowed_paths_between(g, n, s, e);
    if (paths.empty()) return;

    // non-allowed faces and which paths hit them
    PathIndexer faces;
    std::vector<std::vector<std::pair<int, int>>> hits(paths.size());  // (face, sign)
    for (size_t j = 0; j < paths.size(); ++j) {
        std::map<int, int> acc;
        for (int i = 0; i <= n && n > 0; ++i) {
            ElemPath f = paths[j];
            f.erase(f.begin() + i);
            if (path_allowed(g, f)) continue;
            acc[faces.get(f)] += (i % 2 == 0) ? 1 : -1;
        }
        for (auto& [f, sgn] : acc)
            if (sgn != 0) hits[j].emplace_back(f, sgn);
    }
    std::vector<int> last_touch(faces.size(), -1);
    for (size_t j = 0; j < paths.size(); ++j)
        for (auto& [f, sgn] : hits[j]) last_touch[f] = static_cast<int>(j);

    std::vector<int> coef(paths.size(), 0);
    std::vector<Int> fsum(faces.size(), 0);
    std::function<void(size_t, bool)> rec = [&](size_t j, bool seen_nonzero) {
        if (j == paths.size()) {
            if (!seen_nonzero) return;
            Chain c(n);
            for (size_t k = 0; k < paths.size(); ++k)
                if (coef[k] != 0) c.terms[paths[k]] = coef[k];
            visit(c);
            return;
        }
        for (int v = seen_nonzero ? -bound : 0; v <= bound; ++v) {
            coef[j] = v;
            for (auto& [f, sgn] : hits[j]) fsum[f] += Int(sgn) * v;
            bool ok = true;
            for (auto& [f, sgn] : hits[j])
                if (last_touch[f] == static_cast<int>(j) && fsum[f] != 0) ok = false;
            if (ok) rec(j + 1, seen_nonzero || v != 0);
            for (auto& [f, sgn] : hits[j]) fsum[f] -= Int(sgn) * v;
        }
        coef[j] = 0;
    };
    rec(0, false);
}

}  // namespace

std::vector<Chain> enumerate_minimal(const Digraph& g, int n, const std::optional<Vertex>& s,
                                     const std::optional<Vertex>& e, int coeff_bound) {
    if (n < 0) throw InputError("dimension must be >= 0");
    std::vector<Chain> out;
    std::set<std::string> seen;
    auto stratum = [&](const Vertex& sv, const Vertex& ev) {
        stratum_scan(g, n, sv, ev, coeff_bound, [&](const Chain& c) {
            if (!is_minimal(g, c).minimal) return;
            Chain canon = c.canonical_sign();
            if (seen.insert(canon.str()).second) out.push_back(canon);
        });
    };
    for (auto& sv : g.vertices()) {
        if (s && *s != sv) continue;
        if (n == 0) {
            if (!e || *e == sv) stratum(sv, sv);
            continue;
        }
        for (auto& ev : g.vertices()) {
            if (e && *e != ev) continue;
            if (sv != ev) stratum(sv, ev);
        }
    }
    return out;
}

Digraph supp(const Chain& p) {
    std::set<Vertex> verts;
    std::set<std::pair<Vertex, Vertex>> edges;
    auto eat = [&](const ElemPath& q, bool with_vertices) {
        for (auto& v : q)
            if (with_vertices) verts.insert(v);
        for (size_t i = 0; i + 1 < q.size(); ++i) edges.insert({q[i], q[i + 1]});
    };
    for (auto& [q, c] : p.terms) eat(q, true);
    for (auto& [q, c] : boundary(p).terms) eat(q, false);
    return Digraph::validate("supp", {verts.begin(), verts.end()}, {edges.begin(), edges.end()});
}

DistanceProfile distance_profile(const Chain& p) {
    if (p.terms.empty()) throw InputError("NoCommonEndpoints: empty chain");
    DistanceProfile d;
    d.n = p.dim;
    d.s = p.terms.begin()->first.front();
    d.e = p.terms.begin()->first.back();
    for (auto& [q, c] : p.terms) {
        if (q.front() != d.s || q.back() != d.e)
            throw InputError("NoCommonEndpoints: terms disagree on endpoints");
        for (size_t i = 0; i < q.size(); ++i) {
            auto it = d.d_s.find(q[i]);
            if (it == d.d_s.end() || it->second > static_cast<int>(i)) d.d_s[q[i]] = static_cast<int>(i);
            int co = d.n - static_cast<int>(i);
            auto jt = d.d_e.find(q[i]);
            if (jt == d.d_e.end() || jt->second > co) d.d_e[q[i]] = co;
        }
    }
    for (auto& [v, k] : d.d_s)
        if (k == 1) d.s1.insert(v);
    for (auto& [v, k] : d.d_e) {
        if (k == 1) d.e1.insert(v);
        if (k == 2) d.e2.insert(v);
    }
    return d;
}

namespace {

// Is every nonzero v in Omega with v < u~ proportional to u~? The search
// space is the dominated box, where v < u~ forces width(v) <= width(u~),
// so the box scan is exhaustive.
bool essentially_minimal(const Digraph& g, const Chain& ut) {
    bool ok = true;
    scan_dominated(ut, [&](const Chain& cand) {
        if (cand == ut) return false;
        // proportional iff full support with one common ratio
        if (cand.terms.size() == ut.terms.size()) {
            Rat ratio = 0;
            bool prop = true;
            for (auto& [p, c] : cand.terms) {
                auto it = ut.terms.find(p);
                if (it == ut.terms.end()) {
                    prop = false;
                    break;
                }
                Rat r = Rat(c) / Rat(it->second);
                if (ratio == 0)
                    ratio = r;
                else if (r != ratio) {
                    prop = false;
                    break;
                }
            }
            if (prop) return false;
        }
        if (!omega_membership(g, cand)) return false;
        ok = false;
        return true;
    });
    return ok;
}

}  // namespace

CompletionResult completions(const Digraph& g, const Chain& u, Int width_bound) {
    for (auto& [p, c] : u.terms) {
        PathFlags f = classify_path(g, p);
        if (!f.allowed || !f.regular) throw InputError("completion input must be allowed and regular");
    }
    CompletionResult res;
    res.bound = (width_bound < 0) ? Int(4) * width(u) : width_bound;
    if (u.zero()) return res;

    std::vector<ElemPath> paths = allowed_basis(g, u.dim);
    size_t m = paths.size();
    std::vector<Int> base(m, 0);
    for (size_t j = 0; j < m; ++j) {
        auto it = u.terms.find(paths[j]);
        if (it != u.terms.end()) base[j] = it->second;
    }

    std::vector<Chain> pool;
    std::vector<Int> coef(m, 0);
    std::function<void(size_t, Int)> rec = [&](size_t j, Int budget) {
        if (j == m) {
            Chain cand(u.dim);
            for (size_t k = 0; k < m; ++k)
                if (coef[k] != 0) cand.terms[paths[k]] = coef[k];
            if (!cand.zero() && omega_membership(g, cand)) pool.push_back(cand);
            return;
        }
        // coordinate j ranges over values dominating base[j], width-bounded
        Int lo = iabs(base[j]);
        if (lo > budget) {
            res.bound_hit = true;
            return;
        }
        for (Int mag = lo; mag <= budget; ++mag) {
            if (mag == 0) {
                coef[j] = 0;
                rec(j + 1, budget);
                continue;
            }
            if (base[j] >= 0) {
                coef[j] = mag;
                rec(j + 1, budget - mag);
            }
            if (base[j] <= 0) {
                coef[j] = -mag;
                rec(j + 1, budget - mag);
            }
        }
        coef[j] = 0;
    };
    rec(0, res.bound);

    for (auto& ut : pool) {
        if (width(ut) == res.bound) res.bound_hit = true;  // enumeration touched the ceiling
        if (!chain_leq(u, ut)) continue;
        if (!essentially_minimal(g, ut)) continue;
        // must also be minimal among the completions themselves: a strictly
        // smaller completion (e.g. the unscaled copy of a multiple) knocks
        // this one out even when proportional
        bool least = true;
        for (auto& v : pool) {
            if (v == ut) continue;
            if (chain_leq(u, v) && chain_leq(v, ut)) {
                least = false;
                break;
            }
        }
        if (least) res.completions.push_back(ut);
    }
    return res;
}

std::string StructureReport::str() const {
    std::ostringstream os;
    os << "S=" << s << " E=" << e << " n=" << n << "\n";
    for (auto& [a, c] : family_a) os << "  A[alpha=" << a << "] = " << c.str() << "\n";
    for (auto& [b, c] : family_b) os << "  B[beta=" << b << "] = " << c.str() << "\n";
    if (family_c) os << "  C = " << family_c->str() << "\n";
    for (auto& v : violations) os << "  violation: " << v << "\n";
    os << (pass ? "  pass" : "  FAIL") << "\n";
    return os.str();
}

StructureReport structure_decompose(const Digraph& g, const Chain& p) {
    StructureReport rep;
    MinimalityResult mr = is_minimal(g, p);
    if (!mr.minimal) {
        rep.violations.push_back("StructureViolation: input is not minimal; witness " +
                                 mr.witness.str());
        return rep;
    }
    for (auto& [q, c] : p.terms)
        if (c != 1 && c != -1)
            rep.violations.push_back("StructureViolation: coefficient " + c.str() + " on " +
                                     path_str(q));

    DistanceProfile prof = distance_profile(p);
    rep.s = prof.s;
    rep.e = prof.e;
    rep.n = prof.n;
    Digraph sup = supp(p);

    // group boundary terms by endpoints
    std::map<std::pair<Vertex, Vertex>, Chain> groups;
    for (auto& [q, c] : boundary(p).terms) {
        auto key = std::make_pair(q.front(), q.back());
        auto [it, fresh] = groups.try_emplace(key, Chain(p.dim - 1));
        it->second.terms[q] = c;
    }
    Chain resum(p.dim - 1);
    for (auto& [key, ch] : groups) {
        auto& [a, b] = key;
        if (a == prof.s && b == prof.e) {
            rep.family_c = ch;
        } else if (a == prof.s && prof.e1.count(b)) {
            rep.family_a[b] = ch;
        } else if (b == prof.e && prof.s1.count(a)) {
            rep.family_b[a] = ch;
        } else {
            rep.violations.push_back("StructureViolation: boundary group (" + a + "," + b +
                                     ") outside the three families");
        }
        resum += ch;
    }
    if (!(resum == boundary(p)))
        rep.violations.push_back("StructureViolation: family regrouping does not resum");

    auto certify = [&](const Vertex& a, const Vertex& b, const Chain& ch, const char* fam) {
        if (!omega_membership(sup, ch)) {
            rep.violations.push_back(std::string("StructureViolation: family ") + fam + " member (" +
                                     a + "," + b + ") not in Omega(supp)");
            return;
        }
        if (!is_minimal(sup, ch).minimal)
            rep.violations.push_back(std::string("StructureViolation: family ") + fam + " member (" +
                                     a + "," + b + ") not minimal in supp");
        auto all = enumerate_minimal(sup, p.dim - 1, a, b);
        if (all.size() != 1)
            rep.violations.push_back(std::string("StructureViolation: family ") + fam + " member (" +
                                     a + "," + b + ") not unique up to sign: " +
                                     std::to_string(all.size()) + " found");
    };
    for (auto& [a, ch] : rep.family_a) certify(rep.s, a, ch, "A");
    for (auto& [b, ch] : rep.family_b) certify(b, rep.e, ch, "B");
    if (rep.family_c) {
        // |I_P| <= 1: the (S,E) part is a single minimal path
        if (!omega_membership(sup, *rep.family_c) || !is_minimal(sup, *rep.family_c).minimal)
            rep.violations.push_back("StructureViolation: (S,E) part is not a single minimal path");
    }

    // each minimal 2-face with fixed endpoints is unique in supp
    if (p.dim >= 2) {
        for (auto& a : sup.vertices())
            for (auto& b : sup.vertices()) {
                if (a == b) continue;
                auto faces = enumerate_minimal(sup, 2, a, b);
                if (faces.size() > 1)
                    rep.violations.push_back("StructureViolation: " + std::to_string(faces.size()) +
                                             " minimal 2-faces from " + a + " to " + b);
            }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

AcyclicCertificate acyclic_certify(const Digraph& g, const Chain& p) {
    if (!omega_membership(g, p)) throw InputError("acyclic_certify needs an Omega member");
    AcyclicCertificate cert;
    cert.support = supp(p);
    int top = static_cast<int>(cert.support.vertices().size()) - 1;
    cert.hom = homology_of(cert.support, top, Coeff::Z, true);
    cert.pass = true;
    for (auto& d : cert.hom.degrees)
        if (d.betti != 0 || !d.torsion.empty()) cert.pass = false;
    return cert;
}

AugmentSplit augment_split(const Digraph& g, const Chain& p,
                           const std::optional<Vertex>& forced_alpha) {
    AugmentSplit out;
    if (!omega_membership(g, p)) throw InputError("augment_split needs an Omega member");
    if (p.dim < 2) throw InputError("augment_split needs length >= 2");

    DistanceProfile prof = distance_profile(p);
    Digraph sup = supp(p);

    if (prof.e1.size() < 2 && !forced_alpha) {
        out.trivial = true;
        out.augmented = sup;
        out.p1 = p;
        out.p1_minimal = is_minimal(sup, p).minimal;
        out.p2_minimal = true;
        out.p2 = Chain(p.dim);
        out.y1 = sup;
        out.y2 = Digraph::validate("empty", {}, {});
        out.z = out.y2;
        out.mv = mv_pair_check(out.augmented, out.y1, out.y1, p.dim);
        out.pass = out.mv.pass;
        return out;
    }

    std::vector<Vertex> candidates;
    if (forced_alpha)
        candidates.push_back(*forced_alpha);
    else
        candidates.assign(prof.e1.begin(), prof.e1.end());

    for (auto& alpha : candidates) {
        AugmentSplit trial;
        trial.alpha = alpha;
        trial.p1 = Chain(p.dim);
        trial.p2 = Chain(p.dim);
        for (auto& [q, c] : p.terms) {
            if (q[p.dim - 1] == alpha)
                trial.p1.terms[q] = c;
            else
                trial.p2.terms[q] = c;
        }
        if (trial.p1.zero() || trial.p2.zero()) {
            trial.failures.push_back("split at " + alpha + " is degenerate");
            out = trial;
            continue;
        }
        // gamma -> E for gamma in E_2 meeting P1 without the edge
        std::set<Vertex> v1;
        for (auto& [q, c] : trial.p1.terms) v1.insert(q.begin(), q.end());
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto& [u, v] : sup.edges()) edges.emplace_back(u, v);
        for (auto& gamma : prof.e2)
            if (v1.count(gamma) && !sup.has_edge(gamma, prof.e)) {
                edges.emplace_back(gamma, prof.e);
                trial.added_edges.emplace_back(gamma, prof.e);
            }
        trial.augmented = Digraph::validate("augmented", sup.vertices(), edges);

        // both parts must survive in Omega of the augmented graph; minimality
        // is recorded but does not veto the split (a non-minimal input can
        // hand one part a smaller Omega member and the split is still valid)
        if (!omega_membership(trial.augmented, trial.p1))
            trial.failures.push_back("P1 not in Omega of the augmented graph");
        if (!omega_membership(trial.augmented, trial.p2))
            trial.failures.push_back("P2 not in Omega of the augmented graph");
        if (!trial.failures.empty()) {
            out = trial;
            continue;
        }
        trial.p1_minimal = is_minimal(trial.augmented, trial.p1).minimal;
        trial.p2_minimal = is_minimal(trial.augmented, trial.p2).minimal;
        trial.y1 = supp(trial.p1);
        trial.y2 = supp(trial.p2);
        trial.z = subgraph_combine(trial.y1, trial.y2, CombineMode::Intersection);
        trial.mv = mv_pair_check(trial.augmented, trial.y1, trial.y2, p.dim);
        if (!trial.mv.pass) trial.failures.push_back("Mayer-Vietoris pair check failed");
        if (distance_profile(trial.p2).e1.size() >= prof.e1.size())
            trial.failures.push_back("E_1 did not shrink on P2");
        out = trial;
        if (trial.failures.empty()) {
            out.pass = true;
            return out;
        }
    }
    out.failures.push_back("NoValidChoice: no alpha in E_1 yields a valid split");
    return out;
}

}  // namespace pathhom
