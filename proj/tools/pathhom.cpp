#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <random>

#include "pathhom/cochain.hpp"
#include "pathhom/homotopy.hpp"
#include "pathhom/io.hpp"
#include "pathhom/minimal.hpp"
#include "pathhom/products.hpp"

using namespace pathhom;

namespace {

struct Opts {
    std::string format = "human";
    int maxdim = 3;
    int dim = 2;
    std::string coeff = "z";
    bool reduced = false;
    bool transposed = false;
    unsigned seed = 0;
    int count = 1000;
    int p = 1, q = 1;
    int coeff_bound = 1;
    std::string kind = "cartesian";
    std::string mode = "one-step";
    std::string alpha;
    std::vector<std::string> paths;
    std::vector<std::string> steps;
};

bool json_out(const Opts& o) { return o.format == "json"; }

Coeff coeff_of(const Opts& o) {
    if (o.coeff == "z") return Coeff::Z;
    if (o.coeff == "q") return Coeff::Q;
    throw InputError("coeff must be z or q");
}

void emit_digraph(const Digraph& g, const Opts& o) {
    std::cout << (json_out(o) ? digraph_to_json(g) : digraph_to_text(g)) << "\n";
}

void emit_chain(const Chain& c, const Opts& o) {
    std::cout << (json_out(o) ? chain_to_json(c) : chain_to_text(c)) << "\n";
}

void emit_form(const Form& f, const Opts& o) {
    if (json_out(o))
        std::cout << form_to_json(f) << "\n";
    else
        std::cout << f.str() << "\n";
}

int cmd_homology(const Opts& o) {
    HomologyResult h = homology_of(load_digraph(o.paths[0]), o.maxdim, coeff_of(o), o.reduced);
    std::cout << (json_out(o) ? homology_report_json(h) : h.str()) << "\n";
    return 0;
}

int cmd_cohomology(const Opts& o) {
    CohomologyReport rep = cohomology(load_digraph(o.paths[0]), o.maxdim);
    for (size_t n = 0; n < rep.ranks_quotient.size(); ++n)
        std::cout << "H^" << n << " rank " << rep.ranks_quotient[n] << " (dual "
                  << rep.ranks_dual[n] << ")\n";
    return rep.agree ? 0 : 1;
}

int cmd_omega(const Opts& o) {
    for (const Chain& c : omega_basis(load_digraph(o.paths[0]), o.dim)) emit_chain(c, o);
    return 0;
}

int cmd_minimal(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    for (const Chain& c : enumerate_minimal(g, o.dim, {}, {}, o.coeff_bound)) emit_chain(c, o);
    return 0;
}

int cmd_is_minimal(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    MinimalityResult r = is_minimal(g, load_chain(o.paths[1], g));
    if (r.minimal) {
        std::cout << "minimal\n";
        return 0;
    }
    std::cout << "not minimal; witness:\n";
    emit_chain(r.witness, o);
    return 1;
}

int cmd_decompose(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    for (const Chain& part : minimal_decompose(g, load_chain(o.paths[1], g)))
        emit_chain(part, o);
    return 0;
}

int cmd_supp(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    emit_digraph(supp(load_chain(o.paths[1], g)), o);
    return 0;
}

int cmd_structure(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    StructureReport r = structure_decompose(g, load_chain(o.paths[1], g));
    std::cout << (json_out(o) ? structure_report_json(r) : r.str()) << "\n";
    return r.pass ? 0 : 1;
}

int cmd_acyclic(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    AcyclicCertificate c = acyclic_certify(g, load_chain(o.paths[1], g));
    std::cout << (json_out(o) ? homology_report_json(c.hom) : c.hom.str()) << "\n";
    return c.pass ? 0 : 1;
}

int cmd_augment_split(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    std::optional<Vertex> forced;
    if (!o.alpha.empty()) forced = o.alpha;
    AugmentSplit s = augment_split(g, load_chain(o.paths[1], g), forced);
    if (s.trivial) {
        std::cout << "trivial split (|E_1| < 2)\n";
        return s.pass ? 0 : 1;
    }
    std::cout << "alpha = " << s.alpha << "\n";
    for (const auto& [u, v] : s.added_edges) std::cout << "added edge " << u << " -> " << v << "\n";
    std::cout << "P1 (minimal: " << (s.p1_minimal ? "yes" : "no") << ") = " << s.p1.str() << "\n";
    std::cout << "P2 (minimal: " << (s.p2_minimal ? "yes" : "no") << ") = " << s.p2.str() << "\n";
    std::cout << (json_out(o) ? mv_report_json(s.mv) : s.mv.str()) << "\n";
    for (const auto& f : s.failures) std::cout << "failure: " << f << "\n";
    return s.pass ? 0 : 1;
}

int cmd_product(const Opts& o) {
    Digraph a = load_digraph(o.paths[0]), b = load_digraph(o.paths[1]);
    if (o.kind == "cartesian")
        emit_digraph(cartesian_product(a, b), o);
    else if (o.kind == "strong")
        emit_digraph(strong_product(a, b), o);
    else
        throw InputError("product kind must be cartesian or strong");
    return 0;
}

int cmd_closure(const Opts& o) {
    emit_digraph(transitive_closure(load_digraph(o.paths[0])), o);
    return 0;
}

int cmd_iso(const Opts& o) {
    auto iso = is_isomorphic(load_digraph(o.paths[0]), load_digraph(o.paths[1]));
    if (!iso) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << "isomorphic\n";
    for (const auto& [u, v] : *iso) std::cout << "  " << u << " => " << v << "\n";
    return 0;
}

int cmd_cross(const Opts& o) {
    Digraph a = load_digraph(o.paths[0]), b = load_digraph(o.paths[1]);
    emit_chain(cross_product(load_chain(o.paths[2], a), load_chain(o.paths[3], b)), o);
    return 0;
}

int cmd_star(const Opts& o) {
    Digraph a = load_digraph(o.paths[0]), b = load_digraph(o.paths[1]);
    emit_form(star_product(load_form(o.paths[2], a), load_form(o.paths[3], b)), o);
    return 0;
}

int cmd_cup(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    emit_form(cup(g, load_form(o.paths[1], g), load_form(o.paths[2], g)), o);
    return 0;
}

int cmd_diagonal(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]);
    emit_chain(diagonal(g, load_chain(o.paths[1], g), o.transposed), o);
    return 0;
}

int cmd_chain_homotopy(const Opts& o) {
    GradedMapF f = build_chain_homotopy(load_digraph(o.paths[0]), o.maxdim);
    bool ok = verify_chain_homotopy(f);
    for (int n = 0; n <= f.maxdim; ++n)
        std::cout << "degree " << n << ": basis " << f.basis[n].size() << "\n";
    std::cout << (ok ? "verified" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_skew_check(const Opts& o) {
    SkewReport r = skew_check(load_digraph(o.paths[0]), o.p, o.q);
    std::cout << (json_out(o) ? skew_report_json(r) : r.str()) << "\n";
    return r.pass ? 0 : 1;
}

int cmd_map_check(const Opts& o) {
    Digraph a = load_digraph(o.paths[0]), b = load_digraph(o.paths[1]);
    bool ok = check_digraph_map(load_vertex_map(o.paths[2], a, b));
    std::cout << (ok ? "digraph map" : "NOT a digraph map") << "\n";
    return ok ? 0 : 1;
}

int cmd_homotopy_check(const Opts& o) {
    Digraph a = load_digraph(o.paths[0]), b = load_digraph(o.paths[1]);
    bool ok = check_homotopy(load_homotopy(o.paths[2], a, b));
    std::cout << (ok ? "homotopy verified" : "NOT a homotopy") << "\n";
    return ok ? 0 : 1;
}

int cmd_retract_check(const Opts& o) {
    Digraph g = load_digraph(o.paths[0]), h = load_digraph(o.paths[1]);
    VertexMap r = load_vertex_map(o.paths[2], g, h);
    RetractMode mode;
    if (o.mode == "one-step")
        mode = RetractMode::OneStep;
    else if (o.mode == "sequence")
        mode = RetractMode::Sequence;
    else
        throw InputError("mode must be one-step or sequence");
    std::vector<VertexMap> seq;
    for (const auto& p : o.steps) seq.push_back(load_vertex_map(p, g, g));
    bool ok = check_retraction(g, h, r, mode, seq);
    std::cout << (ok ? "deformation retraction verified" : "NOT a deformation retraction")
              << "\n";
    return ok ? 0 : 1;
}

int cmd_mv(const Opts& o, bool les) {
    Digraph x = load_digraph(o.paths[0]);
    Digraph y1 = load_digraph(o.paths[1]), y2 = load_digraph(o.paths[2]);
    MVReport r = les ? mv_les_verify(x, y1, y2, o.maxdim) : mv_pair_check(x, y1, y2, o.maxdim);
    std::cout << (json_out(o) ? mv_report_json(r) : r.str()) << "\n";
    return r.pass ? 0 : 1;
}

int cmd_kunneth(const Opts& o) {
    KunnethReport r = kunneth_check(load_digraph(o.paths[0]), load_digraph(o.paths[1]), o.maxdim);
    for (size_t k = 0; k < r.product_betti.size(); ++k)
        std::cout << "b_" << k << ": product " << r.product_betti[k] << " convolution "
                  << r.convolution[k] << "\n";
    std::cout << (r.pass ? "pass" : "FAIL") << "\n";
    return r.pass ? 0 : 1;
}

// ---- fuzzing ----

Digraph random_digraph(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 7);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = nv(rng);
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < 0.3) es.push_back({vs[i], vs[j]});
    return Digraph::validate("fuzz", vs, es);
}

// first violated property among the fuzzed theorem statements, or empty
std::string fuzz_violation(const Digraph& g, bool acyclic_only) {
    for (int n = 1; n <= 3; ++n)
        for (const Chain& p : enumerate_minimal(g, n)) {
            if (acyclic_only) {
                if (!acyclic_certify(g, p).pass)
                    return "supp not acyclic for " + p.str();
                continue;
            }
            DistanceProfile prof;
            try {
                prof = distance_profile(p);
            } catch (const InputError& e) {
                return std::string("endpoints: ") + e.what() + " for " + p.str();
            }
            for (const auto& [q, c] : p.terms)
                if (c != 1 && c != -1) return "coefficient " + p.str();
            StructureReport sr = structure_decompose(g, p);
            if (!sr.pass) return "structure: " + sr.violations.front() + " for " + p.str();
            Digraph sup = supp(p);
            for (const auto& [u, v] : sup.edges()) {
                if (prof.d_s.count(u) && prof.d_s.count(v) &&
                    std::abs(prof.d_s.at(u) - prof.d_s.at(v)) > 2)
                    return "d_S edge bound on (" + u + "," + v + ") for " + p.str();
                if (prof.d_e.count(u) && prof.d_e.count(v) &&
                    std::abs(prof.d_e.at(u) - prof.d_e.at(v)) > 2)
                    return "d_E edge bound on (" + u + "," + v + ") for " + p.str();
            }
        }
    return "";
}

// greedy shrink by edge then vertex deletion, preserving some violation
Digraph shrink(Digraph g, bool acyclic_only) {
    bool again = true;
    while (again) {
        again = false;
        for (const auto& [u, v] : g.edges()) {
            std::vector<Edge> es;
            for (const auto& e : g.edges())
                if (!(e.first == u && e.second == v)) es.push_back(e);
            Digraph cand = Digraph::validate(g.name(), g.vertices(), es);
            if (!fuzz_violation(cand, acyclic_only).empty()) {
                g = cand;
                again = true;
                break;
            }
        }
        if (again) continue;
        for (const auto& w : g.vertices()) {
            std::vector<Vertex> vs;
            for (const auto& v : g.vertices())
                if (v != w) vs.push_back(v);
            std::vector<Edge> es;
            for (const auto& [u, v] : g.edges())
                if (u != w && v != w) es.push_back({u, v});
            Digraph cand = Digraph::validate(g.name(), vs, es);
            if (!fuzz_violation(cand, acyclic_only).empty()) {
                g = cand;
                again = true;
                break;
            }
        }
    }
    return g;
}

int cmd_fuzz(const Opts& o, bool acyclic_only) {
    std::mt19937 rng(o.seed);
    std::cout << "seed " << o.seed << ", " << o.count << " graphs\n";
    for (int it = 0; it < o.count; ++it) {
        Digraph g = random_digraph(rng);
        std::string bad = fuzz_violation(g, acyclic_only);
        if (!bad.empty()) {
            Digraph small = shrink(g, acyclic_only);
            std::cout << "violation at iteration " << it << ": "
                      << fuzz_violation(small, acyclic_only) << "\n";
            std::cout << digraph_to_text(small) << "\n";
            return 1;
        }
    }
    std::cout << "no violations\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path homology toolkit"};
    app.require_subcommand(1);
    Opts o;
    std::function<int(const Opts&)> action;

    auto add = [&](const std::string& name, const std::string& desc, int npaths,
                   std::function<int(const Opts&)> fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (npaths > 0)
            sub->add_option("paths", o.paths, "input files")->expected(npaths);
        sub->add_option("--format", o.format, "human|json")
            ->check(CLI::IsMember({"human", "json"}));
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };

    add("homology", "path homology of a digraph", 1, cmd_homology)
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    app.get_subcommand("homology")->add_option("--coeff", o.coeff)
        ->check(CLI::IsMember({"z", "q"}));
    app.get_subcommand("homology")->add_flag("--reduced", o.reduced);
    add("cohomology", "quotient-complex cohomology ranks", 1, cmd_cohomology)
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    add("omega", "basis of Omega_n", 1, cmd_omega)
        ->add_option("--dim", o.dim)->check(CLI::NonNegativeNumber);
    add("minimal", "enumerate minimal paths", 1, cmd_minimal)
        ->add_option("--dim", o.dim)->check(CLI::NonNegativeNumber);
    app.get_subcommand("minimal")->add_option("--coeff-bound", o.coeff_bound);
    add("is-minimal", "minimality check with witness", 2, cmd_is_minimal);
    add("decompose", "split into minimal summands", 2, cmd_decompose);
    add("supp", "supporting digraph of a chain", 2, cmd_supp);
    add("structure", "structure decomposition report", 2, cmd_structure);
    add("acyclic", "reduced homology of the support", 2, cmd_acyclic);
    add("augment-split", "augment-and-split resolution", 2, cmd_augment_split)
        ->add_option("--alpha", o.alpha, "force the splitting vertex");
    add("product", "digraph product", 2, cmd_product)
        ->add_option("--kind", o.kind)->check(CLI::IsMember({"cartesian", "strong"}));
    add("closure", "transitive closure", 1, cmd_closure);
    add("iso", "digraph isomorphism test", 2, cmd_iso);
    add("cross", "cross product of chains", 4, cmd_cross);
    add("star", "star product of forms", 4, cmd_star);
    add("cup", "cup product of forms", 3, cmd_cup);
    add("diagonal", "diagonal approximation", 2, cmd_diagonal)
        ->add_flag("--transposed", o.transposed);
    add("chain-homotopy", "build and verify the diagonal homotopy", 1, cmd_chain_homotopy)
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    add("skew-check", "graded commutativity of the cup product", 1, cmd_skew_check);
    app.get_subcommand("skew-check")->add_option("--p", o.p);
    app.get_subcommand("skew-check")->add_option("--q", o.q);
    add("map-check", "verify a digraph map", 3, cmd_map_check);
    add("homotopy-check", "verify a homotopy table", 3, cmd_homotopy_check);
    add("retract-check", "verify a deformation retraction", 3, cmd_retract_check)
        ->add_option("--mode", o.mode)->check(CLI::IsMember({"one-step", "sequence"}));
    app.get_subcommand("retract-check")->add_option("--steps", o.steps, "sequence map files");
    add("mv-check", "Mayer-Vietoris pair conditions", 3,
        [](const Opts& oo) { return cmd_mv(oo, false); })
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    add("mv-les", "long exact sequence verification", 3,
        [](const Opts& oo) { return cmd_mv(oo, true); })
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    add("kunneth", "Kunneth convolution check", 2, cmd_kunneth)
        ->add_option("--maxdim", o.maxdim)->check(CLI::NonNegativeNumber);
    add("fuzz-structure", "fuzz the structure theorem", 0,
        [](const Opts& oo) { return cmd_fuzz(oo, false); })
        ->add_option("--seed", o.seed);
    app.get_subcommand("fuzz-structure")->add_option("--count", o.count);
    add("fuzz-acyclic", "fuzz acyclicity of supports", 0,
        [](const Opts& oo) { return cmd_fuzz(oo, true); })
        ->add_option("--seed", o.seed);
    app.get_subcommand("fuzz-acyclic")->add_option("--count", o.count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PropertyFailure& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
