#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pathhom/fixtures.hpp"
#include "pathhom/products.hpp"

using namespace pathhom;

namespace {

ElemPath pv(const std::string& s) {
    ElemPath p;
    for (char c : s) p.push_back(std::string(1, c));
    return p;
}

Chain ch(std::initializer_list<std::pair<int, std::string>> terms) {
    Chain c((int)terms.begin()->second.size() - 1);
    for (const auto& [k, s] : terms) c.add(pv(s), k);
    return c;
}

ElemPath pp(std::initializer_list<std::pair<const char*, const char*>> vs) {
    ElemPath p;
    for (const auto& [a, b] : vs) p.push_back(pair_vertex(a, b));
    return p;
}

// random small-coefficient chain on the allowed n-paths of g
Chain rand_chain(const Digraph& g, int n, std::mt19937& rng) {
    std::vector<ElemPath> basis = allowed_basis(g, n);
    Chain c(n);
    if (basis.empty()) return c;
    std::uniform_int_distribution<int> pick(0, (int)basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int k = 1 + (int)(rng() % 3);
    for (int t = 0; t < k; ++t) c.add(basis[pick(rng)], coeff(rng));
    return c;
}

Form rand_form(const Digraph& g, int n, std::mt19937& rng) {
    Chain c = rand_chain(g, n, rng);
    Form f(n);
    for (const auto& [p, k] : c.terms) f.add(p, Rat(k));
    return f;
}

}  // namespace

TEST_CASE("cross product of two edges") {
    Chain u = Chain::unit(pv("ab"));
    Chain v = Chain::unit(pv("12"));
    Chain expect(2);
    expect.add(pp({{"a", "1"}, {"b", "1"}, {"b", "2"}}), 1);
    expect.add(pp({{"a", "1"}, {"a", "2"}, {"b", "2"}}), -1);
    CHECK(cross_product(u, v) == expect);

    // vertex x vertex and vertex x edge
    CHECK(cross_product(Chain::unit(pv("a")), Chain::unit(pv("1"))) ==
          Chain::unit(pp({{"a", "1"}})));
    CHECK(cross_product(Chain::unit(pv("a")), v) ==
          Chain::unit(pp({{"a", "1"}, {"a", "2"}})));
}

TEST_CASE("cross product Leibniz rule") {
    std::mt19937 rng(11);
    std::vector<const Digraph*> gs = {&fixture("t").g, &fixture("g1").g, &fixture("c3").g};
    for (int it = 0; it < 200; ++it) {
        const Digraph& a = *gs[it % gs.size()];
        const Digraph& b = *gs[(it + 1) % gs.size()];
        int p = (int)(rng() % 3), q = (int)(rng() % 3);
        Chain u = rand_chain(a, p, rng), v = rand_chain(b, q, rng);
        Chain lhs = boundary(cross_product(u, v));
        Chain rhs = cross_product(boundary(u), v);
        Chain uv = cross_product(u, boundary(v));
        rhs = (p % 2) ? rhs - uv : rhs + uv;
        INFO(u.str() << "  x  " << v.str());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("star product and the pairing adjunction") {
    Form a(1), b(1);
    a.add(pv("sa"), Rat(1));
    b.add(pv("12"), Rat(1));
    Form s = star_product(a, b);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.count(pp({{"s", "1"}, {"a", "1"}, {"a", "2"}})));

    // (alpha * beta, u x v) = (alpha, u)(beta, v)
    std::mt19937 rng(23);
    std::vector<const Digraph*> gs = {&fixture("t").g, &fixture("g1").g};
    for (int it = 0; it < 500; ++it) {
        const Digraph& ga = *gs[it % 2];
        const Digraph& gb = *gs[(it / 2) % 2];
        int p = (int)(rng() % 3), q = (int)(rng() % 3);
        Form alpha = rand_form(ga, p, rng), beta = rand_form(gb, q, rng);
        Chain u = rand_chain(ga, p, rng), v = rand_chain(gb, q, rng);
        Rat lhs = pair_form_chain(star_product(alpha, beta), cross_product(u, v));
        Rat rhs = pair_form_chain(alpha, u) * pair_form_chain(beta, v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("diagonals are chain maps with Omega slices") {
    for (const char* name : {"t", "q", "g1", "g2", "c3", "simplex3"}) {
        const Digraph& g = fixture(name).g;
        Digraph prod = cartesian_product(g, g);
        for (int n = 0; n <= 3; ++n)
            for (const Chain& u : omega_basis(g, n)) {
                INFO(name << " dim " << n << ": " << u.str());
                for (bool tr : {false, true}) {
                    Chain du = diagonal(g, u, tr);
                    // chain map: boundary commutes with the diagonal
                    // (slices extend linearly to any chain, so sum them on
                    // the boundary; the boundary itself need not be a basis
                    // member of Omega)
                    Chain bu = boundary(u);
                    Chain lhs = boundary(du);
                    Chain rhs(n - 1);
                    for (int i = 0; i + 1 <= n; ++i) rhs += diagonal_slice(bu, i, tr);
                    CHECK(lhs == rhs);
                    // every slice individually stays in Omega of the product
                    for (int i = 0; i <= n; ++i)
                        CHECK(omega_membership(prod, diagonal_slice(u, i, tr)));
                }
            }
    }
    // non-members are rejected
    CHECK_THROWS_AS(diagonal(fixture("g2").g, ch({{1, "014"}}), false), InputError);
}

TEST_CASE("cup product on the triangle and the square") {
    const Digraph& t = fixture("t").g;
    CochainContext ctx(t, 2);
    Form esa(1), eae(1), esae(2);
    esa.add(pv("sa"), Rat(1));
    eae.add(pv("ae"), Rat(1));
    esae.add(pv("sae"), Rat(1));
    CHECK(cup(ctx, esa, eae) == ctx.reduce_mod_w(esae));

    const Digraph& q = fixture("q").g;
    CochainContext qctx(q, 2);
    Form ebe(1);
    ebe.add(pv("be"), Rat(1));
    CHECK(cup(qctx, esa, ebe).zero());  // endpoints never meet
}

TEST_CASE("cup agrees with the star product pulled back along the diagonal") {
    std::mt19937 rng(31);
    for (const char* name : {"t", "g1", "c3", "c4"}) {
        const Digraph& g = fixture(name).g;
        CochainContext ctx(g, 2);
        for (int it = 0; it < 40; ++it) {
            Form a = rand_form(g, 1, rng), b = rand_form(g, 1, rng);
            for (const Chain& u : omega_basis(g, 2)) {
                Rat lhs = pair_form_chain(cup(ctx, a, b), u);
                Rat rhs = pair_form_chain(star_product(a, b), diagonal(g, u, false));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("chain homotopy between the diagonals") {
    for (const char* name : {"t", "q", "c3", "c4", "g1", "simplex3"}) {
        INFO(name);
        GradedMapF f = build_chain_homotopy(fixture(name).g, 2);
        CHECK(verify_chain_homotopy(f));
    }
    GradedMapF fc = build_chain_homotopy(fixture("cube").g, 3);
    CHECK(verify_chain_homotopy(fc));
    GradedMapF fx = build_chain_homotopy(fixture("xcube").g, 3);
    CHECK(verify_chain_homotopy(fx));
    GradedMapF ft = build_chain_homotopy(cartesian_product(fixture("c3").g, fixture("c3").g), 2);
    CHECK(verify_chain_homotopy(ft));
}

TEST_CASE("chain homotopy base degrees") {
    const Digraph& g = fixture("t").g;
    GradedMapF f = build_chain_homotopy(g, 1);
    REQUIRE(f.base_edge.has_value());
    CHECK(*f.base_edge == Edge{"a", "e"});  // lexicographically smallest edge

    // degree 0: dF(e_x) = t#D(e_x) - D(e_x) = 0, so the image is a cycle
    QChain f0 = f.apply(to_rational(Chain::unit(pv("s"))));
    CHECK(boundary(f0).zero());
    CHECK(f0.terms.size() == 4);

    // degree 1: F(e_ij) = e_ij x e_ij
    Chain e = Chain::unit(pv("sa"));
    CHECK(f.apply(to_rational(e)) == to_rational(cross_product(e, e)));
}

TEST_CASE("a corrupted homotopy table is rejected") {
    GradedMapF f = build_chain_homotopy(fixture("t").g, 2);
    REQUIRE(verify_chain_homotopy(f));
    REQUIRE(!f.image[1].empty());
    f.image[1][0] += to_rational(cross_product(f.basis[1][0], f.basis[1][0]));
    CHECK(!verify_chain_homotopy(f));
}

TEST_CASE("skew commutativity of the cup product on the torus") {
    Digraph torus = cartesian_product(fixture("c3").g, fixture("c3").g);
    SkewReport rep = skew_check(torus, 1, 1);
    INFO(rep.str());
    CHECK(rep.hp == 2);
    CHECK(rep.hq == 2);
    CHECK(rep.pairs.size() == 4);
    CHECK(rep.pass);

    // acyclic supports have nothing to check and pass vacuously
    SkewReport triv = skew_check(fixture("t").g, 1, 1);
    CHECK(triv.pass);
    CHECK(triv.pairs.empty());
}
