#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathhom/fixtures.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/homotopy.hpp"
#include "pathhom/omega.hpp"

using namespace pathhom;

namespace {

// self-map of g from an assignment table
VertexMap self_map(const Digraph& g, const std::map<Vertex, Vertex>& a) {
    VertexMap m;
    m.source = g;
    m.target = g;
    m.assignment = a;
    return m;
}

// trivial 0-step homotopy id ~ id on g
HomotopyWitness trivial_witness(const Digraph& g) {
    HomotopyWitness w;
    w.f = identity_map(g);
    w.g = w.f;
    for (const auto& v : g.vertices()) w.F[{v, 0}] = v;
    return w;
}

HomotopyWitness witness_from_fixture(const RetractionFixture& rf) {
    const Digraph& g = fixture(rf.graph).g;
    HomotopyWitness w;
    w.line = rf.line;
    w.f = self_map(g, rf.steps.front());
    w.g = self_map(g, rf.steps.back());
    for (size_t k = 0; k < rf.steps.size(); ++k)
        for (const auto& [v, img] : rf.steps[k]) w.F[{v, (int)k}] = img;
    return w;
}

HomologyResult full_hom(const Digraph& g) {
    return homology_of(g, std::max<int>(0, (int)g.num_vertices() - 1), Coeff::Z, false);
}

bool same_hom(const Digraph& a, const Digraph& b) {
    HomologyResult ha = full_hom(a), hb = full_hom(b);
    int top = std::max((int)ha.degrees.size(), (int)hb.degrees.size());
    for (int n = 0; n < top; ++n) {
        long x = n < (int)ha.degrees.size() ? ha.betti(n) : 0;
        long y = n < (int)hb.degrees.size() ? hb.betti(n) : 0;
        if (x != y) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("every retraction fixture verifies") {
    for (const auto& rf : retraction_fixtures()) {
        INFO(rf.name);
        auto [h, r] = retraction_map(rf);
        const Digraph& g = fixture(rf.graph).g;
        if (rf.line.empty()) {
            CHECK(check_retraction(g, h, r, RetractMode::OneStep));
            HomotopyWitness w = induced_one_step_witness(g, h, r);
            CHECK(check_homotopy(w));
        } else {
            std::vector<VertexMap> seq;
            for (const auto& s : rf.steps) seq.push_back(self_map(g, s));
            CHECK(check_retraction(g, h, r, RetractMode::Sequence, seq));
            CHECK(check_homotopy(witness_from_fixture(rf)));
        }
        // the retract preserves homology degreewise
        CHECK(same_hom(g, h));
    }
}

TEST_CASE("multi-step tables are honest homotopies, not one-step") {
    for (const char* name : {"l3c_r4", "l3d_r"}) {
        const RetractionFixture* rf = nullptr;
        for (const auto& r : retraction_fixtures())
            if (r.name == name) rf = &r;
        REQUIRE(rf);
        auto [h, r] = retraction_map(*rf);
        const Digraph& g = fixture(rf->graph).g;
        // the same assignment is not a one-step retraction
        CHECK(!check_retraction(g, h, r, RetractMode::OneStep));
    }
}

TEST_CASE("homotopy equivalence report via a one-step retraction") {
    for (const char* name : {"simplex3_r", "l3a_r", "l3b_r1", "l3e_r2"}) {
        const RetractionFixture* rf = nullptr;
        for (const auto& r : retraction_fixtures())
            if (r.name == name) rf = &r;
        REQUIRE(rf);
        auto [h, r] = retraction_map(*rf);
        const Digraph& g = fixture(rf->graph).g;
        VertexMap inc;  // inclusion H -> G
        inc.source = h;
        inc.target = g;
        for (const auto& v : h.vertices()) inc.assignment[v] = v;
        HomotopyEquivReport rep = homotopy_equiv_report(
            g, h, r, inc, trivial_witness(h), induced_one_step_witness(g, h, r));
        INFO(rep.str());
        CHECK(rep.pass);
    }
}

TEST_CASE("one-step retraction search") {
    // the searched map on simplex3 matches some valid retraction onto {0,1,2}
    const auto& fx = fixture("simplex3");
    auto [h, r] = retraction_map(retraction_fixtures().front());
    auto found = search_one_step_retraction(fx.g, h);
    REQUIRE(found.has_value());
    CHECK(check_retraction(fx.g, h, *found, RetractMode::OneStep));

    // a directed cycle admits no one-step retraction at all
    CHECK(!one_step_retractable(fixture("c3").g).has_value());
    CHECK(!one_step_retractable(fixture("c4").g).has_value());

    // size guard
    CHECK_THROWS_AS(one_step_retractable(fixture("more1").g), InputError);
}

TEST_CASE("cube collapses coordinatewise") {
    // I_1 x I_1 x I_1 with vertex = bit pattern; clearing the top bit is a
    // one-step retraction onto the bottom square, and so on down to a point
    const Digraph& cube = fixture("cube").g;
    Digraph cur = cube;
    for (int bit = 2; bit >= 0; --bit) {
        std::vector<Vertex> keep;
        std::vector<Edge> es;
        for (const auto& v : cur.vertices())
            if (!((std::stoi(v) >> bit) & 1)) keep.push_back(v);
        for (const auto& [u, v] : cur.edges())
            if (!((std::stoi(u) >> bit) & 1) && !((std::stoi(v) >> bit) & 1)) es.push_back({u, v});
        Digraph h = Digraph::validate("cube|bit" + std::to_string(bit), keep, es);
        VertexMap r;
        r.source = cur;
        r.target = h;
        for (const auto& v : cur.vertices())
            r.assignment[v] = std::to_string(std::stoi(v) & ~(1 << bit));
        CHECK(check_retraction(cur, h, r, RetractMode::OneStep));
        CHECK(check_homotopy(induced_one_step_witness(cur, h, r)));
        cur = h;
    }
    CHECK(cur.num_vertices() == 1);
    CHECK(same_hom(cube, cur));
}

TEST_CASE("negative controls") {
    const Digraph& g = fixture("simplex3").g;
    auto [h, r] = retraction_map(retraction_fixtures().front());

    // not a digraph map: send 3 to 0 (edge 1->3 would need 1->0)
    VertexMap bad = r;
    bad.assignment["3"] = "0";
    CHECK(!check_digraph_map(bad));
    CHECK(!check_retraction(g, h, bad, RetractMode::OneStep));

    // moving a vertex of H is a fixity error
    VertexMap moves = r;
    moves.assignment["1"] = "2";
    CHECK_THROWS_AS(check_retraction(g, h, moves, RetractMode::OneStep), InputError);

    // sequence mode rejects a non-digraph-map step with its index
    std::vector<VertexMap> seq = {identity_map(g), bad};
    try {
        check_retraction(g, h, r, RetractMode::Sequence, seq);
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("NotDigraphMap(1)") != std::string::npos);
    }

    // corrupting one table entry kills the homotopy
    HomotopyWitness w = induced_one_step_witness(g, h, r);
    w.F[{"3", 1}] = "0";
    CHECK(!check_homotopy(w));
}

TEST_CASE("composition of retractions reaches a point") {
    // l3b retracts in two fixture steps... compose the maps and verify the
    // composite still preserves homology down to a single homology class
    const Digraph& g = fixture("l3b").g;
    auto [h1, r1] = retraction_map(*[] {
        for (const auto& r : retraction_fixtures())
            if (r.name == "l3b_r1") return &r;
        return (const RetractionFixture*)nullptr;
    }());
    CHECK(check_retraction(g, h1, r1, RetractMode::OneStep));
    auto next = one_step_retractable(h1);
    REQUIRE(next.has_value());
    CHECK(same_hom(g, next->first));
}
