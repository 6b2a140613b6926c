#include "pathhom/fixtures.hpp"

#include <algorithm>

#include "pathhom/minimal.hpp"

namespace pathhom {

namespace {

// path from one-character vertex names
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

Chain chv(std::initializer_list<std::pair<int, std::vector<std::string>>> terms) {
    Chain c((int)terms.begin()->second.size() - 1);
    for (const auto& [k, p] : terms) c.add(ElemPath(p), k);
    return c;
}

Digraph dg(const std::string& name, std::initializer_list<std::pair<std::string, std::string>> es,
           std::initializer_list<std::string> isolated = {}) {
    std::vector<Vertex> vs(isolated);
    std::vector<Edge> edges;
    for (const auto& [u, v] : es) edges.push_back({u, v});
    return Digraph::validate(name, vs, edges);
}

Fixture explicit_fixture(const std::string& name, Digraph g, Chain c) {
    return Fixture{name, std::move(g), std::move(c), false};
}

Fixture supp_fixture(const std::string& name, Chain c) {
    Digraph s = supp(c);
    Digraph g = Digraph::validate(name, s.vertices(), s.edges());
    return Fixture{name, std::move(g), std::move(c), true};
}

std::vector<Fixture> make_fixtures() {
    std::vector<Fixture> out;
    out.push_back(explicit_fixture(
        "t", dg("t", {{"s", "a"}, {"a", "e"}, {"s", "e"}}), ch({{1, "sae"}})));
    out.push_back(explicit_fixture(
        "q", dg("q", {{"s", "a"}, {"a", "e"}, {"s", "b"}, {"b", "e"}}),
        ch({{1, "sae"}, {-1, "sbe"}})));
    out.push_back(explicit_fixture(
        "g1", dg("g1", {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}, {"0", "3"}}),
        ch({{1, "013"}, {-1, "023"}})));
    out.push_back(explicit_fixture(
        "g2",
        dg("g2", {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "4"}, {"2", "4"}, {"3", "4"}}),
        ch({{1, "014"}, {-1, "024"}})));
    out.push_back(explicit_fixture("c3", dg("c3", {{"0", "1"}, {"1", "2"}, {"2", "0"}}),
                                   ch({{1, "01"}, {1, "12"}, {1, "20"}})));
    out.push_back(explicit_fixture(
        "c4", dg("c4", {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}}),
        ch({{1, "01"}, {1, "12"}, {1, "23"}, {1, "30"}})));
    out.push_back(supp_fixture("simplex3", ch({{1, "0123"}})));
    out.push_back(supp_fixture("l3a", ch({{1, "0134"}, {-1, "0234"}})));
    out.push_back(supp_fixture("l3b", ch({{1, "0135"}, {-1, "0235"}, {1, "0245"}})));
    out.push_back(supp_fixture("l3c", ch({{1, "0136"}, {-1, "0146"}, {-1, "0236"}, {1, "0256"}})));
    out.push_back(supp_fixture("l3d", ch({{1, "0135"}, {-1, "0145"}, {1, "0245"}, {-1, "0235"}})));
    out.push_back(supp_fixture(
        "l3e", ch({{1, "0136"}, {-1, "0156"}, {1, "0456"}, {1, "0246"}, {-1, "0236"}})));
    out.push_back(explicit_fixture(
        "cube",
        dg("cube", {{"0", "1"},
                    {"0", "2"},
                    {"0", "4"},
                    {"1", "3"},
                    {"1", "5"},
                    {"2", "3"},
                    {"2", "6"},
                    {"3", "7"},
                    {"4", "5"},
                    {"4", "6"},
                    {"5", "7"},
                    {"6", "7"}}),
        ch({{1, "0137"}, {-1, "0237"}, {1, "0267"}, {-1, "0467"}, {1, "0457"}, {-1, "0157"}})));
    out.push_back(supp_fixture("xcube", ch({{1, "0258"},
                                            {-1, "0158"},
                                            {-1, "0268"},
                                            {1, "0368"},
                                            {-1, "0378"},
                                            {1, "0478"}})));
    out.push_back(supp_fixture("more1", ch({{1, "S05E"},
                                            {-1, "S15E"},
                                            {1, "S17E"},
                                            {-1, "S37E"},
                                            {1, "S39E"},
                                            {-1, "S49E"},
                                            {1, "S48E"},
                                            {-1, "S28E"},
                                            {1, "S26E"},
                                            {-1, "S06E"}})));
    out.push_back(supp_fixture("more2", chv({{1, {"S", "0", "6", "E"}},
                                             {-1, {"S", "1", "6", "E"}},
                                             {1, {"S", "1", "7", "E"}},
                                             {-1, {"S", "2", "7", "E"}},
                                             {1, {"S", "2", "8", "E"}},
                                             {-1, {"S", "3", "8", "E"}},
                                             {1, {"S", "3", "9", "E"}},
                                             {-1, {"S", "4", "9", "E"}},
                                             {1, {"S", "4", "10", "E"}},
                                             {-1, {"S", "5", "10", "E"}}})));
    out.push_back(supp_fixture("len4", chv({{1, {"S", "1", "5", "9", "E"}},
                                            {-1, {"S", "1", "6", "9", "E"}},
                                            {1, {"S", "2", "6", "9", "E"}},
                                            {1, {"S", "1", "6", "10", "E"}},
                                            {-1, {"S", "2", "6", "10", "E"}},
                                            {1, {"S", "2", "7", "10", "E"}},
                                            {-1, {"S", "3", "7", "10", "E"}},
                                            {-1, {"S", "2", "7", "11", "E"}},
                                            {1, {"S", "3", "7", "11", "E"}},
                                            {-1, {"S", "2", "8", "11", "E"}},
                                            {1, {"S", "4", "8", "11", "E"}}})));
    return out;
}

std::map<Vertex, Vertex> mv(std::initializer_list<std::pair<std::string, std::string>> m) {
    return std::map<Vertex, Vertex>(m.begin(), m.end());
}

std::vector<RetractionFixture> make_retractions() {
    std::vector<RetractionFixture> out;
    out.push_back({"simplex3_r", "simplex3", mv({{"3", "2"}}), "", {}});
    out.push_back({"l3a_r", "l3a", mv({{"4", "3"}}), "", {}});
    out.push_back({"l3b_r1", "l3b", mv({{"5", "3"}, {"4", "2"}}), "", {}});
    out.push_back({"l3b_r2", "l3b", mv({{"5", "4"}, {"3", "2"}, {"1", "0"}}), "", {}});
    out.push_back({"l3c_r1", "l3c", mv({{"6", "3"}, {"5", "2"}, {"4", "1"}}), "", {}});
    out.push_back(
        {"l3c_r2", "l3c", mv({{"6", "4"}, {"3", "1"}, {"5", "0"}, {"2", "0"}}), "", {}});
    out.push_back({"l3c_r3", "l3c", mv({{"1", "4"}, {"2", "5"}, {"3", "6"}}), "", {}});
    out.push_back({"l3c_r4",
                   "l3c",
                   mv({{"0", "1"}, {"2", "3"}, {"5", "3"}}),
                   "-+-",
                   {mv({{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"5", "5"},
                        {"6", "6"}}),
                    mv({{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "1"}, {"5", "2"},
                        {"6", "3"}}),
                    mv({{"0", "1"}, {"1", "4"}, {"2", "3"}, {"3", "6"}, {"4", "4"}, {"5", "3"},
                        {"6", "6"}}),
                    mv({{"0", "1"}, {"1", "1"}, {"2", "3"}, {"3", "3"}, {"4", "4"}, {"5", "3"},
                        {"6", "6"}})}});
    out.push_back({"l3d_r",
                   "l3d",
                   mv({{"5", "3"}, {"4", "3"}}),
                   "--+",
                   {mv({{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"5", "5"}}),
                    mv({{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}, {"4", "1"}, {"5", "3"}}),
                    mv({{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}, {"4", "1"}, {"5", "1"}}),
                    mv({{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "3"}, {"5", "3"}})}});
    out.push_back({"l3e_r1", "l3e", mv({{"6", "5"}, {"3", "1"}, {"2", "0"}}), "", {}});
    out.push_back(
        {"l3e_r2", "l3e", mv({{"6", "4"}, {"5", "4"}, {"3", "2"}, {"1", "0"}}), "", {}});
    return out;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fx = make_fixtures();
    return fx;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : all_fixtures())
        if (f.name == name) return f;
    throw InputError("unknown fixture " + name);
}

const std::vector<RetractionFixture>& retraction_fixtures() {
    static const std::vector<RetractionFixture> rf = make_retractions();
    return rf;
}

std::pair<Digraph, VertexMap> retraction_map(const RetractionFixture& rf) {
    const Digraph& g = fixture(rf.graph).g;
    std::vector<Vertex> keep;
    for (const auto& v : g.vertices())
        if (!rf.moved.count(v)) keep.push_back(v);
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges())
        if (!rf.moved.count(u) && !rf.moved.count(v)) es.push_back({u, v});
    Digraph h = Digraph::validate(rf.graph + "|" + rf.name, keep, es);
    VertexMap r;
    r.source = g;
    r.target = h;
    for (const auto& v : keep) r.assignment[v] = v;
    for (const auto& [a, b] : rf.moved) r.assignment[a] = b;
    return {h, r};
}

}  // namespace pathhom
