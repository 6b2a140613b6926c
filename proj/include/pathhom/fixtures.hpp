#ifndef PATHHOM_FIXTURES_HPP
#define PATHHOM_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"

namespace pathhom {

// Built-in example corpus. Graphs marked supp-generated carry exactly the
// edges forced by their chain (term edges plus surviving boundary edges).
struct Fixture {
    std::string name;
    Digraph g;
    Chain chain;
    bool supp_generated = false;
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& name);  // InputError if unknown

// Deformation retraction witnesses for the length-3 support examples.
// `moved` lists the non-identity assignments; H is the induced subgraph on
// the fixed vertices. When `line` is nonempty the retraction is not
// one-step and an explicit homotopy table (levels 0..n) is supplied.
struct RetractionFixture {
    std::string name;
    std::string graph;  // fixture name
    std::map<Vertex, Vertex> moved;
    std::string line;
    std::vector<std::map<Vertex, Vertex>> steps;
};

const std::vector<RetractionFixture>& retraction_fixtures();

// VertexMap of a retraction fixture together with its target subgraph.
std::pair<Digraph, VertexMap> retraction_map(const RetractionFixture& rf);

}  // namespace pathhom

#endif
