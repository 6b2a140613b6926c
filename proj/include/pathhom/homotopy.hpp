#ifndef PATHHOM_HOMOTOPY_HPP
#define PATHHOM_HOMOTOPY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

// n-step homotopy between f and g through the line digraph given by `line`
// (orientation string, length n). F is total on V(source) x {0..n}.
struct HomotopyWitness {
    VertexMap f;
    VertexMap g;
    std::string line;
    std::map<std::pair<Vertex, int>, Vertex> F;
};

bool check_digraph_map(const VertexMap& m);

// True iff (v,k) -> F(v,k) is a digraph map on source x I_n whose
// restrictions to levels 0 and n are f and g.
bool check_homotopy(const HomotopyWitness& w);

enum class RetractMode { OneStep, Sequence };

// One-step mode: r is a digraph map fixing H with r(x) edge-or-equal x
// uniformly in one direction. Sequence mode: verifies the chain
// f_0 = id, ..., f_n = i.r with each consecutive pair uniformly
// one-directional. Throws RetractFixityError if r moves a vertex of H,
// NotDigraphMap(k) if a sequence entry is not a digraph map.
bool check_retraction(const Digraph& g, const Digraph& h, const VertexMap& r, RetractMode mode,
                      const std::vector<VertexMap>& sequence = {});

// The 1-step homotopy id ~ i.r induced by a one-step retraction.
HomotopyWitness induced_one_step_witness(const Digraph& g, const Digraph& h, const VertexMap& r);

VertexMap identity_map(const Digraph& g);
VertexMap compose(const VertexMap& first, const VertexMap& then);

struct HomotopyEquivReport {
    bool pass = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // homology comparison lines
    std::string str() const;
};

// Verifies f: G->H, g: H->G, the homotopies f.g ~ id_H and g.f ~ id_G,
// then checks that integer homology of G and H agrees degreewise.
HomotopyEquivReport homotopy_equiv_report(const Digraph& g, const Digraph& h, const VertexMap& f,
                                          const VertexMap& gmap, const HomotopyWitness& hfg,
                                          const HomotopyWitness& hgf);

// Bounded brute-force search for a one-step retraction of g onto the
// sub-digraph h. Throws InputError when |V(g)| exceeds max_vertices.
std::optional<VertexMap> search_one_step_retraction(const Digraph& g, const Digraph& h,
                                                    size_t max_vertices = 10);

// Scans all proper induced sub-digraphs for a one-step retraction.
std::optional<std::pair<Digraph, VertexMap>> one_step_retractable(const Digraph& g,
                                                                  size_t max_vertices = 10);

}  // namespace pathhom

#endif
