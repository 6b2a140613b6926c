#ifndef PATHHOM_DIGRAPH_HPP
#define PATHHOM_DIGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "pathhom/types.hpp"

namespace pathhom {

using Edge = std::pair<Vertex, Vertex>;

// Finite simple digraph with string vertex identifiers.
// Immutable after construction; iteration order is lexicographic.
class Digraph {
  public:
    Digraph() = default;

    // Validates: no self loops, no duplicate edges, no empty/whitespace
    // identifiers. Vertices appearing only in edges are auto-declared.
    static Digraph validate(std::string name, const std::vector<Vertex>& raw_vertices,
                            const std::vector<Edge>& raw_edges);

    const std::string& name() const { return name_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    size_t num_vertices() const { return vertices_.size(); }
    size_t num_edges() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(const Vertex& v) const { return vset_.count(v) > 0; }
    bool has_edge(const Vertex& u, const Vertex& v) const { return eset_.count({u, v}) > 0; }

    // Successors/predecessors in lexicographic order.
    const std::vector<Vertex>& out(const Vertex& v) const;
    const std::vector<Vertex>& in(const Vertex& v) const;

    bool subgraph_of(const Digraph& g) const;
    bool same_as(const Digraph& g) const;  // equal vertex and edge sets

  private:
    std::string name_;
    std::vector<Vertex> vertices_;  // sorted
    std::vector<Edge> edges_;       // sorted
    std::set<Vertex> vset_;
    std::set<Edge> eset_;
    std::map<Vertex, std::vector<Vertex>> out_, in_;
};

// Total map between vertex sets of two digraphs.
struct VertexMap {
    Digraph source;
    Digraph target;
    std::map<Vertex, Vertex> assignment;

    // Throws InputError unless every source vertex has exactly one image
    // and every image is a target vertex.
    void check_total() const;
    const Vertex& operator()(const Vertex& v) const;
};

Digraph cartesian_product(const Digraph& g, const Digraph& h);
Digraph strong_product(const Digraph& g, const Digraph& h);

// Vertex name used for pairs in product digraphs: "(u,v)".
Vertex pair_vertex(const Vertex& u, const Vertex& v);

// Line digraph I_n from an orientation string over {+,-}:
// character k gives k->k+1 for '+', k+1->k for '-'.
Digraph line_digraph(const std::string& spec);

enum class CombineMode { Union, Intersection };
Digraph subgraph_combine(const Digraph& a, const Digraph& b, CombineMode mode);

Digraph transitive_closure(const Digraph& g);

// Backtracking isomorphism search with degree pruning; throws InputError
// beyond max_vertices.
std::optional<std::map<Vertex, Vertex>> is_isomorphic(const Digraph& g, const Digraph& h,
                                                      size_t max_vertices = 12);

}  // namespace pathhom

#endif
