#ifndef PATHHOM_OMEGA_HPP
#define PATHHOM_OMEGA_HPP

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/linalg.hpp"

namespace pathhom {

// Bijection between elementary paths and dense indices. Each instance
// covers one dimension; callers share an indexer across graphs when the
// graphs live on a common vertex pool (subgraph situations).
struct PathIndexer {
    std::map<ElemPath, int> index;
    std::vector<ElemPath> paths;

    int get(const ElemPath& p);        // inserts if missing
    int find(const ElemPath& p) const; // -1 if missing
    size_t size() const { return paths.size(); }
};

QVec chain_to_qvec(const QChain& c, PathIndexer& ix);
QVec chain_to_qvec(const Chain& c, PathIndexer& ix);
QChain qvec_to_chain(const QVec& v, const PathIndexer& ix, int dim);

// Basis of Omega_n(g): allowed regular n-chains whose boundary is again
// supported on allowed paths. Integer kernel computation, so the basis
// spans the Z-module (the kernel lattice is saturated).
std::vector<Chain> omega_basis(const Digraph& g, int n);

// Is c an element of Omega_n? Checks the boundary criterion and, as a
// cross-check, that every single-face component delta_i(c) is allowed;
// the two must agree.
bool omega_membership(const Digraph& g, const Chain& c);

struct OmegaComplex {
    Digraph g;
    int maxdim = 0;
    bool reduced = false;
    bool complete = false;                 // Omega_{maxdim+1} is known to vanish
    std::vector<std::vector<Chain>> bases; // bases[n] for n = 0..maxdim
    // boundary[n]: matrix of d : Omega_n -> Omega_{n-1} in the chosen
    // bases, for n = 1..maxdim. When reduced, boundary[0] is the 1 x rank_0
    // augmentation row (all ones).
    std::vector<ZMat> boundary;

    long rank(int n) const;
};

OmegaComplex build_complex(const Digraph& g, int maxdim, bool reduced = false);

}  // namespace pathhom

#endif
