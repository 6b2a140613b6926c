#ifndef PATHHOM_HOMOLOGY_HPP
#define PATHHOM_HOMOLOGY_HPP

#include "pathhom/omega.hpp"

namespace pathhom {

enum class Coeff { Z, Q };

struct DegreeHomology {
    int n = 0;
    long betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1; empty over Q
};

struct HomologyResult {
    bool reduced = false;
    std::vector<DegreeHomology> degrees;

    long betti(int n) const;
    std::string str() const;
};

// Homology of a built complex. Degree n needs the boundary out of degree
// n+1, so the valid top degree is maxdim when the complex is complete and
// maxdim-1 otherwise; asking beyond throws InputError("InsufficientDepth").
HomologyResult homology(const OmegaComplex& cx, Coeff coeff, int uptodim = -1);

// Convenience: builds the complex deep enough for degrees 0..maxdim.
HomologyResult homology_of(const Digraph& g, int maxdim, Coeff coeff, bool reduced);

struct MVReport {
    bool pass = false;
    std::vector<std::string> failures;  // NotACover / PathOutsideCover / NotEpimorphism / ExactnessFailure
    std::vector<std::string> notes;
    std::string str() const;
};

// Mayer-Vietoris pair conditions: X = Y1 u Y2, every allowed regular path
// of X lies in one piece, and (a,b) -> a-b is onto reduced Omega_p(X) for
// p <= maxdim (rational rank plus integer solvability).
MVReport mv_pair_check(const Digraph& x, const Digraph& y1, const Digraph& y2, int maxdim);

// Builds the reduced rational long exact sequence of the pair with an
// explicit snake connecting map and verifies image = kernel at every node
// of degree <= maxdim.
MVReport mv_les_verify(const Digraph& x, const Digraph& y1, const Digraph& y2, int maxdim);

struct KunnethReport {
    std::vector<long> product_betti;  // of G box H, degrees 0..maxdim
    std::vector<long> convolution;    // sum b_i(G) b_j(H), i+j = k
    bool pass = false;
};

KunnethReport kunneth_check(const Digraph& g, const Digraph& h, int maxdim);

}  // namespace pathhom

#endif
