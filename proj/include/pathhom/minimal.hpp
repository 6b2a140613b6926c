#ifndef PATHHOM_MINIMAL_HPP
#define PATHHOM_MINIMAL_HPP

#include <optional>

#include "pathhom/homology.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

Int width(const Chain& c);

// Partial order: |u_p| <= |v_p|, |u_p - v_p| <= |v_p| componentwise and
// width(u) <= width(v). Throws InputError("DimMismatch") on unequal dims.
bool chain_leq(const Chain& u, const Chain& v);

struct MinimalityResult {
    bool minimal = false;
    Chain witness;  // nonzero P' in Omega with P' <= P and smaller width, when not minimal
};

// Exhaustive search over coefficient vectors d with each d_p in the closed
// integer interval between 0 and c_p (the exact solution set of the two
// absolute-value constraints). Throws InputError("NotOmegaMember").
MinimalityResult is_minimal(const Digraph& g, const Chain& p);

// Greedy peeling into minimal summands; the list sums exactly to c.
std::vector<Chain> minimal_decompose(const Digraph& g, const Chain& c);

// All minimal chains of dimension n, deduplicated up to global sign
// (canonical: first nonzero coefficient positive). Restricts to the given
// endpoints when supplied. coeff_bound 1 is the Structure Theorem search
// space; larger bounds are for fuzzing that restriction.
std::vector<Chain> enumerate_minimal(const Digraph& g, int n, const std::optional<Vertex>& s = {},
                                     const std::optional<Vertex>& e = {}, int coeff_bound = 1);

// Least subgraph in which p is boundary-invariant: edges of p's terms plus
// edges of the terms surviving in boundary(p).
Digraph supp(const Chain& p);

struct DistanceProfile {
    Vertex s, e;
    int n = 0;
    std::map<Vertex, int> d_s, d_e;  // min position / min co-position over terms
    std::set<Vertex> s1, e1, e2;     // d_s = 1, d_e = 1, d_e = 2
};

// Throws InputError("NoCommonEndpoints") if terms disagree on endpoints.
DistanceProfile distance_profile(const Chain& p);

struct CompletionResult {
    std::vector<Chain> completions;  // C_min(G, u)
    Int bound = 0;                   // width bound actually used
    bool bound_hit = false;          // some candidate search was cut off
};

// Minimal boundary-invariant completions: all u~ in Omega with u <= u~
// such that every nonzero v in Omega with v < u~ is proportional to u~,
// and no other completion v of u has v < u~. Default width bound is
// 4*width(u). Any v < u~ has width <= width(u~), so filtering inside the
// enumerated pool is exact.
CompletionResult completions(const Digraph& g, const Chain& u, Int width_bound = -1);

struct StructureReport {
    Vertex s, e;
    int n = 0;
    std::map<Vertex, Chain> family_a;  // alpha in E_1 -> part of dP from s to alpha
    std::map<Vertex, Chain> family_b;  // beta in S_1 -> part of dP from beta to e
    std::optional<Chain> family_c;     // the (s,e) part; |I_P| <= 1 means it is minimal
    std::vector<std::string> violations;
    bool pass = false;
    std::string str() const;
};

// Groups the boundary of a minimal chain by endpoints and certifies the
// three-family shape, +-1 coefficients, minimality and uniqueness of the
// family members inside supp(p), and uniqueness of minimal 2-faces per
// endpoint pair. Violations are reported, never repaired.
StructureReport structure_decompose(const Digraph& g, const Chain& p);

struct AcyclicCertificate {
    Digraph support;
    HomologyResult hom;  // reduced integer homology of supp(p), full depth
    bool pass = false;
};

AcyclicCertificate acyclic_certify(const Digraph& g, const Chain& p);

struct AugmentSplit {
    Digraph augmented, y1, y2, z;
    Chain p1, p2;
    Vertex alpha;
    std::vector<std::pair<Vertex, Vertex>> added_edges;
    MVReport mv;
    std::vector<std::string> failures;
    bool pass = false;
    bool trivial = false;  // |E_1| < 2: no augmentation needed
    bool p1_minimal = false, p2_minimal = false;  // recorded, not required
};

// Splits an Omega chain P at a vertex alpha in E_1: P1 = terms through
// alpha at position n-1, P2 = P - P1; adds edges gamma->E for gamma in
// E_2 meeting V(P1) without an edge to E; requires both parts stay in
// Omega of the augmented supp and runs the Mayer-Vietoris pair check.
// Minimality of the parts is recorded in p1_minimal/p2_minimal but does
// not gate pass. Candidates are tried in lexicographic order unless
// forced_alpha is given.
AugmentSplit augment_split(const Digraph& g, const Chain& p,
                           const std::optional<Vertex>& forced_alpha = {});

}  // namespace pathhom

#endif
