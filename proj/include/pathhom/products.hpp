#ifndef PATHHOM_PRODUCTS_HPP
#define PATHHOM_PRODUCTS_HPP

#include <optional>

#include "pathhom/cochain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

// Cross product of chains: bilinear extension of the stair-like sum
// e_x x e_y = sum_z (-1)^{L(z)} e_z over staircases z from (0,0) to (p,q),
// where L(z) counts the lattice cells below the staircase (sum over
// horizontal steps of the height at which the step is taken).
Chain cross_product(const Chain& u, const Chain& v);
QChain cross_product(const QChain& u, const QChain& v);

// Star product of forms: dual corner concatenation
// e^{i0..ip} * e^{j0..jq} = e^{(i0 j0)..(ip j0)(ip j1)..(ip jq)}.
Form star_product(const Form& a, const Form& b);

// Diagonal approximations on Omega_n(G) with values in Omega_n(G box G).
// Plain: sum_i e_I|0..i x e_I|i..n; transposed applies t# with the sign
// (-1)^{i(n-i)} per slice. Certifies membership of the input (throws
// InputError("NotOmegaMember")) and of the output in Omega of the product.
Chain diagonal(const Digraph& g, const Chain& u, bool transposed);

// The fixed-i slice of the diagonal; each slice individually lies in
// Omega_n(G box G).
Chain diagonal_slice(const Chain& u, int i, bool transposed);

// Transposition t# on a product chain whose terms came from p x q splits;
// needs the split position to assign signs, so it is exposed only through
// the transposed diagonal above and the internal homotopy construction.

// Raw concatenation pairing on forms (the Lambda-level cup), keeping only
// regular concatenations.
Form concat_forms(const Form& a, const Form& b);

// Cup product of quotient representatives: project to allowed forms,
// reduce modulo W, concatenate, reduce again.
Form cup(const CochainContext& ctx, const Form& a, const Form& b);
Form cup(const Digraph& g, const Form& a, const Form& b);

// Chain homotopy F between the two diagonal approximations:
// dF(u) + F(du) = t# D(u) - D(u) on every basis element.
struct GradedMapF {
    Digraph g;
    Digraph product;  // g box g
    int maxdim = 0;
    std::optional<Edge> base_edge;            // degree-0 base; empty iff G edgeless
    std::vector<std::vector<Chain>> basis;    // basis[n] spans Omega_n(G), n <= maxdim
    std::vector<std::vector<QChain>> image;   // image[n][k] = F(basis[n][k])

    // Linear extension; u must lie in the span of basis[dim].
    QChain apply(const QChain& u) const;
};

// Degree 0: the fixed 4-term cycle on the lexicographically smallest edge
// (identically zero when G has no edges); degree 1: F(e_ij) = e_ij x e_ij;
// degree n >= 2: solve dv = t#D(u) - D(u) - F(du) inside
// Omega_{n+1}(supp(u) box supp(u)), falling back to G box G. A failed
// solve throws PropertyFailure("SolveFailure") since it would contradict
// acyclicity of supports.
GradedMapF build_chain_homotopy(const Digraph& g, int maxdim);

// Independent recomputation of the defining identity on every basis chain.
bool verify_chain_homotopy(const GradedMapF& f);

struct SkewPair {
    int i = 0, j = 0;          // indices into the degree-p and degree-q bases
    bool coboundary = false;   // phi u psi - (-1)^{pq} psi u phi is exact
    Form witness;              // degree p+q-1 preimage when coboundary
};

struct SkewReport {
    int p = 0, q = 0;
    long hp = 0, hq = 0;  // cohomology ranks in the two degrees
    std::vector<SkewPair> pairs;
    bool pass = false;
    std::string str() const;
};

// For every pair of cohomology basis representatives in degrees p and q,
// checks that the graded commutator is a coboundary in the quotient
// complex and records the witness.
SkewReport skew_check(const Digraph& g, int p, int q);

}  // namespace pathhom

#endif
