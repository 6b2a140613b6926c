#ifndef PATHHOM_COCHAIN_HPP
#define PATHHOM_COCHAIN_HPP

#include "pathhom/omega.hpp"

namespace pathhom {

// Quotient cochain complex of a digraph over the rationals. Coordinates
// live on allowed regular paths (A^n); the subspace W^n spanned by the
// allowed parts of coboundaries of non-allowed regular paths is divided
// out, which realizes the quotient by J^n = N^n + dN^{n-1}: the N^n part
// kills the non-allowed coordinates, leaving exactly A^n / W^n.
class CochainContext {
  public:
    CochainContext(const Digraph& g, int maxdim);

    const Digraph& graph() const { return g_; }
    int maxdim() const { return maxdim_; }

    // rank of the quotient space in degree n
    long quotient_rank(int n) const;
    // rank of the induced differential out of degree n
    long dbar_rank(int n) const;
    // cohomology rank in degree n (quotient route)
    long h_rank(int n) const;
    // chosen cocycle representatives of a basis of H^n
    const std::vector<Form>& h_basis(int n) const;

    // drop coordinates on paths that are not allowed regular n-paths
    Form project_allowed(const Form& f) const;
    // reduce the allowed part of f modulo W^n (canonical quotient coords)
    Form reduce_mod_w(const Form& f) const;
    // differential into the quotient: class of d(f)
    Form dbar(const Form& f) const;
    // is f zero in H^n, i.e. in W^n + im(dbar)? witness: a form w of
    // degree n-1 with f == dbar(w) modulo W^n
    bool is_coboundary(const Form& f, Form* witness = nullptr) const;

  private:
    Digraph g_;
    int maxdim_;
    std::vector<PathIndexer> ix_;     // per degree 0..maxdim+1, allowed paths pre-registered
    std::vector<QEchelon> w_;         // W^n
    std::vector<QEchelon> img_;       // W^n + pi_A(d A^{n-1}), tagged by A^{n-1} index
    std::vector<long> dbar_rank_;
    std::vector<std::vector<Form>> h_basis_;

    QVec to_vec(const Form& f, int n) const;
    Form from_vec(const QVec& v, int n) const;
};

struct CohomologyReport {
    std::vector<long> ranks_quotient;  // per degree 0..maxdim
    std::vector<long> ranks_dual;      // rational betti numbers
    bool agree = false;
};

// Ranks computed two independent ways; disagreement throws
// PropertyFailure("DualityMismatch ...") since it can only mean a bug.
CohomologyReport cohomology(const Digraph& g, int maxdim);

}  // namespace pathhom

#endif
