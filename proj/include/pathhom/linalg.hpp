#ifndef PATHHOM_LINALG_HPP
#define PATHHOM_LINALG_HPP

#include <map>
#include <optional>

#include "pathhom/types.hpp"

namespace pathhom {

// Dense integer matrix, row major. Rows may be empty (zero matrix with
// explicit dimensions is carried separately where needed).
using ZMat = std::vector<std::vector<Int>>;

struct SNFResult {
    std::vector<Int> invariants;  // positive, d_1 | d_2 | ...
    long rank = 0;                // == invariants.size()
    bool verified = false;        // re-multiplication check ran and passed
};

// Smith normal form. With want_transforms, U*M*V = diag(invariants) is
// verified and `verified` is set.
SNFResult smith_normal_form(ZMat m, bool want_transforms = false);

long int_rank(ZMat m);

// Basis of the integer kernel {x : Mx = 0}. The kernel of an integer
// matrix is a saturated lattice, so any integer basis of it is saturated.
std::vector<std::vector<Int>> int_kernel(const ZMat& m, size_t cols);

// Solve Mx = b over the integers; returns false if no integral solution.
bool int_solve(const ZMat& m, size_t cols, const std::vector<Int>& b, std::vector<Int>& x);

// ---- exact rational sparse elimination ----

using QVec = std::map<int, Rat>;  // sparse vector, index -> nonzero value

void qvec_axpy(QVec& y, const Rat& a, const QVec& x);  // y += a*x

// Incremental echelon basis over Q with optional combination tracking.
// Tags live in a caller-chosen index space; a row's tag expresses the row
// as a combination of the caller's generators (rows added with empty tags
// are "free" and invisible in reported combinations).
class QEchelon {
  public:
    // Reduces v against the current rows. If the residue is nonzero the
    // row is added and nullopt is returned. If v lies in the span, the
    // accumulated tag of the dependency is returned (tag - sum of used
    // row tags), i.e. a combination of tagged generators representing v
    // modulo the untagged rows.
    std::optional<QVec> add(QVec v, QVec tag = {});

    // Span membership without insertion; fills combo (over tagged
    // generators) when requested and v is in the span.
    bool in_span(QVec v, QVec* combo = nullptr) const;

    long rank() const { return static_cast<long>(rows_.size()); }

    // Residue of v after reduction against the rows (no insertion).
    QVec residue(QVec v) const;

  private:
    struct Row {
        QVec v;    // normalized: leading (smallest-index) coefficient 1
        QVec tag;
        int pivot;
    };
    std::vector<Row> rows_;
    std::map<int, size_t> pivot_row_;

    void reduce(QVec& v, QVec& tag) const;
};

}  // namespace pathhom

#endif
