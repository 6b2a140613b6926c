#include "pathhom/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace pathhom {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

void row_sub(std::vector<Int>& a, const Int& q, const std::vector<Int>& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= q * b[k];
}

// Column elimination M -> M*V with V unimodular, tracking V. After the
// call every row either has a designated pivot column or is zero on all
// remaining free columns. Returns (pivot row, pivot col) pairs in row
// order; `is_free[c]` marks kernel columns.
struct ColEchelon {
    ZMat h;       // m * v
    ZMat v;       // cols x cols, column-major-as-rows transposed? kept row major square
    std::vector<std::pair<size_t, size_t>> pivots;
    std::vector<bool> is_free;
};

ColEchelon column_echelon(const ZMat& m, size_t cols) {
    ColEchelon r;
    r.h = m;
    r.v.assign(cols, std::vector<Int>(cols, 0));
    for (size_t j = 0; j < cols; ++j) r.v[j][j] = 1;
    r.is_free.assign(cols, true);

    auto col_sub = [&](size_t dst, const Int& q, size_t src) {
        for (auto& row : r.h) row[dst] -= q * row[src];
        for (auto& row : r.v) row[dst] -= q * row[src];
    };

    for (size_t row = 0; row < r.h.size(); ++row) {
        for (;;) {
            // smallest nonzero entry of this row among free columns
            size_t best = cols;
            for (size_t j = 0; j < cols; ++j) {
                if (!r.is_free[j] || r.h[row][j] == 0) continue;
                if (best == cols || iabs(r.h[row][j]) < iabs(r.h[row][best])) best = j;
            }
            if (best == cols) break;  // row is zero on free columns
            bool others = false;
            for (size_t j = 0; j < cols; ++j) {
                if (j == best || !r.is_free[j] || r.h[row][j] == 0) continue;
                Int q = r.h[row][j] / r.h[row][best];
                col_sub(j, q, best);
                if (r.h[row][j] != 0) others = true;
            }
            if (!others) {
                r.is_free[best] = false;
                r.pivots.emplace_back(row, best);
                break;
            }
        }
    }
    return r;
}

}  // namespace

std::vector<std::vector<Int>> int_kernel(const ZMat& m, size_t cols) {
    ColEchelon ce = column_echelon(m, cols);
    std::vector<std::vector<Int>> ker;
    for (size_t j = 0; j < cols; ++j) {
        if (!ce.is_free[j]) continue;
        std::vector<Int> x(cols);
        for (size_t i = 0; i < cols; ++i) x[i] = ce.v[i][j];
        ker.push_back(std::move(x));
    }
    return ker;
}

bool int_solve(const ZMat& m, size_t cols, const std::vector<Int>& b, std::vector<Int>& x) {
    ColEchelon ce = column_echelon(m, cols);
    std::vector<Int> res = b;
    std::vector<Int> y(cols, 0);
    for (auto [pr, pc] : ce.pivots) {
        if (res[pr] == 0) continue;
        if (res[pr] % ce.h[pr][pc] != 0) return false;
        Int q = res[pr] / ce.h[pr][pc];
        y[pc] = q;
        for (size_t i = 0; i < res.size(); ++i) res[i] -= q * ce.h[i][pc];
    }
    for (const Int& v : res)
        if (v != 0) return false;
    x.assign(cols, 0);
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j) x[i] += ce.v[i][j] * y[j];
    return true;
}

SNFResult smith_normal_form(ZMat m, bool want_transforms) {
    ZMat orig;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    ZMat u, v;
    if (want_transforms) {
        orig = m;
        u.assign(rows, std::vector<Int>(rows, 0));
        for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
        v.assign(cols, std::vector<Int>(cols, 0));
        for (size_t j = 0; j < cols; ++j) v[j][j] = 1;
    }

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(m[a], m[b]);
        if (want_transforms) std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& r : m) std::swap(r[a], r[b]);
        if (want_transforms)
            for (auto& r : v) std::swap(r[a], r[b]);
    };
    auto addmul_row = [&](size_t dst, const Int& q, size_t src) {
        row_sub(m[dst], q, m[src]);
        if (want_transforms) row_sub(u[dst], q, u[src]);
    };
    auto addmul_col = [&](size_t dst, const Int& q, size_t src) {
        for (auto& r : m) r[dst] -= q * r[src];
        if (want_transforms)
            for (auto& r : v) r[dst] -= q * r[src];
    };

    SNFResult out;
    size_t t = 0;
    while (t < rows && t < cols) {
        // locate a smallest nonzero entry of the trailing submatrix
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || iabs(m[i][j]) < iabs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                while (m[i][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    addmul_row(i, q, t);
                    if (m[i][t] != 0) swap_rows(i, t);
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                while (m[t][j] != 0) {
                    Int q = m[t][j] / m[t][t];
                    addmul_col(j, q, t);
                    if (m[t][j] != 0) {
                        swap_cols(j, t);
                        dirty = true;  // column t got dirtied again
                    }
                }
            }
            if (dirty) continue;
            // pivot must divide the rest of the submatrix
            for (size_t i = t + 1; i < rows && !dirty; ++i)
                for (size_t j = t + 1; j < cols && !dirty; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        addmul_row(t, Int(-1), i);
                        dirty = true;
                    }
        }
        if (m[t][t] < 0) {
            for (size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
            if (want_transforms)
                for (size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
        out.invariants.push_back(m[t][t]);
        ++t;
    }
    out.rank = static_cast<long>(out.invariants.size());

    if (want_transforms) {
        // check U * orig * V == diag(invariants)
        bool ok = true;
        for (size_t i = 0; i < rows && ok; ++i)
            for (size_t j = 0; j < cols && ok; ++j) {
                Int acc = 0;
                for (size_t a = 0; a < rows; ++a) {
                    if (u[i][a] == 0) continue;
                    Int mid = 0;
                    for (size_t b = 0; b < cols; ++b)
                        if (orig[a][b] != 0) mid += orig[a][b] * v[b][j];
                    acc += u[i][a] * mid;
                }
                Int want = (i == j && i < out.invariants.size()) ? out.invariants[i] : Int(0);
                ok = (acc == want);
            }
        if (!ok) throw PropertyFailure("smith normal form transform verification failed");
        out.verified = true;
    }
    return out;
}

long int_rank(ZMat m) {
    QEchelon e;
    for (size_t i = 0; i < m.size(); ++i) {
        QVec v;
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) v[static_cast<int>(j)] = Rat(m[i][j]);
        e.add(std::move(v));
    }
    return e.rank();
}

void qvec_axpy(QVec& y, const Rat& a, const QVec& x) {
    if (a == 0) return;
    for (const auto& [k, val] : x) {
        Rat& slot = y[k];
        slot += a * val;
        if (slot == 0) y.erase(k);
    }
}

void QEchelon::reduce(QVec& v, QVec& tag) const {
    for (;;) {
        auto it = v.begin();
        const Row* hit = nullptr;
        while (it != v.end()) {
            auto p = pivot_row_.find(it->first);
            if (p != pivot_row_.end()) {
                hit = &rows_[p->second];
                break;
            }
            ++it;
        }
        if (!hit) return;
        Rat mult = it->second;  // hit row has leading coefficient 1
        qvec_axpy(v, -mult, hit->v);
        qvec_axpy(tag, -mult, hit->tag);
    }
}

std::optional<QVec> QEchelon::add(QVec v, QVec tag) {
    reduce(v, tag);
    if (v.empty()) return tag;  // relation among tagged generators
    Rat lead = v.begin()->second;
    if (lead != 1) {
        for (auto& [k, val] : v) val /= lead;
        for (auto& [k, val] : tag) val /= lead;
    }
    int pivot = v.begin()->first;
    pivot_row_[pivot] = rows_.size();
    rows_.push_back(Row{std::move(v), std::move(tag), pivot});
    return std::nullopt;
}

QVec QEchelon::residue(QVec v) const {
    QVec tag;
    reduce(v, tag);
    return v;
}

bool QEchelon::in_span(QVec v, QVec* combo) const {
    QVec tag;
    reduce(v, tag);
    if (!v.empty()) return false;
    if (combo) {
        combo->clear();
        for (auto& [k, val] : tag) (*combo)[k] = -val;
    }
    return true;
}

}  // namespace pathhom
