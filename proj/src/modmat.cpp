#include "qvf/modmat.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qvf/errors.hpp"

namespace qvf {

namespace {

// row -= m * pivot, Montgomery form, from column `from` onward
void axpy_sub(std::vector<u64>& row, const std::vector<u64>& pivot, u64 m,
              size_t from, const MontgomeryContext& ctx) {
    const u64* __restrict pv = pivot.data();
    u64* __restrict rw = row.data();
    const size_t n = row.size();
    const u64 p = ctx.p;
    for (size_t j = from; j < n; ++j) {
        const u64 t = ctx.mul(m, pv[j]);
        const u64 v = rw[j];
        rw[j] = v >= t ? v - t : v + p - t;
    }
}

} // namespace

size_t EchelonBuilder::reduce_row(std::vector<u64>& row) const {
    size_t lead = 0;
    while (lead < ncols_) {
        if (row[lead] == 0) {
            ++lead;
            continue;
        }
        const long pr = row_of_col_[lead];
        if (pr < 0) return lead;
        axpy_sub(row, pivot_rows_[static_cast<size_t>(pr)], row[lead], lead, ctx_);
        // row[lead] is now 0 exactly
        ++lead;
    }
    return ncols_;
}

void EchelonBuilder::insert_pivot(std::vector<u64>&& row, size_t lead) {
    const u64 scale = ctx_.inv(row[lead]);
    if (scale != ctx_.one)
        for (size_t j = lead; j < ncols_; ++j) row[j] = ctx_.mul(row[j], scale);
    row[lead] = ctx_.one;   // exact by construction
    row_of_col_[lead] = static_cast<long>(pivot_rows_.size());
    pivot_cols_.push_back(lead);
    pivot_rows_.push_back(std::move(row));
}

void EchelonBuilder::add_rows(std::vector<std::vector<u64>>&& block) {
    // to Montgomery form + parallel pre-reduction against the pivots
    // known at block entry; the serial pass below finishes against
    // pivots created inside the block, preserving the serial result.
    const long nexisting = static_cast<long>(pivot_rows_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (size_t r = 0; r < block.size(); ++r) {
        auto& row = block[r];
        if (row.size() != ncols_) continue;   // checked again serially
        for (auto& x : row) x = ctx_.to_mont(x);
        size_t lead = 0;
        while (lead < ncols_) {
            if (row[lead] == 0) {
                ++lead;
                continue;
            }
            const long pr = row_of_col_[lead];
            if (pr < 0 || pr >= nexisting) break;
            axpy_sub(row, pivot_rows_[static_cast<size_t>(pr)], row[lead], lead, ctx_);
            ++lead;
        }
    }
    for (auto& row : block) {
        if (row.size() != ncols_)
            throw domain_error("nullspace rows must share one length");
        const size_t lead = reduce_row(row);
        if (lead < ncols_) insert_pivot(std::move(row), lead);
    }
    block.clear();
}

NullspaceResult EchelonBuilder::nullspace() const {
    NullspaceResult out;
    out.rank = rank();
    std::vector<size_t> free_cols, pivots_desc = pivot_cols_;
    for (size_t c = 0; c < ncols_; ++c)
        if (row_of_col_[c] < 0) free_cols.push_back(c);
    std::sort(pivots_desc.begin(), pivots_desc.end(), std::greater<>());

    // Back-substitution per free column; echelon rows have pivot entry
    // == one, so x[c] = -sum_{j>c} row[j] x[j]. Pivot columns right of f
    // stay zero, which reproduces the canonical RREF basis without
    // materializing the reduced form.
    for (size_t f : free_cols) {
        std::vector<u64> x(ncols_, 0);   // Montgomery form
        x[f] = ctx_.one;
        for (size_t c : pivots_desc) {
            if (c > f) continue;
            const auto& row = pivot_rows_[static_cast<size_t>(row_of_col_[c])];
            u64 s = 0;
            for (size_t j = c + 1; j < ncols_; ++j) {
                if (x[j] == 0 || row[j] == 0) continue;
                s = ctx_.add(s, ctx_.mul(row[j], x[j]));
            }
            x[c] = s == 0 ? 0 : ctx_.p - s;
        }
        for (auto& v : x) v = ctx_.from_mont(v);
        out.basis.push_back(std::move(x));
    }
    return out;
}

NullspaceResult modular_nullspace(const std::vector<std::vector<u64>>& rows,
                                  size_t ncols, u64 prime) {
    EchelonBuilder builder(prime, ncols);
    std::vector<std::vector<u64>> block = rows;
    builder.add_rows(std::move(block));
    return builder.nullspace();
}

NullspaceResult modular_nullspace_serial(const std::vector<std::vector<u64>>& rows,
                                         size_t ncols, u64 prime) {
    for (const auto& r : rows)
        if (r.size() != ncols) throw domain_error("nullspace rows must share one length");
    const MontgomeryContext ctx(prime);
    std::vector<std::vector<u64>> m = rows;

    // full reduced row echelon form, leftmost-nonzero pivots
    size_t pivot_row = 0;
    std::vector<long> row_of_col(ncols, -1);
    for (size_t col = 0; col < ncols && pivot_row < m.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] % prime == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[pivot_row]);
        const u64 inv = (PrimeField{prime, m[pivot_row][col] % prime}).inverse().value;
        for (auto& x : m[pivot_row]) x = static_cast<u64>((u128)(x % prime) * inv % prime);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row) continue;
            const u64 f = m[r][col] % prime;
            if (f == 0) continue;
            for (size_t j = 0; j < ncols; ++j) {
                const u64 sub = static_cast<u64>((u128)f * m[pivot_row][j] % prime);
                m[r][j] = (m[r][j] % prime + prime - sub) % prime;
            }
        }
        row_of_col[col] = static_cast<long>(pivot_row);
        ++pivot_row;
    }

    NullspaceResult out;
    out.rank = pivot_row;
    for (size_t f = 0; f < ncols; ++f) {
        if (row_of_col[f] >= 0) continue;
        std::vector<u64> x(ncols, 0);
        x[f] = 1;
        for (size_t c = 0; c < ncols; ++c) {
            if (row_of_col[c] < 0) continue;
            const u64 v = m[static_cast<size_t>(row_of_col[c])][f] % prime;
            x[c] = v == 0 ? 0 : prime - v;
        }
        out.basis.push_back(std::move(x));
    }
    (void)ctx;
    return out;
}

} // namespace qvf
