#ifndef QVF_MODMAT_HPP
#define QVF_MODMAT_HPP

#include <cstdint>
#include <vector>

#include "qvf/prime_field.hpp"

namespace qvf {

struct NullspaceResult {
    size_t rank = 0;
    /// Canonical reduced-row-echelon nullspace basis, one vector per free
    /// column in ascending column order, entries in plain residue form.
    std::vector<std::vector<u64>> basis;
};

/// Incremental row-echelon builder over Z/p. Rows are inserted in a fixed
/// order with deterministic leftmost-nonzero pivot choice, so the result
/// is independent of threading. add_rows() pre-reduces a whole block
/// against the existing pivots in parallel, then finishes serially.
class EchelonBuilder {
  public:
    EchelonBuilder(u64 prime, size_t ncols)
        : ctx_(prime), ncols_(ncols), row_of_col_(ncols, -1) {}

    /// Rows in plain residue form; consumed.
    void add_rows(std::vector<std::vector<u64>>&& block);

    size_t rank() const { return pivot_cols_.size(); }
    size_t nullity() const { return ncols_ - rank(); }
    u64 prime() const { return ctx_.p; }
    size_t ncols() const { return ncols_; }

    NullspaceResult nullspace() const;

  private:
    /// Reduce `row` (Montgomery form) against pivots; returns the leading
    /// column or ncols_ when the row vanished.
    size_t reduce_row(std::vector<u64>& row) const;
    void insert_pivot(std::vector<u64>&& row, size_t lead);

    MontgomeryContext ctx_;
    size_t ncols_;
    std::vector<std::vector<u64>> pivot_rows_;   // Montgomery form, pivot entry = one
    std::vector<size_t> pivot_cols_;             // column of pivot_rows_[i]
    std::vector<long> row_of_col_;               // column -> pivot row index or -1
};

/// Nullspace of the row span (parallel echelon path). Rows may be empty;
/// an empty input yields the full space of dimension ncols.
NullspaceResult modular_nullspace(const std::vector<std::vector<u64>>& rows,
                                  size_t ncols, u64 prime);

/// Textbook single-threaded reduced-row-echelon reference; kept for
/// differential tests and the kernel benchmark.
NullspaceResult modular_nullspace_serial(const std::vector<std::vector<u64>>& rows,
                                         size_t ncols, u64 prime);

} // namespace qvf

#endif
