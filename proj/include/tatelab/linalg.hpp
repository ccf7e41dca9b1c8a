/* Sparse exact linear algebra over the configured field: elimination,
 * rank, kernels, incremental row bases and linear solves. */
#ifndef TATELAB_LINALG_HPP
#define TATELAB_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tatelab/scalar.hpp"

namespace tatelab {

/* Sparse vector: (index, value) pairs, strictly increasing indices,
 * no stored zeros. */
using SVec = std::vector<std::pair<int, Scalar>>;

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);  // a + c*b
void svec_scale(SVec& a, const Scalar& c);
Scalar svec_get(const SVec& a, int idx, const Scalar& zero);
SVec svec_unit(int idx, const Scalar& one);

struct SparseMat {
    int nrows = 0;
    int ncols = 0;
    std::vector<SVec> rows;

    SparseMat() = default;
    SparseMat(int r, int c) : nrows(r), ncols(c), rows(r) {}

    void add(int r, int c, const Scalar& v);
    SparseMat transpose() const;
    SVec apply(const SVec& x, const Scalar& zero) const;  // y = A x
    long nnz() const;
};

/* Row echelon state produced by eliminate(): pivot list plus the reduced
 * rows.  With full_reduce the matrix is in RREF above the pivots too. */
struct Echelon {
    std::vector<SVec> rows;                  // nonzero reduced rows
    std::vector<int> pivot_col;              // pivot column of rows[i]
    int rank() const { return static_cast<int>(rows.size()); }
};

/* max_rank >= 0 stops once that many pivots are found (the remaining rows
 * are known to be dependent by the caller). */
Echelon eliminate(SparseMat m, bool full_reduce, int max_rank = -1);

SparseMat matmul(const SparseMat& a, const SparseMat& b);  // a * b

int rank(const SparseMat& m);

/* Basis of { x : A x = 0 }, vectors of dimension m.ncols, deterministic
 * (free columns in increasing order).  `one` fixes the field of the unit
 * entries when the matrix carries no scalars of its own. */
std::vector<SVec> kernel_basis(const SparseMat& m, const Scalar& one);

/* Incremental row-space basis with reduction against absorbed rows. */
class Basis {
public:
    explicit Basis(int dim) : dim_(dim) {}

    SVec reduce(SVec v) const;
    bool insert(SVec v);          // true if v was independent
    bool contains(const SVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const std::vector<SVec>& rows() const { return rows_; }

private:
    int dim_;
    std::vector<SVec> rows_;      // pivot-normalized, sorted insert order
    std::vector<int> pivot_col_;
};

/* Solves B x = v where B's columns are a fixed spanning set. */
class ColumnSolver {
public:
    ColumnSolver(const std::vector<SVec>& columns, int ambient_dim);

    std::optional<SVec> solve(const SVec& v) const;  // coords, dim = #columns

private:
    int ambient_;
    int ncols_;
    std::vector<SVec> rows_;      // echelonized columns (as rows)
    std::vector<SVec> combo_;     // same row ops applied to identity
    std::vector<int> pivot_col_;
};

}  // namespace tatelab

#endif
