#pragma once

#include <cstddef>
#include <vector>

#include "lgpot/error.hpp"
#include "lgpot/scalar.hpp"

namespace lgpot {

/// Dense matrix of exact scalars, row-major. Small sizes only; every
/// operation is exact.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v);

    bool is_zero() const;

    friend ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Exact rank via Gaussian elimination over the scalar field.
std::size_t exact_rank(const ScalarMatrix& m);

/// Solves A x = b exactly over the scalar field, or reports why it cannot.
///
/// Pivoting is deterministic: columns are processed left to right, and the
/// pivot is the first row (in the given row order) with a nonzero entry.
/// Throws SolveError with Kind::Inconsistent when no solution exists, and
/// with Kind::Underdetermined (carrying the solution-space dimension) when
/// the solution is not unique.
std::vector<Scalar> solve_exact(const ScalarMatrix& a, const std::vector<Scalar>& b);

} // namespace lgpot
