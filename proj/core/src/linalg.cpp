#include "lgpot/linalg.hpp"

namespace lgpot {

void ScalarMatrix::set(std::size_t i, std::size_t j, Scalar v) {
    if (!v.is_exact())
        throw DomainError("exact linear algebra requires exact scalars");
    data_[i * cols_ + j] = std::move(v);
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
    ScalarMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.set(i, j, r.at(i, j) + aik * bkj);
            }
        }
    return r;
}

namespace {

// Row-echelon elimination on an augmented working copy. Returns the pivot
// row chosen for each column (or npos), leaving `w` reduced in place.
struct Echelon {
    std::vector<std::vector<Scalar>> w; // rows x (cols [+ rhs])
    std::vector<std::size_t> pivot_row; // per column
    std::size_t rank = 0;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Echelon eliminate(const ScalarMatrix& a, const std::vector<Scalar>* rhs) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t width = cols + (rhs ? 1 : 0);
    Echelon e;
    e.w.assign(rows, std::vector<Scalar>(width, Scalar(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!a.at(i, j).is_exact())
                throw DomainError("exact linear algebra requires exact scalars");
            e.w[i][j] = a.at(i, j);
        }
        if (rhs) {
            if (!(*rhs)[i].is_exact())
                throw DomainError("exact linear algebra requires exact scalars");
            e.w[i][cols] = (*rhs)[i];
        }
    }

    e.pivot_row.assign(cols, npos);
    std::vector<bool> used(rows, false);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = npos;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!used[i] && !e.w[i][col].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == npos) continue;
        used[piv] = true;
        e.pivot_row[col] = piv;
        ++e.rank;
        Scalar inv = e.w[piv][col].inverse();
        for (std::size_t j = col; j < width; ++j)
            e.w[piv][j] = e.w[piv][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == piv || e.w[i][col].is_zero()) continue;
            Scalar f = e.w[i][col];
            for (std::size_t j = col; j < width; ++j)
                e.w[i][j] = e.w[i][j] - f * e.w[piv][j];
        }
    }
    return e;
}

} // namespace

std::size_t exact_rank(const ScalarMatrix& m) {
    return eliminate(m, nullptr).rank;
}

std::vector<Scalar> solve_exact(const ScalarMatrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows())
        throw DomainError("right-hand side length does not match row count");
    Echelon e = eliminate(a, &b);
    const std::size_t cols = a.cols();

    // A row that reduced to zero coefficients but nonzero rhs kills it.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (!e.w[i][j].is_zero()) {
                zero_row = false;
                break;
            }
        if (zero_row && !e.w[i][cols].is_zero())
            throw SolveError(SolveError::Kind::Inconsistent, 0,
                             "linear system is inconsistent: no solution exists");
    }

    if (e.rank < cols) {
        std::size_t dim = cols - e.rank;
        throw SolveError(SolveError::Kind::Underdetermined, dim,
                         "linear system is underdetermined: solution space has dimension " +
                             std::to_string(dim));
    }

    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t col = 0; col < cols; ++col)
        x[col] = e.w[e.pivot_row[col]][cols];
    return x;
}

} // namespace lgpot
