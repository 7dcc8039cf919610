#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cogmimo/rng.hpp"

namespace cogmimo {

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    value_type& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const value_type& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::span<const value_type> row(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    /// Columns [first, first + count) as a new matrix.
    ComplexMatrix columns(int first, int count) const;

    bool all_finite() const;

    static ComplexMatrix identity(int n);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<value_type> data_;
};

/// Moore-Penrose pseudo-inverse of a full-column-rank matrix (rows >= cols),
/// computed by one-sided Jacobi orthogonalization. A smallest singular value
/// below 1e-12 times the largest raises SingularMatrixError.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m);

/// N x M matrix whose column j holds i.i.d. CN(0, column_variances[j]) entries.
/// Draws are consumed column by column, top to bottom.
ComplexMatrix sample_complex_gaussian(int rows, int cols,
                                      std::span<const double> column_variances, RngStream& rng);

}  // namespace cogmimo
