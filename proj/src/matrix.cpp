#include "cogmimo/matrix.hpp"

#include <cmath>

#include "cogmimo/errors.hpp"

namespace cogmimo {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DomainError("ComplexMatrix: dimensions must be >= 1");
    data_.assign(static_cast<std::size_t>(rows) * cols, {0.0, 0.0});
}

ComplexMatrix ComplexMatrix::columns(int first, int count) const {
    if (first < 0 || count < 1 || first + count > cols_)
        throw DomainError("ComplexMatrix::columns: block out of range");
    ComplexMatrix out(rows_, count);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m) {
    const int n = m.rows();
    const int k = m.cols();
    if (n < k) throw DomainError("pseudo_inverse: requires rows >= cols");
    if (!m.all_finite()) throw DomainError("pseudo_inverse: non-finite entry");

    // One-sided Jacobi: rotate column pairs of a working copy until mutually
    // orthogonal; the column norms are then the singular values.
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(k);

    constexpr double kOrthTol = 1e-14;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < k - 1; ++p) {
            for (int q = p + 1; q < k; ++q) {
                double alpha = 0.0, beta = 0.0;
                std::complex<double> g{0.0, 0.0};
                for (int r = 0; r < n; ++r) {
                    alpha += std::norm(a(r, p));
                    beta += std::norm(a(r, q));
                    g += std::conj(a(r, p)) * a(r, q);
                }
                const double mag = std::abs(g);
                if (mag <= kOrthTol * std::sqrt(alpha * beta) || mag == 0.0) continue;
                rotated = true;
                const std::complex<double> phase = g / mag;  // e^{i theta}
                const double tau = (beta - alpha) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int r = 0; r < n; ++r) {
                    const auto ap = a(r, p);
                    const auto aq = std::conj(phase) * a(r, q);
                    a(r, p) = c * ap - s * aq;
                    a(r, q) = s * ap + c * aq;
                }
                for (int r = 0; r < k; ++r) {
                    const auto vp = v(r, p);
                    const auto vq = std::conj(phase) * v(r, q);
                    v(r, p) = c * vp - s * vq;
                    v(r, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma_sq(k, 0.0);
    double sigma_max = 0.0;
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < n; ++r) sigma_sq[c] += std::norm(a(r, c));
        sigma_max = std::max(sigma_max, std::sqrt(sigma_sq[c]));
    }
    for (int c = 0; c < k; ++c) {
        if (std::sqrt(sigma_sq[c]) < 1e-12 * sigma_max || sigma_sq[c] == 0.0)
            throw SingularMatrixError("pseudo_inverse: matrix is rank deficient");
    }

    ComplexMatrix pinv(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) {
            std::complex<double> acc{0.0, 0.0};
            for (int j = 0; j < k; ++j) acc += v(r, j) * std::conj(a(c, j)) / sigma_sq[j];
            pinv(r, c) = acc;
        }
    return pinv;
}

ComplexMatrix sample_complex_gaussian(int rows, int cols, std::span<const double> column_variances,
                                      RngStream& rng) {
    if (static_cast<int>(column_variances.size()) != cols)
        throw DomainError("sample_complex_gaussian: need one variance per column");
    for (double var : column_variances)
        if (var < 0.0) throw DomainError("sample_complex_gaussian: negative variance");
    ComplexMatrix out(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) out(r, c) = rng.next_complex_gaussian(column_variances[c]);
    return out;
}

}  // namespace cogmimo
