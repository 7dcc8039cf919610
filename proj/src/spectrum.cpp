#include "cogmimo/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cogmimo/errors.hpp"
#include "cogmimo/numerics.hpp"

namespace cogmimo {

std::vector<std::vector<double>> characteristic_coefficients(std::span<const double> distinct,
                                                             std::span<const int> multiplicity) {
    const int rho = static_cast<int>(distinct.size());
    if (rho == 0 || distinct.size() != multiplicity.size())
        throw DomainError("characteristic_coefficients: empty or mismatched inputs");
    double lam_max = 0.0;
    for (double lam : distinct) {
        if (!(lam > 0.0)) throw DomainError("characteristic_coefficients: values must be positive");
        lam_max = std::max(lam_max, lam);
    }
    for (int v = 0; v < rho; ++v) {
        if (multiplicity[v] < 1) throw DomainError("characteristic_coefficients: multiplicities must be >= 1");
        for (int w = v + 1; w < rho; ++w)
            if (std::abs(distinct[v] - distinct[w]) < 1e-12 * lam_max)
                throw NumericalInstabilityError(
                    "characteristic_coefficients: pole separation below 1e-12, coalesce first");
    }

    std::vector<std::vector<double>> coeff(rho);
    for (int v = 0; v < rho; ++v) {
        const double lam_v = distinct[v];
        const int tau_v = multiplicity[v];
        const int order = tau_v - 1;
        // h(s) = prod_{w != v} (1 - lam_w s)^{-tau_w} evaluated with all
        // derivatives up to tau_v - 1 at s = 1/lam_v, via the recurrence
        // h^{(m)} = sum_k C(m-1, k-1) (k-1)! S_k h^{(m-k)}, S_k = sum tau_w c_w^k.
        std::vector<double> h(order + 1, 0.0);
        double h0 = 1.0;
        std::vector<double> c(rho, 0.0);
        for (int w = 0; w < rho; ++w) {
            if (w == v) continue;
            c[w] = distinct[w] * lam_v / (lam_v - distinct[w]);
            h0 *= std::pow(lam_v / (lam_v - distinct[w]), multiplicity[w]);
        }
        h[0] = h0;
        std::vector<double> s_pow(order + 1, 0.0);
        for (int k = 1; k <= order; ++k)
            for (int w = 0; w < rho; ++w)
                if (w != v) s_pow[k] += multiplicity[w] * std::pow(c[w], k);
        std::vector<double> factorial(order + 2, 1.0);
        for (int k = 1; k <= order + 1; ++k) factorial[k] = factorial[k - 1] * k;
        for (int m = 1; m <= order; ++m) {
            double acc = 0.0;
            for (int k = 1; k <= m; ++k) {
                const double binom = factorial[m - 1] / (factorial[k - 1] * factorial[m - k]);
                acc += binom * factorial[k - 1] * s_pow[k] * h[m - k];
            }
            h[m] = acc;
        }
        coeff[v].resize(tau_v, 0.0);
        for (int j = 1; j <= tau_v; ++j) {
            const int d = tau_v - j;
            coeff[v][j - 1] = std::pow(-1.0 / lam_v, d) * h[d] / factorial[d];
        }
    }
    return coeff;
}

ResidualSpectrum residual_spectrum(std::span<const double> values, double coalesce_tol) {
    if (values.empty()) throw DomainError("residual_spectrum: empty input");
    if (coalesce_tol < 0.0) throw DomainError("residual_spectrum: negative coalescing tolerance");
    std::vector<double> positive;
    for (double v : values) {
        if (v < 0.0) throw DomainError("residual_spectrum: negative residual variance");
        if (v > 0.0) positive.push_back(v);
    }
    if (positive.empty())
        throw DegenerateSpectrumError("residual_spectrum: all residual variances are zero (perfect CSI)");
    std::sort(positive.begin(), positive.end(), std::greater<>());

    ResidualSpectrum spec;
    spec.source_dimension = static_cast<int>(values.size());
    double group_sum = positive[0];
    int group_count = 1;
    auto close_group = [&] {
        spec.distinct.push_back(group_sum / group_count);
        spec.multiplicity.push_back(group_count);
    };
    for (std::size_t i = 1; i < positive.size(); ++i) {
        const double mean = group_sum / group_count;
        if (mean - positive[i] <= coalesce_tol * mean) {
            group_sum += positive[i];
            ++group_count;
        } else {
            close_group();
            group_sum = positive[i];
            group_count = 1;
        }
    }
    close_group();

    spec.char_coeff = characteristic_coefficients(spec.distinct, spec.multiplicity);

    double total = 0.0;
    double magnitude = 0.0;
    for (const auto& row : spec.char_coeff)
        for (double x : row) {
            total += x;
            magnitude += std::abs(x);
        }
    if (std::abs(total - 1.0) > 1e-6 * std::max(1.0, magnitude))
        throw NumericalInstabilityError("residual_spectrum: characteristic coefficients do not sum to 1");
    return spec;
}

double spectrum_density(const ResidualSpectrum& spectrum, double y) {
    if (y < 0.0) return 0.0;
    std::vector<double> terms;
    for (int v = 0; v < spectrum.distinct_count(); ++v) {
        const double lam = spectrum.distinct[v];
        for (int j = 1; j <= spectrum.multiplicity[v]; ++j) {
            const double x = spectrum.char_coeff[v][j - 1];
            if (x == 0.0) continue;
            const double log_mag = (j - 1) * std::log(y > 0.0 ? y : 1.0) - y / lam -
                                   std::lgamma(static_cast<double>(j)) - j * std::log(lam);
            if (y == 0.0 && j > 1) continue;
            terms.push_back((x < 0.0 ? -1.0 : 1.0) * std::exp(std::log(std::abs(x)) + log_mag));
        }
    }
    return stable_sum(terms);
}

}  // namespace cogmimo
