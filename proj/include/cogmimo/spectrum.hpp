#pragma once

#include <span>
#include <vector>

namespace cogmimo {

/// Multiset of residual variances reduced to distinct values with
/// multiplicities and the partial-fraction weights of the matching
/// sum-of-exponentials density.
///
/// The weights satisfy
///   prod_w (1 - lam_w s)^{-tau_w} = sum_v sum_{j=1}^{tau_v} X[v][j-1] (1 - lam_v s)^{-j},
/// so sum of all weights is 1 (the MGF at s = 0). Zero variances are
/// degenerate point masses and are dropped from the expansion;
/// source_dimension keeps the original count.
struct ResidualSpectrum {
    std::vector<double> distinct;              ///< strictly descending, all positive
    std::vector<int> multiplicity;             ///< tau_v
    std::vector<std::vector<double>> char_coeff;  ///< X[v][j-1], 1 <= j <= tau_v
    int source_dimension = 0;

    int distinct_count() const { return static_cast<int>(distinct.size()); }
};

/// Partial-fraction weights for strictly distinct positive values, by the
/// residue/derivative formula at each pole. Values closer than 1e-12
/// (relative) raise NumericalInstabilityError; coalesce first.
std::vector<std::vector<double>> characteristic_coefficients(std::span<const double> distinct,
                                                             std::span<const int> multiplicity);

/// Build a spectrum from raw residual variances, merging values within
/// relative distance coalesce_tol (multiplicities summed, value = mean).
/// Throws DomainError on a negative value and DegenerateSpectrumError when
/// every value is zero.
ResidualSpectrum residual_spectrum(std::span<const double> values, double coalesce_tol = 1e-9);

/// Density of the sum of independent exponentials described by the spectrum,
/// reconstructed from the partial-fraction expansion.
double spectrum_density(const ResidualSpectrum& spectrum, double y);

}  // namespace cogmimo
