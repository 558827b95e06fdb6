#ifndef DIVMEAS_SPECTRAL_HPP
#define DIVMEAS_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "divmeas/weights.hpp"

namespace divmeas {

// Square return-covariance matrix, row-major.  Must be symmetric and
// positive semi-definite up to roundoff; asymmetry is an error, not
// silently fixed.
class CovarianceMatrix {
public:
    static constexpr double symmetry_rel_tolerance = 1e-10;
    static constexpr double psd_rel_tolerance = 1e-10;

    CovarianceMatrix(std::vector<double> entries, std::size_t dim);

    std::size_t dim() const { return dim_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    std::span<const double> entries() const { return entries_; }

private:
    std::vector<double> entries_;
    std::size_t dim_;
};

// Covariance eigenvalues, descending, normalized to sum 1.
class EigenSpectrum {
public:
    explicit EigenSpectrum(std::vector<double> lambdas);

    std::span<const double> lambdas() const { return lambdas_; }
    std::size_t size() const { return lambdas_.size(); }

private:
    std::vector<double> lambdas_;
};

// Symmetric eigen-decomposition; eigenvalues within -1e-10 * lambda_max
// of zero are clamped, more negative ones are an error.
EigenSpectrum eigen_spectrum(const CovarianceMatrix& c);

// Portfolio Diversification Index: 2 sum k lambda_k - 1, in [1, M].
double pdi(const EigenSpectrum& s);

// PDI of the covariance of weighted contributions w_i c_ij w_j.  Zero
// weights are admitted (their contributions vanish).
double pdi_weighted(const CovarianceMatrix& c, const WeightVector& w);

}  // namespace divmeas

#endif
