#include "divmeas/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "divmeas/errors.hpp"

namespace divmeas {

CovarianceMatrix::CovarianceMatrix(std::vector<double> entries, std::size_t dim)
    : entries_(std::move(entries)), dim_(dim) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_)
        throw validation_error("CovarianceMatrix: entry count does not match dimension");
    double max_abs = 0.0;
    for (double v : entries_) {
        if (!std::isfinite(v)) throw validation_error("CovarianceMatrix: non-finite entry");
        max_abs = std::max(max_abs, std::abs(v));
    }
    if (max_abs == 0.0)
        throw validation_error("CovarianceMatrix: all entries are zero (degenerate)");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > symmetry_rel_tolerance * max_abs)
                throw validation_error("CovarianceMatrix: asymmetric at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
}

EigenSpectrum::EigenSpectrum(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw validation_error("EigenSpectrum: empty");
    double sum = 0.0;
    for (std::size_t k = 0; k < lambdas_.size(); ++k) {
        if (lambdas_[k] < 0.0)
            throw validation_error("EigenSpectrum: negative eigenvalue");
        if (k > 0 && lambdas_[k] > lambdas_[k - 1])
            throw validation_error("EigenSpectrum: not in descending order");
        sum += lambdas_[k];
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw validation_error("EigenSpectrum: eigenvalues sum to " + std::to_string(sum));
}

EigenSpectrum eigen_spectrum(const CovarianceMatrix& c) {
    const auto n = static_cast<Eigen::Index>(c.dim());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = c.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigen_spectrum: eigen-decomposition failed");

    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + n);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    const double lam_max = ev.front();
    if (!(lam_max > 0.0))
        throw validation_error("eigen_spectrum: no positive eigenvalue (degenerate input)");
    double sum = 0.0;
    for (double& lam : ev) {
        if (lam < -CovarianceMatrix::psd_rel_tolerance * lam_max)
            throw validation_error("eigen_spectrum: matrix is indefinite (eigenvalue " +
                                   std::to_string(lam) + ")");
        lam = std::max(lam, 0.0);
        sum += lam;
    }
    for (double& lam : ev) lam /= sum;
    return EigenSpectrum(std::move(ev));
}

double pdi(const EigenSpectrum& s) {
    double acc = 0.0;
    const auto lam = s.lambdas();
    for (std::size_t k = 0; k < lam.size(); ++k)
        acc += static_cast<double>(k + 1) * lam[k];
    return 2.0 * acc - 1.0;
}

double pdi_weighted(const CovarianceMatrix& c, const WeightVector& w) {
    if (w.size() != c.dim())
        throw validation_error("pdi_weighted: weight/covariance dimension mismatch");
    const auto wv = w.weights();
    const std::size_t n = c.dim();
    std::vector<double> scaled(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scaled[i * n + j] = wv[i] * c.at(i, j) * wv[j];
    return pdi(eigen_spectrum(CovarianceMatrix(std::move(scaled), n)));
}

}  // namespace divmeas
