#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "divmeas/errors.hpp"
#include "divmeas/spectral.hpp"

using namespace divmeas;

namespace {

CovarianceMatrix random_psd(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> a(n * n);
    for (auto& v : a) v = g(rng);
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * a[j * n + k];
            c[i * n + j] = s;
        }
    // exact symmetry
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c[j * n + i] = c[i * n + j];
    return CovarianceMatrix(std::move(c), n);
}

}  // namespace

TEST_CASE("spectrum examples") {
    const auto id3 = eigen_spectrum(CovarianceMatrix({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3));
    for (double lam : id3.lambdas()) CHECK(lam == doctest::Approx(1.0 / 3).epsilon(1e-12));

    const auto diag = eigen_spectrum(CovarianceMatrix({4, 0, 0, 1}, 2));
    CHECK(diag.lambdas()[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(diag.lambdas()[1] == doctest::Approx(0.2).epsilon(1e-12));

    // rank-1 v v^T
    const std::vector<double> v{1.0, -2.0, 0.5};
    std::vector<double> m(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i * 3 + j] = v[i] * v[j];
    const auto rank1 = eigen_spectrum(CovarianceMatrix(std::move(m), 3));
    CHECK(rank1.lambdas()[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rank1.lambdas()[1] == doctest::Approx(0.0));
    CHECK(rank1.lambdas()[2] == doctest::Approx(0.0));
}

TEST_CASE("pdi examples") {
    CHECK(pdi(EigenSpectrum({1.0})) == doctest::Approx(1.0));
    CHECK(pdi(EigenSpectrum({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(pdi(EigenSpectrum({0.8, 0.2})) == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("uniform spectrum gives pdi = M for M = 1..10") {
    for (std::size_t m = 1; m <= 10; ++m) {
        std::vector<double> lam(m, 1.0 / double(m));
        // fold rounding into the first entry so the sum is exact
        double rest = 0.0;
        for (std::size_t k = 1; k < m; ++k) rest += lam[k];
        lam[0] = 1.0 - rest;
        std::sort(lam.begin(), lam.end(), std::greater<double>());
        CHECK(std::abs(pdi(EigenSpectrum(lam)) - double(m)) < 1e-12);
    }
}

TEST_CASE("pdi is scale invariant and bounded") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 2 + iter % 5;
        const auto c = random_psd(rng, n);
        const double base = pdi(eigen_spectrum(c));
        CHECK(base >= 1.0 - 1e-12);
        CHECK(base <= double(n) + 1e-12);

        const double scale = std::exp(std::uniform_real_distribution<>(-3, 3)(rng));
        std::vector<double> scaled(c.entries().begin(), c.entries().end());
        for (auto& v : scaled) v *= scale;
        CHECK(std::abs(pdi(eigen_spectrum(CovarianceMatrix(std::move(scaled), n))) -
                       base) < 1e-10);
    }
}

TEST_CASE("pdi decreases with concentration for M = 2") {
    double prev = pdi(EigenSpectrum({0.5, 0.5}));
    for (double a = 0.55; a < 1.0; a += 0.05) {
        const double cur = pdi(EigenSpectrum({a, 1.0 - a}));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("weighted pdi") {
    const CovarianceMatrix id2({1, 0, 0, 1}, 2);
    CHECK(pdi_weighted(id2, WeightVector({0.5, 0.5})) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pdi_weighted(id2, WeightVector({1.0, 0.0}, /*allow_zero=*/true)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pdi_weighted(id2, WeightVector({0.8, 0.2})) ==
          doctest::Approx(1.1176470588235294).epsilon(1e-12));
    CHECK_THROWS_AS(pdi_weighted(id2, WeightVector({1.0})), validation_error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(CovarianceMatrix({1, 2, 0, 1}, 2), validation_error);   // asymmetric
    CHECK_THROWS_AS(CovarianceMatrix({0, 0, 0, 0}, 2), validation_error);   // all zero
    CHECK_THROWS_AS(CovarianceMatrix({1, 0, 0}, 2), validation_error);      // wrong size
    CHECK_THROWS_AS(eigen_spectrum(CovarianceMatrix({1, 0, 0, -1}, 2)),
                    validation_error);  // indefinite
    CHECK_THROWS_AS(EigenSpectrum({0.2, 0.8}), validation_error);  // not descending
    CHECK_THROWS_AS(EigenSpectrum({0.9, 0.2}), validation_error);  // sum != 1
}
