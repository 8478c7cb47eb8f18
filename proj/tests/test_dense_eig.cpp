#include "doctest.h"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"
#include "ispec/rng.hpp"
#include "oracle.hpp"

#include <cmath>
#include <cstring>

using namespace ispec;

namespace {

Matrix random_symmetric(std::size_t n, Rng& rng, double scale = 10.0) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-scale, scale);
    return a;
}

} // namespace

TEST_CASE("sym_eigen on diagonal and identity matrices") {
    const EigenPairs id = sym_eigen(Matrix::identity(3));
    CHECK(id.values == std::vector<double>{1.0, 1.0, 1.0});

    const Matrix d{{3, 0, 0}, {0, 1, 0}, {0, 0, 2}};
    CHECK(sym_eigenvalues(d) == std::vector<double>{3.0, 2.0, 1.0});

    const Matrix one{{-7.5}};
    const EigenPairs ep = sym_eigen(one);
    CHECK(ep.values[0] == -7.5);
    CHECK(ep.vectors(0, 0) == 1.0);
}

TEST_CASE("sym_eigen agrees with the inertia bisection oracle") {
    // top eigenvalue of the widest vertex of the 3x3 example
    const Matrix a{{1, 2, 5}, {2, 1, 1}, {5, 1, 1}};
    const std::vector<double> jac = sym_eigenvalues(a);
    const std::vector<double> bis = oracle::bisect_sym_eigenvalues(a);
    REQUIRE(jac.size() == bis.size());
    for (std::size_t i = 0; i < jac.size(); ++i) CHECK(jac[i] == doctest::Approx(bis[i]).epsilon(1e-9));
    CHECK(std::abs(jac[0] - 6.7843) < 5e-5);

    Rng rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix m = random_symmetric(5, rng);
        const std::vector<double> j2 = sym_eigenvalues(m);
        const std::vector<double> b2 = oracle::bisect_sym_eigenvalues(m);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(j2[i] - b2[i]) < 1e-8 * (1.0 + std::abs(b2[i])));
    }
}

TEST_CASE("sym_eigen reconstruction, ordering and orthonormality") {
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = random_symmetric(20, rng);
        const EigenPairs ep = sym_eigen(a);

        for (std::size_t i = 0; i + 1 < 20; ++i) CHECK(ep.values[i] >= ep.values[i + 1]);

        double recon_err = 0.0;
        for (std::size_t i = 0; i < 20; ++i)
            for (std::size_t j = 0; j < 20; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < 20; ++k)
                    s += ep.vectors(i, k) * ep.values[k] * ep.vectors(j, k);
                recon_err += (s - a(i, j)) * (s - a(i, j));
            }
        CHECK(std::sqrt(recon_err) <= 1e-10 * a.frobenius_norm());

        for (std::size_t c1 = 0; c1 < 20; ++c1)
            for (std::size_t c2 = c1; c2 < 20; ++c2) {
                double s = 0.0;
                for (std::size_t k = 0; k < 20; ++k) s += ep.vectors(k, c1) * ep.vectors(k, c2);
                CHECK(std::abs(s - (c1 == c2 ? 1.0 : 0.0)) < 1e-10);
            }
    }
}

TEST_CASE("sym_eigen is bit-deterministic and sign-normalized") {
    Rng rng(99);
    const Matrix a = random_symmetric(9, rng);
    const EigenPairs e1 = sym_eigen(a);
    const EigenPairs e2 = sym_eigen(a);
    CHECK(std::memcmp(e1.values.data(), e2.values.data(), sizeof(double) * 9) == 0);
    CHECK(std::memcmp(e1.vectors.data().data(), e2.vectors.data().data(),
                      sizeof(double) * 81) == 0);

    const double eps = 1e-12 * a.frobenius_norm();
    for (std::size_t c = 0; c < 9; ++c) {
        for (std::size_t k = 0; k < 9; ++k) {
            if (std::abs(e1.vectors(k, c)) > eps) {
                CHECK(e1.vectors(k, c) > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("sym_eigen rejects nonsymmetric input") {
    const Matrix bad{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(sym_eigen(bad), ValidationError);
    CHECK_THROWS_AS(sym_eigen(Matrix(2, 3)), ValidationError);
}

TEST_CASE("spectral_radius_nonneg") {
    CHECK(spectral_radius_nonneg(Matrix(4, 4, 0.0)) == 0.0);

    const Matrix d{{5, 0}, {0, 2}};
    CHECK(spectral_radius_nonneg(d) == doctest::Approx(5.0));

    // radius matrix of the 3x3 example: eigenvalues {2, 0, -2}
    const Matrix r{{0, 0, 2}, {0, 0, 0}, {2, 0, 0}};
    CHECK(spectral_radius_nonneg(r) == doctest::Approx(2.0).epsilon(1e-12));

    const Matrix neg{{1, -1}, {-1, 1}};
    CHECK_THROWS_AS(spectral_radius_nonneg(neg), ValidationError);

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i; j < 6; ++j) m(i, j) = m(j, i) = rng.uniform(0.0, 3.0);
        const std::vector<double> vals = sym_eigenvalues(m);
        const double expected = std::max(std::abs(vals.front()), std::abs(vals.back()));
        CHECK(spectral_radius_nonneg(m) == doctest::Approx(expected).epsilon(1e-10));
    }
}
