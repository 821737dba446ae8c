#include <doctest.h>

#include "chronon/sot.hpp"
#include "helpers.hpp"

using namespace chronon;
using test::max_abs_diff;

TEST_SUITE("linalg") {

TEST_CASE("kron identity and unit placement") {
    MatrixC i2 = MatrixC::Identity(2, 2);
    CHECK(max_abs_diff(la::kron(i2, i2), MatrixC::Identity(4, 4)) == 0.0);

    MatrixC k = la::kron(la::unit(0, 0, 2), la::unit(1, 1, 2));
    CHECK(k(1, 1) == Complex(1.0));
    CHECK(std::abs(k.sum() - Complex(1.0)) == 0.0);
}

TEST_CASE("kron trace multiplies (summation oracle)") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        MatrixC a = test::rand_hermitian(3, 100 + s), b = test::rand_hermitian(3, 200 + s);
        MatrixC k = la::kron(a, b);
        Complex direct = 0.0; // oracle: explicit diagonal sum of the product matrix
        for (Eigen::Index i = 0; i < 9; ++i) direct += k(i, i);
        CHECK(std::abs(direct - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("partial trace of the EPR projector") {
    MatrixC m = la::partial_trace(test::epr_state(), 2, 2, la::Factor::Left);
    CHECK(max_abs_diff(m, MatrixC::Identity(2, 2) / 2.0) < 1e-15);
    m = la::partial_trace(test::epr_state(), 2, 2, la::Factor::Right);
    CHECK(max_abs_diff(m, MatrixC::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("partial trace of a product") {
    MatrixC a = test::rand_hermitian(2, 7), b = test::rand_hermitian(3, 8);
    MatrixC k = la::kron(a, b);
    CHECK(max_abs_diff(la::partial_trace(k, 2, 3, la::Factor::Left), a.trace() * b) < 1e-12);
    CHECK(max_abs_diff(la::partial_trace(k, 2, 3, la::Factor::Right), b.trace() * a) < 1e-12);
}

TEST_CASE("partial trace against the index-summation oracle") {
    MatrixC m = test::rand_hermitian(6, 11);
    MatrixC left = MatrixC::Zero(3, 3), right = MatrixC::Zero(2, 2);
    for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index i = 0; i < 3; ++i)
            for (Eigen::Index j = 0; j < 3; ++j) left(i, j) += m(a * 3 + i, a * 3 + j);
    for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b)
            for (Eigen::Index k = 0; k < 3; ++k) right(a, b) += m(a * 3 + k, b * 3 + k);
    CHECK(max_abs_diff(la::partial_trace(m, 2, 3, la::Factor::Left), left) < 1e-13);
    CHECK(max_abs_diff(la::partial_trace(m, 2, 3, la::Factor::Right), right) < 1e-13);
    CHECK(std::abs(left.trace() - m.trace()) < 1e-13);
}

TEST_CASE("herm_eigen diagonal ordering") {
    MatrixC d = MatrixC::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    la::HermEigen eig = la::herm_eigen(d);
    CHECK(eig.values(0) == doctest::Approx(1.0));
    CHECK(eig.values(1) == doctest::Approx(2.0));
    CHECK(eig.values(2) == doctest::Approx(3.0));
}

TEST_CASE("herm_eigen multispectrum of the pure-qubit identity-process bloom") {
    // (1/2){rho (x) 1, mu*(1)} for rho = E_11 has spectrum {-1/2, 0, 1/2, 1}
    MatrixC rho = la::unit(0, 0, 2);
    MatrixC jam = mm::mult_adjoint(MatrixC::Identity(2, 2));
    MatrixC r1 = la::kron(rho, MatrixC::Identity(2, 2));
    MatrixC sym = 0.5 * (r1 * jam + jam * r1);
    std::vector<double> spec = la::mspec(sym);
    CHECK(test::mspec_diff(spec, {-0.5, 0.0, 0.5, 1.0}) < 1e-12);
}

TEST_CASE("herm_eigen reconstruction and orthonormality") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 5);
        MatrixC a = test::rand_hermitian(n, 300 + s);
        la::HermEigen eig = la::herm_eigen(a);
        MatrixC recon = eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                        eig.vectors.adjoint();
        CHECK(max_abs_diff(recon, a) < tol::recon(n));
        CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, MatrixC::Identity(n, n)) <
              tol::recon(n));
        for (Eigen::Index i = 0; i + 1 < n; ++i) CHECK(eig.values(i) <= eig.values(i + 1));
    }
}

TEST_CASE("herm_eigen rejects non-hermitian input") {
    MatrixC bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(la::herm_eigen(bad), NonHermitianInput);
}

TEST_CASE("herm_eigen is deterministic, degeneracies included") {
    MatrixC a = la::kron(MatrixC::Identity(2, 2), test::rand_hermitian(2, 77)); // doubled spectrum
    la::HermEigen e1 = la::herm_eigen(a), e2 = la::herm_eigen(a);
    CHECK((e1.values - e2.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK((e1.vectors - e2.vectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("herm_func basics") {
    MatrixC d = MatrixC::Zero(2, 2);
    d(0, 0) = 4;
    d(1, 1) = 9;
    MatrixC r = la::herm_func(d, [](double x) { return std::sqrt(x); });
    CHECK(r(0, 0).real() == doctest::Approx(2.0));
    CHECK(r(1, 1).real() == doctest::Approx(3.0));

    MatrixC rho = test::rand_state(3, 17);
    MatrixC one = la::herm_func(rho, [](double) { return 1.0; }); // x^0 = 1 convention
    CHECK(max_abs_diff(one, MatrixC::Identity(3, 3)) < 1e-12);

    MatrixC pm = MatrixC::Zero(2, 2);
    pm(0, 0) = -0.5;
    pm(1, 1) = 0.5;
    MatrixC av = la::herm_func(pm, [](double x) { return std::abs(x); });
    CHECK(max_abs_diff(av, MatrixC::Identity(2, 2) * 0.5) < 1e-15);
}

TEST_CASE("herm_func trace identity") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        MatrixC a = test::rand_hermitian(4, 500 + s);
        auto f = [](double x) { return std::cos(x) + x * x; };
        double direct = 0.0;
        for (double l : la::mspec(a)) direct += f(l);
        CHECK(std::abs(la::herm_func(a, f).trace().real() - direct) < 1e-9);
    }
}

TEST_CASE("psd_power") {
    MatrixC d = MatrixC::Zero(2, 2);
    d(0, 0) = 0.25;
    d(1, 1) = 0.75;
    MatrixC r = la::psd_power(d, 0.5);
    CHECK(r(0, 0).real() == doctest::Approx(0.5));
    CHECK(r(1, 1).real() == doctest::Approx(std::sqrt(3.0) / 2.0));

    CHECK(max_abs_diff(la::psd_power(test::rand_state(3, 23), 0.0), MatrixC::Identity(3, 3)) ==
          0.0);

    for (std::uint64_t s = 0; s < 5; ++s) {
        MatrixC rho = test::rand_faithful_state(3, 700 + s);
        double p = 0.1 + 0.15 * static_cast<double>(s);
        CHECK(max_abs_diff(la::psd_power(rho, p) * la::psd_power(rho, 1.0 - p), rho) < 1e-10);
    }

    MatrixC neg = MatrixC::Identity(2, 2);
    neg(0, 0) = -1.0;
    CHECK_THROWS_AS(la::psd_power(neg, 0.5), NotPSD);
}

TEST_CASE("trace norm") {
    CHECK(la::trace_norm_herm(MatrixC::Identity(2, 2) / 2.0) == doctest::Approx(1.0));
    for (std::uint64_t s = 0; s < 5; ++s) {
        MatrixC a = test::rand_hermitian(4, 900 + s);
        // oracle: singular values from the eigenvalues of A^dag A
        double oracle = 0.0;
        for (double l : la::mspec(a.adjoint() * a)) oracle += std::sqrt(std::max(l, 0.0));
        CHECK(la::trace_norm_herm(a) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("partial_trace composed with kron acts as scaled identity on a basis") {
    MatrixC a = test::rand_hermitian(2, 31);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            MatrixC u = la::unit(i, j, 3);
            MatrixC out = la::partial_trace(la::kron(a, u), 2, 3, la::Factor::Left);
            CHECK(max_abs_diff(out, a.trace() * u) < 1e-13);
        }
}

} // TEST_SUITE
