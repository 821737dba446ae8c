#ifndef CHRONON_TESTS_HELPERS_HPP
#define CHRONON_TESTS_HELPERS_HPP

#include <vector>

#include "chronon/ensembles.hpp"
#include "chronon/sot.hpp"

namespace test {

using namespace chronon;

inline MatrixC rand_hermitian(Eigen::Index n, std::uint64_t seed) {
    rnd::SplitMix64 gen(seed);
    MatrixC a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = gen.cnormal();
    return (a + a.adjoint()) / 2.0;
}

inline MatrixC rand_state(Eigen::Index n, std::uint64_t seed) {
    return ens::random_density(n, n, seed);
}

/// Strictly positive random density matrix.
inline MatrixC rand_faithful_state(Eigen::Index n, std::uint64_t seed) {
    MatrixC rho = rand_state(n, seed);
    MatrixC out = 0.85 * rho + 0.15 * MatrixC::Identity(n, n) / static_cast<double>(n);
    return out;
}

inline double max_abs_diff(const MatrixC& a, const MatrixC& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double mspec_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline MatrixC epr_state() {
    MatrixC rho = MatrixC::Zero(4, 4);
    rho(1, 1) = 0.5;
    rho(2, 2) = 0.5;
    rho(1, 2) = -0.5;
    rho(2, 1) = -0.5;
    return rho;
}

/// Process (rho_EPR, tr over the first qubit).
inline Process epr_partial_trace_process() {
    return {AlgElement::from_matrix(epr_state()), ch::ptrace_channel(2, 2, la::Factor::Left)};
}

inline std::vector<MatrixC> amplitude_damping_kraus(double p) {
    MatrixC a1(2, 2), a2(2, 2);
    a1 << 1, 0, 0, std::sqrt(1.0 - p);
    a2 << 0, std::sqrt(p), 0, 0;
    return {a1, a2};
}

inline Channel amplitude_damping(double p) {
    return ch::from_kraus(AlgebraShape::matrix(2), AlgebraShape::matrix(2),
                          amplitude_damping_kraus(p));
}

} // namespace test

#endif
