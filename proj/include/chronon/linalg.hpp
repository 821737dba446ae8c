#ifndef CHRONON_LINALG_HPP
#define CHRONON_LINALG_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "chronon/errors.hpp"

namespace chronon {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

namespace tol {
inline constexpr double herm = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr double zero = 1e-12;
/// Reconstruction tolerance scales with dimension.
inline double recon(Eigen::Index n) { return 1e-10 * static_cast<double>(n); }
} // namespace tol

namespace la {

/// Matrix unit E_ij in M_n.
inline MatrixC unit(Eigen::Index i, Eigen::Index j, Eigen::Index n) {
    MatrixC m = MatrixC::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

inline MatrixC dagger(const MatrixC& a) { return a.adjoint(); }

inline bool is_hermitian(const MatrixC& a, double eps = tol::herm) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

inline void require_hermitian(const MatrixC& a, const char* who) {
    if (!is_hermitian(a))
        throw NonHermitianInput(std::string(who) + ": input is not hermitian");
}

/// Kronecker product; dims multiply.
MatrixC kron(const MatrixC& a, const MatrixC& b);

enum class Factor { Left, Right };

/// Partial trace of a (dim_left*dim_right)-square matrix over the selected factor.
MatrixC partial_trace(const MatrixC& a, Eigen::Index dim_left, Eigen::Index dim_right,
                      Factor which);

/// Eigendecomposition of a hermitian matrix.
///
/// Eigenvalues ascending (the natural ordering on the multispectrum);
/// columns of `vectors` are the matching orthonormal eigenvectors, so that
/// vectors * diag(values) * vectors^dag reconstructs the input within
/// tol::recon(n).
struct HermEigen {
    Eigen::VectorXd values;
    MatrixC vectors;
};

HermEigen herm_eigen(const MatrixC& a);

/// Functional calculus V f(Lambda) V^dag for hermitian a.
MatrixC herm_func(const MatrixC& a, const std::function<double(double)>& f);

/// a^p for positive semidefinite a and p in [0,1].
/// Eigenvalues below tol::zero map to 0 for p > 0; p == 0 yields the identity.
MatrixC psd_power(const MatrixC& a, double p);

/// Trace norm of a hermitian matrix: sum of |eigenvalues|.
double trace_norm_herm(const MatrixC& a);

/// Multispectrum of a hermitian matrix, ascending.
std::vector<double> mspec(const MatrixC& a);

} // namespace la
} // namespace chronon

#endif
