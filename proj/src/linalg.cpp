#include "chronon/linalg.hpp"

#include <cmath>

namespace chronon::la {

MatrixC kron(const MatrixC& a, const MatrixC& b) {
    MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

MatrixC partial_trace(const MatrixC& a, Eigen::Index dl, Eigen::Index dr, Factor which) {
    if (a.rows() != dl * dr || a.cols() != dl * dr)
        throw ShapeMismatch("partial_trace: matrix is not (dl*dr) square");
    if (which == Factor::Left) {
        MatrixC out = MatrixC::Zero(dr, dr);
        for (Eigen::Index i = 0; i < dl; ++i)
            out += a.block(i * dr, i * dr, dr, dr);
        return out;
    }
    MatrixC out = MatrixC::Zero(dl, dl);
    for (Eigen::Index i = 0; i < dl; ++i)
        for (Eigen::Index j = 0; j < dl; ++j) {
            Complex s = 0.0;
            for (Eigen::Index k = 0; k < dr; ++k) s += a(i * dr + k, j * dr + k);
            out(i, j) = s;
        }
    return out;
}

HermEigen herm_eigen(const MatrixC& a) {
    require_hermitian(a, "herm_eigen");
    Eigen::SelfAdjointEigenSolver<MatrixC> solver((a + a.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw Error("herm_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

MatrixC herm_func(const MatrixC& a, const std::function<double(double)>& f) {
    HermEigen eig = herm_eigen(a);
    Eigen::VectorXd fv(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) fv(i) = f(eig.values(i));
    return eig.vectors * fv.asDiagonal() * eig.vectors.adjoint();
}

MatrixC psd_power(const MatrixC& a, double p) {
    if (p < 0.0 || p > 1.0)
        throw PreconditionViolated("psd_power: exponent outside [0,1]");
    if (p == 0.0) return MatrixC::Identity(a.rows(), a.cols());
    HermEigen eig = herm_eigen(a);
    if (eig.values.size() > 0 && eig.values.minCoeff() < -tol::psd)
        throw NotPSD("psd_power: input has a negative eigenvalue");
    Eigen::VectorXd fv(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        double l = eig.values(i);
        fv(i) = (l <= tol::zero) ? 0.0 : std::pow(l, p);
    }
    return eig.vectors * fv.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm_herm(const MatrixC& a) {
    HermEigen eig = herm_eigen(a);
    return eig.values.cwiseAbs().sum();
}

std::vector<double> mspec(const MatrixC& a) {
    HermEigen eig = herm_eigen(a);
    return {eig.values.data(), eig.values.data() + eig.values.size()};
}

} // namespace chronon::la
