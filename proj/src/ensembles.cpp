#include "chronon/ensembles.hpp"

#include <cmath>

namespace chronon {
namespace rnd {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SplitMix64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Complex SplitMix64::cnormal() {
    double re = normal(), im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xA24BAED4963EE407ULL * (index + 1)));
    return g.next();
}

} // namespace rnd

namespace ens {

MatrixC haar_unitary(Eigen::Index n, rnd::SplitMix64& gen) {
    MatrixC z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) z(i, j) = gen.cnormal();
    Eigen::HouseholderQR<MatrixC> qr(z);
    MatrixC q = qr.householderQ();
    MatrixC r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= (a > 0) ? d / a : Complex(1.0);
    }
    return q;
}

MatrixC haar_unitary(Eigen::Index n, std::uint64_t seed) {
    rnd::SplitMix64 gen(seed);
    return haar_unitary(n, gen);
}

VectorC haar_pure(Eigen::Index n, rnd::SplitMix64& gen) {
    VectorC v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = gen.cnormal();
    return v / v.norm();
}

MatrixC random_density(Eigen::Index m, Eigen::Index d_env, rnd::SplitMix64& gen) {
    VectorC psi = haar_pure(m * d_env, gen);
    MatrixC full = psi * psi.adjoint();
    return la::partial_trace(full, m, d_env, la::Factor::Right);
}

MatrixC random_density(Eigen::Index m, Eigen::Index d_env, std::uint64_t seed) {
    rnd::SplitMix64 gen(seed);
    return random_density(m, d_env, gen);
}

Channel random_channel(Eigen::Index m, Eigen::Index d2, Eigen::Index d3, rnd::SplitMix64& gen) {
    MatrixC rho_env = random_density(d3, d2, gen);
    MatrixC u = haar_unitary(m * d3, gen);
    la::HermEigen env = la::herm_eigen(rho_env);
    // Kraus operators K_{k,l} = sqrt(w_l) (1 (x) <k|) U (1 (x) |v_l>)
    std::vector<MatrixC> kraus;
    MatrixC uv = u * la::kron(MatrixC::Identity(m, m), env.vectors);
    for (Eigen::Index k = 0; k < d3; ++k)
        for (Eigen::Index l = 0; l < d3; ++l) {
            double w = std::max(env.values(l), 0.0);
            if (w <= tol::zero) continue;
            MatrixC kop(m, m);
            for (Eigen::Index a = 0; a < m; ++a)
                for (Eigen::Index b = 0; b < m; ++b) kop(a, b) = uv(a * d3 + k, b * d3 + l);
            kraus.push_back(std::sqrt(w) * kop);
        }
    return ch::from_kraus(AlgebraShape::matrix(m), AlgebraShape::matrix(m), kraus);
}

Channel random_channel(Eigen::Index m, Eigen::Index d2, Eigen::Index d3, std::uint64_t seed) {
    rnd::SplitMix64 gen(seed);
    return random_channel(m, d2, d3, gen);
}

MatrixC random_traceless_marginal_hermitian(Eigen::Index nA, Eigen::Index nB, double scale,
                                            rnd::SplitMix64& gen) {
    if (nA == 2 && nB == 2) {
        auto csq = [&] { return Complex(gen.uniform(-scale, scale), gen.uniform(-scale, scale)); };
        double a11 = gen.uniform(-scale, scale);
        Complex a12 = csq(), a13 = csq(), a14 = csq(), a23 = csq();
        MatrixC t(4, 4);
        t << a11, a12, a13, a14,                                   //
            std::conj(a12), -a11, a23, -a13,                       //
            std::conj(a13), std::conj(a23), -a11, -a12,            //
            std::conj(a14), -std::conj(a13), -std::conj(a12), a11; //
        return t;
    }
    MatrixC raw(nA * nB, nA * nB);
    for (Eigen::Index i = 0; i < raw.rows(); ++i)
        for (Eigen::Index j = 0; j < raw.cols(); ++j)
            raw(i, j) = Complex(gen.uniform(-scale, scale), gen.uniform(-scale, scale));
    raw = (raw + raw.adjoint()).eval() / 2.0;
    MatrixC tb = la::partial_trace(raw, nA, nB, la::Factor::Right); // on A
    MatrixC ta = la::partial_trace(raw, nA, nB, la::Factor::Left);  // on B
    Complex tr = raw.trace();
    MatrixC ia = MatrixC::Identity(nA, nA), ib = MatrixC::Identity(nB, nB);
    return raw - la::kron(tb, ib / static_cast<double>(nB)) -
           la::kron(ia / static_cast<double>(nA), ta) +
           (tr / static_cast<double>(nA * nB)) * la::kron(ia, ib);
}

MatrixC random_traceless_marginal_hermitian(Eigen::Index nA, Eigen::Index nB, double scale,
                                            std::uint64_t seed) {
    rnd::SplitMix64 gen(seed);
    return random_traceless_marginal_hermitian(nA, nB, scale, gen);
}

} // namespace ens
} // namespace chronon
