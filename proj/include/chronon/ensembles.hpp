#ifndef CHRONON_ENSEMBLES_HPP
#define CHRONON_ENSEMBLES_HPP

#include <cstdint>

#include "chronon/channel.hpp"

namespace chronon {

/// Dimensions, seed and sample count for the Monte Carlo commands.
/// Sample index k draws from the generator seeded with mix(seed, k), so
/// streams are independent of evaluation order.
struct SampleSpec {
    Eigen::Index m = 2;
    Eigen::Index d1 = 1;
    Eigen::Index d2 = 1;
    Eigen::Index d3 = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
};

namespace rnd {

/// splitmix64: the pinned 64-bit generator. Seeding and output are exactly
/// specified, so identical seeds reproduce identical streams on every
/// platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller.
    double normal();
    /// Complex Gaussian with independent N(0, 1/2) parts (Ginibre convention).
    Complex cnormal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Per-sample sub-seed: a fixed avalanche mix of (seed, index).
std::uint64_t subseed(std::uint64_t seed, std::uint64_t index);

} // namespace rnd

namespace ens {

/// Haar-random unitary: Ginibre matrix, QR, R-diagonal phase normalization.
MatrixC haar_unitary(Eigen::Index n, rnd::SplitMix64& gen);
MatrixC haar_unitary(Eigen::Index n, std::uint64_t seed);

/// Haar-random unit vector in C^n.
VectorC haar_pure(Eigen::Index n, rnd::SplitMix64& gen);

/// Induced random density matrix: partial trace of a Haar pure state on
/// C^m (x) C^d_env.
MatrixC random_density(Eigen::Index m, Eigen::Index d_env, rnd::SplitMix64& gen);
MatrixC random_density(Eigen::Index m, Eigen::Index d_env, std::uint64_t seed);

/// Random CPTP map M_m -> M_m: couple to a Haar-induced environment state on
/// M_d3 (itself traced from a pure state on C^d3 (x) C^d2), conjugate by a
/// Haar unitary on C^m (x) C^d3, trace out the environment. d3 = 1 gives a
/// unitary channel.
Channel random_channel(Eigen::Index m, Eigen::Index d2, Eigen::Index d3, rnd::SplitMix64& gen);
Channel random_channel(Eigen::Index m, Eigen::Index d2, Eigen::Index d3, std::uint64_t seed);

/// Random hermitian on M_nA (x) M_nB with both partial traces zero. For
/// (2,2) the explicit parameterization is used: a11 uniform in
/// [-scale, scale], a12, a13, a14, a23 uniform complex in the centered
/// square of side 2*scale; the remaining entries are completed as
/// a22 = -a11, a33 = -a11, a44 = a11, a24 = -a13, a34 = -a12 and by
/// hermiticity. Other dimensions use the marginal-projection construction.
MatrixC random_traceless_marginal_hermitian(Eigen::Index nA, Eigen::Index nB, double scale,
                                            rnd::SplitMix64& gen);
MatrixC random_traceless_marginal_hermitian(Eigen::Index nA, Eigen::Index nB, double scale,
                                            std::uint64_t seed);

} // namespace ens
} // namespace chronon

#endif
