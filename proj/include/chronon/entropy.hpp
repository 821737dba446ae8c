#ifndef CHRONON_ENTROPY_HPP
#define CHRONON_ENTROPY_HPP

#include <cmath>

#include "chronon/mmalg.hpp"

namespace chronon {

/// Logarithm base for all entropy computations. Defaults to base 2; the
/// printed four-decimal example values are base-2 quantities.
struct LogBase {
    double base = 2.0;
    static LogBase two() { return {2.0}; }
    static LogBase e() { return {M_E}; }
    double log(double x) const { return std::log(x) / std::log(base); }
};

/// A real list summing to 1; entries may be negative.
struct QuasiDist {
    std::vector<double> values;

    explicit QuasiDist(std::vector<double> v);
};

namespace ent {

/// H(p) = -sum p_x log|p_x|, with 0 log 0 = 0.
double qdist_entropy(const QuasiDist& p, LogBase base = LogBase::two());
double qdist_entropy(const std::vector<double>& values, LogBase base = LogBase::two());

/// Extended entropy S(A) = -tr(A log|A|) = -sum_mspec lambda log|lambda| of
/// a hermitian element (unit trace not required by the raw functional).
double ext_entropy(const AlgElement& a, LogBase base = LogBase::two());
double ext_entropy(const MatrixC& a, LogBase base = LogBase::two());

/// Even extension -tr(|A| log|A|) = -sum |lambda| log|lambda|, kept as a
/// comparator only.
double even_entropy(const AlgElement& a, LogBase base = LogBase::two());

/// Residual |S(sum p_x rho^x) - H(p) - sum p_x S(rho^x)| for mutually
/// orthogonal, unit-trace hermitian parts.
double orthogonal_affinity_check(const QuasiDist& p, const std::vector<MatrixC>& parts,
                                 LogBase base = LogBase::two());

/// Fannes-type continuity bound. Applicable when the sorted multispectra
/// pair off with lambda_i mu_i >= 0 and ||a-b||_1 <= 1/e; in that case
/// |S(a)-S(b)| <= ||a-b||_1 log(n) + eta(||a-b||_1) with eta(x) = -x log x.
struct FannesReport {
    bool applicable = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double trace_distance = 0.0;
};
FannesReport fannes_check(const AlgElement& a, const AlgElement& b,
                          LogBase base = LogBase::two());

/// Causality monotone ||A||_1 - 1 on hermitian unit-trace elements.
double causality_monotone(const AlgElement& a);

} // namespace ent
} // namespace chronon

#endif
