#include "chronon/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chronon {

QuasiDist::QuasiDist(std::vector<double> v) : values(std::move(v)) {
    double s = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(s - 1.0) > tol::herm)
        throw PreconditionViolated("QuasiDist: entries must sum to 1");
}

namespace ent {
namespace {

double eta_term(double x, const LogBase& base) {
    if (std::abs(x) <= tol::zero) return 0.0;
    return -x * base.log(std::abs(x));
}

} // namespace

double qdist_entropy(const std::vector<double>& values, LogBase base) {
    double s = 0.0;
    for (double x : values) s += eta_term(x, base);
    return s;
}

double qdist_entropy(const QuasiDist& p, LogBase base) { return qdist_entropy(p.values, base); }

double ext_entropy(const MatrixC& a, LogBase base) {
    la::require_hermitian(a, "ext_entropy");
    return qdist_entropy(la::mspec(a), base);
}

double ext_entropy(const AlgElement& a, LogBase base) {
    if (!a.is_hermitian()) throw NonHermitianInput("ext_entropy: element is not hermitian");
    return qdist_entropy(mm::mspec(a), base);
}

double even_entropy(const AlgElement& a, LogBase base) {
    if (!a.is_hermitian()) throw NonHermitianInput("even_entropy: element is not hermitian");
    double s = 0.0;
    for (double l : mm::mspec(a)) s += eta_term(std::abs(l), base);
    return s;
}

double orthogonal_affinity_check(const QuasiDist& p, const std::vector<MatrixC>& parts,
                                 LogBase base) {
    if (p.values.size() != parts.size())
        throw ShapeMismatch("orthogonal_affinity_check: weight/part count mismatch");
    for (std::size_t a = 0; a < parts.size(); ++a) {
        la::require_hermitian(parts[a], "orthogonal_affinity_check");
        if (std::abs(parts[a].trace() - Complex(1.0)) > tol::herm)
            throw PreconditionViolated("orthogonal_affinity_check: parts must have unit trace");
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if ((parts[a] * parts[b]).cwiseAbs().maxCoeff() > tol::herm)
                throw NotOrthogonal("orthogonal_affinity_check: parts are not orthogonal");
    }
    MatrixC mix = MatrixC::Zero(parts.front().rows(), parts.front().cols());
    double rhs = qdist_entropy(p, base);
    for (std::size_t x = 0; x < parts.size(); ++x) {
        mix += p.values[x] * parts[x];
        rhs += p.values[x] * ext_entropy(parts[x], base);
    }
    return std::abs(ext_entropy(mix, base) - rhs);
}

FannesReport fannes_check(const AlgElement& a, const AlgElement& b, LogBase base) {
    if (a.shape() != b.shape()) throw ShapeMismatch("fannes_check: shape mismatch");
    if (!a.is_quasi_state() || !b.is_quasi_state())
        throw PreconditionViolated("fannes_check: quasi-states required");
    FannesReport rep;
    std::vector<double> la_ = mm::mspec(a), mu = mm::mspec(b);
    AlgElement diff = a - b;
    for (double l : mm::mspec(diff)) rep.trace_distance += std::abs(l);
    bool signs_ok = true;
    for (std::size_t i = 0; i < la_.size(); ++i) {
        double x = (std::abs(la_[i]) <= tol::zero) ? 0.0 : la_[i];
        double y = (std::abs(mu[i]) <= tol::zero) ? 0.0 : mu[i];
        if (x * y < 0) signs_ok = false;
    }
    rep.applicable = signs_ok && rep.trace_distance <= 1.0 / M_E;
    rep.lhs = std::abs(ext_entropy(a, base) - ext_entropy(b, base));
    double n = static_cast<double>(a.shape().total_dim());
    rep.rhs = rep.trace_distance * base.log(n) + eta_term(rep.trace_distance, base);
    return rep;
}

double causality_monotone(const AlgElement& a) {
    if (!a.is_hermitian()) throw NonHermitianInput("causality_monotone: hermitian input required");
    if (std::abs(a.trace() - Complex(1.0)) > tol::herm)
        throw PreconditionViolated("causality_monotone: unit trace required");
    double s = 0.0;
    for (double l : mm::mspec(a)) s += std::abs(l);
    return s - 1.0;
}

} // namespace ent
} // namespace chronon
