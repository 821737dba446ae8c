#ifndef CHRONON_BAYES_HPP
#define CHRONON_BAYES_HPP

#include "chronon/measures.hpp"

namespace chronon {

/// A reverse map Ebar: B -> A, dagger- and trace-preserving, satisfying the
/// Bayes condition psi(rho, E) = gamma(psi(sigma, Ebar)) with sigma = E(rho).
/// When Ebar is additionally CP it is a Bayesian inverse.
struct BayesResult {
    Channel reverse;
    double bayes_residual = 0.0;
    bool tp_ok = false;
    bool dagger_ok = false;
    bool cp_ok = false;
    bool kernel_completed = false; // sigma was not faithful
};

namespace bayes {

/// Bayes map for the Leifer-Spekkens state over time: the Petz recovery map
/// Ebar(B) = sqrt(rho) E*(sigma^(-1/2) B sigma^(-1/2)) sqrt(rho), with
/// pseudo-inverse powers and the kernel completion tr(Q_sigma B) rho.
BayesResult petz_map(const Process& proc);

/// Bayes map for the symmetric bloom, obtained by solving the Jordan
/// equation {sigma (x) 1, J} = 2 gamma(psi_S(rho, E)) for J = J[Ebar] in the
/// eigenbasis of sigma, then completing on ker(sigma) with Q_sigma (x) rho.
BayesResult sym_bloom_bayes_map(const Process& proc);

/// Frobenius norm of psi(rho, E) - gamma(psi(sigma, candidate)).
double is_bayes_map(const SotKind& kind, const Process& proc, const Channel& candidate);

/// Both sides of the entropic Bayes identity
/// H_psi(rho, E) + S(rho) = H_psi(sigma, Ebar) + S(sigma).
struct EntropicBayesReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double bayes_residual = 0.0;
};
EntropicBayesReport entropic_bayes_check(const SotKind& kind, const Process& proc,
                                         LogBase base = LogBase::two());

} // namespace bayes
} // namespace chronon

#endif
