#ifndef CHRONON_MEASURES_HPP
#define CHRONON_MEASURES_HPP

#include "chronon/entropy.hpp"
#include "chronon/sot.hpp"

namespace chronon {

/// The four dynamical information measures of a process, evaluated with
/// respect to a hermitian state-over-time function:
///   s_psi = S(psi(rho,E))            (joint entropy)
///   h_psi = s_psi - S(rho)           (conditional entropy)
///   i_psi = S(rho) + S(E(rho)) - s_psi   (mutual information)
///   k_psi = s_psi - S(E(rho))        (information discrepancy)
/// Conservation: i_psi + k_psi = S(rho).
struct MeasureReport {
    SotKind kind;
    double s_in = 0.0;  // S(rho)
    double s_out = 0.0; // S(E(rho))
    double s_psi = 0.0;
    double h_psi = 0.0;
    double i_psi = 0.0;
    double k_psi = 0.0;
    double conservation_residual = 0.0;
};

namespace meas {

/// Evaluate all four measures. Right/Left kinds are rejected: the measures
/// are defined only for hermitian states over time.
MeasureReport all_measures(const SotKind& kind, const Process& proc,
                           LogBase base = LogBase::two());

/// Closed form for the symmetric p-bloom of a POVM process: outcome states
/// rho_p^y = (rho^p E_y rho^(1-p) + rho^(1-p) E_y rho^p) / (2 q_y), and
/// S_p = H(q) + sum_(q_y > 0) q_y S(rho_p^y). Zero-probability outcomes are
/// excluded.
struct PovmClosedForm {
    MeasureReport report;
    std::vector<double> outcome_probs;
    std::vector<double> outcome_entropies; // S(rho_p^y), 0 for excluded outcomes
};
PovmClosedForm povm_closed_form(double p, const MatrixC& rho,
                                const std::vector<MatrixC>& effects,
                                LogBase base = LogBase::two());

enum class Disturbance { NonDisturbing, Disturbing };

/// A pure-state POVM process is non-disturbing when im(rho) is invariant
/// under every effect with non-zero outcome probability.
Disturbance classify_disturbing(const MatrixC& rho, const std::vector<MatrixC>& effects);

/// Check the three disturbance-theorem clauses at the given p against the
/// computed measures; returns true when every applicable clause holds.
bool disturbance_theorem_check(double p, const MatrixC& rho,
                               const std::vector<MatrixC>& effects,
                               LogBase base = LogBase::two());

/// Closed forms for a preparation process (p, prep):
///   S = H(p) + sum p_x S(rho^x),  H = sum p_x S(rho^x),
///   I = S(rho_bar) - sum p_x S(rho^x),  K = H(p) - I.
MeasureReport cq_preparation_measures(const std::vector<double>& p, const Channel& prep,
                                      LogBase base = LogBase::two());

/// Residuals of the four convex-linearity identities for a state-linear
/// hermitian kind over a mutually orthogonal family:
///   S(sum) = H(p) + sum p_x S^x        H(sum) = sum p_x H^x
///   I(sum) = H(p) + sum p_x I^x        K(sum) = sum p_x K^x
struct ConvexLinearityResiduals {
    double s = 0.0, h = 0.0, i = 0.0, k = 0.0;
};
ConvexLinearityResiduals convex_linearity_check(const QuasiDist& p,
                                                const std::vector<MatrixC>& states,
                                                const Channel& e, const SotKind& kind,
                                                LogBase base = LogBase::two());

} // namespace meas
} // namespace chronon

#endif
