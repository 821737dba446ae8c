#ifndef CHRONON_SOT_HPP
#define CHRONON_SOT_HPP

#include <string>

#include "chronon/channel.hpp"

namespace chronon {

/// A process: an initial state together with the CPTP map evolving it.
struct Process {
    AlgElement rho;
    Channel channel;

    Process(AlgElement r, Channel e, bool verify = true);

    TensorShape tensor_shape() const { return {channel.dom(), channel.cod()}; }
};

/// Which state-over-time function to apply.
struct SotKind {
    enum class Tag { Right, Left, SymBloom, PBloom, SymPBloom, PqrFamily, LS, Compound };

    Tag tag = Tag::SymBloom;
    double p = 1.0, q = 0.0, r = 0.5;

    static SotKind right() { return {Tag::Right}; }
    static SotKind left() { return {Tag::Left}; }
    static SotKind sym_bloom() { return {Tag::SymBloom}; }
    static SotKind p_bloom(double p);
    static SotKind sym_p_bloom(double p);
    static SotKind pqr(double p, double q, double r);
    static SotKind ls() { return {Tag::LS}; }
    static SotKind compound() { return {Tag::Compound}; }

    /// Produces hermitian states over time for every process.
    bool hermitian() const;

    /// CLI / JSON encoding: "sym-bloom" | "ls" | "right" | "left" |
    /// "p-bloom:<p>" | "sym-p-bloom:<p>" | "pqr:<p>,<q>,<r>" | "compound".
    std::string encode() const;
    static SotKind parse(const std::string& text);
};

/// A state over time together with its verified marginal residuals.
struct StateOverTime {
    AlgElement value; // element of dom (x) cod
    SotKind kind;
    double marginal_residual_state = 0.0;  // || tr_cod(value) - rho ||_max
    double marginal_residual_output = 0.0; // || tr_dom(value) - E(rho) ||_max
};

namespace sot_fn {

/// Evaluate a state-over-time function on a process. Marginals are verified
/// against the defining conditions before returning.
StateOverTime sot(const SotKind& kind, const Process& proc);

/// If [(rho (x) 1), J[E]] = 0, all classically reducible kinds must agree
/// with (rho (x) 1) J[E].
struct ReducibilityReport {
    bool commuting = false;
    double commutator_norm = 0.0;
    double max_deviation = 0.0; // over Right/Left/SymBloom/SymPBloom/LS
};
ReducibilityReport classical_reducibility_check(const Process& proc);

/// Analytic multispectrum of r psi_p + (1-r) psi_q evaluated on a unitary
/// process with input spectrum mspec(rho): mspec(rho) together with
/// +-sqrt(a_ij a_ji) over i < j, where a_ij = r l_i^p l_j^(1-p) +
/// (1-r) l_i^q l_j^(1-q) (x^0 = 1 by convention).
std::vector<double> unitary_process_mspec(double p, double q, double r,
                                          const std::vector<double>& rho_spectrum);

/// Verify the eigenvector basis of A = sum_ij E_ij (x) a_ij E_ji entrywise.
/// Requires a_ij >= 0 and (a_ij = 0 => a_ji = 0). Returns the largest
/// residual ||A v - lambda v||_max over the constructed basis.
double structured_eigen_check(const Eigen::MatrixXd& a);

} // namespace sot_fn
} // namespace chronon

#endif
