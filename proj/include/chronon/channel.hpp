#ifndef CHRONON_CHANNEL_HPP
#define CHRONON_CHANNEL_HPP

#include <atomic>
#include <vector>

#include "chronon/mmalg.hpp"

namespace chronon {

/// A linear map between multi-matrix algebras, stored as a dense
/// superoperator acting on block-vectorized elements.
///
/// The dagger-preserving / trace-preserving / completely-positive flags are
/// computed lazily on the matrix-unit basis of the domain and cached; the
/// cache is published atomically so concurrent readers see either
/// "unchecked" or a final verified value.
class Channel {
public:
    Channel(AlgebraShape dom, AlgebraShape cod, MatrixC superop);
    Channel(const Channel& o);
    Channel(Channel&& o) noexcept;
    Channel& operator=(const Channel& o);
    Channel& operator=(Channel&& o) noexcept;

    const AlgebraShape& dom() const { return dom_; }
    const AlgebraShape& cod() const { return cod_; }
    const MatrixC& superop() const { return superop_; }

    AlgElement apply(const AlgElement& a) const;
    Channel compose(const Channel& inner) const; // this o inner

    /// Hilbert-Schmidt adjoint: tr(E(A)^dag B) = tr(A^dag E*(B)).
    Channel hs_adjoint() const;

    bool is_tp() const;
    bool is_dagger_preserving() const;
    bool is_cp() const;
    bool is_cptp() const { return is_cp() && is_tp(); }

    /// Channel state J[E] = (id (x) E)(mu*(1)), an element of dom (x) cod.
    AlgElement jamiolkowski() const;

    /// Choi matrix of the bloc-extended map, sum_IJ E_IJ (x) Ehat(E_IJ).
    MatrixC choi() const;

private:
    AlgebraShape dom_;
    AlgebraShape cod_;
    MatrixC superop_;

    // -1 unchecked, 0 no, 1 yes
    mutable std::atomic<int> tp_{-1}, dagger_{-1}, cp_{-1};
};

namespace ch {

/// Channel from its action on the matrix-unit basis of the domain.
Channel from_action(const AlgebraShape& dom, const AlgebraShape& cod,
                    const std::function<AlgElement(const AlgElement&)>& action);

/// Identity channel.
Channel identity(const AlgebraShape& a);

/// A |-> sum_a V_a A V_a^dag - sum_b W_b A W_b^dag between matrix algebras.
Channel from_kraus(const AlgebraShape& dom, const AlgebraShape& cod,
                   const std::vector<MatrixC>& kraus_plus,
                   const std::vector<MatrixC>& kraus_minus = {});

/// Ad_U for a unitary U on a matrix algebra.
Channel from_unitary(const MatrixC& u);

/// Partial trace M_p (x) M_n -> M_n (trace Left) or -> M_p (trace Right).
Channel ptrace_channel(Eigen::Index p, Eigen::Index n, la::Factor which);

/// POVM measurement channel M_n -> C^Y, A |-> sum_y tr(A E_y) delta_y.
Channel povm_channel(const std::vector<MatrixC>& effects);

/// Projection-valued measure; projectors must be hermitian, idempotent,
/// mutually orthogonal and sum to the identity.
Channel pvm_channel(const std::vector<MatrixC>& projectors);

/// Ensemble preparation C^X -> B, delta_x |-> states[x].
Channel preparation_channel(const std::vector<AlgElement>& states);

/// Discard-and-prepare A |-> tr(A) sigma.
Channel discard_and_prepare(const AlgebraShape& dom, const AlgElement& sigma);

/// Classical channel C^X -> C^Y from a column-stochastic matrix f (f(y,x) =
/// conditional probability of y given x).
Channel classical_channel(const Eigen::MatrixXd& f);

/// Quantum instrument M_m -> sum_y M_n with one Kraus family per outcome.
Channel instrument_channel(Eigen::Index m, Eigen::Index n,
                           const std::vector<std::vector<MatrixC>>& kraus_families);

/// Inverse of the Jamiolkowski isomorphism: E(Y) = tr_first((Y (x) 1) J).
Channel channel_from_jamiolkowski(const AlgElement& j, const AlgebraShape& dom,
                                  const AlgebraShape& cod);

} // namespace ch
} // namespace chronon

#endif
