#include "chronon/bayes.hpp"

#include <cmath>

namespace chronon::bayes {

namespace {

/// Per-block pseudo-inverse square root and kernel projector of a state.
struct SupportSplit {
    AlgElement inv_sqrt;
    AlgElement kernel_proj;
    bool has_kernel = false;
};

SupportSplit split_support(const AlgElement& sigma) {
    SupportSplit out{AlgElement::zero(sigma.shape()), AlgElement::zero(sigma.shape())};
    for (Eigen::Index x = 0; x < sigma.block_count(); ++x) {
        la::HermEigen eig = la::herm_eigen(sigma.block(x));
        Eigen::VectorXd inv(eig.values.size()), ker(eig.values.size());
        for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
            if (eig.values(i) > tol::zero) {
                inv(i) = 1.0 / std::sqrt(eig.values(i));
                ker(i) = 0.0;
            } else {
                inv(i) = 0.0;
                ker(i) = 1.0;
                out.has_kernel = true;
            }
        }
        out.inv_sqrt.block(x) = eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
        out.kernel_proj.block(x) = eig.vectors * ker.asDiagonal() * eig.vectors.adjoint();
    }
    return out;
}

AlgElement sqrt_state(const AlgElement& rho) {
    AlgElement out = AlgElement::zero(rho.shape());
    for (Eigen::Index x = 0; x < rho.block_count(); ++x)
        out.block(x) = la::psd_power(rho.block(x), 0.5);
    return out;
}

/// psi_kind(state, map) without CPTP verification of the map; the Bayes
/// condition is stated for dagger-preserving TP maps that need not be CP.
AlgElement sot_value_unverified(const SotKind& kind, const AlgElement& state, const Channel& map) {
    Process proc(state, map, /*verify=*/false);
    return sot_fn::sot(kind, proc).value;
}

BayesResult finish(const Process& proc, const SotKind& kind, Channel reverse,
                   bool kernel_completed) {
    AlgElement sigma = proc.channel.apply(proc.rho);
    AlgElement fwd = sot_fn::sot(kind, proc).value;
    AlgElement bwd = sot_value_unverified(kind, sigma, reverse);
    TensorShape rev_ts(proc.channel.cod(), proc.channel.dom());
    double resid = (fwd - mm::swap_gamma(bwd, rev_ts)).frobenius_distance(
        AlgElement::zero(fwd.shape()));
    BayesResult out{std::move(reverse)};
    out.bayes_residual = resid;
    out.tp_ok = out.reverse.is_tp();
    out.dagger_ok = out.reverse.is_dagger_preserving();
    out.cp_ok = out.reverse.is_cp();
    out.kernel_completed = kernel_completed;
    return out;
}

} // namespace

BayesResult petz_map(const Process& proc) {
    const Channel& e = proc.channel;
    AlgElement sigma = e.apply(proc.rho);
    SupportSplit sup = split_support(sigma);
    AlgElement sq_rho = sqrt_state(proc.rho);
    Channel adj = e.hs_adjoint();
    AlgElement rho = proc.rho;
    AlgElement q_proj = sup.kernel_proj;
    AlgElement inv_sqrt = sup.inv_sqrt;
    Channel reverse = ch::from_action(e.cod(), e.dom(), [&](const AlgElement& b) {
        AlgElement core = sq_rho * adj.apply(inv_sqrt * b * inv_sqrt) * sq_rho;
        return core + rho * (q_proj * b).trace();
    });
    return finish(proc, SotKind::ls(), std::move(reverse), sup.has_kernel);
}

BayesResult sym_bloom_bayes_map(const Process& proc) {
    const Channel& e = proc.channel;
    AlgElement sigma = e.apply(proc.rho);
    TensorShape fwd_ts = proc.tensor_shape();
    TensorShape rev_ts(e.cod(), e.dom());

    AlgElement fwd = sot_fn::sot(SotKind::sym_bloom(), proc).value;
    // gamma maps B (x) A -> A (x) B; its inverse carries the forward state
    // over time to the reverse side.
    AlgElement rhs = mm::swap_gamma(fwd, fwd_ts) * 2.0;

    // Solve {sigma (x) 1, J} = rhs block by block in the eigenbasis of sigma.
    AlgElement jam = AlgElement::zero(rev_ts.flat);
    bool kernel = false;
    for (Eigen::Index y = 0; y < rev_ts.left.block_count(); ++y) {
        la::HermEigen eig = la::herm_eigen(sigma.block(y));
        const Eigen::Index dy = rev_ts.left.block_dim(y);
        for (Eigen::Index x = 0; x < rev_ts.right.block_count(); ++x) {
            const Eigen::Index dx = rev_ts.right.block_dim(x);
            MatrixC w = la::kron(eig.vectors, MatrixC::Identity(dx, dx));
            MatrixC r = w.adjoint() * rhs.block(rev_ts.flat_index(y, x)) * w;
            MatrixC j = MatrixC::Zero(dy * dx, dy * dx);
            for (Eigen::Index k = 0; k < dy; ++k)
                for (Eigen::Index a = 0; a < dx; ++a)
                    for (Eigen::Index l = 0; l < dy; ++l)
                        for (Eigen::Index b = 0; b < dx; ++b) {
                            double div = eig.values(k) + eig.values(l);
                            if (div > tol::zero)
                                j(k * dx + a, l * dx + b) = r(k * dx + a, l * dx + b) / div;
                        }
            jam.block(rev_ts.flat_index(y, x)) = w * j * w.adjoint();
        }
    }
    // Kernel completion: Q_sigma (x) rho leaves the Jordan product unchanged
    // (sigma Q_sigma = 0) and restores trace preservation.
    SupportSplit sup = split_support(sigma);
    if (sup.has_kernel) {
        jam = jam + mm::tensor_elem(sup.kernel_proj, proc.rho, rev_ts);
        kernel = true;
    }

    AlgElement sig1 = mm::tensor_elem(sigma, AlgElement::identity(rev_ts.right), rev_ts);
    double solve_resid = ((sig1 * jam + jam * sig1) - rhs).max_abs();
    if (solve_resid >= 1e-8)
        throw SolveFailed("sym_bloom_bayes_map: Jordan equation residual " +
                          std::to_string(solve_resid));

    Channel reverse = ch::channel_from_jamiolkowski(jam, e.cod(), e.dom());
    return finish(proc, SotKind::sym_bloom(), std::move(reverse), kernel);
}

double is_bayes_map(const SotKind& kind, const Process& proc, const Channel& candidate) {
    if (!candidate.is_dagger_preserving())
        throw NotDaggerPreserving("is_bayes_map: candidate is not dagger-preserving");
    if (!candidate.is_tp()) throw NotTP("is_bayes_map: candidate is not trace-preserving");
    AlgElement sigma = proc.channel.apply(proc.rho);
    AlgElement fwd = sot_fn::sot(kind, proc).value;
    AlgElement bwd = sot_value_unverified(kind, sigma, candidate);
    TensorShape rev_ts(proc.channel.cod(), proc.channel.dom());
    return (fwd - mm::swap_gamma(bwd, rev_ts)).frobenius_distance(AlgElement::zero(fwd.shape()));
}

EntropicBayesReport entropic_bayes_check(const SotKind& kind, const Process& proc, LogBase base) {
    BayesResult br = (kind.tag == SotKind::Tag::LS) ? petz_map(proc)
                     : (kind.tag == SotKind::Tag::SymBloom)
                         ? sym_bloom_bayes_map(proc)
                         : throw PreconditionViolated(
                               "entropic_bayes_check: Bayes construction exists for ls and "
                               "sym-bloom only");
    AlgElement sigma = proc.channel.apply(proc.rho);
    double s_rho = ent::ext_entropy(proc.rho, base);
    double s_sigma = ent::ext_entropy(sigma, base);
    double s_fwd = ent::ext_entropy(sot_fn::sot(kind, proc).value, base);
    Process rev(sigma, br.reverse, false);
    double s_bwd = ent::ext_entropy(sot_fn::sot(kind, rev).value, base);
    EntropicBayesReport rep;
    rep.lhs = (s_fwd - s_rho) + s_rho;
    rep.rhs = (s_bwd - s_sigma) + s_sigma;
    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.bayes_residual = br.bayes_residual;
    return rep;
}

} // namespace chronon::bayes
