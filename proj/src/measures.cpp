#include "chronon/measures.hpp"

#include <cmath>

namespace chronon::meas {

namespace {

MeasureReport assemble(const SotKind& kind, double s_in, double s_out, double s_psi) {
    MeasureReport rep;
    rep.kind = kind;
    rep.s_in = s_in;
    rep.s_out = s_out;
    rep.s_psi = s_psi;
    rep.h_psi = s_psi - s_in;
    rep.i_psi = s_in + s_out - s_psi;
    rep.k_psi = s_psi - s_out;
    rep.conservation_residual = std::abs(rep.i_psi + rep.k_psi - rep.s_in);
    return rep;
}

} // namespace

MeasureReport all_measures(const SotKind& kind, const Process& proc, LogBase base) {
    if (!kind.hermitian())
        throw NonHermitianSot("all_measures: " + kind.encode() +
                              " does not produce hermitian states over time");
    StateOverTime st = sot_fn::sot(kind, proc);
    double s_in = ent::ext_entropy(proc.rho, base);
    double s_out = ent::ext_entropy(proc.channel.apply(proc.rho), base);
    double s_psi = ent::ext_entropy(st.value, base);
    return assemble(kind, s_in, s_out, s_psi);
}

PovmClosedForm povm_closed_form(double p, const MatrixC& rho, const std::vector<MatrixC>& effects,
                                LogBase base) {
    if (p < 0 || p > 1) throw PreconditionViolated("povm_closed_form: p outside [0,1]");
    Channel povm = ch::povm_channel(effects); // validates the effects
    MatrixC rp = la::psd_power(rho, p);
    MatrixC r1p = la::psd_power(rho, 1.0 - p);
    PovmClosedForm out;
    double hq = 0.0, weighted = 0.0;
    for (const MatrixC& ey : effects) {
        double qy = (rho * ey).trace().real();
        out.outcome_probs.push_back(qy);
        if (qy <= tol::zero) {
            out.outcome_entropies.push_back(0.0);
            continue;
        }
        MatrixC rho_py = (rp * ey * r1p + r1p * ey * rp) / (2.0 * qy);
        double s = ent::ext_entropy(AlgElement::from_matrix(rho_py), base);
        out.outcome_entropies.push_back(s);
        hq += (qy <= tol::zero) ? 0.0 : -qy * base.log(qy);
        weighted += qy * s;
    }
    double s_in = ent::ext_entropy(AlgElement::from_matrix(rho), base);
    out.report = assemble(SotKind::sym_p_bloom(p), s_in, hq, hq + weighted);
    return out;
}

Disturbance classify_disturbing(const MatrixC& rho, const std::vector<MatrixC>& effects) {
    la::HermEigen eig = la::herm_eigen(rho);
    const Eigen::Index n = rho.rows();
    // rank-1 within tolerance: all but the top eigenvalue vanish
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (std::abs(eig.values(i)) > tol::herm) throw NotPure("classify_disturbing: rho not pure");
    if (std::abs(eig.values(n - 1) - 1.0) > tol::herm)
        throw NotPure("classify_disturbing: rho not unit trace rank-1");
    VectorC v = eig.vectors.col(n - 1);
    for (const MatrixC& ey : effects) {
        double qy = (rho * ey).trace().real();
        if (qy <= tol::zero) continue;
        VectorC img = ey * v;
        Complex overlap = v.adjoint() * img;
        if ((img - overlap * v).norm() > tol::herm) return Disturbance::Disturbing;
    }
    return Disturbance::NonDisturbing;
}

bool disturbance_theorem_check(double p, const MatrixC& rho, const std::vector<MatrixC>& effects,
                               LogBase base) {
    Disturbance d = classify_disturbing(rho, effects); // also enforces purity
    MeasureReport rep = povm_closed_form(p, rho, effects, base).report;
    const double eps = 1e-9;
    if (p > 0.0 && p < 1.0) return std::abs(rep.i_psi) < eps && std::abs(rep.k_psi) < eps;
    if (d == Disturbance::NonDisturbing)
        return std::abs(rep.i_psi) < eps && std::abs(rep.k_psi) < eps;
    return rep.i_psi > eps && std::abs(rep.i_psi + rep.k_psi) < eps;
}

MeasureReport cq_preparation_measures(const std::vector<double>& p, const Channel& prep,
                                      LogBase base) {
    if (!prep.dom().is_classical() ||
        prep.dom().block_count() != static_cast<Eigen::Index>(p.size()))
        throw ShapeMismatch("cq_preparation_measures: prep domain must be C^X with |X| = |p|");
    AlgElement mix = AlgElement::zero(prep.cod());
    double hp = 0.0, weighted = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        AlgElement rx = prep.apply(AlgElement::delta(prep.dom(), static_cast<Eigen::Index>(x)));
        mix = mix + rx * p[x];
        weighted += p[x] * ent::ext_entropy(rx, base);
        if (p[x] > tol::zero) hp += -p[x] * base.log(p[x]);
    }
    double s_bar = ent::ext_entropy(mix, base);
    MeasureReport rep;
    rep.kind = SotKind::sym_bloom();
    rep.s_in = hp;
    rep.s_out = s_bar;
    rep.s_psi = hp + weighted;
    rep.h_psi = weighted;
    rep.i_psi = s_bar - weighted;
    rep.k_psi = hp - s_bar + weighted;
    rep.conservation_residual = std::abs(rep.i_psi + rep.k_psi - rep.s_in);
    return rep;
}

ConvexLinearityResiduals convex_linearity_check(const QuasiDist& p,
                                                const std::vector<MatrixC>& states,
                                                const Channel& e, const SotKind& kind,
                                                LogBase base) {
    if (!kind.hermitian())
        throw NonHermitianSot("convex_linearity_check: hermitian kind required");
    bool state_linear = kind.tag == SotKind::Tag::SymBloom ||
                        (kind.tag == SotKind::Tag::SymPBloom && (kind.p == 0.0 || kind.p == 1.0));
    if (!state_linear)
        throw NotStateLinear("convex_linearity_check: " + kind.encode() + " is not state-linear");
    if (p.values.size() != states.size())
        throw ShapeMismatch("convex_linearity_check: weight/state count mismatch");

    for (std::size_t a = 0; a < states.size(); ++a)
        for (std::size_t b = a + 1; b < states.size(); ++b)
            if ((states[a] * states[b]).cwiseAbs().maxCoeff() > tol::herm)
                throw NotOrthogonal("convex_linearity_check: input states not orthogonal");

    std::vector<MeasureReport> reps;
    std::vector<AlgElement> sots;
    for (const MatrixC& s : states) {
        Process proc(AlgElement::from_matrix(s), e);
        reps.push_back(all_measures(kind, proc, base));
        sots.push_back(sot_fn::sot(kind, proc).value);
    }
    for (std::size_t a = 0; a < sots.size(); ++a)
        for (std::size_t b = a + 1; b < sots.size(); ++b)
            if ((sots[a] * sots[b]).max_abs() > tol::herm)
                throw NotOrthogonal("convex_linearity_check: states over time not orthogonal");

    // symmetric bloom of the (possibly quasi-state) mixture, evaluated directly
    TensorShape ts(e.dom(), e.cod());
    AlgElement mix = AlgElement::zero(e.dom());
    for (std::size_t x = 0; x < states.size(); ++x)
        mix = mix + AlgElement::from_matrix(states[x]) * p.values[x];
    AlgElement jam = e.jamiolkowski();
    AlgElement rho1 = mm::tensor_elem(mix, AlgElement::identity(ts.right), ts);
    AlgElement mixed_sot = (rho1 * jam + jam * rho1) * 0.5;

    double hp = ent::qdist_entropy(p, base);
    double s_mix = ent::ext_entropy(mixed_sot, base);
    double s_in = ent::ext_entropy(mix, base);
    double s_out = ent::ext_entropy(e.apply(mix), base);
    double h_mix = s_mix - s_in;
    double i_mix = s_in + s_out - s_mix;
    double k_mix = s_mix - s_out;

    ConvexLinearityResiduals res;
    double s_aff = hp, h_aff = 0.0, i_aff = hp, k_aff = 0.0;
    for (std::size_t x = 0; x < reps.size(); ++x) {
        s_aff += p.values[x] * reps[x].s_psi;
        h_aff += p.values[x] * reps[x].h_psi;
        i_aff += p.values[x] * reps[x].i_psi;
        k_aff += p.values[x] * reps[x].k_psi;
    }
    res.s = std::abs(s_mix - s_aff);
    res.h = std::abs(h_mix - h_aff);
    res.i = std::abs(i_mix - i_aff);
    res.k = std::abs(k_mix - k_aff);
    return res;
}

} // namespace chronon::meas
