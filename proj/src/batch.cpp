#include "chronon/batch.hpp"

#include "chronon/parallel.hpp"

namespace chronon::batch {

namespace {

template <class F>
void run(std::size_t n, Mode mode, F&& f) {
    if (mode == Mode::Parallel)
        par::parallel_for(n, f);
    else
        par::serial_for(n, f);
}

} // namespace

std::vector<SotSample> scatter_sot(const SampleSpec& spec, const SotKind& kind, LogBase base,
                                   Mode mode) {
    std::vector<SotSample> rows(spec.count);
    run(spec.count, mode, [&](std::size_t k) {
        rnd::SplitMix64 gen(rnd::subseed(spec.seed, k));
        MatrixC rho = ens::random_density(spec.m, spec.d1, gen);
        Channel e = ens::random_channel(spec.m, spec.d2, spec.d3, gen);
        Process proc(AlgElement::from_matrix(rho), std::move(e));
        MeasureReport rep = meas::all_measures(kind, proc, base);
        rows[k] = {rep.s_psi, rep.s_in + rep.s_out, rep.i_psi};
    });
    return rows;
}

std::vector<QuasiSample> scatter_quasi(Eigen::Index nA, Eigen::Index nB, Eigen::Index d_env,
                                       double scale, std::uint64_t seed, std::size_t count,
                                       LogBase base, Mode mode) {
    std::vector<QuasiSample> rows(count);
    run(count, mode, [&](std::size_t k) {
        rnd::SplitMix64 gen(rnd::subseed(seed, k));
        MatrixC rho_ab = ens::random_density(nA * nB, d_env, gen);
        MatrixC tau = ens::random_traceless_marginal_hermitian(nA, nB, scale, gen);
        MatrixC sigma_ab = rho_ab + tau;
        MatrixC a = la::partial_trace(sigma_ab, nA, nB, la::Factor::Right);
        MatrixC b = la::partial_trace(sigma_ab, nA, nB, la::Factor::Left);
        double sj = ent::ext_entropy(AlgElement::from_matrix(sigma_ab), base);
        double sm = ent::ext_entropy(AlgElement::from_matrix(a), base) +
                    ent::ext_entropy(AlgElement::from_matrix(b), base);
        rows[k] = {sj, sm};
    });
    return rows;
}

std::vector<BitflipRow> scan_bitflip(Eigen::Index grid_n, const SotKind& kind, LogBase base,
                                     Mode mode) {
    if (grid_n < 2) throw PreconditionViolated("scan_bitflip: grid_n >= 2 required");
    MatrixC flip(2, 2);
    flip << 0, 1, 1, 0;
    const std::size_t total = static_cast<std::size_t>(grid_n * grid_n);
    std::vector<BitflipRow> rows(total);
    run(total, mode, [&](std::size_t k) {
        Eigen::Index i = static_cast<Eigen::Index>(k) / grid_n;
        Eigen::Index j = static_cast<Eigen::Index>(k) % grid_n;
        double r = static_cast<double>(i) / static_cast<double>(grid_n - 1);
        double lam = static_cast<double>(j) / static_cast<double>(grid_n - 1);
        MatrixC rho = MatrixC::Zero(2, 2);
        rho(0, 0) = r;
        rho(1, 1) = 1.0 - r;
        MatrixC id2 = MatrixC::Identity(2, 2);
        Channel e = ch::from_kraus(AlgebraShape::matrix(2), AlgebraShape::matrix(2),
                                   {std::sqrt(lam) * id2, std::sqrt(1.0 - lam) * flip});
        Process proc(AlgElement::from_matrix(rho), std::move(e));
        rows[k] = {r, lam, meas::all_measures(kind, proc, base)};
    });
    return rows;
}

std::vector<BayesSampleRow> bayes_samples(const SotKind& kind, Eigen::Index m, Eigen::Index d2,
                                          Eigen::Index d3, std::uint64_t seed, std::size_t count,
                                          LogBase base, Mode mode) {
    std::vector<BayesSampleRow> rows(count);
    run(count, mode, [&](std::size_t k) {
        rnd::SplitMix64 gen(rnd::subseed(seed, k));
        // faithful input: mix the induced density toward the trace state
        MatrixC rho = ens::random_density(m, m, gen);
        rho = 0.9 * rho + 0.1 * MatrixC::Identity(m, m) / static_cast<double>(m);
        Channel e = ens::random_channel(m, d2, d3, gen);
        Process proc(AlgElement::from_matrix(rho), std::move(e));
        bayes::EntropicBayesReport rep = bayes::entropic_bayes_check(kind, proc, base);
        BayesResult br = (kind.tag == SotKind::Tag::LS) ? bayes::petz_map(proc)
                                                        : bayes::sym_bloom_bayes_map(proc);
        rows[k] = {rep.bayes_residual, rep.residual, br.cp_ok};
    });
    return rows;
}

std::vector<PovmSampleRow> povm_samples(double p, Eigen::Index n, std::uint64_t seed,
                                        std::size_t count, LogBase base, Mode mode) {
    std::vector<PovmSampleRow> rows(count);
    run(count, mode, [&](std::size_t k) {
        rnd::SplitMix64 gen(rnd::subseed(seed, k));
        MatrixC u = ens::haar_unitary(n, gen);
        std::vector<MatrixC> projectors;
        for (Eigen::Index y = 0; y < n; ++y)
            projectors.push_back(u.col(y) * u.col(y).adjoint());
        VectorC v = ens::haar_pure(n, gen);
        MatrixC rho = v * v.adjoint();
        PovmSampleRow row;
        row.disturbing =
            meas::classify_disturbing(rho, projectors) == meas::Disturbance::Disturbing;
        row.clauses_ok = meas::disturbance_theorem_check(p, rho, projectors, base);
        row.i_psi = meas::povm_closed_form(p, rho, projectors, base).report.i_psi;
        rows[k] = row;
    });
    return rows;
}

} // namespace chronon::batch
