#ifndef CHRONON_BATCH_HPP
#define CHRONON_BATCH_HPP

#include "chronon/bayes.hpp"
#include "chronon/ensembles.hpp"
#include "chronon/measures.hpp"

namespace chronon::batch {

/// Execution mode for the batch kernels. Parallel is the default; Serial is
/// the reference implementation the tests compare against (per-index
/// sub-seeding makes the two produce identical rows).
enum class Mode { Serial, Parallel };

/// One sampled process in the state-over-time scatter.
struct SotSample {
    double s_joint = 0.0;
    double s_marginals = 0.0; // S(rho) + S(E(rho))
    double mutual_info = 0.0;
};

std::vector<SotSample> scatter_sot(const SampleSpec& spec, const SotKind& kind,
                                   LogBase base = LogBase::two(), Mode mode = Mode::Parallel);

/// One sampled quasi-state sigma_AB = rho_AB + tau_AB with state marginals.
struct QuasiSample {
    double s_joint = 0.0;
    double s_marginals = 0.0;
};

std::vector<QuasiSample> scatter_quasi(Eigen::Index nA, Eigen::Index nB, Eigen::Index d_env,
                                       double scale, std::uint64_t seed, std::size_t count,
                                       LogBase base = LogBase::two(), Mode mode = Mode::Parallel);

/// Bit-flip channel E_lambda = lambda id + (1-lambda) Ad_X on the diagonal
/// input diag(r, 1-r), evaluated on a grid_n x grid_n grid over [0,1]^2.
struct BitflipRow {
    double r = 0.0;
    double lambda = 0.0;
    MeasureReport report;
};

std::vector<BitflipRow> scan_bitflip(Eigen::Index grid_n, const SotKind& kind,
                                     LogBase base = LogBase::two(), Mode mode = Mode::Parallel);

/// Random faithful processes pushed through the Bayes construction for the
/// given kind; rows carry the Bayes and entropic-Bayes residuals.
struct BayesSampleRow {
    double bayes_residual = 0.0;
    double entropic_residual = 0.0;
    bool cp_ok = false;
};

std::vector<BayesSampleRow> bayes_samples(const SotKind& kind, Eigen::Index m, Eigen::Index d2,
                                          Eigen::Index d3, std::uint64_t seed, std::size_t count,
                                          LogBase base = LogBase::two(),
                                          Mode mode = Mode::Parallel);

/// Random pure states under random PVMs at parameter p; each row records the
/// disturbance label and whether the disturbance-theorem clauses held.
struct PovmSampleRow {
    bool disturbing = false;
    bool clauses_ok = false;
    double i_psi = 0.0;
};

std::vector<PovmSampleRow> povm_samples(double p, Eigen::Index n, std::uint64_t seed,
                                        std::size_t count, LogBase base = LogBase::two(),
                                        Mode mode = Mode::Parallel);

} // namespace chronon::batch

#endif
