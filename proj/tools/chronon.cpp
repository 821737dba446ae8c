// chronon: states over time, process entropies, Bayes maps, figure data.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "chronon/batch.hpp"
#include "chronon/bayes.hpp"
#include "chronon/json_io.hpp"
#include "chronon/parallel.hpp"

using namespace chronon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInput = 2;

struct GoldenChecker {
    double tol_printed = 5e-4; // four-decimal printed values
    double tol_exact = 1e-8;   // closed forms
    bool ok = true;

    void expect(const std::string& label, double got, double want, double tol) {
        bool hit = std::abs(got - want) < tol;
        std::cout << "  " << label << " = " << got << "  (expected " << want
                  << (hit ? ")" : ")  <-- DEVIATES") << '\n';
        ok = ok && hit;
    }
};

void print_matrix(const MatrixC& m) {
    std::cout << std::showpos << std::fixed << std::setprecision(4);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::cout << "    ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Complex z = m(i, j);
            if (std::abs(z.imag()) < 1e-12)
                std::cout << z.real() << "        ";
            else
                std::cout << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i ";
        }
        std::cout << '\n';
    }
    std::cout << std::noshowpos << std::defaultfloat << std::setprecision(6);
}

void print_element(const AlgElement& e, const std::string& name) {
    std::cout << "  " << name << ":\n";
    for (Eigen::Index x = 0; x < e.block_count(); ++x) {
        if (e.block_count() > 1) std::cout << "   block " << x << ":\n";
        print_matrix(e.block(x));
    }
}

void print_mspec(const std::vector<double>& spec, const std::string& name) {
    std::cout << "  mspec(" << name << ") = {";
    for (double l : spec) std::cout << ' ' << l;
    std::cout << " }\n";
}

void print_report(const MeasureReport& rep) {
    std::cout << "  [" << rep.kind.encode() << "] S_psi = " << rep.s_psi
              << ", H_psi = " << rep.h_psi << ", I_psi = " << rep.i_psi
              << ", K_psi = " << rep.k_psi << "  (S_in = " << rep.s_in << ", S_out = " << rep.s_out
              << ", conservation residual = " << rep.conservation_residual << ")\n";
}

MatrixC epr_state() {
    MatrixC rho = MatrixC::Zero(4, 4);
    rho(1, 1) = 0.5;
    rho(2, 2) = 0.5;
    rho(1, 2) = -0.5;
    rho(2, 1) = -0.5;
    return rho;
}

MatrixC sigma2() {
    MatrixC m(2, 2);
    m << 0.5, -0.5, -0.5, 0.5;
    return m;
}

Channel amplitude_damping(double p) {
    MatrixC a1(2, 2), a2(2, 2);
    a1 << 1, 0, 0, std::sqrt(1.0 - p);
    a2 << 0, std::sqrt(p), 0, 0;
    return ch::from_kraus(AlgebraShape::matrix(2), AlgebraShape::matrix(2), {a1, a2});
}

int run_example(const std::string& name, const LogBase& base, GoldenChecker check) {
    if (name == "epr-partial-trace") {
        Process proc(AlgElement::from_matrix(epr_state()),
                     ch::ptrace_channel(2, 2, la::Factor::Left));
        StateOverTime sym = sot_fn::sot(SotKind::sym_bloom(), proc);
        print_element(sym.value, "psi_S(rho_EPR, tr_1)");
        print_mspec(mm::mspec(sym.value), "psi_S");
        MeasureReport rep = meas::all_measures(SotKind::sym_bloom(), proc, base);
        print_report(rep);
        check.expect("S_1", rep.s_psi, std::log2(4.0 / (3.0 * std::sqrt(3.0))), check.tol_exact);
        check.expect("I_1 (definitional)", rep.i_psi, 1.0 - std::log2(4.0 / (3.0 * std::sqrt(3.0))),
                     check.tol_exact);
        MeasureReport ls = meas::all_measures(SotKind::ls(), proc, base);
        print_report(ls);
        check.expect("S_LS", ls.s_psi, 1.0, check.tol_exact);
        check.expect("I_LS", ls.i_psi, 0.0, check.tol_exact);
        check.expect("C(psi_S)", ent::causality_monotone(sym.value), 1.0, check.tol_exact);
        check.expect("C(psi_LS)",
                     ent::causality_monotone(sot_fn::sot(SotKind::ls(), proc).value), 0.0,
                     check.tol_exact);
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "separable-partial-trace") {
        MatrixC plus(2, 2);
        plus << 0.5, 0.5, 0.5, 0.5;
        Process proc(AlgElement::from_matrix(la::kron(plus, plus)),
                     ch::ptrace_channel(2, 2, la::Factor::Left));
        for (const SotKind& k : {SotKind::sym_bloom(), SotKind::ls()}) {
            StateOverTime st = sot_fn::sot(k, proc);
            print_mspec(mm::mspec(st.value), "psi[" + k.encode() + "]");
            MeasureReport rep = meas::all_measures(k, proc, base);
            print_report(rep);
            check.expect("S_" + k.encode(), rep.s_psi, 0.0, check.tol_exact);
            check.expect("I_" + k.encode(), rep.i_psi, 0.0, check.tol_exact);
        }
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "bitflip") {
        auto rows = batch::scan_bitflip(5, SotKind::sym_bloom(), base);
        std::cout << "  r,lambda,S,H,I,K\n";
        for (const auto& row : rows)
            std::cout << "  " << row.r << ',' << row.lambda << ',' << row.report.s_psi << ','
                      << row.report.h_psi << ',' << row.report.i_psi << ',' << row.report.k_psi
                      << '\n';
        for (const auto& row : rows)
            if (row.lambda == 1.0) {
                check.expect("H at lambda=1 (r=" + std::to_string(row.r) + ")", row.report.h_psi,
                             0.0, check.tol_exact);
                check.expect("I - S_in at lambda=1", row.report.i_psi - row.report.s_in, 0.0,
                             check.tol_exact);
            }
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "amplitude-damping") {
        Channel e = amplitude_damping(0.5);
        Process p1(AlgElement::from_matrix(MatrixC::Identity(2, 2) / 2.0), e);
        Process p2(AlgElement::from_matrix(sigma2()), e);
        StateOverTime s1 = sot_fn::sot(SotKind::sym_bloom(), p1);
        StateOverTime s2 = sot_fn::sot(SotKind::sym_bloom(), p2);
        print_element(s1.value, "psi_S(rho_1, E)");
        print_mspec(mm::mspec(s1.value), "psi_S(rho_1, E)");
        print_element(s2.value, "psi_S(rho_2, E)");
        print_mspec(mm::mspec(s2.value), "psi_S(rho_2, E)");
        MeasureReport r1 = meas::all_measures(SotKind::sym_bloom(), p1, base);
        MeasureReport r2 = meas::all_measures(SotKind::sym_bloom(), p2, base);
        print_report(r1);
        print_report(r2);
        // golden targets come from the printed 4x4 state-over-time matrices
        MatrixC golden(4, 4);
        double s2v = std::sqrt(2.0);
        golden << 4, -s2v, -3, 0, -s2v, 0, 2 * s2v, -1, -3, 2 * s2v, 2, -s2v, 0, -1, -s2v, 2;
        golden /= 8.0;
        check.expect("|psi_S(rho_2) - reference|", (s2.value.block(0) - golden).cwiseAbs().maxCoeff(),
                     0.0, 1e-12);
        check.expect("S_1(rho_1)", r1.s_psi, 1.0, check.tol_exact);
        check.expect("S_1(rho_2)", r2.s_psi, 0.070898333789634, check.tol_exact);
        std::cout << "  note: the reference spectrum {1/4, 1/2, (1 +/- sqrt(17))/8} and the\n"
                     "  values 0.8823/0.0723/0.6009 quoted alongside it are inconsistent with\n"
                     "  the state-over-time matrices, which are reproduced exactly above.\n";
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "pvm") {
        Channel pvm = ch::pvm_channel({la::unit(0, 0, 2), la::unit(1, 1, 2)});
        Process p1(AlgElement::from_matrix(MatrixC::Identity(2, 2) / 2.0), pvm);
        Process p2(AlgElement::from_matrix(sigma2()), pvm);
        StateOverTime st = sot_fn::sot(SotKind::sym_bloom(), p2);
        print_element(st.value, "psi_S(N, sigma_2)");
        print_mspec(mm::mspec(st.value), "psi_S(N, sigma_2)");
        MeasureReport r1 = meas::all_measures(SotKind::sym_bloom(), p1, base);
        MeasureReport r2 = meas::all_measures(SotKind::sym_bloom(), p2, base);
        print_report(r1);
        print_report(r2);
        check.expect("S_1(N, sigma_1)", r1.s_psi, 1.0, check.tol_exact);
        check.expect("K_1(N, sigma_1)", r1.k_psi, 0.0, check.tol_exact);
        double closed = 2.0 + (std::sqrt(2.0) / 2.0) *
                                  std::log2((std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) + 1.0));
        check.expect("S_1(N, sigma_2)", r2.s_psi, closed, check.tol_exact);
        check.expect("S_1(N, sigma_2) [reference]", r2.s_psi, 0.2019, check.tol_printed);
        check.expect("I_1(N, sigma_2) [reference]", r2.i_psi, 0.7983, check.tol_printed);
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "subadditivity-counterexample") {
        double s5 = std::sqrt(5.0);
        MatrixC rho_ab(4, 4);
        rho_ab << -6, s5, s5, 0, s5, 8, 0, s5, s5, 0, 8, s5, 0, s5, s5, 2;
        rho_ab /= 12.0;
        print_matrix(rho_ab);
        double s_bits = ent::ext_entropy(AlgElement::from_matrix(rho_ab), LogBase::two());
        double s_nats = ent::ext_entropy(AlgElement::from_matrix(rho_ab), LogBase::e());
        double sa = ent::ext_entropy(
            AlgElement::from_matrix(la::partial_trace(rho_ab, 2, 2, la::Factor::Right)));
        std::cout << "  S(rho_AB) = " << s_bits << " bits = " << s_nats << " nats\n"
                  << "  marginal entropy = " << sa << " (both marginals are the same pure state)\n"
                  << "  the reference value 0.29 is the natural-log entropy\n";
        check.expect("S(rho_AB) [nats]", s_nats, 0.29, 0.01);
        check.expect("marginal entropy", sa, 0.0, check.tol_exact);
        return check.ok ? kExitOk : kExitTolerance;
    }
    if (name == "pure-qubit-id") {
        MatrixC plus(2, 2);
        plus << 0.5, 0.5, 0.5, 0.5;
        Process proc(AlgElement::from_matrix(plus), ch::identity(AlgebraShape::matrix(2)));
        StateOverTime st = sot_fn::sot(SotKind::sym_bloom(), proc);
        print_element(st.value, "psi_S(rho, id)");
        print_mspec(mm::mspec(st.value), "psi_S(rho, id)");
        double got = 0.0;
        std::vector<double> want{-0.5, 0.0, 0.5, 1.0}, spec = mm::mspec(st.value);
        for (std::size_t i = 0; i < want.size(); ++i)
            got = std::max(got, std::abs(spec[i] - want[i]));
        check.expect("|mspec - {-1/2,0,1/2,1}|", got, 0.0, check.tol_exact);
        check.expect("S(psi_S)", ent::ext_entropy(st.value, base), 0.0, check.tol_exact);
        check.expect("even extension", ent::even_entropy(st.value, base), base.log(2.0),
                     check.tol_exact);
        return check.ok ? kExitOk : kExitTolerance;
    }
    throw UnknownExample("unknown example: " + name);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"states over time, dynamical information measures, Bayes maps"};
    app.require_subcommand(1);

    std::string sot_text = "sym-bloom";
    std::string log_base_text = "2";
    std::string out_path;
    double tol = 5e-4;
    app.add_option("--log-base", log_base_text, "logarithm base: 2 or e")->capture_default_str();

    auto* exmpl = app.add_subcommand("example", "reproduce a worked example");
    exmpl->fallthrough();
    std::string example_name;
    exmpl->add_option("name", example_name,
                      "epr-partial-trace | separable-partial-trace | bitflip | "
                      "amplitude-damping | pvm | subadditivity-counterexample | pure-qubit-id")
        ->required();
    exmpl->add_option("--tol", tol, "tolerance for printed four-decimal values")
        ->capture_default_str();

    auto* measures_cmd = app.add_subcommand("measures", "measures of a process file");
    measures_cmd->fallthrough();
    std::string process_path;
    measures_cmd->add_option("process", process_path, "JSON process file")->required();
    measures_cmd->add_option("--sot", sot_text, "state-over-time kind")->capture_default_str();
    measures_cmd->add_option("--out", out_path, "write JSON report here instead of stdout");

    auto* scan = app.add_subcommand("scan-bitflip", "grid scan of the bit-flip family");
    scan->fallthrough();
    Eigen::Index grid_n = 21;
    scan->add_option("--grid", grid_n, "grid points per axis")->capture_default_str();
    scan->add_option("--sot", sot_text, "state-over-time kind")->capture_default_str();
    scan->add_option("--out", out_path, "CSV output path");

    auto* scatter = app.add_subcommand("scatter", "Monte Carlo scatter data");
    scatter->fallthrough();
    std::string scatter_kind = "sot";
    SampleSpec spec;
    double scale = 3.0;
    scatter->add_option("kind", scatter_kind, "sot | quasi")->required();
    scatter->add_option("--m", spec.m)->capture_default_str();
    scatter->add_option("--d1", spec.d1)->capture_default_str();
    scatter->add_option("--d2", spec.d2)->capture_default_str();
    scatter->add_option("--d3", spec.d3)->capture_default_str();
    scatter->add_option("--samples", spec.count)->capture_default_str();
    scatter->add_option("--seed", spec.seed)->capture_default_str();
    scatter->add_option("--scale", scale, "perturbation scale (quasi mode)")
        ->capture_default_str();
    scatter->add_option("--sot", sot_text, "state-over-time kind (sot mode)")
        ->capture_default_str();
    scatter->add_option("--out", out_path, "CSV output path");

    auto* bayes_cmd = app.add_subcommand("bayes-check", "sampled Bayes-map residuals");
    bayes_cmd->fallthrough();
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    Eigen::Index m_dim = 2;
    double residual_tol = 1e-8;
    bayes_cmd->add_option("--sot", sot_text, "ls | sym-bloom")->capture_default_str();
    bayes_cmd->add_option("--samples", samples)->capture_default_str();
    bayes_cmd->add_option("--seed", seed)->capture_default_str();
    bayes_cmd->add_option("--m", m_dim)->capture_default_str();
    bayes_cmd->add_option("--tol", residual_tol, "residual tolerance")->capture_default_str();
    bayes_cmd->add_option("--out", out_path, "CSV output path");

    auto* povm_cmd = app.add_subcommand("povm-check", "sampled disturbance-theorem checks");
    povm_cmd->fallthrough();
    double p_param = 1.0;
    povm_cmd->add_option("--p", p_param, "bloom parameter")->capture_default_str();
    povm_cmd->add_option("--n", m_dim, "Hilbert space dimension")->capture_default_str();
    povm_cmd->add_option("--samples", samples)->capture_default_str();
    povm_cmd->add_option("--seed", seed)->capture_default_str();
    povm_cmd->add_option("--out", out_path, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    LogBase base = LogBase::two();
    if (log_base_text == "e")
        base = LogBase::e();
    else if (log_base_text != "2") {
        std::cerr << "error: --log-base must be 2 or e\n";
        return kExitInput;
    }

    try {
        if (*exmpl) {
            GoldenChecker check;
            check.tol_printed = tol;
            return run_example(example_name, base, check);
        }
        if (*measures_cmd) {
            Process proc = io::process_from_file(process_path);
            MeasureReport rep = meas::all_measures(SotKind::parse(sot_text), proc, base);
            io::json j = io::measure_report_to_json(rep);
            if (out_path.empty())
                std::cout << j.dump(2) << '\n';
            else
                open_out(out_path) << j.dump(2) << '\n';
            return kExitOk;
        }
        if (*scan) {
            auto rows = batch::scan_bitflip(grid_n, SotKind::parse(sot_text), base);
            std::ostringstream csv;
            csv << "r,lambda,s_psi,h_psi,i_psi,k_psi\n";
            csv.precision(12);
            for (const auto& row : rows)
                csv << row.r << ',' << row.lambda << ',' << row.report.s_psi << ','
                    << row.report.h_psi << ',' << row.report.i_psi << ',' << row.report.k_psi
                    << '\n';
            if (out_path.empty())
                std::cout << csv.str();
            else
                open_out(out_path) << csv.str();
            return kExitOk;
        }
        if (*scatter) {
            std::ostringstream csv;
            csv.precision(12);
            if (scatter_kind == "sot") {
                auto rows = batch::scatter_sot(spec, SotKind::parse(sot_text), base);
                csv << "s_joint,s_marginals,i_psi\n";
                int violations = 0;
                double bound = 2.0 * base.log(static_cast<double>(spec.m));
                for (const auto& r : rows) {
                    csv << r.s_joint << ',' << r.s_marginals << ',' << r.mutual_info << '\n';
                    if (r.mutual_info < -1e-9 || r.mutual_info > bound + 1e-9) ++violations;
                }
                csv << "# i-bound violations: " << violations << '\n';
            } else if (scatter_kind == "quasi") {
                auto rows = batch::scatter_quasi(spec.m, spec.m, spec.d1 * spec.m, scale,
                                                 spec.seed, spec.count, base);
                csv << "s_joint,s_marginals\n";
                int violations = 0;
                for (const auto& r : rows) {
                    csv << r.s_joint << ',' << r.s_marginals << '\n';
                    if (r.s_joint > r.s_marginals + 1e-9) ++violations;
                }
                csv << "# subadditivity violations: " << violations << '\n';
            } else {
                std::cerr << "error: scatter kind must be sot or quasi\n";
                return kExitInput;
            }
            if (out_path.empty())
                std::cout << csv.str();
            else
                open_out(out_path) << csv.str();
            return kExitOk;
        }
        if (*bayes_cmd) {
            SotKind kind = SotKind::parse(sot_text);
            auto rows = batch::bayes_samples(kind, m_dim, 2, 2, seed, samples, base);
            std::ostringstream csv;
            csv.precision(12);
            csv << "bayes_residual,entropic_residual,cp\n";
            double worst = 0.0;
            for (const auto& r : rows) {
                csv << r.bayes_residual << ',' << r.entropic_residual << ',' << (r.cp_ok ? 1 : 0)
                    << '\n';
                worst = std::max({worst, r.bayes_residual, r.entropic_residual});
            }
            csv << "# max residual: " << worst << '\n';
            if (out_path.empty())
                std::cout << csv.str();
            else
                open_out(out_path) << csv.str();
            return worst < residual_tol ? kExitOk : kExitTolerance;
        }
        if (*povm_cmd) {
            auto rows = batch::povm_samples(p_param, m_dim, seed, samples, base);
            std::ostringstream csv;
            csv << "disturbing,clauses_ok,i_psi\n";
            csv.precision(12);
            bool all_ok = true;
            for (const auto& r : rows) {
                csv << (r.disturbing ? 1 : 0) << ',' << (r.clauses_ok ? 1 : 0) << ',' << r.i_psi
                    << '\n';
                all_ok = all_ok && r.clauses_ok;
            }
            csv << "# all clauses hold: " << (all_ok ? "yes" : "no") << '\n';
            if (out_path.empty())
                std::cout << csv.str();
            else
                open_out(out_path) << csv.str();
            return all_ok ? kExitOk : kExitTolerance;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const UnknownExample& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NonHermitianSot& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidEffects& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NotStochastic& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ShapeMismatch& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionViolated& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    }
    return kExitInput;
}
