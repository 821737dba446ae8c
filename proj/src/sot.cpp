#include "chronon/sot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chronon {

Process::Process(AlgElement r, Channel e, bool verify)
    : rho(std::move(r)), channel(std::move(e)) {
    if (rho.shape() != channel.dom())
        throw ShapeMismatch("Process: state does not live in the channel domain");
    if (verify) {
        if (!rho.is_state()) throw PreconditionViolated("Process: rho is not a state");
        if (!channel.is_cptp()) throw PreconditionViolated("Process: channel is not CPTP");
    }
}

SotKind SotKind::p_bloom(double p) {
    if (p < 0 || p > 1) throw PreconditionViolated("p-bloom: p outside [0,1]");
    SotKind k{Tag::PBloom};
    k.p = p;
    return k;
}

SotKind SotKind::sym_p_bloom(double p) {
    if (p < 0 || p > 1) throw PreconditionViolated("sym-p-bloom: p outside [0,1]");
    SotKind k{Tag::SymPBloom};
    k.p = p;
    return k;
}

SotKind SotKind::pqr(double p, double q, double r) {
    if (p < 0 || p > 1 || q < 0 || q > 1 || r < 0 || r > 1)
        throw PreconditionViolated("pqr: parameters outside [0,1]");
    SotKind k{Tag::PqrFamily};
    k.p = p;
    k.q = q;
    k.r = r;
    return k;
}

bool SotKind::hermitian() const {
    switch (tag) {
        case Tag::SymBloom:
        case Tag::SymPBloom:
        case Tag::LS:
        case Tag::Compound:
            return true;
        default:
            return false;
    }
}

std::string SotKind::encode() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::Right: return "right";
        case Tag::Left: return "left";
        case Tag::SymBloom: return "sym-bloom";
        case Tag::LS: return "ls";
        case Tag::Compound: return "compound";
        case Tag::PBloom: os << "p-bloom:" << p; return os.str();
        case Tag::SymPBloom: os << "sym-p-bloom:" << p; return os.str();
        case Tag::PqrFamily: os << "pqr:" << p << "," << q << "," << r; return os.str();
    }
    return "sym-bloom";
}

SotKind SotKind::parse(const std::string& text) {
    if (text == "right") return right();
    if (text == "left") return left();
    if (text == "sym-bloom") return sym_bloom();
    if (text == "ls") return ls();
    if (text == "compound") return compound();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
        try {
            if (head == "p-bloom") return p_bloom(std::stod(tail));
            if (head == "sym-p-bloom") return sym_p_bloom(std::stod(tail));
            if (head == "pqr") {
                std::istringstream is(tail);
                double p, q, r;
                char c1, c2;
                if (is >> p >> c1 >> q >> c2 >> r && c1 == ',' && c2 == ',')
                    return pqr(p, q, r);
            }
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError("unknown sot kind: " + text);
}

namespace sot_fn {
namespace {

/// (rho^p (x) 1) J (rho^(1-p) (x) 1), block by block over the tensor shape.
/// Integer powers use rho itself so that the right/left blooms are exact.
AlgElement p_bloom_value(const Process& proc, const AlgElement& jam, double p) {
    TensorShape ts = proc.tensor_shape();
    AlgElement out = AlgElement::zero(ts.flat);
    auto power = [](const MatrixC& b, double e) {
        if (e == 1.0) return b;
        return la::psd_power(b, e);
    };
    for (Eigen::Index x = 0; x < ts.left.block_count(); ++x) {
        MatrixC lp = power(proc.rho.block(x), p);
        MatrixC rp = power(proc.rho.block(x), 1.0 - p);
        for (Eigen::Index y = 0; y < ts.right.block_count(); ++y) {
            Eigen::Index idx = ts.flat_index(x, y);
            MatrixC l = la::kron(lp, MatrixC::Identity(ts.right.block_dim(y), ts.right.block_dim(y)));
            MatrixC r = la::kron(rp, MatrixC::Identity(ts.right.block_dim(y), ts.right.block_dim(y)));
            out.block(idx) = l * jam.block(idx) * r;
        }
    }
    return out;
}

AlgElement compound_value(const Process& proc) {
    TensorShape ts = proc.tensor_shape();
    AlgElement out = AlgElement::zero(ts.flat);
    for (Eigen::Index x = 0; x < ts.left.block_count(); ++x) {
        la::HermEigen eig = la::herm_eigen(proc.rho.block(x));
        Eigen::Index d = ts.left.block_dim(x);
        // group eigenvalues into clusters with relative gap below 1e-8
        Eigen::Index i = 0;
        while (i < d) {
            Eigen::Index j = i + 1;
            double scale = std::max(1.0, std::abs(eig.values(i)));
            while (j < d && std::abs(eig.values(j) - eig.values(j - 1)) <= 1e-8 * scale) ++j;
            MatrixC proj = MatrixC::Zero(d, d);
            for (Eigen::Index k = i; k < j; ++k)
                proj += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
            double lambda = eig.values.segment(i, j - i).mean();
            double tr_p = static_cast<double>(j - i);
            AlgElement normalized = AlgElement::embed(ts.left, x, proj / tr_p);
            AlgElement img = proc.channel.apply(normalized);
            for (Eigen::Index y = 0; y < ts.right.block_count(); ++y)
                out.block(ts.flat_index(x, y)) += lambda * la::kron(proj, img.block(y));
            i = j;
        }
    }
    return out;
}

} // namespace

StateOverTime sot(const SotKind& kind, const Process& proc) {
    TensorShape ts = proc.tensor_shape();
    AlgElement jam = proc.channel.jamiolkowski();
    AlgElement value = AlgElement::zero(ts.flat);
    switch (kind.tag) {
        case SotKind::Tag::Right: value = p_bloom_value(proc, jam, 1.0); break;
        case SotKind::Tag::Left: value = p_bloom_value(proc, jam, 0.0); break;
        case SotKind::Tag::SymBloom:
            value = (p_bloom_value(proc, jam, 1.0) + p_bloom_value(proc, jam, 0.0)) * 0.5;
            break;
        case SotKind::Tag::PBloom: value = p_bloom_value(proc, jam, kind.p); break;
        case SotKind::Tag::SymPBloom:
            value = (p_bloom_value(proc, jam, kind.p) + p_bloom_value(proc, jam, 1.0 - kind.p)) * 0.5;
            break;
        case SotKind::Tag::PqrFamily:
            value = p_bloom_value(proc, jam, kind.p) * kind.r +
                    p_bloom_value(proc, jam, kind.q) * (1.0 - kind.r);
            break;
        case SotKind::Tag::LS: value = p_bloom_value(proc, jam, 0.5); break;
        case SotKind::Tag::Compound: value = compound_value(proc); break;
    }
    StateOverTime out{std::move(value), kind};
    AlgElement mleft = mm::ptrace_factor(out.value, ts, la::Factor::Right); // keep A
    AlgElement mright = mm::ptrace_factor(out.value, ts, la::Factor::Left); // keep B
    out.marginal_residual_state = (mleft - proc.rho).max_abs();
    out.marginal_residual_output = (mright - proc.channel.apply(proc.rho)).max_abs();
    if (out.marginal_residual_state > tol::herm || out.marginal_residual_output > tol::herm)
        throw Error("sot: marginal condition violated beyond tolerance");
    if (kind.hermitian() && !out.value.is_hermitian())
        throw Error("sot: hermitian kind produced a non-hermitian value");
    return out;
}

ReducibilityReport classical_reducibility_check(const Process& proc) {
    TensorShape ts = proc.tensor_shape();
    AlgElement jam = proc.channel.jamiolkowski();
    AlgElement rho1 = mm::tensor_elem(proc.rho, AlgElement::identity(ts.right), ts);
    ReducibilityReport rep;
    rep.commutator_norm = (rho1 * jam - jam * rho1).max_abs();
    rep.commuting = rep.commutator_norm < tol::herm;
    if (!rep.commuting) return rep;
    AlgElement target = rho1 * jam;
    for (const SotKind& k :
         {SotKind::right(), SotKind::left(), SotKind::sym_bloom(), SotKind::sym_p_bloom(0.3),
          SotKind::ls()}) {
        rep.max_deviation = std::max(rep.max_deviation, (sot(k, proc).value - target).max_abs());
    }
    return rep;
}

std::vector<double> unitary_process_mspec(double p, double q, double r,
                                          const std::vector<double>& lam) {
    auto powc = [](double x, double e) {
        if (e == 0.0) return 1.0; // the x^0 = 1 convention
        return (x <= tol::zero) ? 0.0 : std::pow(x, e);
    };
    const std::size_t m = lam.size();
    auto a = [&](std::size_t i, std::size_t j) {
        return r * powc(lam[i], p) * powc(lam[j], 1.0 - p) +
               (1.0 - r) * powc(lam[i], q) * powc(lam[j], 1.0 - q);
    };
    std::vector<double> out(lam);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double s = std::sqrt(a(i, j) * a(j, i));
            out.push_back(s);
            out.push_back(-s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

double structured_eigen_check(const Eigen::MatrixXd& a) {
    const Eigen::Index m = a.rows();
    if (a.cols() != m) throw PreconditionViolated("structured_eigen_check: square input");
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            if (a(i, j) < 0)
                throw PreconditionViolated("structured_eigen_check: coefficients must be >= 0");
            if (a(i, j) == 0.0 && a(j, i) != 0.0)
                throw PreconditionViolated(
                    "structured_eigen_check: a_ij = 0 requires a_ji = 0 for diagonalizability");
        }
    MatrixC A = MatrixC::Zero(m * m, m * m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            A += la::kron(la::unit(i, j, m), a(i, j) * la::unit(j, i, m));
    auto basis_vec = [m](Eigen::Index i, Eigen::Index j) {
        VectorC v = VectorC::Zero(m * m);
        v(i * m + j) = 1.0;
        return v;
    };
    double worst = 0.0;
    auto check = [&](const VectorC& v, double lambda) {
        worst = std::max(worst, (A * v - lambda * v).cwiseAbs().maxCoeff());
    };
    for (Eigen::Index i = 0; i < m; ++i) check(basis_vec(i, i), a(i, i));
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) {
            if (a(i, j) == 0.0) {
                check(basis_vec(i, j), 0.0);
                check(basis_vec(j, i), 0.0);
            } else {
                double s = std::sqrt(a(i, j) * a(j, i));
                VectorC vp = std::sqrt(a(i, j)) * basis_vec(i, j) + std::sqrt(a(j, i)) * basis_vec(j, i);
                VectorC vm = std::sqrt(a(i, j)) * basis_vec(i, j) - std::sqrt(a(j, i)) * basis_vec(j, i);
                check(vp, s);
                check(vm, -s);
            }
        }
    return worst;
}

} // namespace sot_fn
} // namespace chronon
