#include "chronon/channel.hpp"

#include <cmath>

namespace chronon {

namespace {

/// Enumerate the matrix-unit basis of a multi-matrix algebra.
template <class F>
void for_each_unit(const AlgebraShape& shape, F&& f) {
    for (Eigen::Index x = 0; x < shape.block_count(); ++x)
        for (Eigen::Index i = 0; i < shape.block_dim(x); ++i)
            for (Eigen::Index j = 0; j < shape.block_dim(x); ++j)
                f(x, i, j, AlgElement::embed(shape, x, la::unit(i, j, shape.block_dim(x))));
}

int load_flag(const std::atomic<int>& f) { return f.load(std::memory_order_acquire); }
void store_flag(std::atomic<int>& f, bool v) {
    f.store(v ? 1 : 0, std::memory_order_release);
}

} // namespace

Channel::Channel(AlgebraShape dom, AlgebraShape cod, MatrixC superop)
    : dom_(std::move(dom)), cod_(std::move(cod)), superop_(std::move(superop)) {
    if (superop_.rows() != cod_.vec_dim() || superop_.cols() != dom_.vec_dim())
        throw ShapeMismatch("Channel: superoperator dimensions do not match shapes");
}

Channel::Channel(const Channel& o)
    : dom_(o.dom_), cod_(o.cod_), superop_(o.superop_), tp_(o.tp_.load()),
      dagger_(o.dagger_.load()), cp_(o.cp_.load()) {}

Channel::Channel(Channel&& o) noexcept
    : dom_(std::move(o.dom_)), cod_(std::move(o.cod_)), superop_(std::move(o.superop_)),
      tp_(o.tp_.load()), dagger_(o.dagger_.load()), cp_(o.cp_.load()) {}

Channel& Channel::operator=(const Channel& o) {
    if (this != &o) {
        dom_ = o.dom_;
        cod_ = o.cod_;
        superop_ = o.superop_;
        tp_ = o.tp_.load();
        dagger_ = o.dagger_.load();
        cp_ = o.cp_.load();
    }
    return *this;
}

Channel& Channel::operator=(Channel&& o) noexcept {
    dom_ = std::move(o.dom_);
    cod_ = std::move(o.cod_);
    superop_ = std::move(o.superop_);
    tp_ = o.tp_.load();
    dagger_ = o.dagger_.load();
    cp_ = o.cp_.load();
    return *this;
}

AlgElement Channel::apply(const AlgElement& a) const {
    if (a.shape() != dom_) throw ShapeMismatch("Channel::apply: element not in domain");
    return mm::unvectorize(cod_, superop_ * mm::vectorize(a));
}

Channel Channel::compose(const Channel& inner) const {
    if (inner.cod() != dom_) throw ShapeMismatch("Channel::compose: codomain/domain mismatch");
    return {inner.dom(), cod_, superop_ * inner.superop()};
}

Channel Channel::hs_adjoint() const {
    // Block-vectorization is an isometry for the HS inner product, so the
    // adjoint superoperator is the conjugate transpose.
    return {cod_, dom_, superop_.adjoint()};
}

bool Channel::is_tp() const {
    int f = load_flag(tp_);
    if (f >= 0) return f == 1;
    bool ok = true;
    for_each_unit(dom_, [&](Eigen::Index, Eigen::Index i, Eigen::Index j, const AlgElement& u) {
        if (!ok) return;
        Complex t = apply(u).trace();
        Complex expected = (i == j) ? 1.0 : 0.0;
        if (std::abs(t - expected) > tol::herm) ok = false;
    });
    store_flag(tp_, ok);
    return ok;
}

bool Channel::is_dagger_preserving() const {
    int f = load_flag(dagger_);
    if (f >= 0) return f == 1;
    bool ok = true;
    for_each_unit(dom_, [&](Eigen::Index, Eigen::Index, Eigen::Index, const AlgElement& u) {
        if (!ok) return;
        AlgElement lhs = apply(u.adjoint());
        AlgElement rhs = apply(u).adjoint();
        if ((lhs - rhs).max_abs() > tol::herm) ok = false;
    });
    store_flag(dagger_, ok);
    return ok;
}

bool Channel::is_cp() const {
    int f = load_flag(cp_);
    if (f >= 0) return f == 1;
    MatrixC c = choi();
    Eigen::SelfAdjointEigenSolver<MatrixC> s((c + c.adjoint()) / 2.0);
    bool herm_ok = la::is_hermitian(c, tol::psd * 10);
    bool ok = herm_ok && (s.eigenvalues().size() == 0 || s.eigenvalues().minCoeff() >= -tol::psd);
    store_flag(cp_, ok);
    return ok;
}

AlgElement Channel::jamiolkowski() const {
    TensorShape ts(dom_, cod_);
    AlgElement out = AlgElement::zero(ts.flat);
    for_each_unit(dom_, [&](Eigen::Index x, Eigen::Index i, Eigen::Index j, const AlgElement&) {
        // mu*(1) = sum over blocks x and i,j of E_ij^(x) (x) E_ji^(x)
        AlgElement img = apply(AlgElement::embed(dom_, x, la::unit(j, i, dom_.block_dim(x))));
        MatrixC eij = la::unit(i, j, dom_.block_dim(x));
        for (Eigen::Index y = 0; y < cod_.block_count(); ++y)
            out.block(ts.flat_index(x, y)) += la::kron(eij, img.block(y));
    });
    return out;
}

MatrixC Channel::choi() const {
    // Bloc-extend to a map between full matrix algebras (compress, apply,
    // embed block-diagonally), then take the standard Choi matrix.
    const Eigen::Index n = dom_.total_dim();
    const Eigen::Index m = cod_.total_dim();
    MatrixC c = MatrixC::Zero(n * m, n * m);
    std::vector<Eigen::Index> offsets(1, 0);
    for (Eigen::Index x = 0; x < dom_.block_count(); ++x)
        offsets.push_back(offsets.back() + dom_.block_dim(x));
    for (Eigen::Index ii = 0; ii < n; ++ii)
        for (Eigen::Index jj = 0; jj < n; ++jj) {
            // compression keeps only diagonal blocks of the full unit E_II,JJ
            Eigen::Index bx = -1, bi = 0, bj = 0;
            for (Eigen::Index x = 0; x < dom_.block_count(); ++x) {
                Eigen::Index lo = offsets[static_cast<std::size_t>(x)];
                Eigen::Index hi = offsets[static_cast<std::size_t>(x) + 1];
                if (ii >= lo && ii < hi && jj >= lo && jj < hi) {
                    bx = x;
                    bi = ii - lo;
                    bj = jj - lo;
                    break;
                }
            }
            if (bx < 0) continue; // off-diagonal block of the embedding maps to 0
            AlgElement img =
                apply(AlgElement::embed(dom_, bx, la::unit(bi, bj, dom_.block_dim(bx))));
            c.block(ii * m, jj * m, m, m) += mm::bloc(img);
        }
    return c;
}

namespace ch {

Channel from_action(const AlgebraShape& dom, const AlgebraShape& cod,
                    const std::function<AlgElement(const AlgElement&)>& action) {
    MatrixC sop = MatrixC::Zero(cod.vec_dim(), dom.vec_dim());
    Eigen::Index col = 0;
    for (Eigen::Index x = 0; x < dom.block_count(); ++x)
        for (Eigen::Index i = 0; i < dom.block_dim(x); ++i)
            for (Eigen::Index j = 0; j < dom.block_dim(x); ++j) {
                AlgElement u = AlgElement::embed(dom, x, la::unit(i, j, dom.block_dim(x)));
                sop.col(col++) = mm::vectorize(action(u));
            }
    return {dom, cod, std::move(sop)};
}

Channel identity(const AlgebraShape& a) {
    return {a, a, MatrixC::Identity(a.vec_dim(), a.vec_dim())};
}

Channel from_kraus(const AlgebraShape& dom, const AlgebraShape& cod,
                   const std::vector<MatrixC>& kraus_plus,
                   const std::vector<MatrixC>& kraus_minus) {
    if (dom.block_count() != 1 || cod.block_count() != 1)
        throw ShapeMismatch("from_kraus: matrix-algebra domain and codomain required");
    for (const auto& k : kraus_plus)
        if (k.rows() != cod.block_dim(0) || k.cols() != dom.block_dim(0))
            throw ShapeMismatch("from_kraus: Kraus operator has wrong dimensions");
    for (const auto& k : kraus_minus)
        if (k.rows() != cod.block_dim(0) || k.cols() != dom.block_dim(0))
            throw ShapeMismatch("from_kraus: Kraus operator has wrong dimensions");
    return from_action(dom, cod, [&](const AlgElement& a) {
        MatrixC out = MatrixC::Zero(cod.block_dim(0), cod.block_dim(0));
        for (const auto& k : kraus_plus) out += k * a.block(0) * k.adjoint();
        for (const auto& k : kraus_minus) out -= k * a.block(0) * k.adjoint();
        return AlgElement::from_matrix(out);
    });
}

Channel from_unitary(const MatrixC& u) {
    if (u.rows() != u.cols()) throw ShapeMismatch("from_unitary: square matrix required");
    if ((u.adjoint() * u - MatrixC::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-8)
        throw PreconditionViolated("from_unitary: matrix is not unitary");
    return from_kraus(AlgebraShape::matrix(u.rows()), AlgebraShape::matrix(u.rows()), {u});
}

Channel ptrace_channel(Eigen::Index p, Eigen::Index n, la::Factor which) {
    AlgebraShape dom = AlgebraShape::matrix(p * n);
    AlgebraShape cod = AlgebraShape::matrix(which == la::Factor::Left ? n : p);
    return from_action(dom, cod, [p, n, which](const AlgElement& a) {
        return AlgElement::from_matrix(la::partial_trace(a.block(0), p, n, which));
    });
}

Channel povm_channel(const std::vector<MatrixC>& effects) {
    if (effects.empty()) throw InvalidEffects("povm_channel: no effects");
    const Eigen::Index n = effects.front().rows();
    MatrixC sum = MatrixC::Zero(n, n);
    for (const MatrixC& e : effects) {
        if (e.rows() != n || e.cols() != n)
            throw InvalidEffects("povm_channel: effect dimension mismatch");
        if (!la::is_hermitian(e)) throw InvalidEffects("povm_channel: effect not hermitian");
        Eigen::SelfAdjointEigenSolver<MatrixC> s((e + e.adjoint()) / 2.0);
        if (s.eigenvalues().minCoeff() < -tol::psd)
            throw InvalidEffects("povm_channel: effect not positive");
        sum += e;
    }
    if ((sum - MatrixC::Identity(n, n)).cwiseAbs().maxCoeff() > tol::herm)
        throw InvalidEffects("povm_channel: effects do not sum to the identity");
    AlgebraShape cod = AlgebraShape::classical(static_cast<Eigen::Index>(effects.size()));
    return from_action(AlgebraShape::matrix(n), cod, [effects, cod](const AlgElement& a) {
        AlgElement out = AlgElement::zero(cod);
        for (std::size_t y = 0; y < effects.size(); ++y)
            out.block(static_cast<Eigen::Index>(y))(0, 0) = (a.block(0) * effects[y]).trace();
        return out;
    });
}

Channel pvm_channel(const std::vector<MatrixC>& projectors) {
    for (std::size_t a = 0; a < projectors.size(); ++a) {
        const MatrixC& p = projectors[a];
        if (!la::is_hermitian(p) || (p * p - p).cwiseAbs().maxCoeff() > tol::herm)
            throw InvalidEffects("pvm_channel: not a hermitian idempotent");
        for (std::size_t b = a + 1; b < projectors.size(); ++b)
            if ((p * projectors[b]).cwiseAbs().maxCoeff() > tol::herm)
                throw InvalidEffects("pvm_channel: projectors not orthogonal");
    }
    return povm_channel(projectors);
}

Channel preparation_channel(const std::vector<AlgElement>& states) {
    if (states.empty()) throw ShapeMismatch("preparation_channel: no states");
    const AlgebraShape cod = states.front().shape();
    for (const AlgElement& s : states) {
        if (s.shape() != cod) throw ShapeMismatch("preparation_channel: state shape mismatch");
        if (!s.is_state()) throw PreconditionViolated("preparation_channel: not a state");
    }
    AlgebraShape dom = AlgebraShape::classical(static_cast<Eigen::Index>(states.size()));
    return from_action(dom, cod, [states, cod](const AlgElement& a) {
        AlgElement out = AlgElement::zero(cod);
        for (std::size_t x = 0; x < states.size(); ++x)
            out = out + states[x] * a.block(static_cast<Eigen::Index>(x))(0, 0);
        return out;
    });
}

Channel discard_and_prepare(const AlgebraShape& dom, const AlgElement& sigma) {
    if (!sigma.is_state()) throw PreconditionViolated("discard_and_prepare: sigma not a state");
    return from_action(dom, sigma.shape(),
                       [sigma](const AlgElement& a) { return sigma * a.trace(); });
}

Channel classical_channel(const Eigen::MatrixXd& f) {
    const Eigen::Index ny = f.rows(), nx = f.cols();
    for (Eigen::Index x = 0; x < nx; ++x) {
        double col = f.col(x).sum();
        if (std::abs(col - 1.0) > tol::herm || f.col(x).minCoeff() < -tol::herm)
            throw NotStochastic("classical_channel: columns must be subnormalized to 1");
    }
    AlgebraShape dom = AlgebraShape::classical(nx), cod = AlgebraShape::classical(ny);
    return from_action(dom, cod, [f, cod, ny](const AlgElement& a) {
        AlgElement out = AlgElement::zero(cod);
        for (Eigen::Index y = 0; y < ny; ++y) {
            Complex s = 0.0;
            for (Eigen::Index x = 0; x < f.cols(); ++x) s += f(y, x) * a.block(x)(0, 0);
            out.block(y)(0, 0) = s;
        }
        return out;
    });
}

Channel instrument_channel(Eigen::Index m, Eigen::Index n,
                           const std::vector<std::vector<MatrixC>>& kraus_families) {
    MatrixC total = MatrixC::Zero(m, m);
    for (const auto& fam : kraus_families)
        for (const MatrixC& k : fam) {
            if (k.rows() != n || k.cols() != m)
                throw ShapeMismatch("instrument_channel: Kraus dims must be n x m");
            total += k.adjoint() * k;
        }
    if ((total - MatrixC::Identity(m, m)).cwiseAbs().maxCoeff() > tol::herm)
        throw PreconditionViolated("instrument_channel: families do not sum to a TP map");
    AlgebraShape cod(std::vector<Eigen::Index>(kraus_families.size(), n));
    return from_action(AlgebraShape::matrix(m), cod, [kraus_families, cod, n](const AlgElement& a) {
        AlgElement out = AlgElement::zero(cod);
        for (std::size_t y = 0; y < kraus_families.size(); ++y) {
            MatrixC blk = MatrixC::Zero(n, n);
            for (const MatrixC& k : kraus_families[y]) blk += k * a.block(0) * k.adjoint();
            out.block(static_cast<Eigen::Index>(y)) = blk;
        }
        return out;
    });
}

Channel channel_from_jamiolkowski(const AlgElement& j, const AlgebraShape& dom,
                                  const AlgebraShape& cod) {
    TensorShape ts(dom, cod);
    if (j.shape() != ts.flat)
        throw ShapeMismatch("channel_from_jamiolkowski: J does not live over dom (x) cod");
    return from_action(dom, cod, [j, ts](const AlgElement& y) {
        AlgElement lifted = mm::tensor_elem(y, AlgElement::identity(ts.right), ts);
        return mm::ptrace_factor(lifted * j, ts, la::Factor::Left);
    });
}

} // namespace ch
} // namespace chronon
