#include "chronon/mmalg.hpp"

#include <algorithm>
#include <numeric>

namespace chronon {

AlgebraShape::AlgebraShape(std::vector<Eigen::Index> blocks, std::vector<std::string> labels)
    : blocks_(std::move(blocks)), labels_(std::move(labels)) {
    if (blocks_.empty())
        throw ShapeMismatch("AlgebraShape: at least one block required");
    for (Eigen::Index d : blocks_) {
        if (d < 1) throw ShapeMismatch("AlgebraShape: block dims must be >= 1");
        total_dim_ += d;
        vec_dim_ += d * d;
    }
}

bool AlgebraShape::is_classical() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Eigen::Index d) { return d == 1; });
}

TensorShape::TensorShape(AlgebraShape l, AlgebraShape r)
    : left(std::move(l)), right(std::move(r)) {
    std::vector<Eigen::Index> dims;
    dims.reserve(static_cast<std::size_t>(left.block_count() * right.block_count()));
    for (Eigen::Index x = 0; x < left.block_count(); ++x)
        for (Eigen::Index y = 0; y < right.block_count(); ++y)
            dims.push_back(left.block_dim(x) * right.block_dim(y));
    flat = AlgebraShape(std::move(dims));
}

AlgElement::AlgElement(AlgebraShape shape, std::vector<MatrixC> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (static_cast<Eigen::Index>(blocks_.size()) != shape_.block_count())
        throw ShapeMismatch("AlgElement: block count does not match shape");
    for (Eigen::Index x = 0; x < shape_.block_count(); ++x) {
        const MatrixC& b = blocks_[static_cast<std::size_t>(x)];
        if (b.rows() != shape_.block_dim(x) || b.cols() != shape_.block_dim(x))
            throw ShapeMismatch("AlgElement: block dimension mismatch");
    }
}

AlgElement AlgElement::zero(const AlgebraShape& shape) {
    std::vector<MatrixC> blocks;
    for (Eigen::Index x = 0; x < shape.block_count(); ++x)
        blocks.push_back(MatrixC::Zero(shape.block_dim(x), shape.block_dim(x)));
    return {shape, std::move(blocks)};
}

AlgElement AlgElement::identity(const AlgebraShape& shape) {
    std::vector<MatrixC> blocks;
    for (Eigen::Index x = 0; x < shape.block_count(); ++x)
        blocks.push_back(MatrixC::Identity(shape.block_dim(x), shape.block_dim(x)));
    return {shape, std::move(blocks)};
}

AlgElement AlgElement::embed(const AlgebraShape& shape, Eigen::Index x, const MatrixC& m) {
    AlgElement out = zero(shape);
    if (m.rows() != shape.block_dim(x) || m.cols() != shape.block_dim(x))
        throw ShapeMismatch("AlgElement::embed: matrix does not fit block");
    out.block(x) = m;
    return out;
}

AlgElement AlgElement::delta(const AlgebraShape& shape, Eigen::Index x) {
    return embed(shape, x, MatrixC::Identity(shape.block_dim(x), shape.block_dim(x)));
}

AlgElement AlgElement::from_matrix(const MatrixC& m) {
    return {AlgebraShape::matrix(m.rows()), {m}};
}

Complex AlgElement::trace() const {
    Complex t = 0.0;
    for (const MatrixC& b : blocks_) t += b.trace();
    return t;
}

AlgElement AlgElement::adjoint() const {
    std::vector<MatrixC> blocks;
    blocks.reserve(blocks_.size());
    for (const MatrixC& b : blocks_) blocks.push_back(b.adjoint());
    return {shape_, std::move(blocks)};
}

bool AlgElement::is_hermitian(double eps) const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [eps](const MatrixC& b) { return la::is_hermitian(b, eps); });
}

bool AlgElement::is_quasi_state(double eps) const {
    return is_hermitian(eps) && std::abs(trace() - 1.0) <= eps;
}

bool AlgElement::is_state(double eps) const {
    if (!is_hermitian(eps) || std::abs(trace() - 1.0) > eps) return false;
    for (const MatrixC& b : blocks_) {
        Eigen::SelfAdjointEigenSolver<MatrixC> s((b + b.adjoint()) / 2.0);
        if (s.eigenvalues().size() > 0 && s.eigenvalues().minCoeff() < -eps) return false;
    }
    return true;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("AlgElement: shape mismatch in +");
    std::vector<MatrixC> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("AlgElement: shape mismatch in -");
    std::vector<MatrixC> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] - o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("AlgElement: shape mismatch in *");
    std::vector<MatrixC> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] * o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

AlgElement AlgElement::operator*(Complex s) const {
    std::vector<MatrixC> blocks;
    for (const MatrixC& b : blocks_) blocks.push_back(s * b);
    return {shape_, std::move(blocks)};
}

double AlgElement::max_abs() const {
    double m = 0.0;
    for (const MatrixC& b : blocks_)
        if (b.size() > 0) m = std::max(m, b.cwiseAbs().maxCoeff());
    return m;
}

double AlgElement::frobenius_distance(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("AlgElement: shape mismatch in distance");
    double s = 0.0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        s += (blocks_[i] - o.blocks_[i]).squaredNorm();
    return std::sqrt(s);
}

namespace mm {

MatrixC bloc(const AlgElement& a) {
    const AlgebraShape& sh = a.shape();
    MatrixC out = MatrixC::Zero(sh.total_dim(), sh.total_dim());
    Eigen::Index off = 0;
    for (Eigen::Index x = 0; x < sh.block_count(); ++x) {
        Eigen::Index d = sh.block_dim(x);
        out.block(off, off, d, d) = a.block(x);
        off += d;
    }
    return out;
}

std::vector<double> mspec(const AlgElement& a) {
    std::vector<double> out;
    for (Eigen::Index x = 0; x < a.block_count(); ++x) {
        std::vector<double> b = la::mspec(a.block(x));
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlgElement tensor_elem(const AlgElement& a, const AlgElement& b, const TensorShape& ts) {
    if (a.shape() != ts.left || b.shape() != ts.right)
        throw ShapeMismatch("tensor_elem: factors do not match tensor shape");
    std::vector<MatrixC> blocks;
    for (Eigen::Index x = 0; x < ts.left.block_count(); ++x)
        for (Eigen::Index y = 0; y < ts.right.block_count(); ++y)
            blocks.push_back(la::kron(a.block(x), b.block(y)));
    return {ts.flat, std::move(blocks)};
}

AlgElement tensor_elem(const AlgElement& a, const AlgElement& b) {
    return tensor_elem(a, b, TensorShape(a.shape(), b.shape()));
}

AlgElement ptrace_factor(const AlgElement& a, const TensorShape& ts, la::Factor which) {
    if (a.shape() != ts.flat)
        throw ShapeMismatch("ptrace_factor: element does not live over this tensor shape");
    const AlgebraShape& keep = (which == la::Factor::Left) ? ts.right : ts.left;
    AlgElement out = AlgElement::zero(keep);
    for (Eigen::Index x = 0; x < ts.left.block_count(); ++x)
        for (Eigen::Index y = 0; y < ts.right.block_count(); ++y) {
            const MatrixC& blk = a.block(ts.flat_index(x, y));
            MatrixC m = la::partial_trace(blk, ts.left.block_dim(x), ts.right.block_dim(y), which);
            out.block(which == la::Factor::Left ? y : x) += m;
        }
    return out;
}

MatrixC mult_adjoint(const MatrixC& rho) {
    if (rho.rows() != rho.cols()) throw ShapeMismatch("mult_adjoint: square matrix required");
    const Eigen::Index n = rho.rows();
    MatrixC out = MatrixC::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out += la::kron(rho * la::unit(i, j, n), la::unit(j, i, n));
    return out;
}

AlgElement swap_gamma(const AlgElement& a, const TensorShape& ts) {
    if (a.shape() != ts.flat)
        throw ShapeMismatch("swap_gamma: element does not live over this tensor shape");
    TensorShape flipped(ts.right, ts.left);
    AlgElement out = AlgElement::zero(flipped.flat);
    for (Eigen::Index x = 0; x < ts.left.block_count(); ++x) {
        Eigen::Index dx = ts.left.block_dim(x);
        for (Eigen::Index y = 0; y < ts.right.block_count(); ++y) {
            Eigen::Index dy = ts.right.block_dim(y);
            const MatrixC& src = a.block(ts.flat_index(x, y));
            MatrixC& dst = out.block(flipped.flat_index(y, x));
            for (Eigen::Index i = 0; i < dx; ++i)
                for (Eigen::Index k = 0; k < dy; ++k)
                    for (Eigen::Index j = 0; j < dx; ++j)
                        for (Eigen::Index l = 0; l < dy; ++l)
                            dst(k * dx + i, l * dx + j) = src(i * dy + k, j * dy + l);
        }
    }
    return out;
}

VectorC vectorize(const AlgElement& a) {
    VectorC v(a.shape().vec_dim());
    Eigen::Index off = 0;
    for (Eigen::Index x = 0; x < a.block_count(); ++x) {
        const MatrixC& b = a.block(x);
        for (Eigen::Index i = 0; i < b.rows(); ++i)
            for (Eigen::Index j = 0; j < b.cols(); ++j) v(off++) = b(i, j);
    }
    return v;
}

AlgElement unvectorize(const AlgebraShape& shape, const VectorC& v) {
    if (v.size() != shape.vec_dim())
        throw ShapeMismatch("unvectorize: vector length does not match shape");
    AlgElement out = AlgElement::zero(shape);
    Eigen::Index off = 0;
    for (Eigen::Index x = 0; x < shape.block_count(); ++x) {
        Eigen::Index d = shape.block_dim(x);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) out.block(x)(i, j) = v(off++);
    }
    return out;
}

} // namespace mm
} // namespace chronon
