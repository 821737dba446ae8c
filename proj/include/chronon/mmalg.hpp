#ifndef CHRONON_MMALG_HPP
#define CHRONON_MMALG_HPP

#include <string>
#include <vector>

#include "chronon/linalg.hpp"

namespace chronon {

/// A multi-matrix algebra: a direct sum of matrix algebras, given by the
/// ordered list of block dimensions.
class AlgebraShape {
public:
    AlgebraShape() = default;
    explicit AlgebraShape(std::vector<Eigen::Index> blocks,
                          std::vector<std::string> labels = {});

    /// The algebra of d x d matrices.
    static AlgebraShape matrix(Eigen::Index d) { return AlgebraShape({d}); }
    /// The commutative algebra of functions on a set of `n` points.
    static AlgebraShape classical(Eigen::Index n) {
        return AlgebraShape(std::vector<Eigen::Index>(static_cast<std::size_t>(n), 1));
    }

    Eigen::Index block_count() const { return static_cast<Eigen::Index>(blocks_.size()); }
    Eigen::Index block_dim(Eigen::Index x) const { return blocks_[static_cast<std::size_t>(x)]; }
    const std::vector<Eigen::Index>& blocks() const { return blocks_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sum of block dimensions.
    Eigen::Index total_dim() const { return total_dim_; }
    /// Dimension of the algebra as a vector space: sum of squared block dims.
    Eigen::Index vec_dim() const { return vec_dim_; }

    bool is_classical() const;
    bool operator==(const AlgebraShape& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const AlgebraShape& o) const { return !(*this == o); }

private:
    std::vector<Eigen::Index> blocks_;
    std::vector<std::string> labels_;
    Eigen::Index total_dim_ = 0;
    Eigen::Index vec_dim_ = 0;
};

/// Tensor product of two multi-matrix algebras. Blocks of the flattened
/// algebra are indexed by pairs (x, y) in lexicographic order (x outer).
struct TensorShape {
    AlgebraShape left;
    AlgebraShape right;

    TensorShape(AlgebraShape l, AlgebraShape r);

    AlgebraShape flat;

    Eigen::Index flat_index(Eigen::Index x, Eigen::Index y) const {
        return x * right.block_count() + y;
    }
};

/// An element of a multi-matrix algebra: one dense matrix per block.
class AlgElement {
public:
    AlgElement() = default;
    AlgElement(AlgebraShape shape, std::vector<MatrixC> blocks);

    /// Zero element.
    static AlgElement zero(const AlgebraShape& shape);
    /// Unit element (identity in every block).
    static AlgElement identity(const AlgebraShape& shape);
    /// Element supported on a single block.
    static AlgElement embed(const AlgebraShape& shape, Eigen::Index x, const MatrixC& m);
    /// Dirac delta on a classical algebra.
    static AlgElement delta(const AlgebraShape& shape, Eigen::Index x);
    /// Single-block element over the matrix algebra of its dimension.
    static AlgElement from_matrix(const MatrixC& m);

    const AlgebraShape& shape() const { return shape_; }
    const MatrixC& block(Eigen::Index x) const { return blocks_[static_cast<std::size_t>(x)]; }
    MatrixC& block(Eigen::Index x) { return blocks_[static_cast<std::size_t>(x)]; }
    Eigen::Index block_count() const { return shape_.block_count(); }

    Complex trace() const;
    AlgElement adjoint() const;
    bool is_hermitian(double eps = tol::herm) const;
    bool is_quasi_state(double eps = tol::herm) const;
    bool is_state(double eps = tol::psd) const;

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const; // component-wise matrix product
    AlgElement operator*(Complex s) const;

    double max_abs() const;
    double frobenius_distance(const AlgElement& o) const;

private:
    AlgebraShape shape_;
    std::vector<MatrixC> blocks_;
};

namespace mm {

/// Block-diagonal representation in the total matrix algebra.
MatrixC bloc(const AlgElement& a);

/// Multispectrum (union of the block multispectra, ascending) for hermitian elements.
std::vector<double> mspec(const AlgElement& a);

/// Tensor product of elements: block (x, y) = kron(a_x, b_y).
AlgElement tensor_elem(const AlgElement& a, const AlgElement& b, const TensorShape& ts);
AlgElement tensor_elem(const AlgElement& a, const AlgElement& b);

/// Marginal of an element over a tensor shape. Tracing the Left factor
/// yields an element of `right`, and conversely.
AlgElement ptrace_factor(const AlgElement& a, const TensorShape& ts, la::Factor which);

/// Hilbert-Schmidt adjoint of the multiplication map applied to rho in M_n:
/// mu*(rho) = sum_ij (rho E_ij) (x) E_ji, an element of M_n (x) M_n.
MatrixC mult_adjoint(const MatrixC& rho);

/// The swap *-isomorphism gamma: A (x) B -> B (x) A.
AlgElement swap_gamma(const AlgElement& a, const TensorShape& ts);

/// Block-vectorization (row-major per block, blocks concatenated).
VectorC vectorize(const AlgElement& a);
AlgElement unvectorize(const AlgebraShape& shape, const VectorC& v);

} // namespace mm
} // namespace chronon

#endif
