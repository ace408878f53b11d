#pragma once

#include <optional>
#include <vector>

#include "cobar/scalar.hpp"

namespace cobar {

// Dense exact matrix over the base field, for the finite-dimensional
// computations (graded backend, Ext dimensions, fixed-point spaces).
class KMat {
  public:
    KMat() = default;
    KMat(std::size_t rows, std::size_t cols, unsigned p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, Scalar::zero(p)) {}

    static KMat identity(std::size_t n, unsigned p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned characteristic() const { return p_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    KMat operator*(const KMat& o) const;
    KMat operator-(const KMat& o) const;
    KMat operator+(const KMat& o) const;
    bool operator==(const KMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    KMat hcat(const KMat& o) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    unsigned p_ = 0;
    std::vector<Scalar> a_;
};

using KVec = std::vector<Scalar>;

// Row-reduce in place; returns pivot column indices.
std::vector<std::size_t> rref(KMat& m);

std::size_t rank(KMat m);

// Basis of { x : M x = 0 } as column vectors.
std::vector<KVec> kernel_basis(const KMat& m);

// One solution of M x = b, if any.
std::optional<KVec> solve(const KMat& m, const KVec& b);

// Quotient of k^dim by the span of the given columns: a chosen basis of
// complementary coordinates plus reduction of vectors to quotient coordinates.
class QuotientSpace {
  public:
    QuotientSpace(std::size_t dim, const std::vector<KVec>& spanning, unsigned p);

    std::size_t dim() const { return free_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    // coordinates of [v] in the quotient basis
    KVec reduce(const KVec& v) const;
    // an ambient representative of the i-th quotient basis vector
    KVec lift(std::size_t i) const;

  private:
    std::size_t ambient_;
    unsigned p_;
    KMat r_;                           // rref of the spanning matrix
    std::vector<std::size_t> pivots_;  // pivot rows of r_ (column-echelon view)
    std::vector<std::size_t> free_;    // non-pivot coordinates = quotient basis
};

}  // namespace cobar
