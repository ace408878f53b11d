#include "cobar/linalg.hpp"

#include "cobar/error.hpp"

namespace cobar {

KMat KMat::identity(std::size_t n, unsigned p) {
    KMat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(p);
    return m;
}

KMat KMat::operator*(const KMat& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("KMat shape mismatch");
    KMat r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

KMat KMat::operator-(const KMat& o) const {
    KMat r(*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

KMat KMat::operator+(const KMat& o) const {
    KMat r(*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

bool KMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

KMat KMat::hcat(const KMat& o) const {
    if (rows_ != o.rows_) throw InvalidArgument("KMat hcat row mismatch");
    KMat r(rows_, cols_ + o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::vector<std::size_t> rref(KMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(KMat m) { return rref(m).size(); }

std::vector<KVec> kernel_basis(const KMat& m) {
    KMat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<KVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        KVec v(m.cols(), Scalar::zero(m.characteristic()));
        v[f] = Scalar::one(m.characteristic());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<KVec> solve(const KMat& m, const KVec& b) {
    if (b.size() != m.rows()) throw InvalidArgument("solve: rhs size mismatch");
    KMat aug(m.rows(), m.cols() + 1, m.characteristic());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    KVec x(m.cols(), Scalar::zero(m.characteristic()));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
    return x;
}

QuotientSpace::QuotientSpace(std::size_t dim, const std::vector<KVec>& spanning, unsigned p)
    : ambient_(dim), p_(p), r_(spanning.size(), dim, p) {
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].size() != dim) throw InvalidArgument("QuotientSpace vector size mismatch");
        for (std::size_t j = 0; j < dim; ++j) r_.at(i, j) = spanning[i][j];
    }
    pivots_ = rref(r_);
    std::vector<bool> is_pivot(dim, false);
    for (auto q : pivots_) is_pivot[q] = true;
    for (std::size_t j = 0; j < dim; ++j)
        if (!is_pivot[j]) free_.push_back(j);
}

KVec QuotientSpace::reduce(const KVec& v) const {
    if (v.size() != ambient_) throw InvalidArgument("QuotientSpace reduce size mismatch");
    KVec w = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Scalar f = w[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - f * r_.at(k, j);
    }
    KVec out;
    out.reserve(free_.size());
    for (auto j : free_) out.push_back(w[j]);
    return out;
}

KVec QuotientSpace::lift(std::size_t i) const {
    KVec v(ambient_, Scalar::zero(p_));
    v[free_.at(i)] = Scalar::one(p_);
    return v;
}

}  // namespace cobar
