#include "cobar/algebra.hpp"

#include <algorithm>

namespace cobar {

AlgebraPtr PresentedAlgebra::create(RingCtxPtr ctx, std::vector<Poly> relations,
                                    uint64_t budget_limit) {
    std::erase_if(relations, [](const Poly& p) { return p.is_zero(); });
    return AlgebraPtr(new PresentedAlgebra(std::move(ctx), std::move(relations), budget_limit));
}

AlgebraPtr PresentedAlgebra::create(unsigned characteristic, std::vector<std::string> vars,
                                    const std::vector<std::string>& relation_exprs,
                                    uint64_t budget_limit) {
    auto ctx = make_ring_ctx(characteristic, std::move(vars));
    std::vector<Poly> rels;
    rels.reserve(relation_exprs.size());
    for (const auto& e : relation_exprs) rels.push_back(parse_poly(ctx, e));
    return create(std::move(ctx), std::move(rels), budget_limit);
}

AlgebraPtr PresentedAlgebra::field(unsigned characteristic, uint64_t budget_limit) {
    return create(characteristic, {}, {}, budget_limit);
}

const std::vector<Poly>& PresentedAlgebra::basis() const {
    std::call_once(basis_once_, [&] {
        Budget budget(budget_limit_);
        basis_ = cobar::groebner_basis(ctx_, relations_, budget);
    });
    return basis_;
}

AlgebraElement PresentedAlgebra::nf(const Poly& p) const {
    Budget budget(budget_limit_);
    return AlgebraElement(shared_from_this(), poly_normal_form(p, basis(), budget));
}

AlgebraElement PresentedAlgebra::zero() const {
    return AlgebraElement(shared_from_this(), Poly(ctx_));
}

AlgebraElement PresentedAlgebra::one() const {
    return AlgebraElement(shared_from_this(),
                          Poly::constant(ctx_, Scalar::one(ctx_->characteristic)));
}

AlgebraElement PresentedAlgebra::var(std::size_t i) const {
    return nf(Poly::variable(ctx_, i));
}

AlgebraElement PresentedAlgebra::scalar(Scalar s) const {
    return AlgebraElement(shared_from_this(), Poly::constant(ctx_, std::move(s)));
}

AlgebraElement PresentedAlgebra::parse(const std::string& expr) const {
    return nf(parse_poly(ctx_, expr));
}

bool AlgebraElement::is_one() const {
    return poly_.is_constant() && !poly_.is_zero() && poly_.terms()[0].coeff.is_one();
}

void AlgebraElement::check_parent(const AlgebraElement& o) const {
    if (parent_.get() != o.parent_.get())
        throw InvalidArgument("algebra elements from different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_parent(o);
    return AlgebraElement(parent_, poly_ + o.poly_);  // sum of normal forms is normal
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_parent(o);
    return AlgebraElement(parent_, poly_ - o.poly_);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_parent(o);
    return parent_->nf(poly_ * o.poly_);
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(parent_, -poly_); }

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    return AlgebraElement(parent_, poly_.scaled(c));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_parent(o);
    return poly_ == o.poly_;
}

// --- Mat --------------------------------------------------------------------

Mat::Mat(AlgebraPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    a_.assign(rows_ * cols_, ring_->zero());
}

Mat Mat::identity(const AlgebraPtr& ring, std::size_t n) {
    Mat m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
}

Mat Mat::from_columns(const AlgebraPtr& ring, std::size_t rows,
                      const std::vector<std::vector<AlgebraElement>>& cols) {
    Mat m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InvalidArgument("column height mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

const AlgebraElement& Mat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    return a_[i * cols_ + j];
}

AlgebraElement& Mat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    return a_[i * cols_ + j];
}

std::vector<AlgebraElement> Mat::column(std::size_t j) const {
    std::vector<AlgebraElement> col;
    col.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col.push_back(at(i, j));
    return col;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch in product");
    Mat r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            AlgebraElement s = ring_->zero();
            for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
    Mat r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] + o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
    Mat r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
    return r;
}

Mat Mat::scaled(const AlgebraElement& c) const {
    Mat r(*this);
    for (auto& x : r.a_) x = x * c;
    return r;
}

Mat Mat::hcat(const Mat& o) const {
    if (rows_ != o.rows_) throw InvalidArgument("hcat row mismatch");
    Mat r(ring_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Mat::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
    }
    return out + "]";
}

// --- AlgebraMap ---------------------------------------------------------------

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target,
                       std::vector<AlgebraElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->nvars())
        throw InvalidArgument("algebra map needs one image per source variable");
    for (const auto& e : images_)
        if (e.parent().get() != target_.get())
            throw InvalidArgument("algebra map image lies in the wrong algebra");
}

AlgebraMap AlgebraMap::identity(const AlgebraPtr& a) {
    std::vector<AlgebraElement> imgs;
    for (std::size_t i = 0; i < a->nvars(); ++i) imgs.push_back(a->var(i));
    return AlgebraMap(a, a, std::move(imgs));
}

AlgebraElement AlgebraMap::apply(const Poly& p) const {
    AlgebraElement acc = target_->zero();
    for (const auto& t : p.terms()) {
        AlgebraElement m = target_->scalar(t.coeff);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            uint32_t e = t.mono[i];
            if (e == 0) continue;
            AlgebraElement base = images_[i];
            AlgebraElement pw = target_->one();
            while (e > 0) {  // square and multiply
                if (e & 1) pw = pw * base;
                e >>= 1;
                if (e) base = base * base;
            }
            m = m * pw;
        }
        acc = acc + m;
    }
    return acc;
}

AlgebraElement AlgebraMap::apply(const AlgebraElement& e) const {
    if (e.parent().get() != source_.get())
        throw InvalidArgument("algebra map applied to element of the wrong algebra");
    return apply(e.poly());
}

Mat AlgebraMap::apply(const Mat& m) const {
    Mat r(target_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = apply(m.at(i, j));
    return r;
}

AlgebraMap AlgebraMap::then(const AlgebraMap& g) const {
    if (g.source_.get() != target_.get())
        throw InvalidArgument("algebra map composition mismatch");
    std::vector<AlgebraElement> imgs;
    imgs.reserve(images_.size());
    for (const auto& e : images_) imgs.push_back(g.apply(e));
    return AlgebraMap(source_, g.target_, std::move(imgs));
}

CheckReport AlgebraMap::check() const {
    CheckReport report;
    const auto& rels = source_->relations();
    for (std::size_t k = 0; k < rels.size(); ++k) {
        AlgebraElement img = apply(rels[k]);
        report.add("relation " + rels[k].str(), img.is_zero(),
                   img.is_zero() ? "" : "maps to " + img.str());
    }
    if (rels.empty()) report.add("no relations", true);
    return report;
}

// --- ring-kernel operations -----------------------------------------------

std::vector<Poly> reduced_groebner_basis(const RingCtxPtr& ctx,
                                         const std::vector<Poly>& relations,
                                         uint64_t budget_limit) {
    Budget budget(budget_limit);
    return groebner_basis(ctx, relations, budget);
}

bool is_groebner_basis(const RingCtxPtr& ctx, const std::vector<Poly>& basis,
                       uint64_t budget_limit) {
    Budget budget(budget_limit);
    // direct S-polynomial oracle, independent of the engine's pair bookkeeping
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Term &ti = basis[i].leading(), &tj = basis[j].leading();
            Monomial m = Monomial::lcm(ti.mono, tj.mono);
            Poly s = basis[i].times_term({ti.mono.quotient_of(m), ti.coeff.inverse()}) -
                     basis[j].times_term({tj.mono.quotient_of(m), tj.coeff.inverse()});
            if (!poly_normal_form(s, basis, budget).is_zero()) return false;
        }
    }
    return true;
}

ModVec column_to_vec(const Mat& m, std::size_t j) {
    ModVec v(m.ring()->ctx(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v.c[i] = m.at(i, j).poly();
    return v;
}

ModVec elements_to_vec(const RingCtxPtr& ctx, const std::vector<AlgebraElement>& col) {
    ModVec v(ctx, col.size());
    for (std::size_t i = 0; i < col.size(); ++i) v.c[i] = col[i].poly();
    return v;
}

std::vector<AlgebraElement> vec_to_elements(const AlgebraPtr& ring, const ModVec& v) {
    std::vector<AlgebraElement> col;
    col.reserve(v.rank());
    for (const auto& p : v.c) col.push_back(ring->nf(p));
    return col;
}

std::vector<ModVec> ideal_columns(const AlgebraPtr& ring, std::size_t rank) {
    std::vector<ModVec> cols;
    for (std::size_t i = 0; i < rank; ++i) {
        for (const auto& g : ring->basis()) {
            ModVec v(ring->ctx(), rank);
            v.c[i] = g;
            cols.push_back(std::move(v));
        }
    }
    return cols;
}

Mat syzygies(const Mat& m) {
    const AlgebraPtr& ring = m.ring();
    Budget budget = ring->make_budget();

    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(column_to_vec(m, j));
    std::size_t n_main = gens.size();
    for (auto& v : ideal_columns(ring, m.rows())) gens.push_back(std::move(v));

    std::vector<ModVec> syz = module_syzygies(ring->ctx(), m.rows(), gens, budget);

    // the first block of each syzygy is a kernel element over the quotient
    std::vector<std::vector<AlgebraElement>> cols;
    for (const auto& s : syz) {
        std::vector<AlgebraElement> col;
        col.reserve(n_main);
        bool nonzero = false;
        for (std::size_t i = 0; i < n_main; ++i) {
            AlgebraElement e = ring->nf(s.c[i]);
            nonzero = nonzero || !e.is_zero();
            col.push_back(std::move(e));
        }
        if (nonzero) cols.push_back(std::move(col));
    }
    return Mat::from_columns(ring, n_main, cols);
}

CheckReport check_algebra_map(const AlgebraMap& f) { return f.check(); }

}  // namespace cobar
