#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobar/groebner.hpp"
#include "cobar/report.hpp"

namespace cobar {

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

class AlgebraElement;

// A commutative algebra over Q or F_p presented by generators and relations.
// The reduced Groebner basis of the relation ideal is computed on first use
// and published write-once; all values are immutable afterwards.
class PresentedAlgebra : public std::enable_shared_from_this<PresentedAlgebra> {
  public:
    static constexpr uint64_t default_budget = 20'000'000;

    static AlgebraPtr create(RingCtxPtr ctx, std::vector<Poly> relations,
                             uint64_t budget_limit = default_budget);
    static AlgebraPtr create(unsigned characteristic, std::vector<std::string> vars,
                             const std::vector<std::string>& relation_exprs,
                             uint64_t budget_limit = default_budget);
    // the base field itself, as the algebra with no variables
    static AlgebraPtr field(unsigned characteristic,
                            uint64_t budget_limit = default_budget);

    const RingCtxPtr& ctx() const { return ctx_; }
    unsigned characteristic() const { return ctx_->characteristic; }
    std::size_t nvars() const { return ctx_->nvars(); }
    const std::vector<Poly>& relations() const { return relations_; }
    uint64_t budget_limit() const { return budget_limit_; }
    Budget make_budget() const { return Budget(budget_limit_); }

    // reduced Groebner basis of the relation ideal (cached)
    const std::vector<Poly>& basis() const;

    bool is_field() const { return ctx_->nvars() == 0; }

    AlgebraElement nf(const Poly& p) const;
    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement var(std::size_t i) const;
    AlgebraElement scalar(Scalar s) const;
    AlgebraElement parse(const std::string& expr) const;

  private:
    PresentedAlgebra(RingCtxPtr ctx, std::vector<Poly> rels, uint64_t budget_limit)
        : ctx_(std::move(ctx)), relations_(std::move(rels)), budget_limit_(budget_limit) {}

    RingCtxPtr ctx_;
    std::vector<Poly> relations_;
    uint64_t budget_limit_;
    mutable std::once_flag basis_once_;
    mutable std::vector<Poly> basis_;
};

// A normal-form representative of a residue class in a PresentedAlgebra.
// Two elements are equal iff their stored polynomials are identical.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr parent, Poly nf_poly)
        : parent_(std::move(parent)), poly_(std::move(nf_poly)) {}

    const AlgebraPtr& parent() const { return parent_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_one() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& c) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const { return poly_.str(); }

  private:
    void check_parent(const AlgebraElement& o) const;

    AlgebraPtr parent_;
    Poly poly_;
};

// Dense matrix over a PresentedAlgebra, row-major. Zero rows/columns are
// legal (presentations of the zero module need them).
class Mat {
  public:
    Mat() = default;
    Mat(AlgebraPtr ring, std::size_t rows, std::size_t cols);

    static Mat identity(const AlgebraPtr& ring, std::size_t n);
    static Mat from_columns(const AlgebraPtr& ring, std::size_t rows,
                            const std::vector<std::vector<AlgebraElement>>& cols);

    const AlgebraPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const AlgebraElement& at(std::size_t i, std::size_t j) const;
    AlgebraElement& at(std::size_t i, std::size_t j);

    std::vector<AlgebraElement> column(std::size_t j) const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const AlgebraElement& c) const;
    Mat hcat(const Mat& o) const;  // [this | o]

    bool operator==(const Mat& o) const;
    bool is_zero() const;

    std::string str() const;

  private:
    AlgebraPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<AlgebraElement> a_;
};

// Algebra morphism determined by generator images; well-definedness means
// every source relation maps to zero in the target.
class AlgebraMap {
  public:
    AlgebraMap() = default;
    AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<AlgebraElement> images);

    static AlgebraMap identity(const AlgebraPtr& a);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<AlgebraElement>& images() const { return images_; }

    AlgebraElement apply(const Poly& p) const;
    AlgebraElement apply(const AlgebraElement& e) const;
    Mat apply(const Mat& m) const;  // entrywise

    AlgebraMap then(const AlgebraMap& g) const;  // g o this

    CheckReport check() const;

  private:
    AlgebraPtr source_, target_;
    std::vector<AlgebraElement> images_;
};

// --- ring-kernel operations ------------------------------------------------

// Reduced Groebner basis of the ideal generated by `relations`.
std::vector<Poly> reduced_groebner_basis(const RingCtxPtr& ctx,
                                         const std::vector<Poly>& relations,
                                         uint64_t budget_limit = PresentedAlgebra::default_budget);

// All S-polynomials of `basis` reduce to zero (the Groebner property oracle).
bool is_groebner_basis(const RingCtxPtr& ctx, const std::vector<Poly>& basis,
                       uint64_t budget_limit = PresentedAlgebra::default_budget);

// Generators of { x in A^cols : M x = 0 } over the quotient algebra; columns
// of the result are the generators and M * result reduces to zero exactly.
Mat syzygies(const Mat& m);

CheckReport check_algebra_map(const AlgebraMap& f);

// Conversions between matrix columns and free-module vectors over the
// underlying polynomial ring.
ModVec column_to_vec(const Mat& m, std::size_t j);
ModVec elements_to_vec(const RingCtxPtr& ctx, const std::vector<AlgebraElement>& col);
std::vector<AlgebraElement> vec_to_elements(const AlgebraPtr& ring, const ModVec& v);

// Columns g * e_i for every ideal basis element g; appended to module
// generator lists so that module computations happen over the quotient.
std::vector<ModVec> ideal_columns(const AlgebraPtr& ring, std::size_t rank);

}  // namespace cobar
