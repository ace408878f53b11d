#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobar/monomial.hpp"
#include "cobar/scalar.hpp"

namespace cobar {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Sparse multivariate polynomial over a RingCtx. Terms are kept sorted in
// strictly descending monomial order with nonzero coefficients, so equal
// polynomials have identical representations.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(RingCtxPtr ctx, std::vector<Term> terms);

    static Poly zero(RingCtxPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(RingCtxPtr ctx, Scalar c);
    static Poly variable(RingCtxPtr ctx, std::size_t i, uint32_t exp = 1);
    static Poly monomial(RingCtxPtr ctx, Monomial m, Scalar c);

    const RingCtxPtr& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    const Term& leading() const;  // throws on zero
    uint64_t degree() const { return terms_.empty() ? 0 : max_degree(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    Poly times_term(const Term& t) const;

    bool operator==(const Poly& o) const { return equal_terms(o); }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    uint64_t max_degree() const;
    bool equal_terms(const Poly& o) const;
    void canonicalize();  // sort descending, combine, drop zeros

    RingCtxPtr ctx_;
    std::vector<Term> terms_;
};

// Parse a polynomial expression over ctx: identifiers must be ctx variables;
// supports + - * ^ ( ) and integer or a/b rational literals.
Poly parse_poly(const RingCtxPtr& ctx, const std::string& text);

}  // namespace cobar
