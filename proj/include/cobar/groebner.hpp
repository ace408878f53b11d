#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cobar/poly.hpp"

namespace cobar {

// Step budget shared by a single computation. Exhaustion raises
// ResourceLimitError; results are never silently truncated.
struct Budget {
    uint64_t remaining;

    explicit Budget(uint64_t limit) : remaining(limit) {}
    void step(uint64_t n = 1) {
        if (n > remaining) throw ResourceLimitError("computation budget exceeded");
        remaining -= n;
    }
};

// Element of a free module R^rank over the polynomial ring, stored as one
// polynomial per component. Compared position-over-term: component 0 is the
// highest priority, ties broken by the ring's monomial order.
struct ModVec {
    std::vector<Poly> c;

    ModVec() = default;
    ModVec(RingCtxPtr ctx, std::size_t rank) : c(rank, Poly(ctx)) {}

    std::size_t rank() const { return c.size(); }
    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    // component of the leading term; rank() if zero
    std::size_t lead_comp() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return i;
        return c.size();
    }

    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec times_term(const Term& t) const;
    ModVec scaled(const Scalar& s) const;
    bool operator==(const ModVec& o) const { return c == o.c; }
};

// Groebner basis of a submodule of R^rank together with expressions of each
// basis element in the original generators, plus a generating set for the
// syzygies of those generators (collected from S-pairs reducing to zero).
class TrackedGB {
  public:
    TrackedGB(RingCtxPtr ctx, std::size_t rank, std::vector<ModVec> inputs,
              Budget& budget);

    const RingCtxPtr& ctx() const { return ctx_; }
    std::size_t rank() const { return rank_; }

    // raw syzygies of the inputs, in collection order
    const std::vector<ModVec>& syzygies() const { return syzygies_; }

    // full normal form of v modulo the computed basis
    ModVec normal_form(const ModVec& v, Budget& budget) const;
    bool contains(const ModVec& v, Budget& budget) const;

    // expression of v as a combination of the inputs, if v lies in their span
    std::optional<ModVec> lift(const ModVec& v, Budget& budget) const;

    // untracked copy of the basis (not inter-reduced)
    std::vector<ModVec> basis() const;

  private:
    struct Elem {
        ModVec v;  // main part in R^rank
        ModVec t;  // expression in the inputs, rank = inputs.size()
    };

    // reduce w fully; t (if non-null) accumulates the applied combination
    ModVec reduce(ModVec w, ModVec* t, Budget& budget) const;

    RingCtxPtr ctx_;
    std::size_t rank_ = 0;
    std::size_t n_inputs_ = 0;
    std::vector<Elem> basis_;
    std::vector<ModVec> syzygies_;
};

// Reduced (canonical) module Groebner basis: minimal, tail-reduced, monic,
// sorted by leading position. Deterministic for fixed input and order.
std::vector<ModVec> reduced_module_basis(RingCtxPtr ctx, std::size_t rank,
                                         const std::vector<ModVec>& gens,
                                         Budget& budget);

// Full normal form of v against a (preferably reduced) module basis.
ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis,
                          Budget& budget);

// Canonical generators of { x : sum x_i * gens_i = 0 } in R^gens.size().
std::vector<ModVec> module_syzygies(RingCtxPtr ctx, std::size_t rank,
                                    const std::vector<ModVec>& gens, Budget& budget);

// Polynomial (rank-1) conveniences.
std::vector<Poly> groebner_basis(RingCtxPtr ctx, const std::vector<Poly>& gens,
                                 Budget& budget);
Poly poly_normal_form(const Poly& f, const std::vector<Poly>& basis, Budget& budget);

}  // namespace cobar
