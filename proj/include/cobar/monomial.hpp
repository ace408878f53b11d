#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cobar/error.hpp"

namespace cobar {

// Exponent vector; the variable count is fixed by the ambient ring context.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> e) : e_(std::move(e)) {}

    std::size_t nvars() const { return e_.size(); }
    uint32_t operator[](std::size_t i) const { return e_[i]; }
    uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<uint32_t>& exps() const { return e_; }

    uint64_t degree() const {
        uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // o / *this; caller guarantees divisibility
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<uint32_t> e_;
};

// A monomial well-order compatible with multiplication. `degrevlex` and `lex`
// use a variable ranking (ranking[k] = variable index with priority k).
// `block` compares degrevlex block by block and is used internally for
// elimination (tensor squares and cubes).
struct MonomialOrder {
    enum class Kind { degrevlex, lex, block };

    Kind kind = Kind::degrevlex;
    std::vector<std::size_t> ranking;                 // permutation of 0..n-1
    std::vector<std::vector<std::size_t>> blocks;     // kind == block only

    static MonomialOrder degrevlex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder elimination(std::vector<std::vector<std::size_t>> blocks);

    // three-way compare: negative if a < b, 0 if equal, positive if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && ranking == o.ranking && blocks == o.blocks;
    }
};

// Shared context for polynomial values: base field characteristic, variable
// names and the monomial order. Immutable after construction.
struct RingCtx {
    unsigned characteristic = 0;
    std::vector<std::string> var_names;
    MonomialOrder order;

    std::size_t nvars() const { return var_names.size(); }
    long var_index(const std::string& name) const;  // -1 if absent
};

using RingCtxPtr = std::shared_ptr<const RingCtx>;

RingCtxPtr make_ring_ctx(unsigned characteristic, std::vector<std::string> vars,
                         MonomialOrder order);
RingCtxPtr make_ring_ctx(unsigned characteristic, std::vector<std::string> vars);

}  // namespace cobar
