#pragma once

#include "cobar/fpmodule.hpp"

namespace cobar {

// Materialized tensor power A1 (x)_{A0} ... (x)_{A0} A1: one copy of A1's
// variables per slot (named v~1, v~2, ...), both relation sets, and the
// identifications slot_i(etaR(a)) = slot_{i+1}(etaL(a)). The monomial order
// eliminates the etaL-image copies in slots >= 2, so normal forms carry all
// base coefficients in slot 1.
struct TensorPower {
    AlgebraPtr algebra;
    std::vector<AlgebraMap> slot;                      // A1 -> algebra
    std::vector<std::vector<std::size_t>> slot_vars;   // [s][a1 var] -> tensor var
};

TensorPower tensor_power(const AlgebraPtr& a0, const AlgebraPtr& a1,
                         const AlgebraMap& eta_l, const AlgebraMap& eta_r,
                         std::size_t n);

enum class Flatness { free_finite, projective_certified, user_declared };

// Sum-of-tensors expression Σ p_i ⊗ q_i with both factors in A1.
using TensorExpr = std::vector<std::pair<Poly, Poly>>;

class HopfAlgebroid;
using HopfPtr = std::shared_ptr<const HopfAlgebroid>;

struct HopfData {
    std::string name;
    AlgebraPtr a0, a1;
    AlgebraMap eta_l, eta_r;              // A0 -> A1
    AlgebraMap counit;                    // A1 -> A0
    AlgebraMap antipode;                  // A1 -> A1
    std::vector<TensorExpr> comult;       // image of each A1 variable
    Flatness flatness = Flatness::user_declared;
    std::vector<Poly> basis;              // free-finite: monomials in A1's fiber vars
};

// The groupoid datum (A0, A1, etaL, etaR, eps, Delta, c) with a declared
// flatness level. For free-finite declarations the basis gives A1 as a free
// left A0-module via etaL, and elements decompose uniquely over it.
class HopfAlgebroid : public std::enable_shared_from_this<HopfAlgebroid> {
  public:
    static HopfPtr create(HopfData data);

    const std::string& name() const { return name_; }
    const AlgebraPtr& a0() const { return a0_; }
    const AlgebraPtr& a1() const { return a1_; }
    const AlgebraMap& eta_l() const { return eta_l_; }
    const AlgebraMap& eta_r() const { return eta_r_; }
    const AlgebraMap& counit() const { return counit_; }
    const AlgebraMap& antipode() const { return antipode_; }
    const TensorPower& t2() const { return t2_; }
    const AlgebraMap& comult() const { return comult_; }
    const std::vector<TensorExpr>& comult_data() const { return comult_data_; }
    Flatness flatness() const { return flatness_; }

    bool is_free_finite() const { return flatness_ == Flatness::free_finite; }
    void require_free_finite(const std::string& op) const;

    // free-finite data
    std::size_t rank() const { return basis_.size(); }
    AlgebraElement basis_elem(std::size_t i) const;
    const std::vector<Monomial>& basis_monomials() const { return basis_; }

    // z = Σ etaL(out[i]) * basis[i]; raises IntegrityError when the declared
    // basis cannot carry z (a false freeness declaration)
    std::vector<AlgebraElement> decompose(const AlgebraElement& z) const;
    // z = Σ slot1(out[l]) * slot2(basis[l]) inside the tensor square
    std::vector<AlgebraElement> decompose_t2(const AlgebraElement& z) const;

    // Σ etaL(parts[i]) * basis[i]
    AlgebraElement compose(const std::vector<AlgebraElement>& parts) const;

  private:
    HopfAlgebroid() = default;

    std::string name_;
    AlgebraPtr a0_, a1_;
    AlgebraMap eta_l_, eta_r_, counit_, antipode_;
    TensorPower t2_;
    AlgebraMap comult_;
    std::vector<TensorExpr> comult_data_;
    Flatness flatness_ = Flatness::user_declared;
    std::vector<Monomial> basis_;             // over a1's variables
    std::vector<long> base_image_;            // a1 var -> a0 var (or -1: fiber)
};

// Axiom report: unit counits, comultiplication counit laws, coassociativity,
// antipode unit swap, antipode involution (optional), antipode composition
// laws, and well-definedness of every structure map.
CheckReport check_hopf_algebroid(const HopfPtr& h);

// (A, H (x) A) for a Hopf algebra H over the base field acting on A through
// `coaction` (images of A's variables in H (x) A, as tensor expressions over
// (H vars, A vars)). The coaction counit law is validated per generator.
HopfPtr split_algebroid(const std::string& name, const AlgebraPtr& a,
                        const HopfPtr& hopf_algebra,
                        const std::vector<TensorExpr>& coaction);

// Built-in fixtures:
//   F1: (F_2, F_2^{Z/2}) — functions on Z/2 over F_2
//   F2: (Q, Q[t, t^-1]) — the multiplicative group
//   F3: (Q[x], H (x) Q[x]) with H = Q[g]/(g^2-1) acting by x -> g (x) x
HopfPtr fixture_algebroid(const std::string& id,
                          uint64_t budget = PresentedAlgebra::default_budget);
std::vector<std::pair<std::string, std::string>> fixture_descriptions();

}  // namespace cobar
