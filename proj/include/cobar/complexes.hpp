#pragma once

#include <map>

#include "cobar/monoidal.hpp"

namespace cobar {

// Bounded cochain complex of comodules: finitely many terms, differentials of
// degree +1 with d o d = 0 (checked at construction).
class Complex {
  public:
    Complex(HopfPtr algebroid, std::map<int, ComodulePtr> terms,
            std::map<int, ComoduleMap> diffs);

    static Complex single(const ComodulePtr& m, int degree);
    static Complex zero(const HopfPtr& h);

    const HopfPtr& algebroid() const { return algebroid_; }
    const std::map<int, ComodulePtr>& terms() const { return terms_; }

    ComodulePtr term(int n) const;   // the zero comodule when absent
    ComoduleMap diff(int n) const;   // the zero map when absent
    bool has_term(int n) const { return terms_.count(n) != 0; }
    int min_degree() const;
    int max_degree() const;
    bool is_zero() const { return terms_.empty(); }

    Complex shifted(int k) const;  // C[k]^n = C^{n+k}, differential (-1)^k d

  private:
    HopfPtr algebroid_;
    std::map<int, ComodulePtr> terms_;
    std::map<int, ComoduleMap> diffs_;
};

// Degreewise comodule maps commuting with the differentials (checked).
struct ChainMap {
    Complex source, target;
    std::map<int, ComoduleMap> components;

    ChainMap(Complex src, Complex tgt, std::map<int, ComoduleMap> comps);
    static ChainMap identity(const Complex& c);
    static ChainMap zero(const Complex& src, const Complex& tgt);

    ComoduleMap component(int n) const;
};

ComodulePtr homology(const Complex& c, int n);
// homology vanishes for min_degree <= n <= max_degree
bool is_exact(const Complex& c);

Complex cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

// Total complex of the comodule tensor, Koszul sign (-1)^r on the second leg.
// Terms must be projective-underlying unless allow_underived is set.
Complex tensor_complexes(const Complex& c, const Complex& d, bool allow_underived = false);

// The symmetry chain map C (x) D -> D (x) C with block signs (-1)^{rs}.
ChainMap symmetry_chain_map(const Complex& c, const Complex& d,
                            bool allow_underived = false);

// Hom complex: Hom^n = prod_{s-r=n} chom(C^r, D^s), d(f) = d_D f - (-1)^n f d_C.
Complex hom_complexes(const Complex& c, const Complex& d);

// The monadic resolution M -> T M -> T^2 M -> ... for T = extend o forget,
// with cofaces T^i(psi) summed with alternating signs.
struct CobarData {
    ComodulePtr source;
    int depth;                          // s_max
    std::vector<ComodulePtr> terms;     // terms[s] = T^{s+1} M, 0 <= s <= depth
    std::vector<ComoduleMap> diffs;     // diffs[s] : terms[s] -> terms[s+1]
    ComoduleMap augmentation;           // psi_M : M -> T M

    Complex complex() const;     // degrees 0..depth
    Complex augmented() const;   // M placed in degree -1
};
CobarData cobar_resolution(const ComodulePtr& m, int s_max);

// Dimensions of Ext^s(A0, M) for 0 <= s <= s_max, computed from the cobar
// complex collapsed through Hom(A0, T^{s+1} M) ~ U(T^s M). Needs a field A0.
std::vector<std::size_t> ext_dims(const ComodulePtr& m, int s_max);

}  // namespace cobar
