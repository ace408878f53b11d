#pragma once

#include "cobar/hopf.hpp"

namespace cobar {

class Comodule;
using ComodulePtr = std::shared_ptr<const Comodule>;

// A left comodule (M, psi): a presented A0-module plus a coaction matrix C
// over A1 with psi(e_j) = sum_k C_{kj} (x) e_k. The coaction map is
// A0-linear for the etaL-structure on A1 (x)_{etaR} M; every membership test
// in that target happens over A1 against the etaR-image of M's relations.
class Comodule : public std::enable_shared_from_this<Comodule> {
  public:
    static ComodulePtr create(HopfPtr algebroid, ModulePtr underlying, Mat coaction,
                              ModulePtr extended_of = nullptr);

    const HopfPtr& algebroid() const { return algebroid_; }
    const ModulePtr& underlying() const { return underlying_; }
    const Mat& coaction() const { return coaction_; }
    std::size_t n_gens() const { return underlying_->n_gens(); }

    // A1 (x)_{etaR} M as a module over A1 (cached)
    const ModulePtr& coaction_target() const;

    // set when this comodule was built as extend(V)
    bool is_extended() const { return extended_of_ != nullptr; }
    const ModulePtr& extended_of() const;

  private:
    Comodule(HopfPtr h, ModulePtr u, Mat c, ModulePtr ext)
        : algebroid_(std::move(h)), underlying_(std::move(u)), coaction_(std::move(c)),
          extended_of_(std::move(ext)) {}

    HopfPtr algebroid_;
    ModulePtr underlying_;
    Mat coaction_;
    ModulePtr extended_of_;
    mutable std::once_flag target_once_;
    mutable ModulePtr coaction_target_;
};

// Equivariant map of comodules; stores the underlying module map.
struct ComoduleMap {
    ComodulePtr source, target;
    ModuleMap map;

    ComoduleMap() = default;
    ComoduleMap(ComodulePtr src, ComodulePtr tgt, ModuleMap m);
    ComoduleMap(ComodulePtr src, ComodulePtr tgt, Mat matrix);

    static ComoduleMap identity(const ComodulePtr& m);
    static ComoduleMap zero(const ComodulePtr& src, const ComodulePtr& tgt);

    ComoduleMap then(const ComoduleMap& g) const;
    ComoduleMap operator+(const ComoduleMap& o) const;
    ComoduleMap operator-(const ComoduleMap& o) const;
    bool is_zero_map() const { return map.is_zero_map(); }
    bool equals(const ComoduleMap& o) const { return map.equals(o.map); }
};

// axiom report: well-definedness, counit, coassociativity
CheckReport check_comodule(const ComodulePtr& m);
// endpoint, well-definedness and equivariance report
CheckReport check_comodule_map(const ComoduleMap& f);
bool is_equivariant(const ComoduleMap& f);
// throws InvalidArgument when f is not a comodule map
void require_equivariant(const ComoduleMap& f, const std::string& what);

// the unit comodule A0 with psi(1) = 1 (x) 1
ComodulePtr trivial_comodule(const HopfPtr& h);
ComodulePtr zero_comodule(const HopfPtr& h);

// --- the extend/forget adjunction (forget U is left adjoint to extend) -----

// A1 (x)_{etaR} V with the comultiplication coaction, presented over A0 with
// generators b_i (x) e_j at index i * V.n_gens + j. Needs A1 free-finite.
ComodulePtr extend_comodule(const HopfPtr& h, const ModulePtr& v);

// extend as a functor on A0-module maps (the etaR twist is decomposed back
// into the etaL basis entrywise)
ComoduleMap extend_map(const HopfPtr& h, const ModuleMap& g);

// the counit collapse (eps (x) id): U(extend V) -> V
ModuleMap eps_collapse(const HopfPtr& h, const ComodulePtr& extended);

// psi itself, as a comodule map M -> extend(U M)
ComoduleMap coaction_map(const ComodulePtr& m);

// forward: f: M -> extend(V) gives (eps (x) id) o U f : U M -> V
ModuleMap adjoint_forward(const ComoduleMap& f);
// back: g: U M -> V gives (id (x) g) o psi_M : M -> extend(V)
ComoduleMap adjoint_back(const ComodulePtr& m, const ModuleMap& g);

// --- kernels, cokernels, sums ------------------------------------------------

struct ComoduleKernel {
    ComodulePtr module;
    ComoduleMap inclusion;
};
// Kernel with coaction obtained by solving inside A1 (x) M; a failed solve
// raises IntegrityError (the flatness declaration must be false).
ComoduleKernel kernel_comodule(const ComoduleMap& f);

struct ComoduleCokernel {
    ComodulePtr module;
    ComoduleMap projection;
};
ComoduleCokernel cokernel_comodule(const ComoduleMap& f);

ComoduleMap corestrict_comodule(const ComoduleMap& f, const ComoduleKernel& k);

struct ComoduleSum {
    ComodulePtr module;
    std::vector<ComoduleMap> injections;
    std::vector<ComoduleMap> projections;
};
ComoduleSum direct_sum_comodules(const std::vector<ComodulePtr>& parts);

bool comodules_isomorphic_dims(const ComodulePtr& a, const ComodulePtr& b);

// --- invariants and hom spaces -------------------------------------------------

// The fixed-point space { v : psi(v) = 1 (x) v } = Hom_coMod(A0, N), computed
// k-linearly (the comparison twists the insertion by etaR). Over a field base
// it is also presented as an FPModule with its inclusion into U N.
struct InvariantSpace {
    ComodulePtr n;
    std::vector<std::vector<AlgebraElement>> basis;  // fixed vectors, coords in U N
    ModulePtr module;                                // field base only, else null
    std::optional<ModuleMap> inclusion;              // module -> U N

    std::size_t dim() const { return basis.size(); }
    ComoduleMap as_map(std::size_t i) const;                      // A0 -> N
    std::optional<KVec> coords_of_map(const ComoduleMap& f) const;

    // internal solving data
    std::shared_ptr<KView> view;   // of U N
    KMat basis_mat;                // columns: k-coords of the fixed vectors
};
InvariantSpace invariants(const ComodulePtr& n);

// k-basis of Hom_coMod(M, N); needs U M, U N and A1 (x) N finite dimensional
// over the base field.
struct ComoduleHomSpace {
    ComodulePtr m, n;
    std::vector<ComoduleMap> basis;

    std::size_t dim() const { return basis.size(); }
    ComoduleMap from_coords(const KVec& v) const;
    std::optional<KVec> coords(const ComoduleMap& f) const;

    std::shared_ptr<KView> tgt_view;
    KMat flat_basis;  // columns: flattened k-matrices of the basis maps
};
ComoduleHomSpace comodule_hom_space(const ComodulePtr& m, const ComodulePtr& n);

}  // namespace cobar
