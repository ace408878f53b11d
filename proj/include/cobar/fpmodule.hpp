#pragma once

#include <optional>

#include "cobar/algebra.hpp"
#include "cobar/linalg.hpp"

namespace cobar {

class FPModule;
using ModulePtr = std::shared_ptr<const FPModule>;

// Finitely presented module over a PresentedAlgebra: a generator count and a
// relation matrix whose columns are relations among the generators. Elements
// are coordinate vectors over the generators; equality is decided against a
// cached module Groebner basis of the relation submodule (plus the ideal).
class FPModule : public std::enable_shared_from_this<FPModule> {
  public:
    static ModulePtr create(AlgebraPtr ring, std::size_t n_gens, Mat relations);
    static ModulePtr free_module(AlgebraPtr ring, std::size_t n);
    static ModulePtr zero_module(AlgebraPtr ring);

    const AlgebraPtr& ring() const { return ring_; }
    std::size_t n_gens() const { return n_gens_; }
    const Mat& relations() const { return relations_; }

    // reduced module Groebner basis of [relations | ideal columns]
    const std::vector<ModVec>& rel_basis() const;

    std::vector<AlgebraElement> reduce(const std::vector<AlgebraElement>& coords) const;
    bool is_zero_element(const std::vector<AlgebraElement>& coords) const;
    bool is_zero_module() const;

    std::vector<AlgebraElement> zero_coords() const;
    std::vector<AlgebraElement> gen_coords(std::size_t i) const;

  private:
    FPModule(AlgebraPtr ring, std::size_t n_gens, Mat rels)
        : ring_(std::move(ring)), n_gens_(n_gens), relations_(std::move(rels)) {}

    AlgebraPtr ring_;
    std::size_t n_gens_;
    Mat relations_;  // n_gens x n_rels
    mutable std::once_flag basis_once_;
    mutable std::vector<ModVec> rel_basis_;
};

struct ModuleElement {
    ModulePtr parent;
    std::vector<AlgebraElement> coords;

    bool is_zero() const { return parent->is_zero_element(coords); }
};

bool elements_equal(const ModuleElement& a, const ModuleElement& b);

// A-linear map between presented modules, as a matrix on generators
// (target generators x source generators).
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(ModulePtr source, ModulePtr target, Mat matrix);

    static ModuleMap identity(const ModulePtr& m);
    static ModuleMap zero(const ModulePtr& source, const ModulePtr& target);

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    const Mat& matrix() const { return matrix_; }

    bool well_defined() const;  // matrix maps source relations into target relations
    ModuleElement apply(const ModuleElement& e) const;
    std::vector<AlgebraElement> apply(const std::vector<AlgebraElement>& coords) const;

    ModuleMap then(const ModuleMap& g) const;  // g o this
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap operator-() const;
    ModuleMap scaled(const AlgebraElement& c) const;

    bool is_zero_map() const;
    bool equals(const ModuleMap& o) const;  // as maps, not as matrices

  private:
    ModulePtr source_, target_;
    Mat matrix_;
};

// --- module operations -------------------------------------------------------

// X with U X == V modulo the target module's relations, if solvable.
// U and V have target->n_gens() rows.
std::optional<Mat> lift_through(const Mat& u, const ModulePtr& target, const Mat& v);

struct KernelResult {
    ModulePtr module;
    ModuleMap inclusion;
};
KernelResult kernel(const ModuleMap& f);

struct CokernelResult {
    ModulePtr module;
    ModuleMap projection;
};
CokernelResult cokernel(const ModuleMap& f);

// factor f through an injective map `inc` with the same target
ModuleMap corestrict(const ModuleMap& f, const KernelResult& target_submodule);
ModuleMap corestrict(const ModuleMap& f, const ModuleMap& inc);

// Hom_A(M, N) as a presented module together with the element<->map bijection
// and the evaluation pairing.
struct HomModule {
    ModulePtr module;
    ModulePtr m, n;

    ModuleMap element_to_map(const std::vector<AlgebraElement>& coords) const;
    std::optional<std::vector<AlgebraElement>> map_to_element(const ModuleMap& f) const;
    ModuleElement evaluate(const std::vector<AlgebraElement>& hom_coords,
                           const ModuleElement& m_elem) const;

    // internal: generator matrices (target x source), one per hom generator
    std::vector<Mat> gens;
};
HomModule hom_module(const ModulePtr& m, const ModulePtr& n);

ModulePtr base_change(const AlgebraMap& phi, const ModulePtr& m);
ModuleMap base_change_map(const AlgebraMap& phi, const ModuleMap& f,
                          const ModulePtr& new_source, const ModulePtr& new_target);

// A section of the canonical surjection free(n_gens) ->> M, if one can be
// found; its existence certifies that M is finitely generated projective.
std::optional<ModuleMap> projectivity_certificate(const ModulePtr& m);

struct DirectSum {
    ModulePtr module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

// M tensor_A N with generators indexed flat(i,j) = i * N.n_gens + j.
ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n);
ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g,
                     const ModulePtr& new_source, const ModulePtr& new_target);

// --- finite-dimensional view -------------------------------------------------

// Basis of a module that is finite dimensional over the base field, with
// coordinate conversions and multiplication operators. Raises a capability
// error when the dimension exceeds `max_dim`.
class KView {
  public:
    explicit KView(ModulePtr m, std::size_t max_dim = 8192);

    const ModulePtr& module() const { return module_; }
    std::size_t dim() const { return basis_.size(); }

    // basis element i as generator coordinates
    std::vector<AlgebraElement> basis_coords(std::size_t i) const;
    // field coordinates of a (possibly unreduced) element
    KVec coords(const std::vector<AlgebraElement>& elem_coords) const;
    std::vector<AlgebraElement> from_coords(const KVec& v) const;

    // the k-linear operator "multiply by a"
    KMat mult_operator(const AlgebraElement& a) const;
    // the k-linear matrix of an A-linear map (rows: target view, cols: source view)
    static KMat map_matrix(const ModuleMap& f, const KView& source, const KView& target);

  private:
    ModulePtr module_;
    std::vector<std::pair<std::size_t, Monomial>> basis_;  // (component, monomial)
};

}  // namespace cobar
