#pragma once

#include "cobar/complexes.hpp"

namespace cobar {

// Finitely supported Z-graded vector spaces over the base field: the direct
// model for comodules over (Q, Q[t,t^-1]). Everything here is plain exact
// linear algebra, independent of the Groebner path.
struct GradedVS {
    std::map<int, std::size_t> dims;

    std::size_t total_dim() const;
    std::size_t dim_at(int d) const;
    bool operator==(const GradedVS& o) const { return dims == o.dims; }
    std::string str() const;
};

GradedVS graded_tensor(const GradedVS& a, const GradedVS& b);
GradedVS graded_hom(const GradedVS& a, const GradedVS& b);
GradedVS graded_dual(const GradedVS& a);
std::size_t graded_invariants_dim(const GradedVS& a);

// Duality at the graded level: dual dims, perfect evaluation pairing, and the
// canonical map dual(a) (x) n = hom(a, n) by dimension count in every degree.
bool graded_duality_ok(const GradedVS& a, const std::vector<GradedVS>& testers);

struct GradedComplex {
    std::map<int, GradedVS> terms;
    // block matrices per (complex degree n, internal degree d)
    std::map<int, std::map<int, KMat>> diffs;
};

GradedVS graded_homology(const GradedComplex& c, int n);
GradedComplex graded_tensor_complexes(const GradedComplex& c, const GradedComplex& d);

// --- conversions with F2 comodules --------------------------------------------

// Extract the grading from an F2 comodule: every coaction column must reduce
// to t^{d_j} (x) e_j; relation columns are sliced by degree.
GradedVS to_graded(const ComodulePtr& m);

// Canonical comodule with the given dimension profile (diagonal coaction).
ComodulePtr from_graded(const HopfPtr& f2, const GradedVS& v);

// The degree of a homogeneous generator column, used by the extraction.
std::optional<int> f2_generator_degree(const ComodulePtr& m, std::size_t j);

// Invariants dimension computed through A1-module membership (normal forms
// over the Laurent ring), independent of the graded bookkeeping. Works
// without a free-finite declaration.
std::size_t f2_invariants_dim_direct(const ComodulePtr& n);

}  // namespace cobar
