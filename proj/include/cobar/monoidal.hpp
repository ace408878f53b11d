#pragma once

#include "cobar/comodule.hpp"

namespace cobar {

// Comodule tensor product M (x)^c N: the underlying A0-tensor with coaction
// entries c^M_{ki} c^N_{lj} (generator (i,j) sits at index i * N.n_gens + j).
// Results are memoized per operand pair so repeated calls share pointers.
ComodulePtr ctensor(const ComodulePtr& m, const ComodulePtr& n);
ComoduleMap ctensor_map(const ComoduleMap& f, const ComoduleMap& g);

// An explicit isomorphism pair, checked by composing both ways.
struct MonoidalWitness {
    std::string kind;
    ComoduleMap forward, backward;

    bool verify() const;
};

MonoidalWitness unit_left_witness(const ComodulePtr& m);   // unit (x) M ~ M
MonoidalWitness unit_right_witness(const ComodulePtr& m);  // M (x) unit ~ M
MonoidalWitness associator_witness(const ComodulePtr& m, const ComodulePtr& n,
                                   const ComodulePtr& p);  // (M(x)N)(x)P ~ M(x)(N(x)P)
MonoidalWitness symmetry_witness(const ComodulePtr& m, const ComodulePtr& n);

// --- the hom comodule -----------------------------------------------------------

// chom(M, extend V) := extend(Hom_{A0}(U M, V))
struct ExtendedHom {
    ComodulePtr comodule;
    std::shared_ptr<HomModule> hom;
};
ExtendedHom chom_extended(const ComodulePtr& m, const ModulePtr& v);

// chom(M, phi) for phi between extended comodules, via the composite
// (eps (x) id) phi (id (x) ev) and the two adjunctions
ComoduleMap chom_map_extended(const ComodulePtr& m, const ComoduleMap& phi);

// N presented as the kernel of extended comodules: psi_N followed by the
// difference of the two equalizer legs
struct StandardPresentation {
    ComodulePtr n;
    ComoduleMap psi;    // N -> extend(U N)
    ComoduleMap delta;  // extend(U N) -> extend(U(A1 (x) N))
};
StandardPresentation standard_presentation(const ComodulePtr& n);

// the explicit isomorphism N ~ ker(delta) (forward: corestricted psi_N,
// backward: the counit collapse restricted to the kernel)
MonoidalWitness standard_presentation_witness(const StandardPresentation& pres,
                                              const ComoduleKernel& ker);

struct ChomResult {
    ComodulePtr m, n;
    ComodulePtr comodule;     // chom(M, N)
    ComoduleKernel kernel;    // inside chom_extended(M, U N)
    ExtendedHom ext0;         // chom(M, extend(U N))
    StandardPresentation pres;
};
ChomResult chom(const ComodulePtr& m, const ComodulePtr& n);

// --- the tensor-hom adjunction -----------------------------------------------

// f: P (x)^c M -> N  |->  P -> chom(M, N)
ComoduleMap adjunction_transpose(const ChomResult& ch, const ComodulePtr& p,
                                 const ComoduleMap& f);
// g: P -> chom(M, N)  |->  P (x)^c M -> N
ComoduleMap adjunction_untranspose(const ChomResult& ch, const ComodulePtr& p,
                                   const ComoduleMap& g);

// the adjunction counit: chom(M, N) (x) M -> N
ComoduleMap chom_evaluation(const ChomResult& ch);

// functorial actions of chom on arbitrary comodule maps
ComoduleMap chom_map_covariant(const ChomResult& src, const ChomResult& tgt,
                               const ComoduleMap& xi);  // chom(M, xi)
ComoduleMap chom_map_contravariant(const ChomResult& src, const ChomResult& tgt,
                                   const ComoduleMap& f);  // chom(f, N)

// chom(A0, N) ~ N
MonoidalWitness chom_unit_witness(const ChomResult& ch);

// chom(P, chom(M, N)) ~ chom(P (x) M, N)
MonoidalWitness internal_adjunction_witness(const ComodulePtr& p, const ComodulePtr& m,
                                            const ComodulePtr& n);

// the bijection Hom_coMod(M, N) ~ invariants(chom(M, N))
ComoduleMap name_of_map(const ChomResult& ch, const ComoduleMap& f);   // unit -> chom(M,N)
ComoduleMap map_of_name(const ChomResult& ch, const ComoduleMap& el);  // back

// --- duality --------------------------------------------------------------------

std::optional<ComoduleMap> invert_comodule_map(const ComoduleMap& f);

struct DualityCertificate {
    ComodulePtr m;
    ChomResult dual;          // chom(M, unit)
    ComoduleMap evaluation;   // DM (x) M -> unit
    ComoduleMap coevaluation; // unit -> M (x) DM
    struct TesterResult {
        ComodulePtr n;
        MonoidalWitness canonical;  // DM (x) N ~ chom(M, N)
    };
    std::vector<TesterResult> testers;
    bool triangles_ok = false;
};

struct DualityOutcome {
    std::optional<DualityCertificate> certificate;
    std::string refusal;  // set when some tester or triangle failed
};
DualityOutcome dualizability(const ComodulePtr& m, const std::vector<ComodulePtr>& testers);

// --- resolution witnesses ----------------------------------------------------

struct ResolutionWitness {
    std::optional<ComoduleMap> surjection;  // direct sum of family members ->> M
    std::string report;
};
ResolutionWitness resolution_witness(const std::vector<ComodulePtr>& family,
                                     const ComodulePtr& m);

}  // namespace cobar
