#include "cobar/monoidal.hpp"

#include <map>
#include <mutex>

namespace cobar {

namespace {

struct TensorCache {
    std::mutex mu;
    std::map<std::pair<const Comodule*, const Comodule*>,
             std::tuple<ComodulePtr, ComodulePtr, ComodulePtr>> entries;
};
TensorCache& tensor_cache() {
    static TensorCache c;
    return c;
}

struct ChomCache {
    std::mutex mu;
    std::map<std::pair<const Comodule*, const FPModule*>,
             std::tuple<ComodulePtr, ModulePtr, ExtendedHom>> extended;
    std::map<std::pair<const Comodule*, const Comodule*>,
             std::tuple<ComodulePtr, ComodulePtr, std::shared_ptr<ChomResult>>> full;
};
ChomCache& chom_cache() {
    static ChomCache c;
    return c;
}

}  // namespace

ComodulePtr ctensor(const ComodulePtr& m, const ComodulePtr& n) {
    if (m->algebroid().get() != n->algebroid().get())
        throw InvalidArgument("ctensor needs comodules over one algebroid");
    {
        std::lock_guard<std::mutex> lock(tensor_cache().mu);
        auto it = tensor_cache().entries.find({m.get(), n.get()});
        if (it != tensor_cache().entries.end()) return std::get<2>(it->second);
    }
    const HopfPtr& h = m->algebroid();
    ModulePtr u = tensor_module(m->underlying(), n->underlying());
    std::size_t mg = m->n_gens(), ng = n->n_gens();
    Mat c(h->a1(), mg * ng, mg * ng);
    for (std::size_t i = 0; i < mg; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < mg; ++k)
                for (std::size_t l = 0; l < ng; ++l)
                    c.at(k * ng + l, i * ng + j) = m->coaction().at(k, i) * n->coaction().at(l, j);
    ComodulePtr out = Comodule::create(h, u, std::move(c));
    std::lock_guard<std::mutex> lock(tensor_cache().mu);
    tensor_cache().entries.insert({{m.get(), n.get()}, {m, n, out}});
    return out;
}

ComoduleMap ctensor_map(const ComoduleMap& f, const ComoduleMap& g) {
    ComodulePtr src = ctensor(f.source, g.source);
    ComodulePtr tgt = ctensor(f.target, g.target);
    ModuleMap m = tensor_map(f.map, g.map, src->underlying(), tgt->underlying());
    return ComoduleMap(src, tgt, std::move(m));
}

bool MonoidalWitness::verify() const {
    if (!is_equivariant(forward) || !is_equivariant(backward)) return false;
    if (!forward.map.well_defined() || !backward.map.well_defined()) return false;
    return forward.then(backward).equals(ComoduleMap::identity(forward.source)) &&
           backward.then(forward).equals(ComoduleMap::identity(backward.source));
}

MonoidalWitness unit_left_witness(const ComodulePtr& m) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr t = ctensor(trivial_comodule(h), m);
    // generators (0, j) of unit (x) M correspond to generators j of M
    Mat fwd = Mat::identity(h->a0(), m->n_gens());
    return {"unit-left", ComoduleMap(t, m, fwd), ComoduleMap(m, t, fwd)};
}

MonoidalWitness unit_right_witness(const ComodulePtr& m) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr t = ctensor(m, trivial_comodule(h));
    Mat fwd = Mat::identity(h->a0(), m->n_gens());
    return {"unit-right", ComoduleMap(t, m, fwd), ComoduleMap(m, t, fwd)};
}

MonoidalWitness associator_witness(const ComodulePtr& m, const ComodulePtr& n,
                                   const ComodulePtr& p) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr lhs = ctensor(ctensor(m, n), p);
    ComodulePtr rhs = ctensor(m, ctensor(n, p));
    // flat indices agree: (i*ng + j)*pg + k == i*(ng*pg) + (j*pg + k)
    Mat id = Mat::identity(h->a0(), lhs->n_gens());
    return {"associator", ComoduleMap(lhs, rhs, id), ComoduleMap(rhs, lhs, id)};
}

MonoidalWitness symmetry_witness(const ComodulePtr& m, const ComodulePtr& n) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr mn = ctensor(m, n), nm = ctensor(n, m);
    std::size_t mg = m->n_gens(), ng = n->n_gens();
    Mat fwd(h->a0(), ng * mg, mg * ng);
    Mat bwd(h->a0(), mg * ng, ng * mg);
    for (std::size_t i = 0; i < mg; ++i)
        for (std::size_t j = 0; j < ng; ++j) {
            fwd.at(j * mg + i, i * ng + j) = h->a0()->one();
            bwd.at(i * ng + j, j * mg + i) = h->a0()->one();
        }
    return {"symmetry", ComoduleMap(mn, nm, fwd), ComoduleMap(nm, mn, bwd)};
}

// --- chom ---------------------------------------------------------------------

ExtendedHom chom_extended(const ComodulePtr& m, const ModulePtr& v) {
    m->algebroid()->require_free_finite("chom");
    {
        std::lock_guard<std::mutex> lock(chom_cache().mu);
        auto it = chom_cache().extended.find({m.get(), v.get()});
        if (it != chom_cache().extended.end()) return std::get<2>(it->second);
    }
    ExtendedHom out;
    out.hom = std::make_shared<HomModule>(hom_module(m->underlying(), v));
    out.comodule = extend_comodule(m->algebroid(), out.hom->module);
    std::lock_guard<std::mutex> lock(chom_cache().mu);
    chom_cache().extended.insert({{m.get(), v.get()}, {m, v, out}});
    return out;
}

ComoduleMap chom_map_extended(const ComodulePtr& m, const ComoduleMap& phi) {
    const HopfPtr& h = m->algebroid();
    if (!phi.source->is_extended() || !phi.target->is_extended())
        throw InvalidArgument("chom_map_extended needs a map between extended comodules");
    const ModulePtr& v = phi.source->extended_of();
    const ModulePtr& w = phi.target->extended_of();
    ExtendedHom src = chom_extended(m, v);
    ExtendedHom tgt = chom_extended(m, w);

    std::size_t n = h->rank();
    std::size_t q = src.hom->module->n_gens();
    std::size_t mg = m->n_gens(), vg = v->n_gens();
    ModuleMap collapse = eps_collapse(h, phi.target);

    // lambda(b_i (x) h_k) = the map e_u -> (eps (x) id) phi (ev~(b_i (x) h_k (x) e_u)),
    // where ev~ is the coaction-twisted evaluation
    //   (b (x) h) (x) m  ->  sum  b m_(1) (x) h(m_(0));
    // with the naive module evaluation the adjunction naturality fails
    Mat lambda(h->a0(), tgt.hom->module->n_gens(), n * q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < q; ++k) {
            Mat rho(h->a0(), w->n_gens(), mg);
            for (std::size_t u = 0; u < mg; ++u) {
                std::vector<AlgebraElement> coords(phi.source->n_gens(), h->a0()->zero());
                for (std::size_t kp = 0; kp < mg; ++kp) {
                    AlgebraElement factor = h->basis_elem(i) * m->coaction().at(kp, u);
                    if (factor.is_zero()) continue;
                    for (std::size_t vv = 0; vv < vg; ++vv) {
                        const AlgebraElement& hv = src.hom->gens[k].at(vv, kp);
                        if (hv.is_zero()) continue;
                        AlgebraElement prod = factor * h->eta_r().apply(hv);
                        auto parts = h->decompose(prod);
                        for (std::size_t l = 0; l < n; ++l)
                            coords[l * vg + vv] = coords[l * vg + vv] + parts[l];
                    }
                }
                std::vector<AlgebraElement> img = collapse.apply(phi.map.apply(coords));
                for (std::size_t x = 0; x < w->n_gens(); ++x) rho.at(x, u) = img[x];
            }
            auto elem = tgt.hom->map_to_element(ModuleMap(m->underlying(), w, rho));
            if (!elem)
                throw IntegrityError("chom_map: induced map fails to land in the hom module");
            for (std::size_t x = 0; x < tgt.hom->module->n_gens(); ++x)
                lambda.at(x, i * q + k) = (*elem)[x];
        }

    ModuleMap lam(src.comodule->underlying(), tgt.hom->module, lambda);
    return adjoint_back(src.comodule, lam);
}

StandardPresentation standard_presentation(const ComodulePtr& n) {
    const HopfPtr& h = n->algebroid();
    h->require_free_finite("standard presentation");
    StandardPresentation out;
    out.n = n;
    out.psi = coaction_map(n);
    ComodulePtr e = out.psi.target;
    ComoduleMap psi_e = coaction_map(e);
    ComoduleMap ext_psi = extend_map(h, out.psi.map);
    out.delta = psi_e - ext_psi;
    return out;
}

MonoidalWitness standard_presentation_witness(const StandardPresentation& pres,
                                              const ComoduleKernel& ker) {
    // forward: N -> ker(delta) is psi corestricted; backward: counit collapse
    ComoduleMap fwd = corestrict_comodule(pres.psi, ker);
    const HopfPtr& h = pres.n->algebroid();
    ModuleMap collapse = eps_collapse(h, pres.psi.target);
    ComoduleMap bwd(ker.module, pres.n, ker.inclusion.map.then(collapse));
    return {"standard-presentation", fwd, bwd};
}

ChomResult chom(const ComodulePtr& m, const ComodulePtr& n) {
    {
        std::lock_guard<std::mutex> lock(chom_cache().mu);
        auto it = chom_cache().full.find({m.get(), n.get()});
        if (it != chom_cache().full.end()) return *std::get<2>(it->second);
    }
    ChomResult ch;
    ch.m = m;
    ch.n = n;
    ch.pres = standard_presentation(n);
    ch.ext0 = chom_extended(m, n->underlying());
    ComoduleMap dmap = chom_map_extended(m, ch.pres.delta);
    ch.kernel = kernel_comodule(dmap);
    ch.comodule = ch.kernel.module;
    std::lock_guard<std::mutex> lock(chom_cache().mu);
    chom_cache().full.insert(
        {{m.get(), n.get()}, {m, n, std::make_shared<ChomResult>(ch)}});
    return ch;
}

// --- adjunction ------------------------------------------------------------------

namespace {

// u: P (x) M -> extend(V)  |->  P -> chom_extended(M, V)
ComoduleMap adjind_transpose(const ComodulePtr& p, const ComodulePtr& m,
                             const ComoduleMap& u) {
    const HopfPtr& h = p->algebroid();
    const ModulePtr& v = u.target->extended_of();
    ExtendedHom eh = chom_extended(m, v);
    ModuleMap u0 = adjoint_forward(u);  // U(P (x) M) -> V
    std::size_t pg = p->n_gens(), mg = m->n_gens();
    Mat lambda(h->a0(), eh.hom->module->n_gens(), pg);
    for (std::size_t a = 0; a < pg; ++a) {
        Mat g(h->a0(), v->n_gens(), mg);
        for (std::size_t b = 0; b < mg; ++b)
            for (std::size_t x = 0; x < v->n_gens(); ++x)
                g.at(x, b) = u0.matrix().at(x, a * mg + b);
        auto elem = eh.hom->map_to_element(ModuleMap(m->underlying(), v, g));
        if (!elem) throw IntegrityError("adjind: partial map misses the hom module");
        for (std::size_t x = 0; x < eh.hom->module->n_gens(); ++x)
            lambda.at(x, a) = (*elem)[x];
    }
    return adjoint_back(p, ModuleMap(p->underlying(), eh.hom->module, lambda));
}

// v: P -> chom_extended(M, V)  |->  P (x) M -> extend(V)
ComoduleMap adjind_untranspose(const ComodulePtr& p, const ComodulePtr& m,
                               const ComoduleMap& v) {
    const HopfPtr& h = p->algebroid();
    const ModulePtr& vm = v.target->extended_of();  // = Hom(U M, V)
    // recover the hom structure from the cache
    ExtendedHom eh;
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(chom_cache().mu);
        for (const auto& [key, val] : chom_cache().extended) {
            if (key.first == m.get() && std::get<2>(val).hom->module.get() == vm.get()) {
                eh = std::get<2>(val);
                found = true;
                break;
            }
        }
    }
    if (!found) throw InvalidArgument("adjind_untranspose: target is not a chom_extended of M");
    const ModulePtr& target_v = eh.hom->n;

    ModuleMap lambda = adjoint_forward(v);  // U P -> Hom(U M, target_v)
    std::size_t pg = p->n_gens(), mg = m->n_gens();
    ComodulePtr pm = ctensor(p, m);
    Mat u0(h->a0(), target_v->n_gens(), pg * mg);
    for (std::size_t a = 0; a < pg; ++a) {
        ModuleMap ga = eh.hom->element_to_map(lambda.matrix().column(a));
        for (std::size_t b = 0; b < mg; ++b)
            for (std::size_t x = 0; x < target_v->n_gens(); ++x)
                u0.at(x, a * mg + b) = ga.matrix().at(x, b);
    }
    return adjoint_back(pm, ModuleMap(pm->underlying(), target_v, u0));
}

}  // namespace

ComoduleMap adjunction_transpose(const ChomResult& ch, const ComodulePtr& p,
                                 const ComoduleMap& f) {
    require_equivariant(f, "adjunction transpose input");
    if (f.source.get() != ctensor(p, ch.m).get() || f.target.get() != ch.n.get())
        throw InvalidArgument("adjunction_transpose: map must go P (x) M -> N");
    ComoduleMap u = f.then(ch.pres.psi);            // P (x) M -> extend(U N)
    ComoduleMap fbar = adjind_transpose(p, ch.m, u);  // P -> chom_ext(M, U N)
    ModuleMap factored = corestrict(fbar.map, ch.kernel.inclusion.map);
    return ComoduleMap(p, ch.comodule, factored);
}

ComoduleMap adjunction_untranspose(const ChomResult& ch, const ComodulePtr& p,
                                   const ComoduleMap& g) {
    require_equivariant(g, "adjunction untranspose input");
    if (g.source.get() != p.get() || g.target.get() != ch.comodule.get())
        throw InvalidArgument("adjunction_untranspose: map must go P -> chom(M, N)");
    ComoduleMap gp = g.then(ch.kernel.inclusion);     // P -> chom_ext(M, U N)
    ComoduleMap u = adjind_untranspose(p, ch.m, gp);  // P (x) M -> extend(U N)
    ModuleMap collapse = eps_collapse(ch.m->algebroid(), u.target);
    ComoduleMap out(u.source, ch.n, u.map.then(collapse));
    require_equivariant(out, "adjunction untranspose output");
    return out;
}

ComoduleMap chom_evaluation(const ChomResult& ch) {
    return adjunction_untranspose(ch, ch.comodule, ComoduleMap::identity(ch.comodule));
}

ComoduleMap chom_map_covariant(const ChomResult& src, const ChomResult& tgt,
                               const ComoduleMap& xi) {
    if (src.m.get() != tgt.m.get() || xi.source.get() != src.n.get() ||
        xi.target.get() != tgt.n.get())
        throw InvalidArgument("chom_map_covariant endpoints mismatch");
    ComoduleMap f = chom_evaluation(src).then(xi);  // chom(M,N) (x) M -> N'
    return adjunction_transpose(tgt, src.comodule, f);
}

ComoduleMap chom_map_contravariant(const ChomResult& src, const ChomResult& tgt,
                                   const ComoduleMap& f) {
    if (src.n.get() != tgt.n.get() || f.source.get() != tgt.m.get() ||
        f.target.get() != src.m.get())
        throw InvalidArgument("chom_map_contravariant endpoints mismatch");
    ComoduleMap comp =
        ctensor_map(ComoduleMap::identity(src.comodule), f).then(chom_evaluation(src));
    return adjunction_transpose(tgt, src.comodule, comp);
}

MonoidalWitness chom_unit_witness(const ChomResult& ch) {
    const HopfPtr& h = ch.n->algebroid();
    ComodulePtr unit = trivial_comodule(h);
    if (ch.m.get() != unit.get())
        throw InvalidArgument("chom_unit_witness needs chom(unit, N)");
    // forward: chom(unit, N) ~ chom(unit, N) (x) unit -> N by evaluation
    ComoduleMap fwd = unit_right_witness(ch.comodule).backward.then(chom_evaluation(ch));
    // backward: transpose of the unit isomorphism N (x) unit -> N
    ComoduleMap bwd = adjunction_transpose(ch, ch.n, unit_right_witness(ch.n).forward);
    return {"chom-unit", fwd, bwd};
}

MonoidalWitness internal_adjunction_witness(const ComodulePtr& p, const ComodulePtr& m,
                                            const ComodulePtr& n) {
    ChomResult ch_mn = chom(m, n);
    ChomResult ch_lhs = chom(p, ch_mn.comodule);       // chom(P, chom(M, N))
    ComodulePtr pm = ctensor(p, m);
    ChomResult ch_rhs = chom(pm, n);                   // chom(P (x) M, N)
    ComodulePtr lhs = ch_lhs.comodule, rhs = ch_rhs.comodule;

    ComoduleMap ev_p = chom_evaluation(ch_lhs);   // LHS (x) P -> chom(M, N)
    ComoduleMap ev_m = chom_evaluation(ch_mn);    // chom(M, N) (x) M -> N

    // forward: transpose over P (x) M of  LHS (x) (P (x) M) -> N
    ComoduleMap f_fwd = associator_witness(lhs, p, m)
                            .backward.then(ctensor_map(ev_p, ComoduleMap::identity(m)))
                            .then(ev_m);
    ComoduleMap fwd = adjunction_transpose(ch_rhs, lhs, f_fwd);

    // backward: transpose over P of the transpose over M of
    //   (RHS (x) P) (x) M -> RHS (x) (P (x) M) -> N
    ComoduleMap ev_pm = chom_evaluation(ch_rhs);
    ComoduleMap g1 = associator_witness(rhs, p, m).forward.then(ev_pm);
    ComoduleMap g2 = adjunction_transpose(ch_mn, ctensor(rhs, p), g1);
    ComoduleMap bwd = adjunction_transpose(ch_lhs, rhs, g2);

    return {"internal-adjunction", fwd, bwd};
}

ComoduleMap name_of_map(const ChomResult& ch, const ComoduleMap& f) {
    const HopfPtr& h = ch.m->algebroid();
    ComodulePtr unit = trivial_comodule(h);
    if (f.source.get() != ch.m.get() || f.target.get() != ch.n.get())
        throw InvalidArgument("name_of_map: map must go M -> N");
    ComoduleMap comp = unit_left_witness(ch.m).forward.then(f);  // unit (x) M -> N
    return adjunction_transpose(ch, unit, comp);
}

ComoduleMap map_of_name(const ChomResult& ch, const ComoduleMap& el) {
    const HopfPtr& h = ch.m->algebroid();
    ComodulePtr unit = trivial_comodule(h);
    if (el.source.get() != unit.get() || el.target.get() != ch.comodule.get())
        throw InvalidArgument("map_of_name: element must go unit -> chom(M, N)");
    ComoduleMap u = adjunction_untranspose(ch, unit, el);  // unit (x) M -> N
    return unit_left_witness(ch.m).backward.then(u);
}

// --- duality -------------------------------------------------------------------

std::optional<ComoduleMap> invert_comodule_map(const ComoduleMap& f) {
    const AlgebraPtr& ring = f.source->underlying()->ring();
    const ModulePtr& x = f.source->underlying();
    const ModulePtr& y = f.target->underlying();
    std::size_t xg = x->n_gens(), yg = y->n_gens();
    std::size_t yq = y->relations().cols();
    auto flat = [&](std::size_t i, std::size_t j) { return i * yg + j; };  // unknown G(i,j)

    std::size_t rows1 = xg * yq;   // well-definedness into copies of X
    std::size_t rows2 = yg * yg;   // f o g = id_Y in copies of Y
    std::size_t rows3 = xg * xg;   // g o f = id_X in copies of X
    Mat u(ring, rows1 + rows2 + rows3, xg * yg);
    Mat v(ring, rows1 + rows2 + rows3, 1);

    std::size_t xrc = x->relations().cols(), yrc = y->relations().cols();
    Mat rels(ring, rows1 + rows2 + rows3, yq * xrc + yg * yrc + xg * xrc);
    std::size_t rel_col = 0;

    for (std::size_t c = 0; c < yq; ++c) {
        for (std::size_t i = 0; i < xg; ++i)
            for (std::size_t j = 0; j < yg; ++j)
                u.at(c * xg + i, flat(i, j)) = y->relations().at(j, c);
        for (std::size_t rc = 0; rc < xrc; ++rc, ++rel_col)
            for (std::size_t i = 0; i < xg; ++i)
                rels.at(c * xg + i, rel_col) = x->relations().at(i, rc);
    }
    for (std::size_t j = 0; j < yg; ++j) {
        // column j of F G   ==  e_j  (modulo Y relations)
        for (std::size_t i = 0; i < yg; ++i) {
            for (std::size_t k = 0; k < xg; ++k)
                u.at(rows1 + j * yg + i, flat(k, j)) = f.map.matrix().at(i, k);
            if (i == j) v.at(rows1 + j * yg + i, 0) = ring->one();
        }
        for (std::size_t rc = 0; rc < yrc; ++rc, ++rel_col)
            for (std::size_t i = 0; i < yg; ++i)
                rels.at(rows1 + j * yg + i, rel_col) = y->relations().at(i, rc);
    }
    for (std::size_t j = 0; j < xg; ++j) {
        // column j of G F  ==  e_j  (modulo X relations)
        for (std::size_t i = 0; i < xg; ++i) {
            for (std::size_t k = 0; k < yg; ++k)
                u.at(rows1 + rows2 + j * xg + i, flat(i, k)) = f.map.matrix().at(k, j);
            if (i == j) v.at(rows1 + rows2 + j * xg + i, 0) = ring->one();
        }
        for (std::size_t rc = 0; rc < xrc; ++rc, ++rel_col)
            for (std::size_t i = 0; i < xg; ++i)
                rels.at(rows1 + rows2 + j * xg + i, rel_col) = x->relations().at(i, rc);
    }

    ModulePtr big = FPModule::create(ring, rows1 + rows2 + rows3, rels);
    auto sol = lift_through(u, big, v);
    if (!sol) return std::nullopt;
    Mat g(ring, xg, yg);
    for (std::size_t i = 0; i < xg; ++i)
        for (std::size_t j = 0; j < yg; ++j) g.at(i, j) = sol->at(flat(i, j), 0);
    ComoduleMap inv(f.target, f.source, std::move(g));
    return inv;
}

DualityOutcome dualizability(const ComodulePtr& m, const std::vector<ComodulePtr>& testers) {
    const HopfPtr& h = m->algebroid();
    h->require_free_finite("dualizability");
    ComodulePtr unit = trivial_comodule(h);

    DualityCertificate cert;
    cert.m = m;
    cert.dual = chom(m, unit);
    ComodulePtr dm = cert.dual.comodule;
    cert.evaluation = chom_evaluation(cert.dual);

    auto canonical_map = [&](const ComodulePtr& n) {
        // transpose of (DM (x) N) (x) M -> ... -> N
        ComoduleMap f = associator_witness(dm, n, m)
                            .forward
                            .then(ctensor_map(ComoduleMap::identity(dm),
                                              symmetry_witness(n, m).forward))
                            .then(associator_witness(dm, m, n).backward)
                            .then(ctensor_map(cert.evaluation, ComoduleMap::identity(n)))
                            .then(unit_left_witness(n).forward);
        return adjunction_transpose(chom(m, n), ctensor(dm, n), f);
    };

    DualityOutcome out;
    // the canonical map at N = M must invert to build the coevaluation
    ComoduleMap kappa_m = canonical_map(m);
    auto kappa_m_inv = invert_comodule_map(kappa_m);
    if (!kappa_m_inv) {
        out.refusal = "canonical map DM (x) M -> chom(M, M) is not invertible";
        return out;
    }
    ChomResult ch_mm = chom(m, m);
    ComoduleMap name_id = name_of_map(ch_mm, ComoduleMap::identity(m));
    cert.coevaluation =
        name_id.then(*kappa_m_inv).then(symmetry_witness(dm, m).forward);

    for (const auto& n : testers) {
        ComoduleMap kappa = canonical_map(n);
        auto inv = invert_comodule_map(kappa);
        if (!inv) {
            out.refusal = "canonical map fails to invert for a tester";
            return out;
        }
        cert.testers.push_back({n, {"canonical", kappa, *inv}});
    }

    // triangle identities
    ComoduleMap t1 = unit_left_witness(m)
                         .backward
                         .then(ctensor_map(cert.coevaluation, ComoduleMap::identity(m)))
                         .then(associator_witness(m, dm, m).forward)
                         .then(ctensor_map(ComoduleMap::identity(m), cert.evaluation))
                         .then(unit_right_witness(m).forward);
    ComoduleMap t2 = unit_right_witness(dm)
                         .backward
                         .then(ctensor_map(ComoduleMap::identity(dm), cert.coevaluation))
                         .then(associator_witness(dm, m, dm).backward)
                         .then(ctensor_map(cert.evaluation, ComoduleMap::identity(dm)))
                         .then(unit_left_witness(dm).forward);
    cert.triangles_ok = t1.equals(ComoduleMap::identity(m)) &&
                        t2.equals(ComoduleMap::identity(dm));
    if (!cert.triangles_ok) {
        out.refusal = "triangle identities fail";
        return out;
    }
    out.certificate = std::move(cert);
    return out;
}

// --- resolution witnesses ------------------------------------------------------

ResolutionWitness resolution_witness(const std::vector<ComodulePtr>& family,
                                     const ComodulePtr& m) {
    ResolutionWitness out;
    if (m->underlying()->is_zero_module()) {
        out.report = "target is the zero comodule";
        if (!family.empty())
            out.surjection = ComoduleMap::zero(family[0], m);
        return out;
    }

    for (const auto& f : family) {
        if (!projectivity_certificate(f->underlying())) {
            out.report = "a family member has no projectivity certificate";
            return out;
        }
    }

    std::vector<ComodulePtr> summands;
    std::vector<ComoduleMap> maps;
    for (const auto& f : family) {
        try {
            ComoduleHomSpace hs = comodule_hom_space(f, m);
            for (const auto& b : hs.basis) {
                summands.push_back(f);
                maps.push_back(b);
            }
        } catch (const CapabilityError&) {
            out.report += "skipped an infinite-dimensional hom space; ";
        }
    }
    if (summands.empty()) {
        out.report += "no candidate maps found (bounded search; not a disproof)";
        return out;
    }

    ComoduleSum sum = direct_sum_comodules(summands);
    Mat big(m->underlying()->ring(), m->n_gens(), sum.module->n_gens());
    std::size_t off = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        for (std::size_t i = 0; i < m->n_gens(); ++i)
            for (std::size_t j = 0; j < summands[k]->n_gens(); ++j)
                big.at(i, off + j) = maps[k].map.matrix().at(i, j);
        off += summands[k]->n_gens();
    }
    ComoduleMap phi(sum.module, m, big);
    if (cokernel_comodule(phi).module->underlying()->is_zero_module()) {
        out.surjection = phi;
        out.report = "surjection from " + std::to_string(summands.size()) + " summands";
    } else {
        out.report += "assembled map is not surjective (bounded search; not a disproof)";
    }
    return out;
}

}  // namespace cobar
