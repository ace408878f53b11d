#include "cobar/comodule.hpp"

#include <map>
#include <mutex>

namespace cobar {

ComodulePtr Comodule::create(HopfPtr algebroid, ModulePtr underlying, Mat coaction,
                             ModulePtr extended_of) {
    if (underlying->ring().get() != algebroid->a0().get())
        throw InvalidArgument("comodule underlying module must live over A0");
    if (coaction.ring().get() != algebroid->a1().get())
        throw InvalidArgument("coaction matrix must live over A1");
    if (coaction.rows() != underlying->n_gens() || coaction.cols() != underlying->n_gens())
        throw InvalidArgument("coaction matrix must be square on the generators");
    return ComodulePtr(new Comodule(std::move(algebroid), std::move(underlying),
                                    std::move(coaction), std::move(extended_of)));
}

const ModulePtr& Comodule::coaction_target() const {
    std::call_once(target_once_, [&] {
        coaction_target_ = base_change(algebroid_->eta_r(), underlying_);
    });
    return coaction_target_;
}

const ModulePtr& Comodule::extended_of() const {
    if (!extended_of_) throw InvalidArgument("comodule is not extended");
    return extended_of_;
}

ComoduleMap::ComoduleMap(ComodulePtr src, ComodulePtr tgt, ModuleMap m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (map.source().get() != source->underlying().get() ||
        map.target().get() != target->underlying().get())
        throw InvalidArgument("comodule map endpoints do not match the module map");
}

ComoduleMap::ComoduleMap(ComodulePtr src, ComodulePtr tgt, Mat matrix)
    : ComoduleMap(src, tgt, ModuleMap(src->underlying(), tgt->underlying(), std::move(matrix))) {
}

ComoduleMap ComoduleMap::identity(const ComodulePtr& m) {
    return ComoduleMap(m, m, ModuleMap::identity(m->underlying()));
}

ComoduleMap ComoduleMap::zero(const ComodulePtr& src, const ComodulePtr& tgt) {
    return ComoduleMap(src, tgt, ModuleMap::zero(src->underlying(), tgt->underlying()));
}

ComoduleMap ComoduleMap::then(const ComoduleMap& g) const {
    if (g.source.get() != target.get())
        throw InvalidArgument("comodule map composition mismatch");
    return ComoduleMap(source, g.target, map.then(g.map));
}

ComoduleMap ComoduleMap::operator+(const ComoduleMap& o) const {
    return ComoduleMap(source, target, map + o.map);
}

ComoduleMap ComoduleMap::operator-(const ComoduleMap& o) const {
    return ComoduleMap(source, target, map - o.map);
}

// --- checkers ------------------------------------------------------------------

CheckReport check_comodule(const ComodulePtr& m) {
    CheckReport rep;
    const HopfPtr& h = m->algebroid();
    const Mat& c = m->coaction();
    const ModulePtr& u = m->underlying();

    {
        // relations must map into the relation span of A1 (x) M
        bool ok = true;
        std::string witness;
        for (std::size_t rc = 0; rc < u->relations().cols() && ok; ++rc) {
            std::vector<AlgebraElement> r;
            for (std::size_t j = 0; j < u->n_gens(); ++j)
                r.push_back(h->eta_l().apply(u->relations().at(j, rc)));
            std::vector<AlgebraElement> w(u->n_gens(), h->a1()->zero());
            for (std::size_t k = 0; k < u->n_gens(); ++k)
                for (std::size_t j = 0; j < u->n_gens(); ++j)
                    w[k] = w[k] + c.at(k, j) * r[j];
            if (!m->coaction_target()->is_zero_element(w)) {
                ok = false;
                witness = "relation column " + std::to_string(rc);
            }
        }
        rep.add("coaction well-defined", ok, witness);
    }

    {
        // (eps (x) id) o psi = id
        Mat e = h->counit().apply(c);
        Mat diff = e - Mat::identity(h->a0(), u->n_gens());
        bool ok = true;
        std::string witness;
        for (std::size_t j = 0; j < u->n_gens() && ok; ++j)
            if (!u->is_zero_element(diff.column(j))) {
                ok = false;
                witness = "generator " + std::to_string(j);
            }
        rep.add("counit law", ok, witness);
    }

    {
        // (comult (x) id) o psi = (id (x) psi) o psi, compared in A1 (x) A1 (x) M
        const TensorPower& t2 = h->t2();
        Mat lhs = h->comult().apply(c);
        Mat rhs = t2.slot[1].apply(c) * t2.slot[0].apply(c);
        Mat diff = lhs - rhs;
        ModulePtr target = base_change(h->eta_r().then(t2.slot[1]), u);
        bool ok = true;
        std::string witness;
        for (std::size_t j = 0; j < u->n_gens() && ok; ++j)
            if (!target->is_zero_element(diff.column(j))) {
                ok = false;
                witness = "generator " + std::to_string(j);
            }
        rep.add("coassociativity", ok, witness);
    }
    return rep;
}

bool is_equivariant(const ComoduleMap& f) {
    const HopfPtr& h = f.source->algebroid();
    Mat lhs = h->eta_r().apply(f.map.matrix()) * f.source->coaction();
    Mat rhs = f.target->coaction() * h->eta_l().apply(f.map.matrix());
    Mat diff = lhs - rhs;
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!f.target->coaction_target()->is_zero_element(diff.column(j))) return false;
    return true;
}

CheckReport check_comodule_map(const ComoduleMap& f) {
    CheckReport rep;
    rep.add("same algebroid", f.source->algebroid().get() == f.target->algebroid().get());
    rep.add("well-defined on relations", f.map.well_defined());
    rep.add("equivariance", is_equivariant(f));
    return rep;
}

void require_equivariant(const ComoduleMap& f, const std::string& what) {
    if (!f.map.well_defined())
        throw InvalidArgument(what + ": map is not well-defined on relations");
    if (!is_equivariant(f)) throw InvalidArgument(what + ": map is not equivariant");
}

namespace {

// unit and zero comodules are memoized per algebroid so maps built in
// different places share endpoints and compose
struct UnitCache {
    std::mutex mu;
    std::map<const HopfAlgebroid*, std::pair<HopfPtr, ComodulePtr>> unit, zero;
};
UnitCache& unit_cache() {
    static UnitCache c;
    return c;
}

}  // namespace

ComodulePtr trivial_comodule(const HopfPtr& h) {
    std::lock_guard<std::mutex> lock(unit_cache().mu);
    auto it = unit_cache().unit.find(h.get());
    if (it != unit_cache().unit.end()) return it->second.second;
    ModulePtr u = FPModule::free_module(h->a0(), 1);
    Mat c(h->a1(), 1, 1);
    c.at(0, 0) = h->a1()->one();
    ComodulePtr out = Comodule::create(h, u, c);
    unit_cache().unit.insert({h.get(), {h, out}});
    return out;
}

ComodulePtr zero_comodule(const HopfPtr& h) {
    std::lock_guard<std::mutex> lock(unit_cache().mu);
    auto it = unit_cache().zero.find(h.get());
    if (it != unit_cache().zero.end()) return it->second.second;
    ComodulePtr out =
        Comodule::create(h, FPModule::zero_module(h->a0()), Mat(h->a1(), 0, 0));
    unit_cache().zero.insert({h.get(), {h, out}});
    return out;
}

// --- extend / forget -------------------------------------------------------------

namespace {

// extend(V) is memoized per (algebroid, module) so repeated constructions
// share pointers and their maps compose
struct ExtendCache {
    std::mutex mu;
    std::map<std::pair<const HopfAlgebroid*, const FPModule*>,
             std::pair<ModulePtr, ComodulePtr>> entries;
};
ExtendCache& extend_cache() {
    static ExtendCache c;
    return c;
}

}  // namespace

ComodulePtr extend_comodule(const HopfPtr& h, const ModulePtr& v) {
    h->require_free_finite("extend");
    {
        std::lock_guard<std::mutex> lock(extend_cache().mu);
        auto it = extend_cache().entries.find({h.get(), v.get()});
        if (it != extend_cache().entries.end()) return it->second.second;
    }

    std::size_t n = h->rank(), m = v->n_gens();
    auto flat = [&](std::size_t i, std::size_t j) { return i * m + j; };
    const AlgebraPtr& a0 = h->a0();
    const AlgebraPtr& a1 = h->a1();

    Mat rels(a0, n * m, n * v->relations().cols());
    for (std::size_t rc = 0; rc < v->relations().cols(); ++rc)
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t col = rc * n + i;
            for (std::size_t j = 0; j < m; ++j) {
                AlgebraElement prod = h->basis_elem(i) * h->eta_r().apply(v->relations().at(j, rc));
                auto parts = h->decompose(prod);
                for (std::size_t l = 0; l < n; ++l)
                    rels.at(flat(l, j), col) = rels.at(flat(l, j), col) + parts[l];
            }
        }
    ModulePtr underlying = FPModule::create(a0, n * m, rels);

    Mat coaction(a1, n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        auto zparts = h->decompose_t2(h->comult().apply(h->basis_elem(i)));
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < m; ++j)
                coaction.at(flat(l, j), flat(i, j)) = zparts[l];
    }
    ComodulePtr out = Comodule::create(h, underlying, coaction, v);

    std::lock_guard<std::mutex> lock(extend_cache().mu);
    extend_cache().entries.insert({{h.get(), v.get()}, {v, out}});
    return out;
}

ComoduleMap extend_map(const HopfPtr& h, const ModuleMap& g) {
    ComodulePtr src = extend_comodule(h, g.source());
    ComodulePtr tgt = extend_comodule(h, g.target());
    std::size_t n = h->rank();
    std::size_t vm = g.source()->n_gens(), wm = g.target()->n_gens();
    Mat mat(h->a0(), n * wm, n * vm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < vm; ++v)
            for (std::size_t w = 0; w < wm; ++w) {
                AlgebraElement prod =
                    h->basis_elem(i) * h->eta_r().apply(g.matrix().at(w, v));
                auto parts = h->decompose(prod);
                for (std::size_t l = 0; l < n; ++l)
                    mat.at(l * wm + w, i * vm + v) = mat.at(l * wm + w, i * vm + v) + parts[l];
            }
    return ComoduleMap(src, tgt, std::move(mat));
}

ModuleMap eps_collapse(const HopfPtr& h, const ComodulePtr& extended) {
    const ModulePtr& v = extended->extended_of();
    std::size_t n = h->rank(), m = v->n_gens();
    Mat mat(h->a0(), m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraElement eps_b = h->counit().apply(h->basis_elem(i));
        for (std::size_t j = 0; j < m; ++j) mat.at(j, i * m + j) = eps_b;
    }
    return ModuleMap(extended->underlying(), v, std::move(mat));
}

ComoduleMap coaction_map(const ComodulePtr& m) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr ext = extend_comodule(h, m->underlying());
    std::size_t n = h->rank(), mg = m->n_gens();
    Mat mat(h->a0(), n * mg, mg);
    for (std::size_t j = 0; j < mg; ++j)
        for (std::size_t k = 0; k < mg; ++k) {
            auto parts = h->decompose(m->coaction().at(k, j));
            for (std::size_t i = 0; i < n; ++i)
                mat.at(i * mg + k, j) = mat.at(i * mg + k, j) + parts[i];
        }
    return ComoduleMap(m, ext, std::move(mat));
}

ModuleMap adjoint_forward(const ComoduleMap& f) {
    const HopfPtr& h = f.source->algebroid();
    return f.map.then(eps_collapse(h, f.target));
}

ComoduleMap adjoint_back(const ComodulePtr& m, const ModuleMap& g) {
    const HopfPtr& h = m->algebroid();
    ComodulePtr ext = extend_comodule(h, g.target());
    std::size_t n = h->rank(), mg = m->n_gens(), vg = g.target()->n_gens();
    Mat mat(h->a0(), n * vg, mg);
    for (std::size_t u = 0; u < mg; ++u)
        for (std::size_t k = 0; k < mg; ++k)
            for (std::size_t j = 0; j < vg; ++j) {
                AlgebraElement prod =
                    m->coaction().at(k, u) * h->eta_r().apply(g.matrix().at(j, k));
                auto parts = h->decompose(prod);
                for (std::size_t i = 0; i < n; ++i)
                    mat.at(i * vg + j, u) = mat.at(i * vg + j, u) + parts[i];
            }
    if (g.source().get() != m->underlying().get())
        throw InvalidArgument("adjoint_back: map source must be U M");
    return ComoduleMap(m, ext, std::move(mat));
}

// --- kernels, cokernels, sums ------------------------------------------------

ComoduleKernel kernel_comodule(const ComoduleMap& f) {
    const HopfPtr& h = f.source->algebroid();
    KernelResult k = kernel(f.map);

    // restrict the coaction: solve etaR(inc) W = C_M etaL(inc) over A1 (x) M
    Mat u = h->eta_r().apply(k.inclusion.matrix());
    Mat v = f.source->coaction() * h->eta_l().apply(k.inclusion.matrix());
    auto w = lift_through(u, f.source->coaction_target(), v);
    if (!w)
        throw IntegrityError(
            "coaction does not restrict to the kernel; the flatness declaration "
            "appears to be false");
    ComodulePtr km = Comodule::create(h, k.module, std::move(*w));
    return {km, ComoduleMap(km, f.source, k.inclusion)};
}

ComoduleCokernel cokernel_comodule(const ComoduleMap& f) {
    const HopfPtr& h = f.source->algebroid();
    CokernelResult c = cokernel(f.map);
    // the coaction matrix of the target presents the quotient coaction
    ComodulePtr cm = Comodule::create(h, c.module, f.target->coaction());
    return {cm, ComoduleMap(f.target, cm, c.projection)};
}

ComoduleMap corestrict_comodule(const ComoduleMap& f, const ComoduleKernel& k) {
    ModuleMap g = corestrict(f.map, k.inclusion.map);
    return ComoduleMap(f.source, k.module, std::move(g));
}

namespace {

struct SumCache {
    std::mutex mu;
    std::map<std::vector<const Comodule*>, std::pair<std::vector<ComodulePtr>, ComoduleSum>>
        entries;
};
SumCache& sum_cache() {
    static SumCache c;
    return c;
}

}  // namespace

ComoduleSum direct_sum_comodules(const std::vector<ComodulePtr>& parts) {
    if (parts.empty()) throw InvalidArgument("direct sum of no comodules");
    std::vector<const Comodule*> key;
    for (const auto& p : parts) key.push_back(p.get());
    {
        std::lock_guard<std::mutex> lock(sum_cache().mu);
        auto it = sum_cache().entries.find(key);
        if (it != sum_cache().entries.end()) return it->second.second;
    }
    const HopfPtr& h = parts[0]->algebroid();
    std::vector<ModulePtr> mods;
    for (const auto& p : parts) mods.push_back(p->underlying());
    DirectSum ds = direct_sum(mods);

    std::size_t total = ds.module->n_gens();
    Mat c(h->a1(), total, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p->n_gens(); ++i)
            for (std::size_t j = 0; j < p->n_gens(); ++j)
                c.at(off + i, off + j) = p->coaction().at(i, j);
        off += p->n_gens();
    }
    ComoduleSum out;
    out.module = Comodule::create(h, ds.module, std::move(c));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out.injections.push_back(ComoduleMap(parts[k], out.module, ds.injections[k]));
        out.projections.push_back(ComoduleMap(out.module, parts[k], ds.projections[k]));
    }
    std::lock_guard<std::mutex> lock(sum_cache().mu);
    sum_cache().entries.insert({std::move(key), {parts, out}});
    return out;
}

bool comodules_isomorphic_dims(const ComodulePtr& a, const ComodulePtr& b) {
    return KView(a->underlying()).dim() == KView(b->underlying()).dim();
}

// --- invariants ------------------------------------------------------------------

InvariantSpace invariants(const ComodulePtr& n) {
    const HopfPtr& h = n->algebroid();
    h->require_free_finite("invariants");
    const ModulePtr& u = n->underlying();

    auto uview = std::make_shared<KView>(u);
    KView tview(n->coaction_target());
    unsigned p = h->a0()->characteristic();

    // v is fixed iff C etaL(v) == etaR(v) inside A1 (x) N
    KMat cond(tview.dim(), uview->dim(), p);
    for (std::size_t b = 0; b < uview->dim(); ++b) {
        auto coords = uview->basis_coords(b);
        std::vector<AlgebraElement> w(u->n_gens(), h->a1()->zero());
        for (std::size_t k = 0; k < u->n_gens(); ++k) {
            for (std::size_t j = 0; j < u->n_gens(); ++j)
                w[k] = w[k] + n->coaction().at(k, j) * h->eta_l().apply(coords[j]);
            w[k] = w[k] - h->eta_r().apply(coords[k]);
        }
        KVec img = tview.coords(w);
        for (std::size_t i = 0; i < tview.dim(); ++i) cond.at(i, b) = img[i];
    }

    InvariantSpace inv;
    inv.n = n;
    inv.view = uview;
    std::vector<KVec> ker = kernel_basis(cond);
    inv.basis_mat = KMat(uview->dim(), ker.size(), p);
    for (std::size_t k = 0; k < ker.size(); ++k) {
        for (std::size_t i = 0; i < uview->dim(); ++i) inv.basis_mat.at(i, k) = ker[k][i];
        inv.basis.push_back(uview->from_coords(ker[k]));
    }

    if (h->a0()->is_field()) {
        inv.module = FPModule::free_module(h->a0(), inv.basis.size());
        Mat incl(h->a0(), u->n_gens(), inv.basis.size());
        for (std::size_t k = 0; k < inv.basis.size(); ++k)
            for (std::size_t i = 0; i < u->n_gens(); ++i) incl.at(i, k) = inv.basis[k][i];
        inv.inclusion = ModuleMap(inv.module, u, std::move(incl));
    }
    return inv;
}

ComoduleMap InvariantSpace::as_map(std::size_t i) const {
    const HopfPtr& h = n->algebroid();
    ComodulePtr unit = trivial_comodule(h);
    Mat m(h->a0(), n->n_gens(), 1);
    for (std::size_t k = 0; k < n->n_gens(); ++k) m.at(k, 0) = basis.at(i)[k];
    return ComoduleMap(unit, n, std::move(m));
}

std::optional<KVec> InvariantSpace::coords_of_map(const ComoduleMap& f) const {
    if (f.source->n_gens() != 1)
        throw InvalidArgument("coords_of_map expects a map from the unit comodule");
    KVec target = view->coords(f.map.matrix().column(0));
    return solve(basis_mat, target);
}

// --- hom spaces -------------------------------------------------------------------

ComoduleHomSpace comodule_hom_space(const ComodulePtr& m, const ComodulePtr& n) {
    const HopfPtr& h = m->algebroid();
    if (h.get() != n->algebroid().get())
        throw InvalidArgument("hom space needs comodules over one algebroid");
    unsigned p = h->a0()->characteristic();

    ComoduleHomSpace hs;
    hs.m = m;
    hs.n = n;
    hs.tgt_view = std::make_shared<KView>(n->underlying());
    KView cview(n->coaction_target());

    std::size_t mg = m->n_gens(), ng = n->n_gens();
    std::size_t d = hs.tgt_view->dim();
    std::size_t unknowns = mg * d;  // column j of F, in k-coordinates of U N

    std::size_t q = m->underlying()->relations().cols();
    KMat sys(q * d + mg * cview.dim(), unknowns, p);

    for (std::size_t col_j = 0; col_j < mg; ++col_j) {
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t un = col_j * d + b;
            std::vector<AlgebraElement> fcol = hs.tgt_view->from_coords(
                [&] {
                    KVec e(d, Scalar::zero(p));
                    e[b] = Scalar::one(p);
                    return e;
                }());

            // well-definedness rows: for each relation r: sum_j r_j * F_col_j == 0
            for (std::size_t rc = 0; rc < q; ++rc) {
                AlgebraElement rj = m->underlying()->relations().at(col_j, rc);
                if (rj.is_zero()) continue;
                std::vector<AlgebraElement> scaled(ng, h->a0()->zero());
                for (std::size_t i = 0; i < ng; ++i) scaled[i] = fcol[i] * rj;
                KVec img = hs.tgt_view->coords(scaled);
                for (std::size_t i = 0; i < d; ++i)
                    sys.at(rc * d + i, un) = sys.at(rc * d + i, un) + img[i];
            }

            // equivariance rows: etaR(F) C_M - C_N etaL(F) == 0 columnwise
            for (std::size_t j = 0; j < mg; ++j) {
                std::vector<AlgebraElement> w(ng, h->a1()->zero());
                bool nonzero = false;
                // contribution of F_col_{col_j} through etaR(F) C_M
                const AlgebraElement& cm = m->coaction().at(col_j, j);
                if (!cm.is_zero()) {
                    for (std::size_t i = 0; i < ng; ++i)
                        w[i] = w[i] + h->eta_r().apply(fcol[i]) * cm;
                    nonzero = true;
                }
                // contribution through C_N etaL(F) (entry F_{k, col_j} only matters
                // when the condition column is col_j itself)
                if (j == col_j) {
                    for (std::size_t l = 0; l < ng; ++l)
                        for (std::size_t k = 0; k < ng; ++k) {
                            AlgebraElement term =
                                n->coaction().at(l, k) * h->eta_l().apply(fcol[k]);
                            if (!term.is_zero()) nonzero = true;
                            w[l] = w[l] - term;
                        }
                }
                if (!nonzero) continue;
                KVec img = cview.coords(w);
                for (std::size_t i = 0; i < cview.dim(); ++i)
                    sys.at(q * d + j * cview.dim() + i, un) =
                        sys.at(q * d + j * cview.dim() + i, un) + img[i];
            }
        }
    }

    std::vector<KVec> ker = kernel_basis(sys);
    hs.flat_basis = KMat(unknowns, ker.size(), p);
    for (std::size_t k = 0; k < ker.size(); ++k) {
        for (std::size_t i = 0; i < unknowns; ++i) hs.flat_basis.at(i, k) = ker[k][i];
        Mat f(h->a0(), ng, mg);
        for (std::size_t j = 0; j < mg; ++j) {
            KVec col(d, Scalar::zero(p));
            for (std::size_t b = 0; b < d; ++b) col[b] = ker[k][j * d + b];
            auto elems = hs.tgt_view->from_coords(col);
            for (std::size_t i = 0; i < ng; ++i) f.at(i, j) = elems[i];
        }
        hs.basis.push_back(ComoduleMap(m, n, std::move(f)));
    }
    return hs;
}

ComoduleMap ComoduleHomSpace::from_coords(const KVec& v) const {
    if (v.size() != basis.size()) throw InvalidArgument("hom coords size mismatch");
    ComoduleMap acc = ComoduleMap::zero(m, n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (v[k].is_zero()) continue;
        acc = acc + ComoduleMap(m, n, basis[k].map.scaled(m->underlying()->ring()->scalar(v[k])));
    }
    return acc;
}

std::optional<KVec> ComoduleHomSpace::coords(const ComoduleMap& f) const {
    unsigned p = m->underlying()->ring()->characteristic();
    std::size_t mg = m->n_gens(), d = tgt_view->dim();
    KVec flat(mg * d, Scalar::zero(p));
    for (std::size_t j = 0; j < mg; ++j) {
        KVec col = tgt_view->coords(f.map.matrix().column(j));
        for (std::size_t b = 0; b < d; ++b) flat[j * d + b] = col[b];
    }
    return solve(flat_basis, flat);
}

}  // namespace cobar
