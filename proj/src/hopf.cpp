#include "cobar/hopf.hpp"

#include <algorithm>

namespace cobar {

namespace {

// rename a polynomial along a variable index map into another context
Poly poly_rename(const Poly& p, const RingCtxPtr& to,
                 const std::vector<std::size_t>& var_map) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(to->nvars());
        for (std::size_t v = 0; v < t.mono.nvars(); ++v)
            if (t.mono[v]) m[var_map[v]] = t.mono[v];
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly(to, std::move(terms));
}

// single-variable image index, or -1
long single_var_of(const AlgebraElement& e) {
    const auto& ts = e.poly().terms();
    if (ts.size() != 1 || !ts[0].coeff.is_one() || ts[0].mono.degree() != 1) return -1;
    for (std::size_t v = 0; v < ts[0].mono.nvars(); ++v)
        if (ts[0].mono[v] == 1) return static_cast<long>(v);
    return -1;
}

}  // namespace

TensorPower tensor_power(const AlgebraPtr& a0, const AlgebraPtr& a1,
                         const AlgebraMap& eta_l, const AlgebraMap& eta_r,
                         std::size_t n) {
    if (n < 2) throw InvalidArgument("tensor_power needs at least two slots");
    const RingCtxPtr& c1 = a1->ctx();
    std::size_t nv = c1->nvars();

    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> slot_vars(n);
    for (std::size_t s = 0; s < n; ++s) {
        slot_vars[s].resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            slot_vars[s][v] = names.size();
            names.push_back(c1->var_names[v] + "~" + std::to_string(s + 1));
        }
    }

    // eliminate the etaL-image variables in slots >= 2, highest slot first
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> eliminated(names.size(), false);
    for (std::size_t s = n; s >= 2; --s) {
        std::vector<std::size_t> blk;
        for (std::size_t i = 0; i < a0->nvars(); ++i) {
            long w = single_var_of(eta_l.images()[i]);
            if (w < 0) continue;
            std::size_t idx = slot_vars[s - 1][static_cast<std::size_t>(w)];
            blk.push_back(idx);
            eliminated[idx] = true;
        }
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!eliminated[i]) rest.push_back(i);
    blocks.push_back(std::move(rest));

    auto ctx = make_ring_ctx(c1->characteristic, std::move(names),
                             MonomialOrder::elimination(std::move(blocks)));

    std::vector<Poly> rels;
    for (std::size_t s = 0; s < n; ++s)
        for (const auto& r : a1->relations()) rels.push_back(poly_rename(r, ctx, slot_vars[s]));
    for (std::size_t s = 0; s + 1 < n; ++s)
        for (std::size_t i = 0; i < a0->nvars(); ++i) {
            Poly lhs = poly_rename(eta_r.images()[i].poly(), ctx, slot_vars[s]);
            Poly rhs = poly_rename(eta_l.images()[i].poly(), ctx, slot_vars[s + 1]);
            rels.push_back(lhs - rhs);
        }

    TensorPower tp;
    tp.algebra = PresentedAlgebra::create(ctx, std::move(rels),
                                          std::max(a0->budget_limit(), a1->budget_limit()));
    tp.slot_vars = std::move(slot_vars);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<AlgebraElement> imgs;
        for (std::size_t v = 0; v < nv; ++v) imgs.push_back(tp.algebra->var(tp.slot_vars[s][v]));
        tp.slot.emplace_back(a1, tp.algebra, std::move(imgs));
    }
    return tp;
}

HopfPtr HopfAlgebroid::create(HopfData data) {
    auto h = std::shared_ptr<HopfAlgebroid>(new HopfAlgebroid());
    h->name_ = std::move(data.name);
    h->a0_ = std::move(data.a0);
    h->a1_ = std::move(data.a1);
    h->eta_l_ = std::move(data.eta_l);
    h->eta_r_ = std::move(data.eta_r);
    h->counit_ = std::move(data.counit);
    h->antipode_ = std::move(data.antipode);
    h->flatness_ = data.flatness;
    h->comult_data_ = std::move(data.comult);

    if (h->eta_l_.source().get() != h->a0_.get() || h->eta_l_.target().get() != h->a1_.get() ||
        h->eta_r_.source().get() != h->a0_.get() || h->eta_r_.target().get() != h->a1_.get())
        throw InvalidArgument("unit maps must go A0 -> A1");
    if (h->counit_.source().get() != h->a1_.get() || h->counit_.target().get() != h->a0_.get())
        throw InvalidArgument("counit must go A1 -> A0");
    if (h->antipode_.source().get() != h->a1_.get() || h->antipode_.target().get() != h->a1_.get())
        throw InvalidArgument("antipode must go A1 -> A1");
    if (h->comult_data_.size() != h->a1_->nvars())
        throw InvalidArgument("comultiplication needs one image per A1 variable");

    h->t2_ = tensor_power(h->a0_, h->a1_, h->eta_l_, h->eta_r_, 2);
    std::vector<AlgebraElement> comult_images;
    for (const auto& expr : h->comult_data_) {
        AlgebraElement acc = h->t2_.algebra->zero();
        for (const auto& [p, q] : expr) {
            AlgebraElement lp = h->t2_.slot[0].apply(h->a1_->nf(p));
            AlgebraElement rq = h->t2_.slot[1].apply(h->a1_->nf(q));
            acc = acc + lp * rq;
        }
        comult_images.push_back(std::move(acc));
    }
    h->comult_ = AlgebraMap(h->a1_, h->t2_.algebra, std::move(comult_images));

    h->base_image_.assign(h->a1_->nvars(), -1);
    if (h->flatness_ == Flatness::free_finite) {
        for (std::size_t i = 0; i < h->a0_->nvars(); ++i) {
            long w = single_var_of(h->eta_l_.images()[i]);
            if (w < 0)
                throw InvalidArgument(
                    "free-finite declaration requires etaL to send variables to variables");
            if (h->base_image_[static_cast<std::size_t>(w)] != -1)
                throw InvalidArgument("etaL images must be distinct variables");
            h->base_image_[static_cast<std::size_t>(w)] = static_cast<long>(i);
        }
        if (data.basis.empty())
            throw InvalidArgument("free-finite declaration requires a basis");
        bool has_one = false;
        for (const auto& b : data.basis) {
            if (b.terms().size() != 1 || !b.terms()[0].coeff.is_one())
                throw InvalidArgument("basis elements must be monic monomials");
            const Monomial& m = b.terms()[0].mono;
            for (std::size_t v = 0; v < m.nvars(); ++v)
                if (m[v] && h->base_image_[v] != -1)
                    throw InvalidArgument("basis monomials must avoid etaL-image variables");
            has_one = has_one || m.is_one();
            h->basis_.push_back(m);
        }
        if (!has_one) throw InvalidArgument("basis must contain the unit monomial");
    }
    return h;
}

void HopfAlgebroid::require_free_finite(const std::string& op) const {
    if (!is_free_finite())
        throw CapabilityError(op + " needs A1 declared free-finite over A0; '" + name_ +
                              "' declares a weaker flatness level");
}

AlgebraElement HopfAlgebroid::basis_elem(std::size_t i) const {
    return a1_->nf(Poly::monomial(a1_->ctx(), basis_.at(i),
                                  Scalar::one(a1_->characteristic())));
}

std::vector<AlgebraElement> HopfAlgebroid::decompose(const AlgebraElement& z) const {
    require_free_finite("decomposition over the A1 basis");
    if (z.parent().get() != a1_.get()) throw InvalidArgument("decompose expects an A1 element");
    std::vector<AlgebraElement> out(basis_.size(), a0_->zero());
    for (const auto& t : z.poly().terms()) {
        Monomial fiber(a1_->nvars());
        Monomial base(a0_->nvars());
        for (std::size_t v = 0; v < a1_->nvars(); ++v) {
            if (!t.mono[v]) continue;
            if (base_image_[v] >= 0)
                base[static_cast<std::size_t>(base_image_[v])] = t.mono[v];
            else
                fiber[v] = t.mono[v];
        }
        auto it = std::find(basis_.begin(), basis_.end(), fiber);
        if (it == basis_.end())
            throw IntegrityError("A1 element does not decompose over the declared basis "
                                 "(flatness declaration appears false)");
        std::size_t l = static_cast<std::size_t>(it - basis_.begin());
        out[l] = out[l] + a0_->nf(Poly::monomial(a0_->ctx(), base, t.coeff));
    }
    return out;
}

std::vector<AlgebraElement> HopfAlgebroid::decompose_t2(const AlgebraElement& z) const {
    require_free_finite("decomposition over the A1 basis");
    if (z.parent().get() != t2_.algebra.get())
        throw InvalidArgument("decompose_t2 expects a tensor-square element");
    std::size_t nv1 = a1_->nvars();
    std::vector<AlgebraElement> out(basis_.size(), a1_->zero());
    for (const auto& t : z.poly().terms()) {
        Monomial left(nv1), right_fiber(nv1);
        for (std::size_t v = 0; v < nv1; ++v) {
            uint32_t e1 = t.mono[t2_.slot_vars[0][v]];
            uint32_t e2 = t.mono[t2_.slot_vars[1][v]];
            if (e1) left[v] = e1;
            if (e2) {
                if (base_image_[v] != -1)
                    throw IntegrityError(
                        "tensor-square normal form kept an eliminated base variable");
                right_fiber[v] = e2;
            }
        }
        auto it = std::find(basis_.begin(), basis_.end(), right_fiber);
        if (it == basis_.end())
            throw IntegrityError("tensor-square element does not decompose over the basis "
                                 "(flatness declaration appears false)");
        std::size_t l = static_cast<std::size_t>(it - basis_.begin());
        out[l] = out[l] + a1_->nf(Poly::monomial(a1_->ctx(), left, t.coeff));
    }
    return out;
}

AlgebraElement HopfAlgebroid::compose(const std::vector<AlgebraElement>& parts) const {
    require_free_finite("composition over the A1 basis");
    if (parts.size() != basis_.size()) throw InvalidArgument("compose: wrong part count");
    AlgebraElement acc = a1_->zero();
    for (std::size_t i = 0; i < parts.size(); ++i)
        acc = acc + eta_l_.apply(parts[i]) * basis_elem(i);
    return acc;
}

// --- axiom checker -----------------------------------------------------------

namespace {

bool maps_equal_on_generators(const AlgebraMap& f, const AlgebraMap& g) {
    for (std::size_t i = 0; i < f.images().size(); ++i)
        if (f.images()[i] != g.images()[i]) return false;
    return true;
}

std::string first_violation(const AlgebraMap& f, const AlgebraMap& g) {
    const auto& names = f.source()->ctx()->var_names;
    for (std::size_t i = 0; i < f.images().size(); ++i)
        if (f.images()[i] != g.images()[i])
            return names[i] + ": " + f.images()[i].str() + " != " + g.images()[i].str();
    return "";
}

}  // namespace

CheckReport check_hopf_algebroid(const HopfPtr& h) {
    CheckReport rep;
    auto check_map = [&](const char* name, const AlgebraMap& m) {
        CheckReport sub = m.check();
        rep.add(std::string(name) + " well-defined", sub.all_pass(),
                sub.all_pass() ? "" : sub.summary());
        return sub.all_pass();
    };
    check_map("etaL", h->eta_l());
    check_map("etaR", h->eta_r());
    check_map("counit", h->counit());
    bool antipode_ok = check_map("antipode", h->antipode());
    check_map("comult", h->comult());

    const AlgebraPtr& a0 = h->a0();
    const AlgebraPtr& a1 = h->a1();
    AlgebraMap id0 = AlgebraMap::identity(a0);
    AlgebraMap id1 = AlgebraMap::identity(a1);

    {
        AlgebraMap el = h->eta_l().then(h->counit());
        rep.add("counit o etaL = id", maps_equal_on_generators(el, id0), first_violation(el, id0));
        AlgebraMap er = h->eta_r().then(h->counit());
        rep.add("counit o etaR = id", maps_equal_on_generators(er, id0), first_violation(er, id0));
    }

    const TensorPower& t2 = h->t2();
    {
        // (eps (x) id): slot1 v -> etaL(eps(v)), slot2 v -> v
        std::vector<AlgebraElement> imgs(t2.algebra->nvars(), a1->zero());
        for (std::size_t v = 0; v < a1->nvars(); ++v) {
            imgs[t2.slot_vars[0][v]] = h->eta_l().apply(h->counit().apply(a1->var(v)));
            imgs[t2.slot_vars[1][v]] = a1->var(v);
        }
        AlgebraMap eps_id(t2.algebra, a1, imgs);
        bool wd = eps_id.check().all_pass();
        rep.add("(eps x id) well-defined", wd, "");
        if (wd) {
            AlgebraMap comp = h->comult().then(eps_id);
            rep.add("(eps x id) o comult = id", maps_equal_on_generators(comp, id1),
                    first_violation(comp, id1));
        }
    }
    {
        // (id (x) eps): slot1 v -> v, slot2 v -> etaR(eps(v))
        std::vector<AlgebraElement> imgs(t2.algebra->nvars(), a1->zero());
        for (std::size_t v = 0; v < a1->nvars(); ++v) {
            imgs[t2.slot_vars[0][v]] = a1->var(v);
            imgs[t2.slot_vars[1][v]] = h->eta_r().apply(h->counit().apply(a1->var(v)));
        }
        AlgebraMap id_eps(t2.algebra, a1, imgs);
        bool wd = id_eps.check().all_pass();
        rep.add("(id x eps) well-defined", wd, "");
        if (wd) {
            AlgebraMap comp = h->comult().then(id_eps);
            rep.add("(id x eps) o comult = id", maps_equal_on_generators(comp, id1),
                    first_violation(comp, id1));
        }
    }

    {
        TensorPower t3 = tensor_power(a0, a1, h->eta_l(), h->eta_r(), 3);
        auto embed = [&](std::size_t s1, std::size_t s2) {
            std::vector<AlgebraElement> imgs(t2.algebra->nvars(), t3.algebra->zero());
            for (std::size_t v = 0; v < a1->nvars(); ++v) {
                imgs[t2.slot_vars[0][v]] = t3.algebra->var(t3.slot_vars[s1][v]);
                imgs[t2.slot_vars[1][v]] = t3.algebra->var(t3.slot_vars[s2][v]);
            }
            return AlgebraMap(t2.algebra, t3.algebra, imgs);
        };
        AlgebraMap embed12 = embed(0, 1), embed23 = embed(1, 2);

        std::vector<AlgebraElement> d1_imgs(t2.algebra->nvars(), t3.algebra->zero());
        std::vector<AlgebraElement> d2_imgs(t2.algebra->nvars(), t3.algebra->zero());
        for (std::size_t v = 0; v < a1->nvars(); ++v) {
            d1_imgs[t2.slot_vars[0][v]] = embed12.apply(h->comult().images()[v]);
            d1_imgs[t2.slot_vars[1][v]] = t3.algebra->var(t3.slot_vars[2][v]);
            d2_imgs[t2.slot_vars[0][v]] = t3.algebra->var(t3.slot_vars[0][v]);
            d2_imgs[t2.slot_vars[1][v]] = embed23.apply(h->comult().images()[v]);
        }
        AlgebraMap comult_id(t2.algebra, t3.algebra, d1_imgs);
        AlgebraMap id_comult(t2.algebra, t3.algebra, d2_imgs);
        AlgebraMap lhs = h->comult().then(comult_id);
        AlgebraMap rhs = h->comult().then(id_comult);
        rep.add("coassociativity", maps_equal_on_generators(lhs, rhs), first_violation(lhs, rhs));
    }

    {
        AlgebraMap cr = h->eta_r().then(h->antipode());
        rep.add("antipode o etaR = etaL", maps_equal_on_generators(cr, h->eta_l()),
                first_violation(cr, h->eta_l()));
        AlgebraMap cl = h->eta_l().then(h->antipode());
        rep.add("antipode o etaL = etaR", maps_equal_on_generators(cl, h->eta_r()),
                first_violation(cl, h->eta_r()));
    }
    {
        AlgebraMap cc = h->antipode().then(h->antipode());
        rep.add("antipode involution [optional]", maps_equal_on_generators(cc, id1),
                first_violation(cc, id1));
    }

    if (antipode_ok) {
        // mu(c (x) id) o comult = etaR o eps and mu(id (x) c) o comult = etaL o eps
        std::vector<AlgebraElement> c1(t2.algebra->nvars(), a1->zero());
        std::vector<AlgebraElement> c2(t2.algebra->nvars(), a1->zero());
        for (std::size_t v = 0; v < a1->nvars(); ++v) {
            c1[t2.slot_vars[0][v]] = h->antipode().apply(a1->var(v));
            c1[t2.slot_vars[1][v]] = a1->var(v);
            c2[t2.slot_vars[0][v]] = a1->var(v);
            c2[t2.slot_vars[1][v]] = h->antipode().apply(a1->var(v));
        }
        AlgebraMap mu_c1(t2.algebra, a1, c1), mu_1c(t2.algebra, a1, c2);
        bool wd1 = mu_c1.check().all_pass(), wd2 = mu_1c.check().all_pass();
        rep.add("mu(c x id) well-defined", wd1, "");
        rep.add("mu(id x c) well-defined", wd2, "");
        if (wd1) {
            AlgebraMap lhs = h->comult().then(mu_c1);
            AlgebraMap rhs = h->counit().then(h->eta_r());
            rep.add("mu(c x id) o comult = etaR o eps", maps_equal_on_generators(lhs, rhs),
                    first_violation(lhs, rhs));
        }
        if (wd2) {
            AlgebraMap lhs = h->comult().then(mu_1c);
            AlgebraMap rhs = h->counit().then(h->eta_l());
            rep.add("mu(id x c) o comult = etaL o eps", maps_equal_on_generators(lhs, rhs),
                    first_violation(lhs, rhs));
        }
    }
    return rep;
}

// --- split algebroids ----------------------------------------------------------

HopfPtr split_algebroid(const std::string& name, const AlgebraPtr& a,
                        const HopfPtr& hopf_algebra,
                        const std::vector<TensorExpr>& coaction) {
    const AlgebraPtr& hk = hopf_algebra->a0();
    const AlgebraPtr& h1 = hopf_algebra->a1();
    if (hk->nvars() != 0)
        throw InvalidArgument("split_algebroid needs a Hopf algebra over the base field");
    if (hk->characteristic() != a->characteristic())
        throw InvalidArgument("split_algebroid: characteristic mismatch");
    if (coaction.size() != a->nvars())
        throw InvalidArgument("coaction needs one image per variable of A");

    // A1 = H (x) A: variables of H then variables of A
    std::vector<std::string> names;
    std::vector<std::size_t> hmap(h1->nvars()), amap(a->nvars());
    for (std::size_t v = 0; v < h1->nvars(); ++v) {
        hmap[v] = names.size();
        names.push_back(h1->ctx()->var_names[v]);
    }
    for (std::size_t v = 0; v < a->nvars(); ++v) {
        if (std::find(names.begin(), names.end(), a->ctx()->var_names[v]) != names.end())
            throw InvalidArgument("variable name collision between H and A");
        amap[v] = names.size();
        names.push_back(a->ctx()->var_names[v]);
    }
    auto ctx = make_ring_ctx(a->characteristic(), names);
    std::vector<Poly> rels;
    for (const auto& r : h1->relations()) rels.push_back(poly_rename(r, ctx, hmap));
    for (const auto& r : a->relations()) rels.push_back(poly_rename(r, ctx, amap));
    AlgebraPtr a1 = PresentedAlgebra::create(
        ctx, std::move(rels), std::max(a->budget_limit(), h1->budget_limit()));

    auto lift_h = [&](const Poly& p) { return a1->nf(poly_rename(p, ctx, hmap)); };
    auto lift_a = [&](const Poly& p) { return a1->nf(poly_rename(p, ctx, amap)); };

    // etaL(a) = 1 (x) a, etaR = the coaction
    std::vector<AlgebraElement> etal_imgs, etar_imgs;
    for (std::size_t v = 0; v < a->nvars(); ++v) {
        etal_imgs.push_back(a1->var(amap[v]));
        AlgebraElement acc = a1->zero();
        for (const auto& [hp, ap] : coaction[v]) acc = acc + lift_h(hp) * lift_a(ap);
        etar_imgs.push_back(std::move(acc));
    }

    // counit law of the coaction: (eps_H (x) id) alpha = id, per generator
    for (std::size_t v = 0; v < a->nvars(); ++v) {
        AlgebraElement acc = a->zero();
        for (const auto& [hp, ap] : coaction[v]) {
            AlgebraElement eh = hopf_algebra->counit().apply(h1->nf(hp));
            Scalar c = eh.is_zero() ? Scalar::zero(a->characteristic())
                                    : eh.poly().terms()[0].coeff;
            acc = acc + a->nf(ap).scaled(c);
        }
        if (acc != a->var(v))
            throw InvalidArgument("invalid coaction: counit law fails on generator '" +
                                  a->ctx()->var_names[v] + "' (gives " + acc.str() + ")");
    }

    std::vector<AlgebraElement> counit_imgs, antipode_imgs;
    for (std::size_t v = 0; v < h1->nvars(); ++v) {
        AlgebraElement eh = hopf_algebra->counit().apply(h1->var(v));
        Scalar c = eh.is_zero() ? Scalar::zero(a->characteristic()) : eh.poly().terms()[0].coeff;
        counit_imgs.push_back(a->scalar(c));
        antipode_imgs.push_back(lift_h(hopf_algebra->antipode().images()[v].poly()));
    }
    for (std::size_t v = 0; v < a->nvars(); ++v) {
        counit_imgs.push_back(a->var(v));
        antipode_imgs.push_back(etar_imgs[v]);  // c(1 (x) a) = alpha(a)
    }

    std::vector<TensorExpr> comult;
    for (std::size_t v = 0; v < h1->nvars(); ++v) {
        TensorExpr e;
        for (const auto& [p, q] : hopf_algebra->comult_data()[v])
            e.emplace_back(poly_rename(p, ctx, hmap), poly_rename(q, ctx, hmap));
        comult.push_back(std::move(e));
    }
    for (std::size_t v = 0; v < a->nvars(); ++v) {
        TensorExpr e;
        e.emplace_back(Poly::variable(ctx, amap[v]),
                       Poly::constant(ctx, Scalar::one(ctx->characteristic)));
        comult.push_back(std::move(e));
    }

    HopfData data;
    data.name = name;
    data.a0 = a;
    data.a1 = a1;
    data.eta_l = AlgebraMap(a, a1, etal_imgs);
    data.eta_r = AlgebraMap(a, a1, etar_imgs);
    data.counit = AlgebraMap(a1, a, counit_imgs);
    data.antipode = AlgebraMap(a1, a1, antipode_imgs);
    data.comult = std::move(comult);
    hopf_algebra->require_free_finite("split_algebroid");
    data.flatness = Flatness::free_finite;
    for (const auto& m : hopf_algebra->basis_monomials()) {
        Poly b = poly_rename(Poly::monomial(h1->ctx(), m, Scalar::one(ctx->characteristic)),
                             ctx, hmap);
        data.basis.push_back(std::move(b));
    }

    HopfPtr out = HopfAlgebroid::create(std::move(data));
    CheckReport rep = check_hopf_algebroid(out);
    if (!rep.all_pass())
        throw InvalidArgument("split algebroid fails the axioms:\n" + rep.summary());
    return out;
}

// --- fixtures -------------------------------------------------------------------

namespace {

HopfPtr make_f1(uint64_t budget) {
    auto f2 = PresentedAlgebra::field(2, budget);
    auto a1 = PresentedAlgebra::create(2, {"e"}, {"e^2 + e"}, budget);
    HopfData d;
    d.name = "F1";
    d.a0 = f2;
    d.a1 = a1;
    d.eta_l = AlgebraMap(f2, a1, {});
    d.eta_r = AlgebraMap(f2, a1, {});
    d.counit = AlgebraMap(a1, f2, {f2->zero()});
    d.antipode = AlgebraMap(a1, a1, {a1->parse("e")});
    d.comult = {{{parse_poly(a1->ctx(), "e"), parse_poly(a1->ctx(), "1")},
                 {parse_poly(a1->ctx(), "1"), parse_poly(a1->ctx(), "e")}}};
    d.flatness = Flatness::free_finite;
    d.basis = {parse_poly(a1->ctx(), "1"), parse_poly(a1->ctx(), "e")};
    return HopfAlgebroid::create(std::move(d));
}

HopfPtr make_f2(uint64_t budget) {
    auto q = PresentedAlgebra::field(0, budget);
    auto a1 = PresentedAlgebra::create(0, {"t", "s"}, {"t*s - 1"}, budget);
    HopfData d;
    d.name = "F2";
    d.a0 = q;
    d.a1 = a1;
    d.eta_l = AlgebraMap(q, a1, {});
    d.eta_r = AlgebraMap(q, a1, {});
    d.counit = AlgebraMap(a1, q, {q->one(), q->one()});
    d.antipode = AlgebraMap(a1, a1, {a1->parse("s"), a1->parse("t")});
    d.comult = {{{parse_poly(a1->ctx(), "t"), parse_poly(a1->ctx(), "t")}},
                {{parse_poly(a1->ctx(), "s"), parse_poly(a1->ctx(), "s")}}};
    d.flatness = Flatness::user_declared;
    return HopfAlgebroid::create(std::move(d));
}

HopfPtr make_h_z2(uint64_t budget) {
    auto q = PresentedAlgebra::field(0, budget);
    auto h1 = PresentedAlgebra::create(0, {"g"}, {"g^2 - 1"}, budget);
    HopfData d;
    d.name = "H(Z/2)";
    d.a0 = q;
    d.a1 = h1;
    d.eta_l = AlgebraMap(q, h1, {});
    d.eta_r = AlgebraMap(q, h1, {});
    d.counit = AlgebraMap(h1, q, {q->one()});
    d.antipode = AlgebraMap(h1, h1, {h1->parse("g")});
    d.comult = {{{parse_poly(h1->ctx(), "g"), parse_poly(h1->ctx(), "g")}}};
    d.flatness = Flatness::free_finite;
    d.basis = {parse_poly(h1->ctx(), "1"), parse_poly(h1->ctx(), "g")};
    return HopfAlgebroid::create(std::move(d));
}

HopfPtr make_f3(uint64_t budget) {
    auto a = PresentedAlgebra::create(0, {"x"}, {}, budget);
    HopfPtr h = make_h_z2(budget);
    TensorExpr alpha_x;
    alpha_x.emplace_back(parse_poly(h->a1()->ctx(), "g"), parse_poly(a->ctx(), "x"));
    return split_algebroid("F3", a, h, {alpha_x});
}

}  // namespace

HopfPtr fixture_algebroid(const std::string& id, uint64_t budget) {
    if (id == "F1") return make_f1(budget);
    if (id == "F2") return make_f2(budget);
    if (id == "F3") return make_f3(budget);
    throw InvalidArgument("unknown fixture '" + id + "' (expected F1, F2 or F3)");
}

std::vector<std::pair<std::string, std::string>> fixture_descriptions() {
    return {
        {"F1", "(F_2, F_2^{Z/2}): functions on Z/2 over F_2; A1 free of rank 2"},
        {"F2", "(Q, Q[t,t^-1]): the multiplicative group; comodules are Z-graded "
               "vector spaces (graded backend)"},
        {"F3", "(Q[x], H (x) Q[x]) with H = Q[g]/(g^2-1) acting by x -> g (x) x; "
               "A1 free of rank 2 over Q[x]"},
    };
}

}  // namespace cobar
