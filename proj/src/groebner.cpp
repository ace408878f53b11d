#include "cobar/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace cobar {

ModVec ModVec::operator+(const ModVec& o) const {
    ModVec r(*this);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    return r;
}

ModVec ModVec::operator-(const ModVec& o) const {
    ModVec r(*this);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
    return r;
}

ModVec ModVec::times_term(const Term& t) const {
    ModVec r(*this);
    for (auto& p : r.c) p = p.times_term(t);
    return r;
}

ModVec ModVec::scaled(const Scalar& s) const {
    ModVec r(*this);
    for (auto& p : r.c) p = p.scaled(s);
    return r;
}

namespace {

struct Lead {
    std::size_t comp;
    const Term* term;
};

Lead lead_of(const ModVec& v) {
    std::size_t c = v.lead_comp();
    return {c, &v.c[c].leading()};
}

ModVec make_monic(ModVec v, ModVec* t) {
    Lead l = lead_of(v);
    Scalar inv = l.term->coeff.inverse();
    if (t) *t = t->scaled(inv);
    return v.scaled(inv);
}

}  // namespace

TrackedGB::TrackedGB(RingCtxPtr ctx, std::size_t rank, std::vector<ModVec> inputs,
                     Budget& budget)
    : ctx_(std::move(ctx)), rank_(rank), n_inputs_(inputs.size()) {
    // seed the working basis with the (nonzero) inputs, tracked as themselves;
    // elements are never removed or modified afterwards, which keeps the
    // tracked syzygies complete
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].rank() != rank_) throw InvalidArgument("module generator rank mismatch");
        ModVec t(ctx_, n_inputs_);
        t.c[i] = Poly::constant(ctx_, Scalar::one(ctx_->characteristic));
        if (inputs[i].is_zero()) {
            syzygies_.push_back(std::move(t));  // a zero column is itself a syzygy
            continue;
        }
        basis_.push_back({std::move(inputs[i]), std::move(t)});
    }

    struct Pair {
        uint64_t deg;
        Monomial lcm;
        std::size_t comp, i, j;
    };
    std::vector<Pair> pending;
    auto add_pairs = [&](std::size_t k) {
        Lead lk = lead_of(basis_[k].v);
        for (std::size_t i = 0; i < k; ++i) {
            Lead li = lead_of(basis_[i].v);
            if (li.comp != lk.comp) continue;
            Monomial m = Monomial::lcm(li.term->mono, lk.term->mono);
            pending.push_back({m.degree(), std::move(m), lk.comp, i, k});
        }
    };
    for (std::size_t k = 0; k < basis_.size(); ++k) add_pairs(k);

    // normal selection strategy: smallest (component, degree, lcm, i, j);
    // every pair is processed so that zero reductions enumerate a full
    // generating set of syzygies
    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            int cmp;
            if (a.comp != b.comp) cmp = a.comp < b.comp ? -1 : 1;
            else if (a.deg != b.deg) cmp = a.deg < b.deg ? -1 : 1;
            else if (int c = ctx_->order.compare(a.lcm, b.lcm); c != 0) cmp = c;
            else if (a.i != b.i) cmp = a.i < b.i ? -1 : 1;
            else cmp = a.j < b.j ? -1 : 1;
            if (cmp < 0) best = k;
        }
        Pair p = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<long>(best));

        const Elem &gi = basis_[p.i], &gj = basis_[p.j];
        Lead li = lead_of(gi.v), lj = lead_of(gj.v);
        Term ti{li.term->mono.quotient_of(p.lcm), li.term->coeff.inverse()};
        Term tj{lj.term->mono.quotient_of(p.lcm), lj.term->coeff.inverse()};
        ModVec w = gi.v.times_term(ti) - gj.v.times_term(tj);
        ModVec t0 = gi.t.times_term(ti) - gj.t.times_term(tj);
        budget.step();

        // r = tau * inputs, where tau = t0 - (combination used by reduce)
        ModVec tq(ctx_, n_inputs_);
        ModVec r = reduce(std::move(w), &tq, budget);
        ModVec tau = t0 - tq;
        if (r.is_zero()) {
            if (!tau.is_zero()) syzygies_.push_back(std::move(tau));
            continue;
        }
        r = make_monic(std::move(r), &tau);
        basis_.push_back({std::move(r), std::move(tau)});
        add_pairs(basis_.size() - 1);
    }
}

ModVec TrackedGB::reduce(ModVec w, ModVec* t, Budget& budget) const {
    // full reduction; the invariant maintained is
    //   original = w + remainder + (*t applied to inputs)
    ModVec rem(ctx_, rank_);
    while (!w.is_zero()) {
        Lead lw = lead_of(w);
        bool reduced = false;
        for (const auto& e : basis_) {
            Lead le = lead_of(e.v);
            if (le.comp != lw.comp || !le.term->mono.divides(lw.term->mono)) continue;
            budget.step();
            Term q{le.term->mono.quotient_of(lw.term->mono),
                   lw.term->coeff / le.term->coeff};
            w = w - e.v.times_term(q);
            if (t) *t = *t + e.t.times_term(q);
            reduced = true;
            break;
        }
        if (!reduced) {
            budget.step();
            rem.c[lw.comp] = rem.c[lw.comp] + Poly::monomial(ctx_, lw.term->mono, lw.term->coeff);
            w.c[lw.comp] = w.c[lw.comp] - Poly::monomial(ctx_, lw.term->mono, lw.term->coeff);
        }
    }
    return rem;
}

ModVec TrackedGB::normal_form(const ModVec& v, Budget& budget) const {
    return reduce(v, nullptr, budget);
}

bool TrackedGB::contains(const ModVec& v, Budget& budget) const {
    return normal_form(v, budget).is_zero();
}

std::optional<ModVec> TrackedGB::lift(const ModVec& v, Budget& budget) const {
    ModVec t(ctx_, n_inputs_);
    ModVec r = reduce(v, &t, budget);
    if (!r.is_zero()) return std::nullopt;
    return t;
}

std::vector<ModVec> TrackedGB::basis() const {
    std::vector<ModVec> out;
    out.reserve(basis_.size());
    for (const auto& e : basis_) out.push_back(e.v);
    return out;
}

namespace {

// generic full reduction against a fixed list (deterministic: first divisor)
ModVec reduce_against(const RingCtxPtr& ctx, std::size_t rank, ModVec w,
                      const std::vector<ModVec>& basis, Budget& budget) {
    ModVec rem(ctx, rank);
    while (!w.is_zero()) {
        Lead lw = lead_of(w);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Lead lg = lead_of(g);
            if (lg.comp != lw.comp || !lg.term->mono.divides(lw.term->mono)) continue;
            budget.step();
            Term q{lg.term->mono.quotient_of(lw.term->mono),
                   lw.term->coeff / lg.term->coeff};
            w = w - g.times_term(q);
            reduced = true;
            break;
        }
        if (!reduced) {
            budget.step();
            rem.c[lw.comp] = rem.c[lw.comp] + Poly::monomial(ctx, lw.term->mono, lw.term->coeff);
            w.c[lw.comp] = w.c[lw.comp] - Poly::monomial(ctx, lw.term->mono, lw.term->coeff);
        }
    }
    return rem;
}

bool lead_less(const RingCtxPtr& ctx, const ModVec& a, const ModVec& b) {
    Lead la = lead_of(a), lb = lead_of(b);
    if (la.comp != lb.comp) return la.comp < lb.comp;
    return ctx->order.compare(la.term->mono, lb.term->mono) < 0;
}

}  // namespace

std::vector<ModVec> reduced_module_basis(RingCtxPtr ctx, std::size_t rank,
                                         const std::vector<ModVec>& gens,
                                         Budget& budget) {
    TrackedGB gb(ctx, rank, gens, budget);
    std::vector<ModVec> basis = gb.basis();

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<ModVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Lead li = lead_of(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Lead lj = lead_of(basis[j]);
            if (lj.comp != li.comp || !lj.term->mono.divides(li.term->mono)) continue;
            if (lj.term->mono == li.term->mono && j > i) continue;  // keep first of equals
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each against the others and normalize
    std::vector<ModVec> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        ModVec r = reduce_against(ctx, rank, minimal[i], others, budget);
        if (r.is_zero()) continue;  // fully redundant element
        reduced.push_back(make_monic(std::move(r), nullptr));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const ModVec& a, const ModVec& b) { return lead_less(ctx, a, b); });
    return reduced;
}

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis,
                          Budget& budget) {
    if (v.is_zero()) return v;
    const RingCtxPtr& ctx = v.c[0].ctx();
    return reduce_against(ctx, v.rank(), v, basis, budget);
}

std::vector<ModVec> module_syzygies(RingCtxPtr ctx, std::size_t rank,
                                    const std::vector<ModVec>& gens, Budget& budget) {
    TrackedGB gb(ctx, rank, gens, budget);
    return reduced_module_basis(ctx, gens.size(), gb.syzygies(), budget);
}

std::vector<Poly> groebner_basis(RingCtxPtr ctx, const std::vector<Poly>& gens,
                                 Budget& budget) {
    std::vector<ModVec> vecs;
    for (const auto& g : gens) {
        ModVec v(ctx, 1);
        v.c[0] = g;
        vecs.push_back(std::move(v));
    }
    std::vector<ModVec> basis = reduced_module_basis(ctx, 1, vecs, budget);
    std::vector<Poly> out;
    out.reserve(basis.size());
    for (auto& v : basis) out.push_back(std::move(v.c[0]));
    return out;
}

Poly poly_normal_form(const Poly& f, const std::vector<Poly>& basis, Budget& budget) {
    ModVec v(f.ctx(), 1);
    v.c[0] = f;
    std::vector<ModVec> b;
    for (const auto& g : basis) {
        ModVec w(f.ctx(), 1);
        w.c[0] = g;
        b.push_back(std::move(w));
    }
    return module_normal_form(v, b, budget).c[0];
}

}  // namespace cobar
