#include "cobar/complexes.hpp"

#include <algorithm>

namespace cobar {

Complex::Complex(HopfPtr algebroid, std::map<int, ComodulePtr> terms,
                 std::map<int, ComoduleMap> diffs)
    : algebroid_(std::move(algebroid)), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    // drop zero terms, keep the rest immutable
    std::erase_if(terms_, [](const auto& kv) { return kv.second->n_gens() == 0; });
    for (const auto& [n, d] : diffs_) {
        if (d.source.get() != term(n).get() || d.target.get() != term(n + 1).get())
            throw InvalidArgument("differential endpoints disagree with the terms at degree " +
                                  std::to_string(n));
    }
    for (const auto& [n, d] : diffs_) {
        if (diffs_.count(n + 1) && !d.then(diffs_.at(n + 1)).is_zero_map())
            throw InvalidArgument("d o d != 0 at degree " + std::to_string(n));
    }
}

Complex Complex::single(const ComodulePtr& m, int degree) {
    std::map<int, ComodulePtr> t;
    t[degree] = m;
    return Complex(m->algebroid(), std::move(t), {});
}

Complex Complex::zero(const HopfPtr& h) { return Complex(h, {}, {}); }

ComodulePtr Complex::term(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? zero_comodule(algebroid_) : it->second;
}

ComoduleMap Complex::diff(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return ComoduleMap::zero(term(n), term(n + 1));
}

int Complex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Complex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Complex Complex::shifted(int k) const {
    std::map<int, ComodulePtr> t;
    std::map<int, ComoduleMap> d;
    for (const auto& [n, m] : terms_) t[n - k] = m;
    const AlgebraPtr& a0 = algebroid_->a0();
    AlgebraElement sign = (k % 2 == 0) ? a0->one() : -a0->one();
    for (const auto& [n, f] : diffs_)
        d.emplace(n - k, ComoduleMap(f.source, f.target, f.map.scaled(sign)));
    return Complex(algebroid_, std::move(t), std::move(d));
}

ChainMap::ChainMap(Complex src, Complex tgt, std::map<int, ComoduleMap> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
    std::erase_if(components, [](const auto& kv) { return kv.second.map.matrix().rows() == 0 &&
                                                          kv.second.map.matrix().cols() == 0; });
    for (const auto& [n, f] : components) {
        if (f.source.get() != source.term(n).get() || f.target.get() != target.term(n).get())
            throw InvalidArgument("chain map component endpoints mismatch at degree " +
                                  std::to_string(n));
    }
    int lo = std::min(source.min_degree(), target.min_degree());
    int hi = std::max(source.max_degree(), target.max_degree());
    for (int n = lo; n <= hi; ++n) {
        ComoduleMap lhs = component(n).then(target.diff(n));
        ComoduleMap rhs = source.diff(n).then(component(n + 1));
        if (!lhs.equals(rhs))
            throw InvalidArgument("chain map does not commute with differentials at degree " +
                                  std::to_string(n));
    }
}

ComoduleMap ChainMap::component(int n) const {
    auto it = components.find(n);
    if (it != components.end()) return it->second;
    return ComoduleMap::zero(source.term(n), target.term(n));
}

ChainMap ChainMap::identity(const Complex& c) {
    std::map<int, ComoduleMap> comps;
    for (const auto& [n, m] : c.terms()) comps.emplace(n, ComoduleMap::identity(m));
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const Complex& src, const Complex& tgt) {
    return ChainMap(src, tgt, {});
}

ComodulePtr homology(const Complex& c, int n) {
    if (!c.has_term(n)) return zero_comodule(c.algebroid());
    ComoduleKernel k = kernel_comodule(c.diff(n));
    ComoduleMap into = corestrict_comodule(c.diff(n - 1), k);
    return cokernel_comodule(into).module;
}

bool is_exact(const Complex& c) {
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        if (!homology(c, n)->underlying()->is_zero_module()) return false;
    return true;
}

Complex cone(const ChainMap& f) {
    const HopfPtr& h = f.source.algebroid();
    const AlgebraPtr& a0 = h->a0();
    std::map<int, ComodulePtr> terms;
    std::map<int, ComoduleSum> sums;
    int lo = std::min(f.source.min_degree() - 1, f.target.min_degree());
    int hi = std::max(f.source.max_degree() - 1, f.target.max_degree());
    for (int n = lo; n <= hi; ++n) {
        ComoduleSum s = direct_sum_comodules({f.source.term(n + 1), f.target.term(n)});
        if (s.module->n_gens() > 0) {
            sums.emplace(n, s);
            terms[n] = s.module;
        }
    }
    std::map<int, ComoduleMap> diffs;
    for (int n = lo; n < hi; ++n) {
        if (!sums.count(n) || !sums.count(n + 1)) continue;
        const ComoduleSum& s = sums.at(n);
        const ComoduleSum& t = sums.at(n + 1);
        // d(c, x) = (-d_C c, f(c) + d_D x)
        ModuleMap d =
            s.projections[0].then(f.source.diff(n + 1)).then(t.injections[0]).map.scaled(
                -a0->one()) +
            s.projections[0].then(f.component(n + 1)).then(t.injections[1]).map +
            s.projections[1].then(f.target.diff(n)).then(t.injections[1]).map;
        diffs.emplace(n, ComoduleMap(s.module, t.module, d.matrix()));
    }
    return Complex(h, std::move(terms), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) {
    if (f.source.is_zero() && f.target.is_zero()) return true;
    return is_exact(cone(f));
}

namespace {

void require_projective_terms(const Complex& c, bool allow_underived, const char* what) {
    if (allow_underived) return;
    for (const auto& [n, m] : c.terms())
        if (!projectivity_certificate(m->underlying()))
            throw InvalidArgument(std::string(what) +
                                  ": term without a projectivity certificate at degree " +
                                  std::to_string(n) + " (pass the underived flag to force)");
}

struct TotalDegree {
    std::map<int, std::vector<std::pair<int, int>>> blocks;  // n -> [(r, s)]
    std::map<int, ComoduleSum> sums;
};

TotalDegree total_terms(const Complex& c, const Complex& d) {
    TotalDegree t;
    for (const auto& [r, cm] : c.terms())
        for (const auto& [s, dm] : d.terms()) t.blocks[r + s].push_back({r, s});
    for (auto& [n, blks] : t.blocks) {
        std::sort(blks.begin(), blks.end());
        std::vector<ComodulePtr> parts;
        for (auto [r, s] : blks) parts.push_back(ctensor(c.term(r), d.term(s)));
        t.sums.emplace(n, direct_sum_comodules(parts));
    }
    return t;
}

std::size_t block_index(const std::vector<std::pair<int, int>>& blks, int r, int s) {
    auto it = std::find(blks.begin(), blks.end(), std::make_pair(r, s));
    return static_cast<std::size_t>(it - blks.begin());
}

}  // namespace

Complex tensor_complexes(const Complex& c, const Complex& d, bool allow_underived) {
    require_projective_terms(c, allow_underived, "tensor_complexes (left)");
    require_projective_terms(d, allow_underived, "tensor_complexes (right)");
    const HopfPtr& h = c.algebroid();
    const AlgebraPtr& a0 = h->a0();

    TotalDegree t = total_terms(c, d);
    std::map<int, ComodulePtr> terms;
    for (const auto& [n, s] : t.sums) terms[n] = s.module;

    std::map<int, ComoduleMap> diffs;
    for (const auto& [n, s] : t.sums) {
        auto next = t.sums.find(n + 1);
        if (next == t.sums.end()) continue;
        const auto& src_blocks = t.blocks.at(n);
        const auto& tgt_blocks = t.blocks.at(n + 1);
        ModuleMap acc = ModuleMap::zero(s.module->underlying(), next->second.module->underlying());
        for (std::size_t b = 0; b < src_blocks.size(); ++b) {
            auto [r, sdeg] = src_blocks[b];
            if (c.has_term(r + 1)) {
                std::size_t tb = block_index(tgt_blocks, r + 1, sdeg);
                if (tb < tgt_blocks.size()) {
                    ComoduleMap leg = s.projections[b]
                                          .then(ctensor_map(c.diff(r), ComoduleMap::identity(d.term(sdeg))))
                                          .then(next->second.injections[tb]);
                    acc = acc + leg.map;
                }
            }
            if (d.has_term(sdeg + 1)) {
                std::size_t tb = block_index(tgt_blocks, r, sdeg + 1);
                if (tb < tgt_blocks.size()) {
                    ComoduleMap leg = s.projections[b]
                                          .then(ctensor_map(ComoduleMap::identity(c.term(r)), d.diff(sdeg)))
                                          .then(next->second.injections[tb]);
                    AlgebraElement sign = (r % 2 == 0) ? a0->one() : -a0->one();
                    acc = acc + leg.map.scaled(sign);
                }
            }
        }
        diffs.emplace(n, ComoduleMap(s.module, next->second.module, acc.matrix()));
    }
    return Complex(h, std::move(terms), std::move(diffs));
}

ChainMap symmetry_chain_map(const Complex& c, const Complex& d, bool allow_underived) {
    Complex cd = tensor_complexes(c, d, allow_underived);
    Complex dc = tensor_complexes(d, c, allow_underived);
    const AlgebraPtr& a0 = c.algebroid()->a0();

    TotalDegree tcd = total_terms(c, d);
    TotalDegree tdc = total_terms(d, c);
    std::map<int, ComoduleMap> comps;
    for (const auto& [n, s] : tcd.sums) {
        const auto& src_blocks = tcd.blocks.at(n);
        const auto& tgt_blocks = tdc.blocks.at(n);
        const ComoduleSum& t = tdc.sums.at(n);
        ModuleMap acc = ModuleMap::zero(s.module->underlying(), t.module->underlying());
        for (std::size_t b = 0; b < src_blocks.size(); ++b) {
            auto [r, sdeg] = src_blocks[b];
            std::size_t tb = block_index(tgt_blocks, sdeg, r);
            ComoduleMap leg = s.projections[b]
                                  .then(symmetry_witness(c.term(r), d.term(sdeg)).forward)
                                  .then(t.injections[tb]);
            AlgebraElement sign = ((r * sdeg) % 2 == 0) ? a0->one() : -a0->one();
            acc = acc + leg.map.scaled(sign);
        }
        comps.emplace(n, ComoduleMap(s.module, t.module, acc.matrix()));
    }
    return ChainMap(cd, dc, std::move(comps));
}

Complex hom_complexes(const Complex& c, const Complex& d) {
    const HopfPtr& h = c.algebroid();
    h->require_free_finite("hom_complexes");
    const AlgebraPtr& a0 = h->a0();

    // blocks of Hom^n: pairs (r, s) with s - r = n
    std::map<int, std::vector<std::pair<int, int>>> blocks;
    for (const auto& [r, cm] : c.terms())
        for (const auto& [s, dm] : d.terms()) blocks[s - r].push_back({r, s});
    std::map<int, ComoduleSum> sums;
    std::map<int, ComodulePtr> terms;
    for (auto& [n, blks] : blocks) {
        std::sort(blks.begin(), blks.end());
        std::vector<ComodulePtr> parts;
        for (auto [r, s] : blks) parts.push_back(chom(c.term(r), d.term(s)).comodule);
        ComoduleSum sum = direct_sum_comodules(parts);
        if (sum.module->n_gens() > 0) {
            sums.emplace(n, sum);
            terms[n] = sum.module;
        }
    }

    std::map<int, ComoduleMap> diffs;
    for (const auto& [n, s] : sums) {
        auto next = sums.find(n + 1);
        if (next == sums.end()) continue;
        const auto& src_blocks = blocks.at(n);
        const auto& tgt_blocks = blocks.at(n + 1);
        ModuleMap acc = ModuleMap::zero(s.module->underlying(), next->second.module->underlying());
        for (std::size_t b = 0; b < src_blocks.size(); ++b) {
            auto [r, sdeg] = src_blocks[b];
            // post-compose with d_D
            if (d.has_term(sdeg + 1)) {
                std::size_t tb = block_index(tgt_blocks, r, sdeg + 1);
                if (tb < tgt_blocks.size()) {
                    ComoduleMap leg =
                        s.projections[b]
                            .then(chom_map_covariant(chom(c.term(r), d.term(sdeg)),
                                                     chom(c.term(r), d.term(sdeg + 1)),
                                                     d.diff(sdeg)))
                            .then(next->second.injections[tb]);
                    acc = acc + leg.map;
                }
            }
            // pre-compose with d_C, sign -(-1)^n
            if (c.has_term(r - 1)) {
                std::size_t tb = block_index(tgt_blocks, r - 1, sdeg);
                if (tb < tgt_blocks.size()) {
                    ComoduleMap leg =
                        s.projections[b]
                            .then(chom_map_contravariant(chom(c.term(r), d.term(sdeg)),
                                                         chom(c.term(r - 1), d.term(sdeg)),
                                                         c.diff(r - 1)))
                            .then(next->second.injections[tb]);
                    AlgebraElement sign = (n % 2 == 0) ? -a0->one() : a0->one();
                    acc = acc + leg.map.scaled(sign);
                }
            }
        }
        diffs.emplace(n, ComoduleMap(s.module, next->second.module, acc.matrix()));
    }
    return Complex(h, std::move(terms), std::move(diffs));
}

// --- cobar --------------------------------------------------------------------

namespace {

ComoduleMap iterate_extend(const HopfPtr& h, ComoduleMap f, int times) {
    for (int i = 0; i < times; ++i) f = extend_map(h, f.map);
    return f;
}

}  // namespace

CobarData cobar_resolution(const ComodulePtr& m, int s_max) {
    const HopfPtr& h = m->algebroid();
    h->require_free_finite("cobar");
    if (s_max < 0) throw InvalidArgument("cobar depth must be nonnegative");

    CobarData out;
    out.source = m;
    out.depth = s_max;

    // the tower X_0 = M, X_{a+1} = extend(U X_a), with psi_a : X_a -> X_{a+1}
    std::vector<ComodulePtr> tower{m};
    std::vector<ComoduleMap> psis;
    for (int a = 0; a <= s_max; ++a) {
        psis.push_back(coaction_map(tower.back()));
        tower.push_back(psis.back().target);
    }
    for (int s = 0; s <= s_max; ++s) out.terms.push_back(tower[s + 1]);
    out.augmentation = psis[0];

    const AlgebraPtr& a0 = h->a0();
    for (int s = 0; s + 1 <= s_max; ++s) {
        // d^s = sum_{i=0}^{s+1} (-1)^i T^i(psi_{X_{s+1-i}})
        ComoduleMap acc = ComoduleMap::zero(tower[s + 1], tower[s + 2]);
        for (int i = 0; i <= s + 1; ++i) {
            ComoduleMap coface = iterate_extend(h, psis[s + 1 - i], i);
            AlgebraElement sign = (i % 2 == 0) ? a0->one() : -a0->one();
            acc = acc + ComoduleMap(coface.source, coface.target, coface.map.scaled(sign));
        }
        out.diffs.push_back(acc);
    }
    return out;
}

Complex CobarData::complex() const {
    std::map<int, ComodulePtr> t;
    std::map<int, ComoduleMap> d;
    for (int s = 0; s <= depth; ++s) t[s] = terms[static_cast<std::size_t>(s)];
    for (std::size_t s = 0; s < diffs.size(); ++s) d.emplace(static_cast<int>(s), diffs[s]);
    return Complex(source->algebroid(), std::move(t), std::move(d));
}

Complex CobarData::augmented() const {
    std::map<int, ComodulePtr> t;
    std::map<int, ComoduleMap> d;
    t[-1] = source;
    d.emplace(-1, augmentation);
    for (int s = 0; s <= depth; ++s) t[s] = terms[static_cast<std::size_t>(s)];
    for (std::size_t s = 0; s < diffs.size(); ++s) d.emplace(static_cast<int>(s), diffs[s]);
    return Complex(source->algebroid(), std::move(t), std::move(d));
}

std::vector<std::size_t> ext_dims(const ComodulePtr& m, int s_max) {
    const HopfPtr& h = m->algebroid();
    h->require_free_finite("ext_dims");
    if (!h->a0()->is_field())
        throw CapabilityError("ext_dims needs the base A0 to be a field");
    unsigned p = h->a0()->characteristic();
    ComodulePtr unit = trivial_comodule(h);

    CobarData cb = cobar_resolution(m, s_max + 1);

    // W_s = U(T^s M) as a vector space; tower[0] = M itself
    std::vector<ModulePtr> w;
    w.push_back(m->underlying());
    for (int s = 0; s <= s_max; ++s) w.push_back(cb.terms[static_cast<std::size_t>(s)]->underlying());

    auto scalar_of = [&](const AlgebraElement& e) {
        return e.is_zero() ? Scalar::zero(p) : e.poly().terms()[0].coeff;
    };
    std::vector<QuotientSpace> views;
    for (const auto& mod : w) {
        std::vector<KVec> rel_cols;
        for (std::size_t j = 0; j < mod->relations().cols(); ++j) {
            KVec col;
            for (std::size_t i = 0; i < mod->n_gens(); ++i)
                col.push_back(scalar_of(mod->relations().at(i, j)));
            rel_cols.push_back(std::move(col));
        }
        views.emplace_back(mod->n_gens(), rel_cols, p);
    }

    // delta^s : W_s -> W_{s+1} through Hom(A0, T^{s+1} M) ~ W_s
    std::vector<KMat> deltas;
    for (int s = 0; s <= s_max; ++s) {
        const QuotientSpace& src = views[static_cast<std::size_t>(s)];
        const QuotientSpace& tgt = views[static_cast<std::size_t>(s) + 1];
        KMat delta(tgt.dim(), src.dim(), p);
        for (std::size_t b = 0; b < src.dim(); ++b) {
            KVec lift = src.lift(b);
            Mat g(h->a0(), w[static_cast<std::size_t>(s)]->n_gens(), 1);
            for (std::size_t i = 0; i < lift.size(); ++i) g.at(i, 0) = h->a0()->scalar(lift[i]);
            ModuleMap g0(unit->underlying(), w[static_cast<std::size_t>(s)], g);
            ComoduleMap hv = adjoint_back(unit, g0);  // A0 -> T^{s+1} M
            ModuleMap img = adjoint_forward(hv.then(cb.diffs[static_cast<std::size_t>(s)]));
            KVec col;
            for (std::size_t i = 0; i < w[static_cast<std::size_t>(s) + 1]->n_gens(); ++i)
                col.push_back(scalar_of(img.matrix().at(i, 0)));
            KVec reduced = tgt.reduce(col);
            for (std::size_t i = 0; i < tgt.dim(); ++i) delta.at(i, b) = reduced[i];
        }
        deltas.push_back(std::move(delta));
    }

    std::vector<std::size_t> dims;
    for (int s = 0; s <= s_max; ++s) {
        std::size_t dim_ker =
            views[static_cast<std::size_t>(s)].dim() - rank(deltas[static_cast<std::size_t>(s)]);
        std::size_t rank_prev = (s == 0) ? 0 : rank(deltas[static_cast<std::size_t>(s) - 1]);
        dims.push_back(dim_ker - rank_prev);
    }
    return dims;
}

}  // namespace cobar
