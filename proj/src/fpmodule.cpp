#include "cobar/fpmodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cobar {

namespace {

std::vector<ModVec> matrix_columns(const Mat& m) {
    std::vector<ModVec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(column_to_vec(m, j));
    return cols;
}

Mat syzygy_block_to_mat(const AlgebraPtr& ring, const std::vector<ModVec>& syz,
                        std::size_t block) {
    std::vector<std::vector<AlgebraElement>> cols;
    for (const auto& s : syz) {
        std::vector<AlgebraElement> col;
        col.reserve(block);
        bool nonzero = false;
        for (std::size_t i = 0; i < block; ++i) {
            AlgebraElement e = ring->nf(s.c[i]);
            nonzero = nonzero || !e.is_zero();
            col.push_back(std::move(e));
        }
        if (nonzero) cols.push_back(std::move(col));
    }
    return Mat::from_columns(ring, block, cols);
}

// generators of { x in A^cols(u) : u x == 0 in the quotient presented by rels }
Mat kernel_into_quotient(const Mat& u, const Mat& rels) {
    const AlgebraPtr& ring = u.ring();
    Budget budget = ring->make_budget();
    std::vector<ModVec> gens = matrix_columns(u);
    std::size_t n_main = gens.size();
    for (auto& v : matrix_columns(rels)) gens.push_back(std::move(v));
    for (auto& v : ideal_columns(ring, u.rows())) gens.push_back(std::move(v));
    std::vector<ModVec> syz = module_syzygies(ring->ctx(), u.rows(), gens, budget);
    return syzygy_block_to_mat(ring, syz, n_main);
}

}  // namespace

ModulePtr FPModule::create(AlgebraPtr ring, std::size_t n_gens, Mat relations) {
    if (relations.rows() != n_gens)
        throw InvalidArgument("relation matrix height must equal generator count");
    if (relations.ring().get() != ring.get())
        throw InvalidArgument("relation matrix over the wrong ring");
    // normalize relation entries
    Mat rels(ring, n_gens, relations.cols());
    for (std::size_t i = 0; i < n_gens; ++i)
        for (std::size_t j = 0; j < relations.cols(); ++j)
            rels.at(i, j) = ring->nf(relations.at(i, j).poly());
    return ModulePtr(new FPModule(std::move(ring), n_gens, std::move(rels)));
}

ModulePtr FPModule::free_module(AlgebraPtr ring, std::size_t n) {
    // canonical free modules are memoized so repeated constructions share
    // pointers (maps built independently then compose)
    static std::mutex mu;
    static std::map<std::pair<const PresentedAlgebra*, std::size_t>,
                    std::pair<AlgebraPtr, ModulePtr>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({ring.get(), n});
    if (it != cache.end()) return it->second.second;
    Mat rels(ring, n, 0);
    ModulePtr out = create(ring, n, std::move(rels));
    cache.insert({{ring.get(), n}, {ring, out}});
    return out;
}

ModulePtr FPModule::zero_module(AlgebraPtr ring) { return free_module(std::move(ring), 0); }

const std::vector<ModVec>& FPModule::rel_basis() const {
    std::call_once(basis_once_, [&] {
        Budget budget = ring_->make_budget();
        std::vector<ModVec> gens = matrix_columns(relations_);
        for (auto& v : ideal_columns(ring_, n_gens_)) gens.push_back(std::move(v));
        rel_basis_ = reduced_module_basis(ring_->ctx(), n_gens_, gens, budget);
    });
    return rel_basis_;
}

std::vector<AlgebraElement> FPModule::reduce(const std::vector<AlgebraElement>& coords) const {
    if (coords.size() != n_gens_) throw InvalidArgument("element coordinate size mismatch");
    Budget budget = ring_->make_budget();
    ModVec v = elements_to_vec(ring_->ctx(), coords);
    ModVec r = module_normal_form(v, rel_basis(), budget);
    return vec_to_elements(ring_, r);
}

bool FPModule::is_zero_element(const std::vector<AlgebraElement>& coords) const {
    for (const auto& e : reduce(coords))
        if (!e.is_zero()) return false;
    return true;
}

bool FPModule::is_zero_module() const {
    for (std::size_t i = 0; i < n_gens_; ++i)
        if (!is_zero_element(gen_coords(i))) return false;
    return true;
}

std::vector<AlgebraElement> FPModule::zero_coords() const {
    return std::vector<AlgebraElement>(n_gens_, ring_->zero());
}

std::vector<AlgebraElement> FPModule::gen_coords(std::size_t i) const {
    auto v = zero_coords();
    v.at(i) = ring_->one();
    return v;
}

bool elements_equal(const ModuleElement& a, const ModuleElement& b) {
    if (a.parent.get() != b.parent.get())
        throw InvalidArgument("elements of different modules compared");
    std::vector<AlgebraElement> diff = a.coords;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = diff[i] - b.coords[i];
    return a.parent->is_zero_element(diff);
}

// --- ModuleMap ---------------------------------------------------------------

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_->n_gens() || matrix_.cols() != source_->n_gens())
        throw InvalidArgument("module map matrix shape mismatch");
    if (matrix_.ring().get() != source_->ring().get())
        throw InvalidArgument("module map matrix over the wrong ring");
}

ModuleMap ModuleMap::identity(const ModulePtr& m) {
    return ModuleMap(m, m, Mat::identity(m->ring(), m->n_gens()));
}

ModuleMap ModuleMap::zero(const ModulePtr& source, const ModulePtr& target) {
    return ModuleMap(source, target, Mat(source->ring(), target->n_gens(), source->n_gens()));
}

bool ModuleMap::well_defined() const {
    const Mat& rels = source_->relations();
    if (rels.cols() == 0) return true;
    Mat image = matrix_ * rels;
    for (std::size_t j = 0; j < image.cols(); ++j)
        if (!target_->is_zero_element(image.column(j))) return false;
    return true;
}

std::vector<AlgebraElement> ModuleMap::apply(const std::vector<AlgebraElement>& coords) const {
    if (coords.size() != source_->n_gens()) throw InvalidArgument("map applied to wrong size");
    std::vector<AlgebraElement> out(target_->n_gens(), target_->ring()->zero());
    for (std::size_t i = 0; i < target_->n_gens(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j)
            out[i] = out[i] + matrix_.at(i, j) * coords[j];
    return out;
}

ModuleElement ModuleMap::apply(const ModuleElement& e) const {
    if (e.parent.get() != source_.get()) throw InvalidArgument("map applied to wrong module");
    return ModuleElement{target_, apply(e.coords)};
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
    if (g.source_.get() != target_.get()) throw InvalidArgument("module map composition mismatch");
    return ModuleMap(source_, g.target_, g.matrix_ * matrix_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    return ModuleMap(source_, target_, matrix_ + o.matrix_);
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    return ModuleMap(source_, target_, matrix_ - o.matrix_);
}

ModuleMap ModuleMap::operator-() const {
    Mat zero(matrix_.ring(), matrix_.rows(), matrix_.cols());
    return ModuleMap(source_, target_, zero - matrix_);
}

ModuleMap ModuleMap::scaled(const AlgebraElement& c) const {
    return ModuleMap(source_, target_, matrix_.scaled(c));
}

bool ModuleMap::is_zero_map() const {
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!target_->is_zero_element(matrix_.column(j))) return false;
    return true;
}

bool ModuleMap::equals(const ModuleMap& o) const {
    if (source_.get() != o.source_.get() || target_.get() != o.target_.get())
        throw InvalidArgument("maps with different endpoints compared");
    return (*this - o).is_zero_map();
}

// --- operations ----------------------------------------------------------------

std::optional<Mat> lift_through(const Mat& u, const ModulePtr& target, const Mat& v) {
    const AlgebraPtr& ring = u.ring();
    if (u.rows() != target->n_gens() || v.rows() != target->n_gens())
        throw InvalidArgument("lift_through shape mismatch");
    Budget budget = ring->make_budget();

    std::vector<ModVec> gens = matrix_columns(u);
    std::size_t n_main = gens.size();
    for (auto& w : matrix_columns(target->relations())) gens.push_back(std::move(w));
    for (auto& w : ideal_columns(ring, u.rows())) gens.push_back(std::move(w));
    TrackedGB gb(ring->ctx(), u.rows(), gens, budget);

    Mat x(ring, u.cols(), v.cols());
    for (std::size_t j = 0; j < v.cols(); ++j) {
        auto t = gb.lift(column_to_vec(v, j), budget);
        if (!t) return std::nullopt;
        for (std::size_t i = 0; i < n_main; ++i) x.at(i, j) = ring->nf(t->c[i]);
    }
    return x;
}

KernelResult kernel(const ModuleMap& f) {
    const AlgebraPtr& ring = f.source()->ring();
    // kernel generators: coordinate vectors x with f(x) == 0 in the target
    Mat gens = kernel_into_quotient(f.matrix(), f.target()->relations());
    // relations among those generators: vectors y with gens . y == 0 in the source
    Mat rels = kernel_into_quotient(gens, f.source()->relations());
    ModulePtr k = FPModule::create(ring, gens.cols(), rels);
    return {k, ModuleMap(k, f.source(), gens)};
}

CokernelResult cokernel(const ModuleMap& f) {
    const AlgebraPtr& ring = f.source()->ring();
    Mat rels = f.target()->relations().hcat(f.matrix());
    ModulePtr c = FPModule::create(ring, f.target()->n_gens(), rels);
    return {c, ModuleMap(f.target(), c, Mat::identity(ring, f.target()->n_gens()))};
}

ModuleMap corestrict(const ModuleMap& f, const ModuleMap& inc) {
    if (inc.target().get() != f.target().get())
        throw InvalidArgument("corestrict: targets differ");
    auto x = lift_through(inc.matrix(), f.target(), f.matrix());
    if (!x) throw IntegrityError("corestrict: map does not factor through the submodule");
    return ModuleMap(f.source(), inc.source(), std::move(*x));
}

ModuleMap corestrict(const ModuleMap& f, const KernelResult& k) {
    return corestrict(f, k.inclusion);
}

HomModule hom_module(const ModulePtr& m, const ModulePtr& n) {
    const AlgebraPtr& ring = m->ring();
    if (ring.get() != n->ring().get()) throw InvalidArgument("hom_module: rings differ");
    std::size_t ng = n->n_gens(), mg = m->n_gens();
    std::size_t q = m->relations().cols();
    auto flat = [&](std::size_t i, std::size_t j) { return i * mg + j; };

    // constraints: for every source relation column r, H r == 0 in a direct
    // sum of copies of N (one per relation)
    Mat u(ring, ng * q, ng * mg);
    Mat big_rels(ring, ng * q, q * n->relations().cols());
    for (std::size_t c = 0; c < q; ++c) {
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < mg; ++j)
                u.at(c * ng + i, flat(i, j)) = m->relations().at(j, c);
        for (std::size_t rc = 0; rc < n->relations().cols(); ++rc)
            for (std::size_t i = 0; i < ng; ++i)
                big_rels.at(c * ng + i, c * n->relations().cols() + rc) =
                    n->relations().at(i, rc);
    }
    Mat h_gens = kernel_into_quotient(u, big_rels);

    // trivial maps: columns of N-relations placed in any source slot
    Mat zeta(ring, ng * mg, mg * n->relations().cols());
    for (std::size_t j = 0; j < mg; ++j)
        for (std::size_t rc = 0; rc < n->relations().cols(); ++rc)
            for (std::size_t i = 0; i < ng; ++i)
                zeta.at(flat(i, j), j * n->relations().cols() + rc) = n->relations().at(i, rc);

    Mat hom_rels = kernel_into_quotient(h_gens, zeta);

    HomModule hom;
    hom.m = m;
    hom.n = n;
    hom.module = FPModule::create(ring, h_gens.cols(), hom_rels);
    for (std::size_t k = 0; k < h_gens.cols(); ++k) {
        Mat g(ring, ng, mg);
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < mg; ++j) g.at(i, j) = h_gens.at(flat(i, j), k);
        hom.gens.push_back(std::move(g));
    }
    return hom;
}

ModuleMap HomModule::element_to_map(const std::vector<AlgebraElement>& coords) const {
    if (coords.size() != module->n_gens()) throw InvalidArgument("hom element size mismatch");
    Mat acc(m->ring(), n->n_gens(), m->n_gens());
    for (std::size_t k = 0; k < gens.size(); ++k) acc = acc + gens[k].scaled(coords[k]);
    // normalize entries
    for (std::size_t i = 0; i < acc.rows(); ++i)
        for (std::size_t j = 0; j < acc.cols(); ++j)
            acc.at(i, j) = m->ring()->nf(acc.at(i, j).poly());
    return ModuleMap(m, n, std::move(acc));
}

std::optional<std::vector<AlgebraElement>> HomModule::map_to_element(const ModuleMap& f) const {
    const AlgebraPtr& ring = m->ring();
    std::size_t ng = n->n_gens(), mg = m->n_gens();
    // flatten the generator matrices and the trivial maps, then lift vec(f)
    std::size_t q = gens.size();
    std::size_t zq = mg * n->relations().cols();
    Mat u(ring, ng * mg, q + zq);
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < mg; ++j) u.at(i * mg + j, k) = gens[k].at(i, j);
    for (std::size_t j = 0; j < mg; ++j)
        for (std::size_t rc = 0; rc < n->relations().cols(); ++rc)
            for (std::size_t i = 0; i < ng; ++i)
                u.at(i * mg + j, q + j * n->relations().cols() + rc) = n->relations().at(i, rc);
    Mat v(ring, ng * mg, 1);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < mg; ++j) v.at(i * mg + j, 0) = f.matrix().at(i, j);

    ModulePtr free_target = FPModule::free_module(ring, ng * mg);
    auto x = lift_through(u, free_target, v);
    if (!x) return std::nullopt;
    std::vector<AlgebraElement> coords;
    coords.reserve(q);
    for (std::size_t k = 0; k < q; ++k) coords.push_back(x->at(k, 0));
    return coords;
}

ModuleElement HomModule::evaluate(const std::vector<AlgebraElement>& hom_coords,
                                  const ModuleElement& m_elem) const {
    return element_to_map(hom_coords).apply(m_elem);
}

ModulePtr base_change(const AlgebraMap& phi, const ModulePtr& m) {
    if (phi.source().get() != m->ring().get())
        throw InvalidArgument("base_change: map source is not the module ring");
    return FPModule::create(phi.target(), m->n_gens(), phi.apply(m->relations()));
}

ModuleMap base_change_map(const AlgebraMap& phi, const ModuleMap& f,
                          const ModulePtr& new_source, const ModulePtr& new_target) {
    return ModuleMap(new_source, new_target, phi.apply(f.matrix()));
}

std::optional<ModuleMap> projectivity_certificate(const ModulePtr& m) {
    const AlgebraPtr& ring = m->ring();
    std::size_t g = m->n_gens();
    std::size_t q = m->relations().cols();
    if (g == 0) return ModuleMap::zero(m, m);  // zero module: trivially split
    auto flat = [&](std::size_t i, std::size_t j) { return i * g + j; };

    // unknown section S (free-gens x module-gens); conditions:
    //   (1) S r == 0 in A^g for every relation column r (well-definedness)
    //   (2) S e_j == e_j modulo the relations of M (pi o s = id)
    std::size_t rows1 = g * q, rows2 = g * g;
    Mat u(ring, rows1 + rows2, g * g);
    Mat rels(ring, rows1 + rows2, g * m->relations().cols());
    Mat v(ring, rows1 + rows2, 1);
    for (std::size_t c = 0; c < q; ++c)
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                u.at(c * g + i, flat(i, j)) = m->relations().at(j, c);
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t i = 0; i < g; ++i) {
            u.at(rows1 + j * g + i, flat(i, j)) = ring->one();
            if (i == j) v.at(rows1 + j * g + i, 0) = ring->one();
        }
        for (std::size_t rc = 0; rc < m->relations().cols(); ++rc)
            for (std::size_t i = 0; i < g; ++i)
                rels.at(rows1 + j * g + i, j * m->relations().cols() + rc) =
                    m->relations().at(i, rc);
    }
    ModulePtr big = FPModule::create(ring, rows1 + rows2, rels);
    auto x = lift_through(u, big, v);
    if (!x) return std::nullopt;

    Mat s(ring, g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) s.at(i, j) = x->at(flat(i, j), 0);
    return ModuleMap(m, FPModule::free_module(ring, g), std::move(s));
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
    if (parts.empty()) throw InvalidArgument("direct_sum of nothing");
    const AlgebraPtr& ring = parts[0]->ring();
    std::size_t total_gens = 0, total_rels = 0;
    for (const auto& p : parts) {
        if (p->ring().get() != ring.get()) throw InvalidArgument("direct_sum: rings differ");
        total_gens += p->n_gens();
        total_rels += p->relations().cols();
    }
    Mat rels(ring, total_gens, total_rels);
    std::size_t go = 0, ro = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p->n_gens(); ++i)
            for (std::size_t j = 0; j < p->relations().cols(); ++j)
                rels.at(go + i, ro + j) = p->relations().at(i, j);
        go += p->n_gens();
        ro += p->relations().cols();
    }
    DirectSum out;
    out.module = FPModule::create(ring, total_gens, rels);
    go = 0;
    for (const auto& p : parts) {
        Mat inj(ring, total_gens, p->n_gens());
        Mat prj(ring, p->n_gens(), total_gens);
        for (std::size_t i = 0; i < p->n_gens(); ++i) {
            inj.at(go + i, i) = ring->one();
            prj.at(i, go + i) = ring->one();
        }
        out.injections.emplace_back(p, out.module, std::move(inj));
        out.projections.emplace_back(out.module, p, std::move(prj));
        go += p->n_gens();
    }
    return out;
}

ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n) {
    const AlgebraPtr& ring = m->ring();
    if (ring.get() != n->ring().get()) throw InvalidArgument("tensor_module: rings differ");
    std::size_t mg = m->n_gens(), ng = n->n_gens();
    auto flat = [&](std::size_t i, std::size_t j) { return i * ng + j; };
    std::size_t n_rels = m->relations().cols() * ng + n->relations().cols() * mg;
    Mat rels(ring, mg * ng, n_rels);
    std::size_t col = 0;
    for (std::size_t c = 0; c < m->relations().cols(); ++c)
        for (std::size_t j = 0; j < ng; ++j, ++col)
            for (std::size_t i = 0; i < mg; ++i)
                rels.at(flat(i, j), col) = m->relations().at(i, c);
    for (std::size_t c = 0; c < n->relations().cols(); ++c)
        for (std::size_t i = 0; i < mg; ++i, ++col)
            for (std::size_t j = 0; j < ng; ++j)
                rels.at(flat(i, j), col) = n->relations().at(j, c);
    return FPModule::create(ring, mg * ng, rels);
}

ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g,
                     const ModulePtr& new_source, const ModulePtr& new_target) {
    const AlgebraPtr& ring = f.source()->ring();
    std::size_t fs = f.source()->n_gens(), ft = f.target()->n_gens();
    std::size_t gs = g.source()->n_gens(), gt = g.target()->n_gens();
    Mat kron(ring, ft * gt, fs * gs);
    for (std::size_t i = 0; i < ft; ++i)
        for (std::size_t j = 0; j < gt; ++j)
            for (std::size_t k = 0; k < fs; ++k)
                for (std::size_t l = 0; l < gs; ++l)
                    kron.at(i * gt + j, k * gs + l) = f.matrix().at(i, k) * g.matrix().at(j, l);
    return ModuleMap(new_source, new_target, std::move(kron));
}

// --- KView ---------------------------------------------------------------------

KView::KView(ModulePtr m, std::size_t max_dim) : module_(std::move(m)) {
    const AlgebraPtr& ring = module_->ring();
    std::size_t nv = ring->ctx()->nvars();
    const auto& basis = module_->rel_basis();

    // leading (component, monomial) pairs of the relation basis
    std::vector<std::vector<Monomial>> leads(module_->n_gens());
    for (const auto& g : basis) {
        std::size_t c = g.lead_comp();
        leads[c].push_back(g.c[c].leading().mono);
    }
    auto is_standard = [&](std::size_t c, const Monomial& mono) {
        for (const auto& l : leads[c])
            if (l.divides(mono)) return false;
        return true;
    };

    // breadth-first enumeration of standard monomials per component
    for (std::size_t c = 0; c < module_->n_gens(); ++c) {
        std::vector<Monomial> frontier{Monomial(nv)};
        std::vector<Monomial> seen;
        while (!frontier.empty()) {
            std::vector<Monomial> next;
            for (const auto& mono : frontier) {
                if (std::find(seen.begin(), seen.end(), mono) != seen.end()) continue;
                if (!is_standard(c, mono)) continue;
                seen.push_back(mono);
                if (basis_.size() + seen.size() > max_dim)
                    throw CapabilityError(
                        "module is not finite dimensional over the base field "
                        "(or exceeds the view limit)");
                for (std::size_t v = 0; v < nv; ++v) {
                    Monomial child = mono;
                    child[v] += 1;
                    next.push_back(std::move(child));
                }
            }
            frontier = std::move(next);
        }
        std::sort(seen.begin(), seen.end(), [&](const Monomial& a, const Monomial& b) {
            return ring->ctx()->order.compare(a, b) < 0;
        });
        for (auto& mono : seen) basis_.emplace_back(c, std::move(mono));
    }
}

std::vector<AlgebraElement> KView::basis_coords(std::size_t i) const {
    const auto& [c, mono] = basis_.at(i);
    auto coords = module_->zero_coords();
    const AlgebraPtr& ring = module_->ring();
    coords[c] = ring->nf(Poly::monomial(ring->ctx(), mono, Scalar::one(ring->characteristic())));
    return coords;
}

KVec KView::coords(const std::vector<AlgebraElement>& elem_coords) const {
    unsigned p = module_->ring()->characteristic();
    std::vector<AlgebraElement> red = module_->reduce(elem_coords);
    KVec out(basis_.size(), Scalar::zero(p));
    for (std::size_t c = 0; c < red.size(); ++c) {
        for (const auto& t : red[c].poly().terms()) {
            bool found = false;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (basis_[i].first == c && basis_[i].second == t.mono) {
                    out[i] = t.coeff;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw IntegrityError("reduced element not supported on standard monomials");
        }
    }
    return out;
}

std::vector<AlgebraElement> KView::from_coords(const KVec& v) const {
    if (v.size() != basis_.size()) throw InvalidArgument("KView coords size mismatch");
    const AlgebraPtr& ring = module_->ring();
    auto coords = module_->zero_coords();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const auto& [c, mono] = basis_[i];
        coords[c] = coords[c] + ring->nf(Poly::monomial(ring->ctx(), mono, v[i]));
    }
    return coords;
}

KMat KView::mult_operator(const AlgebraElement& a) const {
    unsigned p = module_->ring()->characteristic();
    KMat out(basis_.size(), basis_.size(), p);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        auto col = basis_coords(j);
        for (auto& e : col) e = e * a;
        KVec kc = coords(col);
        for (std::size_t i = 0; i < basis_.size(); ++i) out.at(i, j) = kc[i];
    }
    return out;
}

KMat KView::map_matrix(const ModuleMap& f, const KView& source, const KView& target) {
    unsigned p = f.source()->ring()->characteristic();
    KMat out(target.dim(), source.dim(), p);
    for (std::size_t j = 0; j < source.dim(); ++j) {
        KVec img = target.coords(f.apply(source.basis_coords(j)));
        for (std::size_t i = 0; i < target.dim(); ++i) out.at(i, j) = img[i];
    }
    return out;
}

}  // namespace cobar
