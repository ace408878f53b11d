#include "cobar/monomial.hpp"

#include <numeric>

namespace cobar {

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
    MonomialOrder o;
    o.kind = Kind::degrevlex;
    o.ranking.resize(nvars);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o = degrevlex(nvars);
    o.kind = Kind::lex;
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::vector<std::size_t>> blocks) {
    MonomialOrder o;
    o.kind = Kind::block;
    o.blocks = std::move(blocks);
    return o;
}

namespace {

// degrevlex on the listed variables (in ranking order)
int drl_compare(const Monomial& a, const Monomial& b,
                const std::vector<std::size_t>& vars) {
    uint64_t da = 0, db = 0;
    for (auto v : vars) { da += a[v]; db += b[v]; }
    if (da != db) return da < db ? -1 : 1;
    // reverse lex: scan from the lowest-ranked variable; smaller exponent wins
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::degrevlex:
            return drl_compare(a, b, ranking);
        case Kind::lex:
            for (auto v : ranking) {
                if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
            }
            return 0;
        case Kind::block:
            for (const auto& blk : blocks) {
                if (int c = drl_compare(a, b, blk)) return c;
            }
            return 0;
    }
    return 0;
}

long RingCtx::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < var_names.size(); ++i)
        if (var_names[i] == name) return static_cast<long>(i);
    return -1;
}

RingCtxPtr make_ring_ctx(unsigned characteristic, std::vector<std::string> vars,
                         MonomialOrder order) {
    auto ctx = std::make_shared<RingCtx>();
    ctx->characteristic = characteristic;
    ctx->var_names = std::move(vars);
    ctx->order = std::move(order);
    if (ctx->order.kind != MonomialOrder::Kind::block &&
        ctx->order.ranking.size() != ctx->var_names.size())
        throw InvalidArgument("order ranking size does not match variable count");
    return ctx;
}

RingCtxPtr make_ring_ctx(unsigned characteristic, std::vector<std::string> vars) {
    auto n = vars.size();
    return make_ring_ctx(characteristic, std::move(vars), MonomialOrder::degrevlex(n));
}

}  // namespace cobar
