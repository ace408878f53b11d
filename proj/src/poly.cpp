#include "cobar/poly.hpp"

#include <algorithm>
#include <cctype>

namespace cobar {

Poly::Poly(RingCtxPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    canonicalize();
}

Poly Poly::constant(RingCtxPtr ctx, Scalar c) {
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({Monomial(ctx->nvars()), std::move(c)});
    Poly p(std::move(ctx));
    p.terms_ = std::move(t);
    return p;
}

Poly Poly::variable(RingCtxPtr ctx, std::size_t i, uint32_t exp) {
    if (i >= ctx->nvars()) throw InvalidArgument("variable index out of range");
    Monomial m(ctx->nvars());
    m[i] = exp;
    Scalar one = Scalar::one(ctx->characteristic);
    return monomial(std::move(ctx), std::move(m), std::move(one));
}

Poly Poly::monomial(RingCtxPtr ctx, Monomial m, Scalar c) {
    Poly p(ctx);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return terms_[0];
}

uint64_t Poly::max_degree() const {
    uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ctx_->order.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
    // merge of two descending term lists
    Poly r(ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == o.terms_.size()) c = 1;
        else c = ctx_->order.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Poly Poly::times_term(const Term& t) const {
    if (t.coeff.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& u : terms_) r.terms_.push_back({u.mono * t.mono, u.coeff * t.coeff});
    return r;  // multiplication by a term preserves the ordering
}

Poly Poly::operator*(const Poly& o) const {
    Poly acc(ctx_);
    for (const auto& t : o.terms_) acc = acc + times_term(t);
    return acc;
}

bool Poly::equal_terms(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string ms;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!ms.empty()) ms += "*";
            ms += ctx_->var_names[i];
            if (t.mono[i] > 1) ms += "^" + std::to_string(t.mono[i]);
        }
        if (ms.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PolyParser {
    const RingCtxPtr& ctx;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InvalidArgument("polynomial parse error at position " +
                              std::to_string(pos) + ": " + msg + " in '" + s + "'");
    }

    Poly parse() {
        Poly p = expression();
        if (!eof()) fail("trailing input");
        return p;
    }

    Poly expression() {
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s[pos++] == '-');
        Poly p = term();
        if (neg) p = -p;
        while (peek() == '+' || peek() == '-') {
            bool sub = (s[pos++] == '-');
            Poly q = term();
            p = sub ? p - q : p + q;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                p = p * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                p = p * factor();  // implicit multiplication (2x, x y)
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        Poly b = base();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            unsigned long e = std::stoul(s.substr(start, pos - start));
            Poly acc = Poly::constant(ctx, Scalar::one(ctx->characteristic));
            Poly sq = b;
            while (e > 0) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            return acc;
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly p = expression();
            if (peek() != ')') fail("')' expected");
            ++pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string num = s.substr(start, pos - start);
            if (peek() == '/') {
                // rational literal only when followed by digits
                std::size_t save = pos;
                ++pos;
                skip_ws();
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) { pos = save; }
                else num += "/" + s.substr(dstart, pos - dstart);
            }
            return Poly::constant(ctx, Scalar::from_string(num, ctx->characteristic));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                    s[pos] == '~'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            long idx = ctx->var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            Monomial m(ctx->nvars());
            m[static_cast<std::size_t>(idx)] = 1;
            return Poly::monomial(ctx, std::move(m), Scalar::one(ctx->characteristic));
        }
        fail("unexpected character");
    }
};

}  // namespace

Poly parse_poly(const RingCtxPtr& ctx, const std::string& text) {
    PolyParser p{ctx, text};
    return p.parse();
}

}  // namespace cobar
