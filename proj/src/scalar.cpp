#include "cobar/scalar.hpp"

namespace cobar {

namespace {

// residue of n mod p in [0, p)
BigInt mod_p(const BigInt& n, unsigned p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return r;
}

// inverse of a mod p by extended Euclid; a nonzero mod p
BigInt inv_mod(const BigInt& a, unsigned p) {
    BigInt r0 = p, r1 = mod_p(a, p), s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw InvalidArgument("non-invertible residue (composite modulus?)");
    return mod_p(s0, p);
}

}  // namespace

void Scalar::normalize() {
    if (p_ == 0) return;
    BigInt num = numerator(v_);
    BigInt den = denominator(v_);
    if (den != 1) {
        BigInt d = mod_p(den, p_);
        if (d == 0) throw InvalidArgument("denominator divisible by characteristic");
        num *= inv_mod(d, p_);
    }
    v_ = BigRational(mod_p(num, p_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    return Scalar(v_ + o.v_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    return Scalar(v_ - o.v_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    return Scalar(v_ * o.v_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(-v_, p_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidArgument("division by zero");
    if (p_ == 0) return Scalar(BigRational(1) / v_, 0);
    return Scalar(BigRational(inv_mod(numerator(v_), p_)), p_);
}

Scalar Scalar::from_string(const std::string& s, unsigned p) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(BigRational(BigInt(s)), p);
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in scalar literal");
    return Scalar(BigRational(num) / BigRational(den), p);
}

std::string Scalar::str() const {
    if (p_ != 0 || denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
}

}  // namespace cobar
