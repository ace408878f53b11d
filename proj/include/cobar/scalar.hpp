#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cobar/error.hpp"

namespace cobar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// An exact field scalar: a rational number (characteristic 0) or a residue
// in [0, p) for a prime p. Arithmetic never rounds; equality is decidable.
class Scalar {
  public:
    Scalar() : p_(0), v_(0) {}
    Scalar(long long n, unsigned p) : p_(p), v_(n) { normalize(); }
    Scalar(BigRational v, unsigned p) : p_(p), v_(std::move(v)) { normalize(); }

    static Scalar zero(unsigned p) { return Scalar(0, p); }
    static Scalar one(unsigned p) { return Scalar(1, p); }
    static Scalar from_string(const std::string& s, unsigned p);

    unsigned characteristic() const { return p_; }
    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
    void check_same(const Scalar& o) const {
        if (p_ != o.p_) throw InvalidArgument("scalar characteristic mismatch");
    }

    unsigned p_;      // 0 for the rationals
    BigRational v_;   // integer in [0, p) when p_ > 0
};

}  // namespace cobar
