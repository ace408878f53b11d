#pragma once

// Independent brute-force oracle for group cohomology of Z/2 over F_2: the
// unreduced cobar complex of Gamma = F_2[e]/(e^2 + e) with trivial
// coefficients, C^s = Gamma^{(x) s}, written out as explicit F_2 matrices in
// the monomial basis {1, e}^{(x) s}. No comodule machinery is involved.

#include <vector>

#include "cobar/linalg.hpp"

namespace cobar::testing {

// a basis element of Gamma^{(x) s} is a bitstring: bit = 0 for 1, bit = 1 for e
inline KMat f2_cobar_differential(int s) {
    unsigned p = 2;
    std::size_t src = std::size_t{1} << s;
    std::size_t dst = std::size_t{1} << (s + 1);
    KMat d(dst, src, p);
    auto add = [&](std::size_t row, std::size_t col) {
        d.at(row, col) = d.at(row, col) + Scalar::one(p);
    };
    for (std::size_t v = 0; v < src; ++v) {
        // insert 1 at the front and at the back
        add(v, v);                       // 1 (x) v  (prepended bit 0 is the top bit)
        add(v << 1, v);                  // v (x) 1
        // comultiply the i-th factor: Delta(1) = 1(x)1, Delta(e) = e(x)1 + 1(x)e
        for (int i = 0; i < s; ++i) {
            std::size_t hi = v >> (s - i);           // bits above position i
            std::size_t lo = v & ((1u << (s - i)) - 1);  // bits from position i down
            std::size_t bit = (v >> (s - 1 - i)) & 1;
            std::size_t rest = lo & ((1u << (s - 1 - i)) - 1);
            if (bit == 0) {
                // 1 -> 1 (x) 1: one term
                std::size_t w = (((hi << 1) | 0) << (s - i)) | ((0u << (s - 1 - i)) | rest);
                add(w, v);
            } else {
                // e -> e (x) 1 + 1 (x) e: two terms
                std::size_t w1 = (((hi << 1) | 1) << (s - i)) | ((0u << (s - 1 - i)) | rest);
                std::size_t w2 = (((hi << 1) | 0) << (s - i)) | ((1u << (s - 1 - i)) | rest);
                add(w1, v);
                add(w2, v);
            }
        }
    }
    return d;
}

// dim H^s of the explicit complex, for 0 <= s <= s_max
inline std::vector<std::size_t> f2_cobar_cohomology(int s_max) {
    std::vector<std::size_t> dims;
    std::vector<KMat> ds;
    for (int s = 0; s <= s_max; ++s) ds.push_back(f2_cobar_differential(s));
    for (int s = 0; s <= s_max; ++s) {
        std::size_t src_dim = std::size_t{1} << s;
        std::size_t ker = src_dim - rank(ds[static_cast<std::size_t>(s)]);
        std::size_t im = (s == 0) ? 0 : rank(ds[static_cast<std::size_t>(s) - 1]);
        dims.push_back(ker - im);
    }
    return dims;
}

}  // namespace cobar::testing
