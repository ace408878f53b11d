#pragma once

// Brute-force oracles used by the test suites: modules that are finite
// dimensional over the base field are handled with plain exact linear
// algebra, independently of the Groebner/syzygy path under test.

#include <vector>

#include "cobar/fpmodule.hpp"

namespace cobar::testing {

// span equality of two column families inside k^dim
inline bool same_span(const std::vector<KVec>& a, const std::vector<KVec>& b,
                      std::size_t dim, unsigned p) {
    KMat ma(dim, a.size(), p), mb(dim, b.size(), p), mab(dim, a.size() + b.size(), p);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            ma.at(i, j) = a[j][i];
            mab.at(i, j) = a[j][i];
        }
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            mb.at(i, j) = b[j][i];
            mab.at(i, a.size() + j) = b[j][i];
        }
    std::size_t ra = rank(ma), rb = rank(mb), rab = rank(mab);
    return ra == rb && rb == rab;
}

// brute-force kernel of an A-linear map between finite-dimensional modules
inline std::vector<KVec> brute_kernel(const ModuleMap& f, const KView& src,
                                      const KView& tgt) {
    return kernel_basis(KView::map_matrix(f, src, tgt));
}

// k-dimension of a finite-dimensional module
inline std::size_t kdim(const ModulePtr& m) { return KView(m).dim(); }

}  // namespace cobar::testing
