#ifndef LEELAT_INTERSECTION_HPP
#define LEELAT_INTERSECTION_HPP

#include "leelat/lattice.hpp"

namespace leelat {

struct IntersectionReport {
    Int count = 0;
    Int lower_bound = 0;
    Int upper_bound = 0;  // |C|
    std::int64_t q = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    Int gram_det = 0;
    Int big_m = 0;  // (q-1)/2 for odd q, q/2 - 1 for even q
};

// |{c in C : center_lift(c) in L_A_G(C)}|, zero vector included. The count
// depends on the generator matrix carried by `c`, not just on the code.
Int intersection_count(const LinearCode& c, std::int64_t cap = kDefaultEnumCap);

// 2m + 1 with m the largest positive integer strictly below
// (2M)^k / (2^k * sqrt(det(G G^T))); 1 when no positive m exists. The strict
// comparison is decided exactly on (2M)^{2k} vs 2^{2k} * m^2 * det(G G^T).
Int minkowski_lower_bound(const LinearCode& c);

// Closed form for k = 1 via the max-magnitude entry t of the lifted
// generator: 2*floor(M/t)+1 for odd q, floor(M/t)+floor((M-1)/t)+1 for even
// q, with M = floor(q/2). Entries all in {0, +-1} give the full code.
Int one_dim_intersection(const LinearCode& c);

// k = 1: true iff every nonzero center-lifted generator entry is +-1, the
// only case with C contained in L_A_G(C).
bool full_containment_check(const LinearCode& c);

IntersectionReport intersection_report(const LinearCode& c,
                                       std::int64_t cap = kDefaultEnumCap);

}  // namespace leelat

#endif
