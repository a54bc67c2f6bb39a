#ifndef LEELAT_REDUCTIONS_HPP
#define LEELAT_REDUCTIONS_HPP

#include <functional>

#include "leelat/lattice.hpp"

namespace leelat {

struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BddInstance {
    LatticeBasis basis;
    IntVec r;
    Rat alpha;  // in (0, 1)
};

struct LeedpInstance {
    LinearCode code;
    ZqVec r;
    std::int64_t t = 1;
};

// Oracles are injected so the reductions can be exercised against brute
// force now and real solvers later.
using BddOracle =
    std::function<IntVec(const ConstructionA&, const IntVec& r, const Rat& alpha)>;
using LeedpOracle =
    std::function<ZqVec(const LinearCode&, const ZqVec& r, std::int64_t t)>;
using UsvpOracle = std::function<IntVec(const LatticeBasis&, const Rat& gamma)>;

// LeeDP_t on C -> BDD_alpha on L_A(C) with alpha = t / min{q, d_L(C)}.
// Requires t < min{q, d_L(C)}; in particular t < q.
ZqVec leedp_to_bdd(const LeedpInstance& inst, const BddOracle& oracle);

// q = |det(B)|, code rows = b_i mod q. Requires |det(B)| >= 2.
LinearCode code_from_basis(const LatticeBasis& b);

// BDD_alpha on a full-rank L -> LeeDP_t on code_from_basis(B) with
// t = alpha * lambda1(L) (lambda1 computed exactly at desk scale).
IntVec bdd_to_leedp(const BddInstance& inst, const LeedpOracle& oracle);

// Embedding heuristic for BDD -> uSVP: appends the row (r, mu) to the basis
// padded with a zero column, asks the oracle for the shortest vector of the
// embedded lattice, and strips the last coordinate.
IntVec bdd_to_usvp_embedding(const BddInstance& inst, const UsvpOracle& oracle,
                             const Int& mu, const Rat& gamma);

// Brute-force uSVP oracle over an l1-ball of the given radius.
UsvpOracle usvp_bruteforce_oracle(const Int& radius);

}  // namespace leelat

#endif
