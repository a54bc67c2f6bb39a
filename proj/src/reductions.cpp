#include "leelat/reductions.hpp"

#include <sstream>

namespace leelat {

ZqVec leedp_to_bdd(const LeedpInstance& inst, const BddOracle& oracle) {
    const LinearCode& c = inst.code;
    if (inst.t < 1) throw HypothesisViolated("leedp_to_bdd: t must be >= 1");
    std::int64_t dl = min_lee_distance(c);
    std::int64_t bound = std::min(c.q, dl);
    if (inst.t >= bound) {
        std::ostringstream os;
        os << "leedp_to_bdd: t = " << inst.t << " is not alpha * min{q, d_L} for "
           << "any alpha in (0,1) (q = " << c.q << ", d_L = " << dl << ")";
        if (dl > c.q && inst.t >= c.q)
            os << "; with d_L(C) > q and t >= q the BDD promise "
                  "d_1(r, L_A) <= alpha * lambda1 can fail";
        throw HypothesisViolated(os.str());
    }
    Rat alpha(inst.t, bound);

    ConstructionA la = construction_a(c);
    IntVec r_lift = center_lift(inst.r);
    IntVec x = oracle(la, r_lift, alpha);
    ZqVec cx = reduce_mod_q(x, c.q);
    if (lee_weight(zq_sub(inst.r, cx)) > inst.t)
        throw std::runtime_error("leedp_to_bdd: oracle returned a vector outside "
                                 "the weight bound");
    return cx;
}

LinearCode code_from_basis(const LatticeBasis& b) {
    if (!b.full_rank())
        throw std::invalid_argument("code_from_basis: basis must be full rank");
    Int det = determinant(b);
    Int q = abs(det);
    if (q <= 1)
        throw std::invalid_argument(
            "code_from_basis: |det(B)| <= 1, the lattice is all of Z^n");
    std::int64_t q64 = static_cast<std::int64_t>(q);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : b.rows) {
        ZqVec reduced = reduce_mod_q(row, q64);
        rows.push_back(reduced.v);
    }
    return LinearCode(q64, b.n, std::move(rows));
}

IntVec bdd_to_leedp(const BddInstance& inst, const LeedpOracle& oracle) {
    const LatticeBasis& b = inst.basis;
    if (!b.full_rank())
        throw HypothesisViolated("bdd_to_leedp: basis must be full rank");
    if (inst.alpha <= 0 || inst.alpha >= 1)
        throw HypothesisViolated("bdd_to_leedp: alpha must be in (0,1)");

    LinearCode c = code_from_basis(b);
    ZqVec r_mod = reduce_mod_q(inst.r, c.q);

    Int radius = l1_norm(b.rows[0]);
    for (const auto& row : b.rows) radius = std::min(radius, l1_norm(row));
    Int l1 = lambda1_l1(b, radius).norm;
    // t = alpha * lambda1, rounded down to an integer weight budget; any
    // error of l1-norm <= alpha * lambda1 has integer norm <= floor of it
    Rat t_rat = inst.alpha * Rat(l1);
    Int t_int = numerator(t_rat) / denominator(t_rat);
    std::int64_t t = static_cast<std::int64_t>(t_int);
    if (t < 1)
        throw HypothesisViolated("bdd_to_leedp: alpha * lambda1 leaves no "
                                 "positive integer weight budget");

    ZqVec c_hat = oracle(c, r_mod, t);
    IntVec e_lift = center_lift(zq_sub(r_mod, c_hat));
    IntVec v = vec_sub(inst.r, e_lift);

    MemberResult mem = member(b, v);
    if (!mem.member)
        throw std::runtime_error("bdd_to_leedp: recovered vector is not a "
                                 "lattice member");
    if (Rat(l1_dist(v, inst.r)) > inst.alpha * Rat(l1))
        throw std::runtime_error("bdd_to_leedp: recovered vector violates the "
                                 "distance bound");
    return v;
}

IntVec bdd_to_usvp_embedding(const BddInstance& inst, const UsvpOracle& oracle,
                             const Int& mu, const Rat& gamma) {
    if (mu <= 0)
        throw std::invalid_argument("bdd_to_usvp_embedding: mu must be positive");
    const LatticeBasis& b = inst.basis;
    IntMat rows;
    for (const auto& row : b.rows) {
        IntVec padded = row;
        padded.push_back(0);
        rows.push_back(std::move(padded));
    }
    IntVec target = inst.r;
    target.push_back(mu);
    rows.push_back(std::move(target));
    LatticeBasis embedded(b.n + 1, std::move(rows));

    IntVec w = oracle(embedded, gamma);
    Int last = w.back();
    if (abs(last) != mu)
        throw PromiseViolation(
            "bdd_to_usvp_embedding: shortest embedded vector does not carry a "
            "single copy of the target row");
    if (last < 0)
        for (auto& x : w) x = -x;
    IntVec e(w.begin(), w.end() - 1);
    IntVec v = vec_sub(inst.r, e);
    if (!member(b, v).member)
        throw std::runtime_error(
            "bdd_to_usvp_embedding: recovered vector is not a lattice member");
    return v;
}

UsvpOracle usvp_bruteforce_oracle(const Int& radius) {
    return [radius](const LatticeBasis& b, const Rat& gamma) {
        return solve_usvp(b, gamma, radius);
    };
}

}  // namespace leelat
