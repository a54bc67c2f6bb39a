#include "leelat/intersection.hpp"

namespace leelat {

Int intersection_count(const LinearCode& c, std::int64_t cap) {
    ConstructionAG lag = construction_ag(c);
    Int count = 0;
    for_each_codeword(
        c,
        [&](const ZqVec& w) {
            if (member(lag.basis, center_lift(w)).member) ++count;
        },
        cap);
    return count;
}

Int minkowski_lower_bound(const LinearCode& c) {
    ConstructionAG lag = construction_ag(c);  // verifies independence
    const std::size_t k = c.k();
    Int big_m = (c.q % 2 == 1) ? Int((c.q - 1) / 2) : Int(c.q / 2 - 1);
    Int gd = gram_det(lag.basis);

    // m < (2M)^k / (2^k sqrt(gd))  <=>  m^2 * 4^k * gd < (2M)^{2k}
    Int num = 1;
    for (std::size_t i = 0; i < 2 * k; ++i) num *= 2 * big_m;
    Int den = gd;
    for (std::size_t i = 0; i < 2 * k; ++i) den *= 2;

    Int m = boost::multiprecision::sqrt(Int(num / den));  // integer sqrt seed
    while ((m + 1) * (m + 1) * den < num) ++m;
    while (m >= 1 && !(m * m * den < num)) --m;
    if (m < 1) return 1;  // no positive m exists; only the zero vector is certain
    return 2 * m + 1;
}

namespace {

Int lifted_linf(const LinearCode& c) {
    IntVec lift = center_lift(c.row(0));
    Int t = 0;
    for (const auto& x : lift) t = std::max(t, Int(abs(x)));
    return t;
}

}  // namespace

Int one_dim_intersection(const LinearCode& c) {
    if (c.k() != 1)
        throw std::invalid_argument("one_dim_intersection: requires k = 1");
    if (lifted_linf(c) == 0)
        throw std::invalid_argument("one_dim_intersection: zero generator");
    // lambda * lift(g) is a valid centered lift iff every coordinate stays in
    // [lo, hi] = [-floor((q-1)/2), floor(q/2)]. For odd q this is the
    // symmetric 2*floor(M/t)+1; for even q the asymmetric boundary (only +q/2
    // is representable) splits the budget by the sign of each entry.
    IntVec lift = center_lift(c.row(0));
    Int hi = c.q / 2, lo_mag = (c.q - 1) / 2;  // |lo|
    Int pos = 0, neg = 0;  // largest positive entry, largest magnitude negative
    for (const auto& x : lift) {
        if (x > 0) pos = std::max(pos, x);
        if (x < 0) neg = std::max(neg, Int(-x));
    }
    auto budget = [&](const Int& up, const Int& down) {
        // max lambda > 0 with lambda*pos <= up and lambda*neg <= down
        Int lam = std::max(hi, lo_mag);  // safe upper start
        if (pos > 0) lam = std::min(lam, Int(up / pos));
        if (neg > 0) lam = std::min(lam, Int(down / neg));
        return lam;
    };
    return budget(hi, lo_mag) + budget(lo_mag, hi) + 1;
}

bool full_containment_check(const LinearCode& c) {
    if (c.k() != 1)
        throw std::invalid_argument("full_containment_check: requires k = 1");
    IntVec lift = center_lift(c.row(0));
    bool any_nonzero = false;
    for (const auto& x : lift) {
        if (x == 0) continue;
        any_nonzero = true;
        if (abs(x) != 1) return false;
    }
    return any_nonzero;
}

IntersectionReport intersection_report(const LinearCode& c, std::int64_t cap) {
    IntersectionReport rep;
    rep.q = c.q;
    rep.k = c.k();
    rep.n = c.n;
    rep.big_m = (c.q % 2 == 1) ? Int((c.q - 1) / 2) : Int(c.q / 2 - 1);
    rep.gram_det = gram_det(construction_ag(c).basis);
    rep.count = intersection_count(c, cap);
    rep.lower_bound = minkowski_lower_bound(c);
    Int size = 0;
    for_each_codeword(c, [&](const ZqVec&) { ++size; }, cap);
    rep.upper_bound = size;
    return rep;
}

}  // namespace leelat
