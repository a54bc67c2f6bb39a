#include "leelat/zq.hpp"

namespace leelat {

ZqVec::ZqVec(std::int64_t modulus, std::vector<std::int64_t> entries)
    : q(modulus), v(std::move(entries)) {
    if (q < 2) throw std::invalid_argument("ZqVec: modulus must be >= 2");
    for (auto& x : v) {
        x %= q;
        if (x < 0) x += q;
    }
}

std::int64_t lee_weight_scalar(std::int64_t x, std::int64_t q) {
    x %= q;
    if (x < 0) x += q;
    return std::min(x, q - x);
}

std::int64_t lee_weight(const ZqVec& x) {
    std::int64_t w = 0;
    for (auto e : x.v) w += lee_weight_scalar(e, x.q);
    return w;
}

std::int64_t hamming_weight(const ZqVec& x) {
    std::int64_t w = 0;
    for (auto e : x.v) w += (e != 0) ? 1 : 0;
    return w;
}

std::int64_t center_lift_scalar(std::int64_t x, std::int64_t q) {
    x %= q;
    if (x < 0) x += q;
    // representative range is {-floor((q-1)/2), ..., floor(q/2)}
    if (x > q / 2) return x - q;
    return x;
}

IntVec center_lift(const ZqVec& x) {
    IntVec out;
    out.reserve(x.v.size());
    for (auto e : x.v) out.emplace_back(center_lift_scalar(e, x.q));
    return out;
}

ZqVec reduce_mod_q(const IntVec& v, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("reduce_mod_q: q must be >= 2");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        Int r = x % q;
        if (r < 0) r += q;
        out.push_back(static_cast<std::int64_t>(r));
    }
    return ZqVec(q, std::move(out));
}

Int l1_norm(const IntVec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

Int l1_dist(const IntVec& v, const IntVec& w) {
    if (v.size() != w.size())
        throw std::invalid_argument("l1_dist: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += abs(v[i] - w[i]);
    return s;
}

ZqVec zq_add(const ZqVec& a, const ZqVec& b) {
    if (a.q != b.q || a.v.size() != b.v.size())
        throw std::invalid_argument("zq_add: incompatible vectors");
    std::vector<std::int64_t> out(a.v.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (a.v[i] + b.v[i]) % a.q;
    return ZqVec(a.q, std::move(out));
}

ZqVec zq_sub(const ZqVec& a, const ZqVec& b) {
    if (a.q != b.q || a.v.size() != b.v.size())
        throw std::invalid_argument("zq_sub: incompatible vectors");
    std::vector<std::int64_t> out(a.v.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ((a.v[i] - b.v[i]) % a.q + a.q) % a.q;
    return ZqVec(a.q, std::move(out));
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace leelat
