#ifndef LEELAT_ZQ_HPP
#define LEELAT_ZQ_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace leelat {

// Exact integers everywhere outside the distributions module.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Vector over Z_q, entries stored in the standard representation [0, q).
struct ZqVec {
    std::int64_t q = 2;
    std::vector<std::int64_t> v;

    ZqVec() = default;
    ZqVec(std::int64_t modulus, std::vector<std::int64_t> entries);

    std::size_t size() const { return v.size(); }
    bool operator==(const ZqVec& o) const { return q == o.q && v == o.v; }
};

std::int64_t lee_weight_scalar(std::int64_t x, std::int64_t q);

std::int64_t lee_weight(const ZqVec& x);
std::int64_t hamming_weight(const ZqVec& x);

// Centered representative in {-floor((q-1)/2), ..., floor(q/2)}.
// For even q the value q/2 maps to +q/2.
std::int64_t center_lift_scalar(std::int64_t x, std::int64_t q);
IntVec center_lift(const ZqVec& x);

ZqVec reduce_mod_q(const IntVec& v, std::int64_t q);

Int l1_norm(const IntVec& v);
Int l1_dist(const IntVec& v, const IntVec& w);

ZqVec zq_add(const ZqVec& a, const ZqVec& b);
ZqVec zq_sub(const ZqVec& a, const ZqVec& b);

IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);

// Strict lexicographic comparison on integer vectors.
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace leelat

#endif
