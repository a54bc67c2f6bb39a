#ifndef LEELAT_CODES_HPP
#define LEELAT_CODES_HPP

#include <functional>
#include <optional>
#include <string>

#include "leelat/zq.hpp"

namespace leelat {

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear code over Z_q given by generator rows (row space as a Z_q-module).
struct LinearCode {
    std::int64_t q = 2;
    std::size_t n = 1;
    std::vector<std::vector<std::int64_t>> gen;  // k x n, standard representation

    LinearCode() = default;
    LinearCode(std::int64_t modulus, std::size_t length,
               std::vector<std::vector<std::int64_t>> rows);

    std::size_t k() const { return gen.size(); }
    ZqVec row(std::size_t i) const { return ZqVec(q, gen[i]); }
};

struct ParityCheck {
    std::int64_t q = 2;
    std::vector<std::vector<std::int64_t>> h;  // (n-k) x n
};

inline constexpr std::int64_t kDefaultEnumCap = 10'000'000;

// Distinct codewords, deduplicated (messages may collide for non-prime q).
std::vector<ZqVec> enumerate_codewords(const LinearCode& c,
                                       std::int64_t cap = kDefaultEnumCap);

// Visits each distinct codeword exactly once without materialising the list.
void for_each_codeword(const LinearCode& c,
                       const std::function<void(const ZqVec&)>& fn,
                       std::int64_t cap = kDefaultEnumCap);

std::int64_t min_lee_distance(const LinearCode& c,
                              std::int64_t cap = kDefaultEnumCap);

ZqVec syndrome(const ParityCheck& h, const ZqVec& e);

// Minimum-weight e with syndrome s and lwt(e) <= t; ties broken by
// lexicographic order on the center-lifted vector.
std::optional<ZqVec> solve_leesdp_bruteforce(const ParityCheck& h, const ZqVec& s,
                                             std::int64_t t,
                                             std::int64_t cap = kDefaultEnumCap);

// Codeword minimising lwt(r - c), returned only if the minimum is <= t.
std::optional<ZqVec> solve_leedp_bruteforce(const LinearCode& c, const ZqVec& r,
                                            std::int64_t t,
                                            std::int64_t cap = kDefaultEnumCap);

// Text format: line 1 "q k n", then k lines of n integers.
std::string code_to_text(const LinearCode& c);
LinearCode code_from_text(const std::string& text);

}  // namespace leelat

#endif
