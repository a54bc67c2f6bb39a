#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "leelat/codes.hpp"

using namespace leelat;

namespace {

// independent oracle: full message-space scan with schoolbook multiply
std::set<std::vector<std::int64_t>> codewords_oracle(const LinearCode& c) {
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> msg(c.k(), 0);
    while (true) {
        std::vector<std::int64_t> w(c.n, 0);
        for (std::size_t i = 0; i < c.k(); ++i)
            for (std::size_t j = 0; j < c.n; ++j)
                w[j] = (w[j] + msg[i] * c.gen[i][j]) % c.q;
        out.insert(w);
        std::size_t pos = 0;
        while (pos < msg.size() && ++msg[pos] == c.q) msg[pos++] = 0;
        if (pos == msg.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("codeword enumeration sizes") {
    CHECK(enumerate_codewords(LinearCode(7, 2, {{1, 1}})).size() == 7);
    LinearCode c4(13, 5,
                  {{3, 1, 2, 5, -4}, {3, 2, 3, 6, -1}, {-1, 2, 5, -5, 6}});
    CHECK(enumerate_codewords(c4).size() == 2197);
    // message collisions over a non-prime modulus
    CHECK(enumerate_codewords(LinearCode(4, 1, {{2}})).size() == 2);
}

TEST_CASE("enumeration matches the schoolbook oracle and dedupes") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        std::int64_t q = std::vector<std::int64_t>{4, 5, 6, 7, 9}[it % 5];
        std::size_t n = 2 + it % 3, k = 1 + it % 2;
        std::vector<std::vector<std::int64_t>> gen(k, std::vector<std::int64_t>(n));
        for (auto& row : gen)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % q);
        LinearCode c(q, n, gen);
        auto oracle = codewords_oracle(c);
        std::set<std::vector<std::int64_t>> got;
        for_each_codeword(c, [&](const ZqVec& w) {
            CHECK(got.insert(w.v).second);  // visited exactly once
        });
        for_each_codeword(c, [&](const ZqVec& w) { got.insert(w.v); });
        CHECK(got == oracle);
    }
}

TEST_CASE("enumeration cap is an explicit error") {
    LinearCode big(11, 8, std::vector<std::vector<std::int64_t>>(
                              8, std::vector<std::int64_t>(8, 1)));
    CHECK_THROWS_AS((void)enumerate_codewords(big, 100), EnumerationCapExceeded);
}

TEST_CASE("minimum Lee distance") {
    CHECK(min_lee_distance(LinearCode(7, 2, {{1, 1}})) == 2);
    CHECK(min_lee_distance(LinearCode(7, 2, {{1, 2}})) == 3);
    for (std::size_t n : {2, 3, 5}) {
        LinearCode rep(2, n, {std::vector<std::int64_t>(n, 1)});
        CHECK(min_lee_distance(rep) == static_cast<std::int64_t>(n));
    }
    // zero code has no minimum distance
    CHECK_THROWS_AS((void)min_lee_distance(LinearCode(7, 2, {{0, 0}})),
                    std::invalid_argument);
}

TEST_CASE("minimum distance never exceeds a generator row weight") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        std::int64_t q = 5 + 2 * (it % 3);
        std::vector<std::vector<std::int64_t>> gen(2, std::vector<std::int64_t>(3));
        for (auto& row : gen)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % q);
        LinearCode c(q, 3, gen);
        std::int64_t dl;
        try {
            dl = min_lee_distance(c);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (std::size_t i = 0; i < c.k(); ++i) {
            std::int64_t wt = lee_weight(c.row(i));
            if (wt > 0) CHECK(dl <= wt);
        }
    }
}

TEST_CASE("syndromes") {
    // H = (5, 1) is a parity check for <(1,2)> over Z_7: (1,2)*(5,1)^T = 0
    ParityCheck h{7, {{5, 1}}};
    LinearCode c2(7, 2, {{1, 2}});
    CHECK(syndrome(h, ZqVec(7, {0, 0})).v == std::vector<std::int64_t>{0});
    for (const auto& w : enumerate_codewords(c2))
        CHECK(syndrome(h, w).v == std::vector<std::int64_t>{0});

    // random vectors against an independent matrix multiply
    ParityCheck h3{7, {{1, 2, 3}, {4, 5, 6}}};
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        ZqVec e(7, {static_cast<std::int64_t>(rng() % 7),
                    static_cast<std::int64_t>(rng() % 7),
                    static_cast<std::int64_t>(rng() % 7)});
        ZqVec s = syndrome(h3, e);
        for (std::size_t r = 0; r < 2; ++r) {
            std::int64_t acc = 0;
            for (std::size_t j = 0; j < 3; ++j) acc += e.v[j] * h3.h[r][j];
            CHECK(s.v[r] == acc % 7);
        }
    }
}

TEST_CASE("brute-force LeeSDP solver") {
    ParityCheck h{7, {{1, 2, 3}, {4, 5, 6}}};
    ZqVec zero(7, {0});
    auto e0 = solve_leesdp_bruteforce(h, ZqVec(7, {0, 0}), 0);
    REQUIRE(e0.has_value());
    CHECK(lee_weight(*e0) == 0);

    // planted weight-1 errors are recovered at weight 1
    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::int64_t> ev(3, 0);
        ev[rng() % 3] = (rng() & 1) ? 1 : 6;
        ZqVec e(7, ev);
        ZqVec s = syndrome(h, e);
        auto sol = solve_leesdp_bruteforce(h, s, 1);
        REQUIRE(sol.has_value());
        CHECK(lee_weight(*sol) == 1);
        CHECK(syndrome(h, *sol).v == s.v);
    }

    // weight budget below the minimum achievable -> no solution
    ZqVec e(7, {2, 0, 0});
    auto none = solve_leesdp_bruteforce(h, syndrome(h, e), 0);
    CHECK_FALSE(none.has_value());
}

TEST_CASE("brute-force LeeDP solver") {
    LinearCode c2(7, 2, {{1, 2}});
    ZqVec in_code(7, {3, 6});
    auto same = solve_leedp_bruteforce(c2, in_code, 0);
    REQUIRE(same.has_value());
    CHECK(*same == in_code);

    // r = (2,3): the nearest codeword is 2*(1,2) = (2,4) at Lee distance 1
    auto near = solve_leedp_bruteforce(c2, ZqVec(7, {2, 3}), 2);
    REQUIRE(near.has_value());
    CHECK(near->v == std::vector<std::int64_t>{2, 4});
    CHECK(lee_weight(zq_sub(ZqVec(7, {2, 3}), *near)) == 1);

    CHECK_FALSE(solve_leedp_bruteforce(c2, ZqVec(7, {2, 3}), 0).has_value());
}

TEST_CASE("LeeDP result weight is the enumeration minimum") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        std::int64_t q = std::vector<std::int64_t>{5, 7, 9, 11}[it % 4];
        LinearCode c(q, 3,
                     {{static_cast<std::int64_t>(rng() % q),
                       static_cast<std::int64_t>(rng() % q),
                       static_cast<std::int64_t>(rng() % q)}});
        ZqVec r(q, {static_cast<std::int64_t>(rng() % q),
                    static_cast<std::int64_t>(rng() % q),
                    static_cast<std::int64_t>(rng() % q)});
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for_each_codeword(c, [&](const ZqVec& w) {
            best = std::min(best, lee_weight(zq_sub(r, w)));
        });
        auto sol = solve_leedp_bruteforce(c, r, 3 * (q / 2));
        REQUIRE(sol.has_value());
        CHECK(lee_weight(zq_sub(r, *sol)) == best);
    }
}

TEST_CASE("text format round trip") {
    LinearCode c(13, 5, {{3, 1, 2, 5, 9}, {3, 2, 3, 6, 12}, {12, 2, 5, 8, 6}});
    LinearCode back = code_from_text(code_to_text(c));
    CHECK(back.q == c.q);
    CHECK(back.n == c.n);
    CHECK(back.gen == c.gen);
    CHECK(code_to_text(back) == code_to_text(c));
}
