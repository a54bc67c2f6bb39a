#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leelat/reductions.hpp"

using namespace leelat;

namespace {

BddOracle brute_bdd() {
    return [](const ConstructionA& a, const IntVec& r, const Rat& alpha) {
        return solve_bdd(a, r, alpha);
    };
}

LeedpOracle brute_leedp() {
    return [](const LinearCode& c, const ZqVec& r, std::int64_t t) {
        auto res = solve_leedp_bruteforce(c, r, t);
        if (!res) throw std::runtime_error("LeeDP brute force: no codeword in range");
        return *res;
    };
}

LinearCode c2() { return LinearCode(7, 2, {{1, 2}}); }

LinearCode random_code(std::mt19937_64& rng) {
    std::int64_t q = std::vector<std::int64_t>{5, 7, 9, 11}[rng() % 4];
    std::size_t n = 2 + rng() % 3;  // up to 4
    std::size_t k = 1 + rng() % 2;
    std::vector<std::vector<std::int64_t>> gen(k, std::vector<std::int64_t>(n));
    for (auto& row : gen)
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % q);
    return LinearCode(q, n, gen);
}

}  // namespace

TEST_CASE("leedp_to_bdd basics") {
    // r already a codeword
    ZqVec r(7, {3, 6});
    CHECK(leedp_to_bdd(LeedpInstance{c2(), r, 2}, brute_bdd()) == r);

    // r = (1,2) + (1,1): reduction weight equals the brute-force optimum
    ZqVec r2(7, {2, 3});
    ZqVec via_bdd = leedp_to_bdd(LeedpInstance{c2(), r2, 2}, brute_bdd());
    auto direct = solve_leedp_bruteforce(c2(), r2, 2);
    REQUIRE(direct.has_value());
    CHECK(lee_weight(zq_sub(r2, via_bdd)) == lee_weight(zq_sub(r2, *direct)));
}

TEST_CASE("leedp_to_bdd planted instances match the brute-force decoder") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 60) {
        LinearCode c = random_code(rng);
        std::int64_t dl;
        try {
            dl = min_lee_distance(c);
        } catch (const std::invalid_argument&) {
            continue;
        }
        std::int64_t bound = std::min(c.q, dl);
        if (bound < 2) continue;
        std::int64_t t = 1 + static_cast<std::int64_t>(rng() % (bound - 1));

        // plant: codeword + error of weight <= t
        std::vector<std::int64_t> msg(c.k());
        for (auto& x : msg) x = static_cast<std::int64_t>(rng() % c.q);
        std::vector<std::int64_t> word(c.n, 0);
        for (std::size_t i = 0; i < c.k(); ++i)
            for (std::size_t j = 0; j < c.n; ++j)
                word[j] = (word[j] + msg[i] * c.gen[i][j]) % c.q;
        ZqVec r(c.q, word);
        std::int64_t budget = t;
        for (std::size_t j = 0; j < c.n && budget > 0; ++j) {
            std::int64_t d = static_cast<std::int64_t>(rng() % (budget + 1));
            r.v[j] = ((r.v[j] + ((rng() & 1) ? d : -d)) % c.q + c.q) % c.q;
            budget -= d;
        }

        ZqVec out = leedp_to_bdd(LeedpInstance{c, r, t}, brute_bdd());
        std::int64_t achieved = lee_weight(zq_sub(r, out));
        CHECK(achieved <= t);
        auto oracle = solve_leedp_bruteforce(c, r, t);
        REQUIRE(oracle.has_value());
        CHECK(achieved == lee_weight(zq_sub(r, *oracle)));
        ++done;
    }
}

TEST_CASE("leedp_to_bdd rejects out-of-range weight budgets") {
    // t >= min{q, d_L}: no alpha in (0,1) exists
    CHECK_THROWS_AS(
        (void)leedp_to_bdd(LeedpInstance{c2(), ZqVec(7, {2, 3}), 3}, brute_bdd()),
        HypothesisViolated);

    // d_L(C) > q: diagnostic names the failing case once t reaches q
    LinearCode rep(3, 5, {{1, 1, 1, 1, 1}});  // d_L = 5 > q = 3
    try {
        (void)leedp_to_bdd(LeedpInstance{rep, ZqVec(3, {1, 0, 0, 0, 0}), 4},
                           brute_bdd());
        FAIL("expected HypothesisViolated");
    } catch (const HypothesisViolated& e) {
        CHECK(std::string(e.what()).find("d_L") != std::string::npos);
    }
}

TEST_CASE("code_from_basis") {
    LatticeBasis b(2, {{1, 2}, {0, 7}});
    LinearCode c = code_from_basis(b);
    CHECK(c.q == 7);
    CHECK(c.gen == std::vector<std::vector<std::int64_t>>{{1, 2}, {0, 0}});

    // |det| = 1 means the lattice is all of Z^n: no usable modulus
    CHECK_THROWS_AS((void)code_from_basis(LatticeBasis(2, {{1, 0}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("deconstruction identity on random bases") {
    std::mt19937_64 rng(111);
    int done = 0;
    while (done < 40) {
        std::size_t n = 2 + rng() % 2;
        IntMat rows(n, IntVec(n));
        for (auto& row : rows)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 13) - 6;
        Int det = determinant(rows);
        if (abs(det) < 2) continue;
        LatticeBasis b(n, rows);
        ConstructionA rebuilt = construction_a(code_from_basis(b));
        CHECK(same_lattice(rebuilt.basis, b));
        ++done;
    }
}

TEST_CASE("bdd_to_leedp basics") {
    LatticeBasis b(2, {{1, 2}, {0, 7}});
    // r in the lattice -> v = r
    IntVec in_lat{1, 9};  // (1,2) + (0,7)
    CHECK(bdd_to_leedp(BddInstance{b, in_lat, Rat(1, 2)}, brute_leedp()) == in_lat);

    // r = (2,3): the closest lattice point is 2*(1,2) = (2,4) at distance 1
    IntVec v = bdd_to_leedp(BddInstance{b, IntVec{2, 3}, Rat(7, 10)}, brute_leedp());
    CHECK(v == IntVec{2, 4});
    CHECK(l1_dist(v, IntVec{2, 3}) == 1);
}

TEST_CASE("bdd_to_leedp planted instances stay member and in range") {
    std::mt19937_64 rng(121);
    int done = 0;
    while (done < 60) {
        IntMat rows{{static_cast<std::int64_t>(rng() % 9) - 4,
                     static_cast<std::int64_t>(rng() % 9) - 4},
                    {static_cast<std::int64_t>(rng() % 9) - 4,
                     static_cast<std::int64_t>(rng() % 9) - 4}};
        Int det = determinant(rows);
        if (abs(det) < 3) continue;
        LatticeBasis b(2, rows);
        Int radius = std::min(l1_norm(rows[0]), l1_norm(rows[1]));
        Int l1 = lambda1_l1(b, radius).norm;
        if (l1 < 3) continue;

        IntVec z{static_cast<std::int64_t>(rng() % 7) - 3,
                 static_cast<std::int64_t>(rng() % 7) - 3};
        IntVec planted(2, 0);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) planted[j] += z[i] * rows[i][j];
        IntVec e{(rng() & 1) ? 1 : -1, 0};
        IntVec r = vec_add(planted, e);
        Rat alpha(1, 2);
        if (Rat(l1_dist(r, planted)) > alpha * Rat(l1)) continue;

        IntVec v = bdd_to_leedp(BddInstance{b, r, alpha}, brute_leedp());
        CHECK(member(b, v).member);
        CHECK(Rat(l1_dist(v, r)) <= alpha * Rat(l1));
        CHECK(l1_dist(v, r) == closest_vector_l1_bruteforce(b, r).dist);
        ++done;
    }
}

TEST_CASE("bdd_to_usvp embedding") {
    ConstructionA a2 = construction_a(c2());
    const LatticeBasis& b = a2.basis;

    // r in the lattice: embedded shortest vector is (0,0,mu), e = 0
    IntVec in_lat{1, 9};
    IntVec v = bdd_to_usvp_embedding(BddInstance{b, in_lat, Rat(1, 3)},
                                     usvp_bruteforce_oracle(2), 1, Rat(1));
    CHECK(v == in_lat);

    // planted e = (1,0)
    IntVec target = vec_add(IntVec{2, 4}, IntVec{1, 0});
    IntVec rec = bdd_to_usvp_embedding(BddInstance{b, target, Rat(1, 3)},
                                       usvp_bruteforce_oracle(3), 1, Rat(1));
    CHECK(rec == IntVec{2, 4});

    // sweep over mu on planted instances, alpha < 1/2
    std::mt19937_64 rng(131);
    int best_success = 0;
    for (Int mu = 1; mu <= 3; ++mu) {
        int success = 0;
        for (int it = 0; it < 30; ++it) {
            IntVec z{static_cast<std::int64_t>(rng() % 9) - 4,
                     static_cast<std::int64_t>(rng() % 9) - 4};
            IntVec planted(2, 0);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) planted[j] += z[i] * b.rows[i][j];
            std::size_t coord = rng() % 2;
            IntVec e{0, 0};
            e[coord] = (rng() & 1) ? 1 : -1;
            IntVec r = vec_add(planted, e);
            try {
                IntVec got = bdd_to_usvp_embedding(BddInstance{b, r, Rat(2, 5)},
                                                   usvp_bruteforce_oracle(1 + mu),
                                                   mu, Rat(1));
                if (got == planted) ++success;
            } catch (const std::exception&) {
            }
        }
        best_success = std::max(best_success, success);
    }
    CHECK(best_success >= 29);  // >= 95% at the best mu
}

TEST_CASE("embedding rejects mu <= 0") {
    ConstructionA a2 = construction_a(c2());
    CHECK_THROWS_AS(
        (void)bdd_to_usvp_embedding(BddInstance{a2.basis, IntVec{0, 0}, Rat(1, 2)},
                                    usvp_bruteforce_oracle(2), 0, Rat(1)),
        std::invalid_argument);
}
