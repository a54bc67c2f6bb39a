#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "leelat/lattice.hpp"

using namespace leelat;

namespace {

// independent oracle: enumerate coefficient boxes [-box, box]^k directly
std::vector<IntVec> ball_oracle(const LatticeBasis& b, const IntVec& center,
                                const Int& radius, std::int64_t box) {
    std::vector<IntVec> out;
    std::vector<std::int64_t> z(b.k(), -box);
    while (true) {
        IntVec v(b.n, 0);
        for (std::size_t i = 0; i < b.k(); ++i)
            for (std::size_t j = 0; j < b.n; ++j) v[j] += Int(z[i]) * b.rows[i][j];
        if (l1_dist(v, center) <= radius) out.push_back(v);
        std::size_t pos = 0;
        while (pos < z.size() && ++z[pos] > box) z[pos++] = -box;
        if (pos == z.size()) break;
    }
    return out;
}

std::set<IntVec> as_set(std::vector<IntVec> v) {
    return std::set<IntVec>(v.begin(), v.end());
}

LinearCode c1() { return LinearCode(7, 2, {{1, 1}}); }
LinearCode c2() { return LinearCode(7, 2, {{1, 2}}); }

}  // namespace

TEST_CASE("determinants and Gram determinants") {
    CHECK(determinant(IntMat{{1, 0}, {0, 1}}) == 1);
    CHECK(determinant(IntMat{{1, 2}, {3, 4}}) == -2);
    LatticeBasis g3(3, {{3, 1, 2}, {3, 2, 3}});
    CHECK(gram_det(g3) == 19);
    LatticeBasis g4(5, {{3, 1, 2, 5, -4}, {3, 2, 3, 6, -1}, {-1, 2, 5, -5, 6}});
    CHECK(gram_det(g4) == 23804);
}

TEST_CASE("adjugate identity") {
    CHECK(adjugate(IntMat{{1, 0}, {0, 1}}) == IntMat{{1, 0}, {0, 1}});
    CHECK(adjugate(IntMat{{1, 2}, {3, 4}}) == IntMat{{4, -2}, {-3, 1}});
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        IntMat a(4, IntVec(4));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 11) - 5;
        Int det = determinant(a);
        IntMat prod = mat_mul(adjugate(a), a);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(prod[i][j] == (i == j ? det : Int(0)));
    }
}

TEST_CASE("construction A canonical bases") {
    ConstructionA zero = construction_a(LinearCode(7, 2, {{0, 0}}));
    CHECK(zero.basis.rows == IntMat{{7, 0}, {0, 7}});
    CHECK(determinant(zero.basis) == 49);

    ConstructionA a2 = construction_a(c2());
    CHECK(a2.basis.rows == IntMat{{1, 2}, {0, 7}});
    CHECK(determinant(a2.basis) == 7);

    // lattice point count in [0,q)^n equals |C|
    std::int64_t pts = 0;
    for (std::int64_t x = 0; x < 7; ++x)
        for (std::int64_t y = 0; y < 7; ++y)
            if (member(a2.basis, IntVec{x, y}).member) ++pts;
    CHECK(pts == 7);

    // independence from the generator matrix choice
    ConstructionA g5 = construction_a(LinearCode(11, 2, {{1, 2}}));
    ConstructionA g5p = construction_a(LinearCode(11, 2, {{5, -1}}));
    CHECK(g5.basis.rows == g5p.basis.rows);

    // membership semantics: v in L_A iff v mod q in C
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        IntVec v{static_cast<std::int64_t>(rng() % 30) - 15,
                 static_cast<std::int64_t>(rng() % 30) - 15};
        ZqVec red = reduce_mod_q(v, 7);
        bool in_code = false;
        for_each_codeword(c2(), [&](const ZqVec& w) { in_code |= (w == red); });
        CHECK(member(a2.basis, v).member == in_code);
    }
}

TEST_CASE("construction A_G keeps the lifted rows") {
    ConstructionAG ag = construction_ag(c1());
    CHECK(ag.basis.rows == IntMat{{1, 1}});
    ConstructionAG ag5 = construction_ag(LinearCode(11, 2, {{5, -1}}));
    CHECK(ag5.basis.rows == IntMat{{5, -1}});
    ConstructionAG ag3 = construction_ag(LinearCode(7, 3, {{3, 1, 2}, {3, 2, 3}}));
    CHECK(ag3.basis.k() == 2);
    // rationally dependent lifted rows are rejected (q = 11 keeps the lift
    // of (2,4) at (2,4), a true multiple of (1,2) over Z)
    CHECK_THROWS_AS((void)construction_ag(LinearCode(11, 2, {{1, 2}, {2, 4}})),
                    std::invalid_argument);
    // every A_G basis row is an A member
    ConstructionA a3 = construction_a(LinearCode(7, 3, {{3, 1, 2}, {3, 2, 3}}));
    for (const auto& row : ag3.basis.rows) CHECK(member(a3.basis, row).member);
}

TEST_CASE("membership with witness") {
    LatticeBasis b(2, {{1, 2}, {0, 7}});
    CHECK(member(b, IntVec{0, 0}).member);

    LatticeBasis one(2, {{1, 2}});
    MemberResult m = member(one, IntVec{3, 6});
    CHECK(m.member);
    CHECK(m.witness == IntVec{3});
    CHECK_FALSE(member(one, IntVec{1, 1}).member);

    // constructive sampling: z * B is always a member with matching witness
    std::mt19937_64 rng(21);
    LatticeBasis b3(3, {{2, -1, 3}, {0, 4, 1}});
    for (int it = 0; it < 100; ++it) {
        IntVec z{static_cast<std::int64_t>(rng() % 7) - 3,
                 static_cast<std::int64_t>(rng() % 7) - 3};
        IntVec v(3, 0);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) v[j] += z[i] * b3.rows[i][j];
        MemberResult res = member(b3, v);
        REQUIRE(res.member);
        IntVec back(3, 0);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) back[j] += res.witness[i] * b3.rows[i][j];
        CHECK(back == v);
    }
}

TEST_CASE("l1 ball enumeration is exhaustive") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 15; ++it) {
        IntMat rows{{static_cast<std::int64_t>(rng() % 7) - 3,
                     static_cast<std::int64_t>(rng() % 7) - 3,
                     static_cast<std::int64_t>(rng() % 7) - 3},
                    {static_cast<std::int64_t>(rng() % 7) - 3,
                     static_cast<std::int64_t>(rng() % 7) - 3,
                     static_cast<std::int64_t>(rng() % 7) - 3}};
        if (determinant(mat_mul(rows, transpose(rows))) == 0) continue;
        LatticeBasis b(3, rows);
        IntVec center{static_cast<std::int64_t>(rng() % 5) - 2,
                      static_cast<std::int64_t>(rng() % 5) - 2,
                      static_cast<std::int64_t>(rng() % 5) - 2};
        Int radius = 4;
        std::vector<IntVec> got;
        enumerate_l1_ball(b, center, radius, [&](const IntVec& v) { got.push_back(v); });
        CHECK(as_set(got).size() == got.size());
        CHECK(as_set(got) == as_set(ball_oracle(b, center, radius, 12)));
    }
}

TEST_CASE("lambda1 values") {
    LatticeBasis zn(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(lambda1_l1(zn, 3).norm == 1);
    CHECK(lambda1_l1(construction_a(c1())).norm == 2);
    CHECK(lambda1_l1(construction_a(c2())).norm == 3);
}

TEST_CASE("lambda2 against an enumeration oracle") {
    ConstructionA a2 = construction_a(c2());
    ShortVector first = lambda1_l1(a2);
    // oracle: scan the radius-9 ball for the shortest vector that is not an
    // integer multiple of the lambda1 witness
    Int best = 1000;
    for (const IntVec& v : ball_oracle(a2.basis, IntVec{0, 0}, 9, 12)) {
        Int norm = l1_norm(v);
        if (norm == 0) continue;
        bool multiple = false;
        for (Int m = -5; m <= 5; ++m) {
            IntVec scaled{m * first.vec[0], m * first.vec[1]};
            if (scaled == v) multiple = true;
        }
        if (!multiple) best = std::min(best, norm);
    }
    CHECK(lambda2_l1(a2).norm == best);
}

TEST_CASE("closest vector brute force") {
    LatticeBasis b(2, {{1, 2}, {0, 7}});
    ClosestResult same = closest_vector_l1_bruteforce(b, IntVec{3, 6});
    CHECK(same.dist == 0);
    CHECK(same.vec == IntVec{3, 6});

    // symmetric tie on 2Z^2 resolved lexicographically
    LatticeBasis even(2, {{2, 0}, {0, 2}});
    ClosestResult tie = closest_vector_l1_bruteforce(even, IntVec{1, 0});
    CHECK(tie.dist == 1);
    CHECK(tie.vec == IntVec{0, 0});

    // planted: r = v + e with small e recovers v, generic and coset solvers agree
    ConstructionA a2 = construction_a(c2());
    std::mt19937_64 rng(41);
    for (int it = 0; it < 50; ++it) {
        IntVec z{static_cast<std::int64_t>(rng() % 9) - 4,
                 static_cast<std::int64_t>(rng() % 9) - 4};
        IntVec v(2, 0);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) v[j] += z[i] * a2.basis.rows[i][j];
        IntVec e{(rng() & 1) ? 1 : -1, 0};  // norm 1 < lambda1 / 2 = 1.5
        IntVec r = vec_add(v, e);
        ClosestResult generic = closest_vector_l1_bruteforce(a2.basis, r);
        ClosestResult coset = closest_vector_l1_bruteforce(a2, r);
        CHECK(generic.vec == v);
        CHECK(coset.vec == v);
        CHECK(generic.dist == 1);
        CHECK(coset.dist == 1);
    }
}

TEST_CASE("promise problem solvers") {
    LatticeBasis z2(2, {{1, 0}, {0, 1}});
    CHECK(solve_bdd(z2, IntVec{0, 0}, Rat(1, 2)) == IntVec{0, 0});

    // uSVP on L_A(C2) at gamma = 1: witness is +-(1,2) of norm 3
    ConstructionA a2 = construction_a(c2());
    IntVec w = solve_usvp(a2, Rat(1));
    CHECK(l1_norm(w) == 3);
    CHECK((w == IntVec{1, 2} || w == IntVec{-1, -2}));

    // violated BDD promise reported loudly: d_1(r, L) = 2 > alpha * 3 = 1.5
    CHECK_THROWS_AS((void)solve_bdd(a2, IntVec{2, 0}, Rat(1, 2)), PromiseViolation);
}

TEST_CASE("hnf and lattice equality") {
    LatticeBasis a(2, {{1, 2}, {0, 7}});
    LatticeBasis b(2, {{1, 9}, {-1, -2}});  // row operations on the same lattice
    CHECK(same_lattice(a, b));
    LatticeBasis c(2, {{1, 2}, {0, 14}});
    CHECK_FALSE(same_lattice(a, c));

    // transform really is unimodular and maps A to its HNF
    IntMat u;
    IntMat h = hnf(b.rows, &u);
    CHECK(abs(determinant(u)) == 1);
    CHECK(mat_mul(u, b.rows) == h);
}

TEST_CASE("construction A determinant divides q^n") {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 30; ++it) {
        std::int64_t q = std::vector<std::int64_t>{5, 6, 7, 9}[it % 4];
        std::vector<std::vector<std::int64_t>> gen(2, std::vector<std::int64_t>(3));
        for (auto& row : gen)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % q);
        ConstructionA a = construction_a(LinearCode(q, 3, gen));
        Int det = determinant(a.basis);
        Int qn = Int(q) * q * q;
        CHECK(qn % det == 0);
    }
}

TEST_CASE("lattice text format round trip") {
    LatticeBasis b(3, {{1, -2, 3}, {0, 4, -5}});
    LatticeBasis back = lattice_from_text(lattice_to_text(b));
    CHECK(back.n == b.n);
    CHECK(back.rows == b.rows);
}
