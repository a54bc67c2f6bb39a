#include "leelat/mceliece.hpp"

#include <algorithm>
#include <numeric>

namespace leelat {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t q) {
    x %= q;
    return x < 0 ? x + q : x;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                  std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t q) {
    std::int64_t x, y;
    std::int64_t g = egcd(mod_pos(a, q), q, x, y);
    if (g != 1) return std::nullopt;
    return mod_pos(x, q);
}

// residues of Lee weight l: two for 0 < l < q/2, one for l = 0 and l = q/2
std::int64_t residues_of_weight(std::int64_t l, std::int64_t q) {
    if (l == 0) return 1;
    if (q % 2 == 0 && l == q / 2) return 1;
    return 2;
}

Int random_int_below(Rng& rng, const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("random_int_below: empty range");
    unsigned bits = static_cast<unsigned>(msb(bound)) + 1;
    while (true) {
        Int x = 0;
        unsigned produced = 0;
        while (produced < bits) {
            x <<= 64;
            x += rng.next();
            produced += 64;
        }
        x >>= (produced - bits);
        if (x < bound) return x;
    }
}

}  // namespace

ZqVec LeeIsometry::apply(const ZqVec& x) const {
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = mod_pos(signs[i] * x.v[perm[i]], x.q);
    return ZqVec(x.q, std::move(out));
}

ZqVec LeeIsometry::apply_inverse(const ZqVec& x) const {
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[perm[i]] = mod_pos(signs[i] * x.v[i], x.q);
    return ZqVec(x.q, std::move(out));
}

LeeIsometry identity_isometry(std::size_t n) {
    LeeIsometry phi;
    phi.perm.resize(n);
    std::iota(phi.perm.begin(), phi.perm.end(), 0);
    phi.signs.assign(n, 1);
    return phi;
}

LeeIsometry random_isometry(std::size_t n, Rng& rng) {
    LeeIsometry phi = identity_isometry(n);
    for (std::size_t i = n; i > 1; --i)
        std::swap(phi.perm[i - 1], phi.perm[rng.next_below(i)]);
    for (auto& s : phi.signs) s = (rng.next() & 1) ? 1 : -1;
    return phi;
}

Int count_fixed_lee_weight(std::int64_t q, std::size_t n, std::int64_t w) {
    if (w < 0 || w > static_cast<std::int64_t>(n) * (q / 2)) return 0;
    std::vector<Int> dp(static_cast<std::size_t>(w) + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> next(dp.size(), 0);
        for (std::size_t cur = 0; cur < dp.size(); ++cur) {
            if (dp[cur] == 0) continue;
            for (std::int64_t l = 0; l <= q / 2; ++l) {
                std::size_t tgt = cur + static_cast<std::size_t>(l);
                if (tgt >= next.size()) break;
                next[tgt] += dp[cur] * residues_of_weight(l, q);
            }
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(w)];
}

ZqVec sample_fixed_lee_weight(std::int64_t q, std::size_t n, std::int64_t w,
                              Rng& rng) {
    Int total = count_fixed_lee_weight(q, n, w);
    if (total == 0)
        throw std::invalid_argument("sample_fixed_lee_weight: empty sphere");
    std::vector<std::int64_t> out(n, 0);
    std::int64_t left = w;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rest = n - i - 1;
        Int u = random_int_below(rng, count_fixed_lee_weight(q, rest + 1, left));
        for (std::int64_t l = 0; l <= std::min(left, q / 2); ++l) {
            std::int64_t r = residues_of_weight(l, q);
            Int slice = count_fixed_lee_weight(q, rest, left - l) * r;
            if (u < slice) {
                Int which = u / count_fixed_lee_weight(q, rest, left - l);
                std::int64_t residue = l;
                if (r == 2 && which == 1) residue = q - l;
                out[i] = residue;
                left -= l;
                break;
            }
            u -= slice;
        }
    }
    return ZqVec(q, std::move(out));
}

std::optional<std::vector<std::size_t>> find_information_set(const LinearCode& c) {
    const std::size_t k = c.k();
    std::vector<std::vector<std::int64_t>> a = c.gen;
    std::vector<std::size_t> cols;
    std::vector<bool> used(c.n, false);
    for (std::size_t r = 0; r < k; ++r) {
        bool found = false;
        for (std::size_t col = 0; col < c.n && !found; ++col) {
            if (used[col]) continue;
            auto inv = mod_inverse(a[r][col], c.q);
            if (!inv) continue;
            // normalise the pivot row and clear the column elsewhere
            for (auto& x : a[r]) x = mod_pos(x * *inv, c.q);
            for (std::size_t i = 0; i < k; ++i) {
                if (i == r || a[i][col] == 0) continue;
                std::int64_t f = a[i][col];
                for (std::size_t j = 0; j < c.n; ++j)
                    a[i][j] = mod_pos(a[i][j] - f * a[r][j], c.q);
            }
            used[col] = true;
            cols.push_back(col);
            found = true;
        }
        if (!found) return std::nullopt;
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

ZqVec message_from_codeword(const LinearCode& code,
                            const std::vector<std::size_t>& info_set,
                            const ZqVec& codeword) {
    const std::size_t k = code.k();
    if (info_set.size() != k)
        throw std::invalid_argument("message_from_codeword: bad information set");
    IntMat gi(k, IntVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gi[i][j] = code.gen[i][info_set[j]];
    Int det = determinant(gi);
    std::int64_t det_mod = mod_pos(static_cast<std::int64_t>(det % code.q), code.q);
    auto det_inv = mod_inverse(det_mod, code.q);
    if (!det_inv)
        throw std::invalid_argument(
            "message_from_codeword: submatrix determinant is not a unit");
    IntMat adj = adjugate(gi);
    // m = c_I * G_I^{-1} with G_I^{-1} = Adj(G_I) * det^{-1} mod q
    std::vector<std::int64_t> m(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            acc += Int(codeword.v[info_set[i]]) * adj[i][j];
        std::int64_t a = mod_pos(static_cast<std::int64_t>(acc % code.q), code.q);
        m[j] = mod_pos(a * *det_inv, code.q);
    }
    return ZqVec(code.q, std::move(m));
}

KeyPair keygen(std::int64_t q, std::size_t n, std::size_t k, std::int64_t w,
               Rng& rng, int max_retries) {
    if (w < 0) throw std::invalid_argument("keygen: w must be nonnegative");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::vector<std::int64_t>> gen(k, std::vector<std::int64_t>(n));
        for (auto& row : gen)
            for (auto& x : row) x = static_cast<std::int64_t>(rng.next_below(q));
        LinearCode secret;
        try {
            secret = LinearCode(q, n, gen);
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto info = find_information_set(secret);
        if (!info) continue;
        std::int64_t dl;
        try {
            dl = min_lee_distance(secret);
        } catch (const std::invalid_argument&) {
            continue;  // zero code
        }
        if (2 * w >= std::min(q, dl)) continue;

        LeeIsometry phi = random_isometry(n, rng);
        std::vector<std::vector<std::int64_t>> pub_rows;
        for (std::size_t i = 0; i < k; ++i)
            pub_rows.push_back(phi.apply(secret.row(i)).v);
        LinearCode pub(q, n, std::move(pub_rows));
        return KeyPair{std::move(secret), std::move(pub), std::move(phi), w, *info};
    }
    throw std::runtime_error("keygen: retries exhausted");
}

Ciphertext encrypt(const KeyPair& kp, const ZqVec& m, Rng& rng) {
    if (m.size() != kp.pub.k() || m.q != kp.pub.q)
        throw std::invalid_argument("encrypt: bad message");
    std::vector<std::int64_t> word(kp.pub.n, 0);
    for (std::size_t i = 0; i < kp.pub.k(); ++i)
        for (std::size_t j = 0; j < kp.pub.n; ++j)
            word[j] = mod_pos(word[j] + m.v[i] * kp.pub.gen[i][j], kp.pub.q);
    ZqVec c(kp.pub.q, std::move(word));
    if (kp.w > 0) {
        ZqVec e = sample_fixed_lee_weight(kp.pub.q, kp.pub.n, kp.w, rng);
        c = zq_add(c, e);
    }
    return Ciphertext{std::move(c)};
}

ZqVec decrypt(const KeyPair& kp, const Ciphertext& ct) {
    ZqVec y = kp.phi.apply_inverse(ct.c);
    auto cw = solve_leedp_bruteforce(kp.secret, y, kp.w);
    if (!cw) throw std::runtime_error("decrypt: decoding failure");
    return message_from_codeword(kp.secret, kp.info_set, *cw);
}

ZqVec message_recovery_attack(const KeyPair& kp, const Ciphertext& ct,
                              AttackPath path, const Int& mu) {
    const LinearCode& pub = kp.pub;
    auto pub_info = find_information_set(pub);
    if (!pub_info)
        throw std::runtime_error("attack: public code has no information set");

    if (kp.w == 0)
        return message_from_codeword(pub, *pub_info, ct.c);

    ZqVec codeword(pub.q, std::vector<std::int64_t>(pub.n, 0));
    if (path == AttackPath::kLeedpToBdd) {
        LeedpInstance inst{pub, ct.c, kp.w};
        BddOracle oracle = [](const ConstructionA& a, const IntVec& r,
                              const Rat& alpha) {
            return solve_bdd(a, r, alpha);
        };
        codeword = leedp_to_bdd(inst, oracle);
    } else {
        std::int64_t dl = min_lee_distance(pub);
        std::int64_t bound = std::min(pub.q, dl);
        if (kp.w >= bound)
            throw HypothesisViolated("attack: w >= min{q, d_L(C_pub)}");
        ConstructionA la = construction_a(pub);
        BddInstance inst{la.basis, center_lift(ct.c), Rat(kp.w, bound)};
        Int radius = std::min(Int(kp.w) + mu, Int(pub.q));
        IntVec v = bdd_to_usvp_embedding(inst, usvp_bruteforce_oracle(radius), mu,
                                         Rat(1));
        codeword = reduce_mod_q(v, pub.q);
    }
    return message_from_codeword(pub, *pub_info, codeword);
}

}  // namespace leelat
