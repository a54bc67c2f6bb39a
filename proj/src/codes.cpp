#include "leelat/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace leelat {

LinearCode::LinearCode(std::int64_t modulus, std::size_t length,
                       std::vector<std::vector<std::int64_t>> rows)
    : q(modulus), n(length), gen(std::move(rows)) {
    if (q < 2) throw std::invalid_argument("LinearCode: modulus must be >= 2");
    if (n < 1) throw std::invalid_argument("LinearCode: length must be >= 1");
    if (gen.empty() || gen.size() > n)
        throw std::invalid_argument("LinearCode: need 1 <= k <= n generator rows");
    for (auto& r : gen) {
        if (r.size() != n)
            throw std::invalid_argument("LinearCode: generator row length mismatch");
        for (auto& x : r) {
            x %= q;
            if (x < 0) x += q;
        }
    }
}

void for_each_codeword(const LinearCode& c,
                       const std::function<void(const ZqVec&)>& fn,
                       std::int64_t cap) {
    const std::size_t k = c.k();
    double messages = std::pow(static_cast<double>(c.q), static_cast<double>(k));
    if (messages > static_cast<double>(cap))
        throw EnumerationCapExceeded("codeword enumeration exceeds cap");

    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::int64_t> x(k, 0);
    std::vector<std::int64_t> word(c.n, 0);
    while (true) {
        if (seen.insert(word).second) fn(ZqVec(c.q, word));
        // odometer step on the message, keeping word = x * G updated
        std::size_t i = 0;
        for (; i < k; ++i) {
            ++x[i];
            for (std::size_t j = 0; j < c.n; ++j)
                word[j] = (word[j] + c.gen[i][j]) % c.q;
            if (x[i] < c.q) break;
            x[i] = 0;
            // rolling over subtracts q copies of row i, a no-op mod q; word is
            // already correct because q * gen[i] == 0 mod q
        }
        if (i == k) break;
    }
}

std::vector<ZqVec> enumerate_codewords(const LinearCode& c, std::int64_t cap) {
    std::vector<ZqVec> out;
    for_each_codeword(c, [&](const ZqVec& w) { out.push_back(w); }, cap);
    return out;
}

std::int64_t min_lee_distance(const LinearCode& c, std::int64_t cap) {
    std::int64_t best = -1;
    for_each_codeword(
        c,
        [&](const ZqVec& w) {
            std::int64_t lw = lee_weight(w);
            if (lw == 0) return;
            if (best < 0 || lw < best) best = lw;
        },
        cap);
    if (best < 0) throw std::invalid_argument("min_lee_distance: zero code");
    return best;
}

ZqVec syndrome(const ParityCheck& h, const ZqVec& e) {
    if (h.q != e.q) throw std::invalid_argument("syndrome: modulus mismatch");
    for (const auto& row : h.h)
        if (row.size() != e.size())
            throw std::invalid_argument("syndrome: dimension mismatch");
    std::vector<std::int64_t> s(h.h.size(), 0);
    for (std::size_t i = 0; i < h.h.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < e.size(); ++j)
            acc = (acc + e.v[j] % h.q * (h.h[i][j] % h.q)) % h.q;
        s[i] = acc;
    }
    return ZqVec(h.q, std::move(s));
}

namespace {

// Prefer smaller Lee weight, then lexicographically smaller center-lift.
bool better_candidate(std::int64_t w_new, const ZqVec& v_new, std::int64_t w_old,
                      const ZqVec& v_old) {
    if (w_new != w_old) return w_new < w_old;
    return lex_less(center_lift(v_new), center_lift(v_old));
}

}  // namespace

std::optional<ZqVec> solve_leesdp_bruteforce(const ParityCheck& h, const ZqVec& s,
                                             std::int64_t t, std::int64_t cap) {
    const std::size_t n = h.h.empty() ? s.size() : h.h[0].size();
    double space = std::pow(static_cast<double>(h.q), static_cast<double>(n));
    if (space > static_cast<double>(cap))
        throw EnumerationCapExceeded("LeeSDP brute force exceeds cap");

    std::optional<ZqVec> best;
    std::int64_t best_w = 0;
    std::vector<std::int64_t> e(n, 0);
    while (true) {
        ZqVec cand(h.q, e);
        std::int64_t w = lee_weight(cand);
        if (w <= t && syndrome(h, cand) == s) {
            if (!best || better_candidate(w, cand, best_w, *best)) {
                best = cand;
                best_w = w;
            }
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++e[i] < h.q) break;
            e[i] = 0;
        }
        if (i == n) break;
    }
    return best;
}

std::optional<ZqVec> solve_leedp_bruteforce(const LinearCode& c, const ZqVec& r,
                                            std::int64_t t, std::int64_t cap) {
    if (c.q != r.q || c.n != r.size())
        throw std::invalid_argument("solve_leedp_bruteforce: incompatible input");
    std::optional<ZqVec> best;
    std::int64_t best_w = 0;
    for_each_codeword(
        c,
        [&](const ZqVec& w) {
            std::int64_t lw = lee_weight(zq_sub(r, w));
            if (!best || lw < best_w ||
                (lw == best_w && lex_less(center_lift(w), center_lift(*best)))) {
                best = w;
                best_w = lw;
            }
        },
        cap);
    if (!best || best_w > t) return std::nullopt;
    return best;
}

std::string code_to_text(const LinearCode& c) {
    std::ostringstream os;
    os << c.q << ' ' << c.k() << ' ' << c.n << '\n';
    for (const auto& row : c.gen) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 == row.size() ? '\n' : ' ');
    }
    return os.str();
}

LinearCode code_from_text(const std::string& text) {
    std::istringstream is(text);
    std::int64_t q;
    std::size_t k, n;
    if (!(is >> q >> k >> n))
        throw std::invalid_argument("code_from_text: bad header");
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(n));
    for (auto& row : rows)
        for (auto& x : row)
            if (!(is >> x)) throw std::invalid_argument("code_from_text: bad row");
    return LinearCode(q, n, std::move(rows));
}

}  // namespace leelat
