#include "leelat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace leelat {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

IntMat minor_of(const IntMat& a, std::size_t drop_row, std::size_t drop_col) {
    IntMat m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == drop_row) continue;
        IntVec row;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == drop_col) continue;
            row.push_back(a[i][j]);
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

LatticeBasis::LatticeBasis(std::size_t ambient, IntMat basis_rows)
    : n(ambient), rows(std::move(basis_rows)) {
    if (rows.empty()) throw std::invalid_argument("LatticeBasis: no rows");
    if (rows.size() > n) throw std::invalid_argument("LatticeBasis: k > n");
    for (const auto& r : rows)
        if (r.size() != n)
            throw std::invalid_argument("LatticeBasis: row length mismatch");
    if (gram_det(*this) == 0)
        throw std::invalid_argument("LatticeBasis: rows not linearly independent");
}

Int determinant(const IntMat& a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw std::invalid_argument("determinant: not square");
    if (n == 0) return 1;

    // Bareiss fraction-free elimination
    IntMat m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t j = 0; j < n - 1; ++j) {
        if (m[j][j] == 0) {
            std::size_t swap_row = j;
            for (std::size_t i = j + 1; i < n; ++i)
                if (m[i][j] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == j) return 0;
            std::swap(m[j], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            for (std::size_t l = j + 1; l < n; ++l)
                m[i][l] = (m[j][j] * m[i][l] - m[i][j] * m[j][l]) / prev;
            m[i][j] = 0;
        }
        prev = m[j][j];
    }
    return sign * m[n - 1][n - 1];
}

Int determinant(const LatticeBasis& b) {
    if (!b.full_rank())
        throw std::invalid_argument("determinant: basis is not square");
    return determinant(b.rows);
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMat c(a.size(), IntVec(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Int gram_det(const LatticeBasis& b) {
    return determinant(mat_mul(b.rows, transpose(b.rows)));
}

IntMat adjugate(const IntMat& a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw std::invalid_argument("adjugate: not square");
    IntMat adj(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int d = determinant(minor_of(a, j, i));
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

IntMat hnf(const IntMat& a, IntMat* transform) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    IntMat w = a;
    IntMat u(m, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // Euclid on the column entries below the current pivot row
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (w[i][col] == 0) continue;
                if (best == m || abs(w[i][col]) < abs(w[best][col])) best = i;
            }
            if (best == m) break;
            std::swap(w[r], w[best]);
            std::swap(u[r], u[best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (w[i][col] == 0) continue;
                Int f = floor_div(w[i][col], w[r][col]);
                for (std::size_t j = 0; j < n; ++j) w[i][j] -= f * w[r][j];
                for (std::size_t j = 0; j < m; ++j) u[i][j] -= f * u[r][j];
                if (w[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (w[r][col] == 0) continue;
        if (w[r][col] < 0) {
            for (auto& x : w[r]) x = -x;
            for (auto& x : u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floor_div(w[i][col], w[r][col]);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) w[i][j] -= f * w[r][j];
            for (std::size_t j = 0; j < m; ++j) u[i][j] -= f * u[r][j];
        }
        ++r;
    }
    w.resize(r);
    if (transform) {
        u.resize(m);
        *transform = std::move(u);
    }
    return w;
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
    return a.n == b.n && hnf(a.rows) == hnf(b.rows);
}

ConstructionA construction_a(const LinearCode& c) {
    IntMat stacked;
    for (const auto& row : c.gen) {
        IntVec lifted(row.begin(), row.end());
        stacked.push_back(std::move(lifted));
    }
    for (std::size_t i = 0; i < c.n; ++i) {
        IntVec qrow(c.n, 0);
        qrow[i] = c.q;
        stacked.push_back(std::move(qrow));
    }
    IntMat h = hnf(stacked);
    // q * I_n is included, so the HNF is always full rank n x n
    return ConstructionA{c, LatticeBasis(c.n, std::move(h))};
}

ConstructionAG construction_ag(const LinearCode& c) {
    IntMat rows;
    for (std::size_t i = 0; i < c.k(); ++i)
        rows.push_back(center_lift(c.row(i)));
    try {
        LatticeBasis b(c.n, std::move(rows));
        return ConstructionAG{c, std::move(b)};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "construction_ag: center-lifted generator rows are dependent");
    }
}

MemberResult member(const LatticeBasis& b, const IntVec& v) {
    if (v.size() != b.n) throw std::invalid_argument("member: length mismatch");
    IntMat u;
    IntMat h = hnf(b.rows, &u);
    // rows are independent, so no row collapses and U * B = H with U unimodular
    std::vector<std::size_t> piv(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::size_t j = 0;
        while (j < b.n && h[i][j] == 0) ++j;
        piv[i] = j;
    }
    IntVec c = v;
    IntVec t(h.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (c[piv[i]] % h[i][piv[i]] != 0) return {};
        t[i] = c[piv[i]] / h[i][piv[i]];
        for (std::size_t j = 0; j < b.n; ++j) c[j] -= t[i] * h[i][j];
    }
    for (const auto& x : c)
        if (x != 0) return {};
    // witness in terms of the original rows: z = t * U
    IntVec z(b.k(), 0);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < b.k(); ++j) z[j] += t[i] * u[i][j];
    return {true, std::move(z)};
}

void enumerate_l1_ball(const LatticeBasis& b, const IntVec& center,
                       const Int& radius,
                       const std::function<void(const IntVec&)>& fn) {
    if (center.size() != b.n)
        throw std::invalid_argument("enumerate_l1_ball: length mismatch");
    if (radius < 0) return;
    IntMat h = hnf(b.rows);
    const std::size_t k = h.size();
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = 0;
        while (j < b.n && h[i][j] == 0) ++j;
        piv[i] = j;
    }

    IntVec v(b.n, 0);
    std::function<void(std::size_t, const Int&)> rec = [&](std::size_t i,
                                                           const Int& used) {
        if (i == k) {
            if (l1_dist(v, center) <= radius) fn(v);
            return;
        }
        // rows below i have zeros at column piv[i], so v[piv[i]] is final
        // once z_i is chosen; prune on the pivot-coordinate distance
        const Int& p = h[i][piv[i]];
        Int slack = radius - used;
        Int lo = ceil_div(center[piv[i]] - slack - v[piv[i]], p);
        Int hi = floor_div(center[piv[i]] + slack - v[piv[i]], p);
        if (lo > hi) return;
        for (std::size_t j = 0; j < b.n; ++j) v[j] += lo * h[i][j];
        for (Int z = lo;; ++z) {
            Int used_here = used + abs(v[piv[i]] - center[piv[i]]);
            if (used_here <= radius) rec(i + 1, used_here);
            if (z == hi) break;
            for (std::size_t j = 0; j < b.n; ++j) v[j] += h[i][j];
        }
        for (std::size_t j = 0; j < b.n; ++j) v[j] -= hi * h[i][j];
    };
    rec(0, 0);
}

ShortVector lambda1_l1(const LatticeBasis& b, const Int& radius) {
    std::optional<ShortVector> best;
    IntVec zero(b.n, 0);
    enumerate_l1_ball(b, zero, radius, [&](const IntVec& v) {
        Int norm = l1_norm(v);
        if (norm == 0) return;
        if (!best || norm < best->norm ||
            (norm == best->norm && lex_less(v, best->vec)))
            best = ShortVector{norm, v};
    });
    if (!best)
        throw PromiseViolation("lambda1_l1: no nonzero lattice vector within radius");
    return *best;
}

namespace {

bool is_parallel(const IntVec& v, const IntVec& w) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] * w[j] != v[j] * w[i]) return false;
    return true;
}

}  // namespace

ShortVector lambda2_l1(const LatticeBasis& b, const Int& radius) {
    if (b.k() < 2)
        throw PromiseViolation("lambda2_l1: rank-1 lattice has no lambda2");
    ShortVector first = lambda1_l1(b, radius);
    // a basis row not parallel to the witness bounds lambda2 from above; at
    // most one independent row can be parallel to it
    std::optional<Int> cap_opt;
    for (const auto& row : b.rows)
        if (!is_parallel(row, first.vec)) {
            Int nrm = l1_norm(row);
            if (!cap_opt || nrm < *cap_opt) cap_opt = nrm;
        }
    Int cap = *cap_opt;
    std::optional<ShortVector> best;
    IntVec zero(b.n, 0);
    enumerate_l1_ball(b, zero, cap, [&](const IntVec& v) {
        if (l1_norm(v) == 0 || is_parallel(v, first.vec)) return;
        Int norm = l1_norm(v);
        if (!best || norm < best->norm ||
            (norm == best->norm && lex_less(v, best->vec)))
            best = ShortVector{norm, v};
    });
    if (!best)
        throw PromiseViolation("lambda2_l1: no non-parallel vector within radius");
    return *best;
}

ShortVector lambda1_l1(const ConstructionA& a) {
    return lambda1_l1(a.basis, Int(a.code.q));
}

ShortVector lambda2_l1(const ConstructionA& a) {
    return lambda2_l1(a.basis, Int(a.code.q));
}

ClosestResult closest_vector_l1_bruteforce(const LatticeBasis& b, const IntVec& r) {
    if (r.size() != b.n)
        throw std::invalid_argument("closest_vector: length mismatch");
    // Babai-style seed: round the rational solution of z * (B B^T) = r * B^T
    IntMat gram = mat_mul(b.rows, transpose(b.rows));
    Int det = determinant(gram);
    IntMat adj = adjugate(gram);
    IntMat bt = transpose(b.rows);
    IntVec rbt(b.k(), 0);
    for (std::size_t i = 0; i < b.k(); ++i)
        for (std::size_t j = 0; j < b.n; ++j) rbt[i] += r[j] * bt[j][i];
    IntVec z(b.k(), 0);
    for (std::size_t i = 0; i < b.k(); ++i) {
        Int num = 0;
        for (std::size_t l = 0; l < b.k(); ++l) num += rbt[l] * adj[l][i];
        Int den = det;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        z[i] = floor_div(2 * num + den, 2 * den);  // nearest, half up
    }
    IntVec v0(b.n, 0);
    for (std::size_t i = 0; i < b.k(); ++i)
        for (std::size_t j = 0; j < b.n; ++j) v0[j] += z[i] * b.rows[i][j];
    Int d0 = l1_dist(v0, r);

    std::optional<ClosestResult> best;
    enumerate_l1_ball(b, r, d0, [&](const IntVec& v) {
        Int d = l1_dist(v, r);
        if (!best || d < best->dist || (d == best->dist && lex_less(v, best->vec)))
            best = ClosestResult{v, d};
    });
    // the seed itself lies in the ball
    return *best;
}

ClosestResult closest_vector_l1_bruteforce(const ConstructionA& a, const IntVec& r) {
    if (r.size() != a.code.n)
        throw std::invalid_argument("closest_vector: length mismatch");
    const Int q = a.code.q;
    std::optional<ClosestResult> best;
    for_each_codeword(a.code, [&](const ZqVec& c) {
        IntVec lift = center_lift(c);
        IntVec v(lift.size());
        Int d = 0;
        // the shift by qZ^n is separable per coordinate; on a distance tie
        // the smaller coordinate value is the lexicographically smaller pick
        for (std::size_t i = 0; i < lift.size(); ++i) {
            Int z = floor_div(r[i] - lift[i], q);
            Int lowv = lift[i] + z * q;
            Int highv = lowv + q;
            Int dl = abs(lowv - r[i]);
            Int dh = abs(highv - r[i]);
            if (dl <= dh) {
                v[i] = lowv;
                d += dl;
            } else {
                v[i] = highv;
                d += dh;
            }
        }
        if (!best || d < best->dist || (d == best->dist && lex_less(v, best->vec)))
            best = ClosestResult{std::move(v), d};
    });
    return *best;
}

namespace {

IntVec checked_bdd(const ClosestResult& closest, const Int& l1, const Rat& alpha,
                   const IntVec& r) {
    (void)r;
    // the promise is taken non-strictly: the LeeDP -> BDD reduction plants
    // instances sitting exactly on the boundary d_1 = alpha * lambda1
    if (Rat(closest.dist) > alpha * Rat(l1))
        throw PromiseViolation("solve_bdd: d_1(r, L) > alpha * lambda1");
    return closest.vec;
}

}  // namespace

IntVec solve_bdd(const LatticeBasis& b, const IntVec& r, const Rat& alpha) {
    ClosestResult c = closest_vector_l1_bruteforce(b, r);
    // search radius: any basis row norm bounds lambda1 from above
    Int radius = l1_norm(b.rows[0]);
    for (const auto& row : b.rows) radius = std::min(radius, l1_norm(row));
    ShortVector l1 = lambda1_l1(b, radius);
    return checked_bdd(c, l1.norm, alpha, r);
}

IntVec solve_bdd(const ConstructionA& a, const IntVec& r, const Rat& alpha) {
    ClosestResult c = closest_vector_l1_bruteforce(a, r);
    ShortVector l1 = lambda1_l1(a);
    return checked_bdd(c, l1.norm, alpha, r);
}

IntVec solve_usvp(const LatticeBasis& b, const Rat& gamma, const Int& radius) {
    ShortVector l1 = lambda1_l1(b, radius);
    if (b.k() >= 2) {
        ShortVector l2 = lambda2_l1(b, radius);
        if (Rat(l2.norm) <= gamma * Rat(l1.norm))
            throw PromiseViolation("solve_usvp: lambda2 <= gamma * lambda1");
    }
    return l1.vec;
}

IntVec solve_usvp(const ConstructionA& a, const Rat& gamma) {
    return solve_usvp(a.basis, gamma, Int(a.code.q));
}

std::string lattice_to_text(const LatticeBasis& b) {
    std::ostringstream os;
    os << b.k() << ' ' << b.n << '\n';
    for (const auto& row : b.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 == row.size() ? '\n' : ' ');
    }
    return os.str();
}

LatticeBasis lattice_from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t k, n;
    if (!(is >> k >> n)) throw std::invalid_argument("lattice_from_text: bad header");
    IntMat rows(k, IntVec(n));
    for (auto& row : rows)
        for (auto& x : row) {
            std::string tok;
            if (!(is >> tok))
                throw std::invalid_argument("lattice_from_text: bad row");
            x = Int(tok);
        }
    return LatticeBasis(n, std::move(rows));
}

}  // namespace leelat
