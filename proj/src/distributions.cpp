#include "leelat/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace leelat {

namespace {

std::int64_t lee_wt(std::int64_t j, std::int64_t q) {
    j %= q;
    if (j < 0) j += q;
    return std::min(j, q - j);
}

// Right-hand side of the beta constraint, evaluated with exponent shifting.
double beta_rhs(std::int64_t q, double x) {
    double shift = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j < q; ++j)
        shift = std::max(shift, -x * static_cast<double>(lee_wt(j, q)));
    double num = 0, den = 0;
    for (std::int64_t j = 0; j < q; ++j) {
        double w = static_cast<double>(lee_wt(j, q));
        double e = std::exp(-x * w - shift);
        num += w * e;
        den += e;
    }
    return num / den;
}

}  // namespace

double LeeMarginal::operator()(std::int64_t j) const {
    j %= q;
    if (j < 0) j += q;
    return probabilities[static_cast<std::size_t>(j)];
}

double solve_beta(std::int64_t q, double t_param, double tol) {
    if (q < 2) throw std::invalid_argument("solve_beta: q must be >= 2");
    double half = static_cast<double>(q / 2);
    if (!(t_param > 0.0) || !(t_param < half))
        throw std::invalid_argument("solve_beta: require 0 < T < floor(q/2)");

    // rhs is strictly decreasing in x; expand the bracket to a sign change
    double lo = -1.0, hi = 1.0;
    while (beta_rhs(q, lo) < t_param) lo *= 2;
    while (beta_rhs(q, hi) > t_param) hi *= 2;
    for (int it = 0; it < 500 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (beta_rhs(q, mid) > t_param)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LeeMarginal lee_marginal(std::int64_t q, double t_param) {
    LeeMarginal m;
    m.q = q;
    m.t_param = t_param;
    m.beta = solve_beta(q, t_param);
    double z = 0;
    for (std::int64_t j = 0; j < q; ++j)
        z += std::exp(-m.beta * static_cast<double>(lee_wt(j, q)));
    m.c1 = 1.0 / z;
    m.probabilities.resize(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j)
        m.probabilities[static_cast<std::size_t>(j)] =
            m.c1 * std::exp(-m.beta * static_cast<double>(lee_wt(j, q)));
    return m;
}

namespace {

double nu_of(double beta, std::int64_t q) {
    return beta >= 0 ? 1.0 : static_cast<double>(q / 2);
}

}  // namespace

double renyi_inf_lee_hamming(std::int64_t q, double t_param, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("renyi_inf_lee_hamming: delta in (0,1)");
    LeeMarginal m = lee_marginal(q, t_param);
    double nu = nu_of(m.beta, q);
    double first = m.c1 / (1.0 - delta);
    double second =
        m.c1 * std::exp(-m.beta * nu) * static_cast<double>(q - 1) / delta;
    return std::max(first, second);
}

std::pair<double, double> renyi_lower_bound(std::int64_t q, double t_param) {
    LeeMarginal m = lee_marginal(q, t_param);
    double u = std::exp(-m.beta * nu_of(m.beta, q)) * static_cast<double>(q - 1);
    double delta_star = u / (1.0 + u);
    double bound = m.c1 * (1.0 + u);
    return {delta_star, bound};
}

namespace {

std::map<std::int64_t, double> as_map(const DiscreteDist& d) {
    std::map<std::int64_t, double> m;
    for (const auto& [x, p] : d.points)
        if (p != 0.0) m[x] += p;
    return m;
}

}  // namespace

double renyi_generic(const DiscreteDist& f, const DiscreteDist& g, double order) {
    if (!(order > 1.0))
        throw std::invalid_argument("renyi_generic: order must exceed 1");
    if (std::isinf(order)) return renyi_inf_generic(f, g);
    auto gm = as_map(g);
    double sum = 0;
    for (const auto& [x, p] : f.points) {
        if (p == 0.0) continue;
        auto it = gm.find(x);
        if (it == gm.end())
            throw std::invalid_argument("renyi_generic: Supp(F) not in Supp(G)");
        sum += std::pow(p, order) / std::pow(it->second, order - 1.0);
    }
    return std::pow(sum, 1.0 / (order - 1.0));
}

double renyi_inf_generic(const DiscreteDist& f, const DiscreteDist& g) {
    auto gm = as_map(g);
    double best = 0;
    for (const auto& [x, p] : f.points) {
        if (p == 0.0) continue;
        auto it = gm.find(x);
        if (it == gm.end())
            throw std::invalid_argument("renyi_inf_generic: Supp(F) not in Supp(G)");
        best = std::max(best, p / it->second);
    }
    return best;
}

double kl_generic(const DiscreteDist& f, const DiscreteDist& g) {
    auto gm = as_map(g);
    double sum = 0;
    for (const auto& [x, p] : f.points) {
        if (p == 0.0) continue;
        auto it = gm.find(x);
        if (it == gm.end())
            throw std::invalid_argument("kl_generic: Supp(F) not in Supp(G)");
        sum += p * std::log(p / it->second);
    }
    return sum;
}

double kl_laplace_gauss_continuous(double b, double sigma) {
    if (!(b > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("kl_laplace_gauss_continuous: need b, sigma > 0");
    return std::log(sigma * std::sqrt(M_PI / 2.0) / b) + b * b / (sigma * sigma) -
           1.0;
}

double s1(double b) {
    if (!(b > 0.0)) throw std::invalid_argument("s1: b must be positive");
    double r = std::exp(-1.0 / b);
    return (1.0 + r) / (1.0 - r);
}

double s2(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("s2: sigma must be positive");
    double acc = 1.0;
    for (std::int64_t y = 1;; ++y) {
        double term = std::exp(-static_cast<double>(y) * y / (2 * sigma * sigma));
        acc += 2.0 * term;
        if (term < 1e-22 * acc && static_cast<double>(y) > 10.0 * sigma) break;
    }
    return acc;
}

double s2_dsigma(double sigma) {
    double acc = 0.0;
    double s3 = sigma * sigma * sigma;
    for (std::int64_t y = 1;; ++y) {
        double yy = static_cast<double>(y) * y;
        double term = yy * std::exp(-yy / (2 * sigma * sigma)) / s3;
        acc += 2.0 * term;
        if (term < 1e-22 * (acc + 1.0) && static_cast<double>(y) > 10.0 * sigma)
            break;
    }
    return acc;
}

double kl_discrete_laplace_gauss(double b, double sigma) {
    if (!(b > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("kl_discrete_laplace_gauss: need b, sigma > 0");
    double r = std::exp(-1.0 / b);
    double one_minus = 1.0 - r;
    double s1b = (1.0 + r) / one_minus;
    // e^{1/b}(e^{1/b}+1)/(e^{1/b}-1)^3 and 2 e^{1/b}/(b (e^{1/b}-1)^2),
    // rewritten in powers of r = e^{-1/b} to avoid overflow for small b
    double term1 = r * (1.0 + r) / (one_minus * one_minus * one_minus * sigma * sigma);
    double term2 = 2.0 * r / (b * one_minus * one_minus);
    return std::log(s2(sigma) / s1b) + (term1 - term2) / s1b;
}

std::pair<double, double> sigma_min_discrete(double b) {
    if (!(b > 0.0)) throw std::invalid_argument("sigma_min_discrete: b > 0");
    double r = std::exp(-1.0 / b);
    double kconst = 2.0 * r / ((1.0 - r) * (1.0 - r));
    auto g = [&](double sigma) {
        return s2_dsigma(sigma) / s2(sigma) - kconst / (sigma * sigma * sigma);
    };
    double lo = b / 4.0, hi = 4.0 * b * std::sqrt(2.0);
    int expansions = 0;
    while (g(lo) > 0) {
        lo /= 2.0;
        if (++expansions > 200)
            throw std::runtime_error("sigma_min_discrete: bracket expansion exhausted");
    }
    while (g(hi) < 0) {
        hi *= 2.0;
        if (++expansions > 200)
            throw std::runtime_error("sigma_min_discrete: bracket expansion exhausted");
    }
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    double sigma = 0.5 * (lo + hi);
    return {sigma, kl_discrete_laplace_gauss(b, sigma)};
}

DiscreteDist discrete_laplace(double b, std::int64_t truncation) {
    DiscreteDist d;
    double z = 0;
    for (std::int64_t y = -truncation; y <= truncation; ++y)
        z += std::exp(-std::abs(static_cast<double>(y)) / b);
    for (std::int64_t y = -truncation; y <= truncation; ++y)
        d.points.emplace_back(y, std::exp(-std::abs(static_cast<double>(y)) / b) / z);
    double full = s1(b);
    d.tail_bound = std::max(0.0, 1.0 - z / full);
    return d;
}

DiscreteDist discrete_gaussian(double sigma, std::int64_t truncation) {
    DiscreteDist d;
    double z = 0;
    for (std::int64_t y = -truncation; y <= truncation; ++y)
        z += std::exp(-static_cast<double>(y) * y / (2 * sigma * sigma));
    for (std::int64_t y = -truncation; y <= truncation; ++y)
        d.points.emplace_back(y,
                              std::exp(-static_cast<double>(y) * y /
                                       (2 * sigma * sigma)) /
                                  z);
    double full = s2(sigma);
    d.tail_bound = std::max(0.0, 1.0 - z / full);
    return d;
}

DiscreteDist product_dist(const DiscreteDist& f, const DiscreteDist& g) {
    // pairs keyed by a fixed injection; divergences only match keys, so any
    // consistent encoding works
    constexpr std::int64_t kStride = 1'000'003;
    DiscreteDist d;
    for (const auto& [x, p] : f.points)
        for (const auto& [y, q] : g.points)
            d.points.emplace_back(x * kStride + y, p * q);
    d.tail_bound = f.tail_bound + g.tail_bound;
    return d;
}

double beta_limit(double t_param) {
    return std::log((1.0 + std::sqrt(1.0 + t_param * t_param)) / t_param);
}

double c1_limit(double t_param) {
    double s = std::sqrt(1.0 + t_param * t_param);
    return ((1.0 - t_param) + s) / ((1.0 + t_param) + s);
}

namespace {

// The sup-norm gap decays like e^{-beta q/2}, far below double resolution
// already at moderate q, so the gap itself is evaluated in extended
// precision and only the final result is rounded back to double.
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

// num/den of the tilt constraint at e^{-beta} = r, via running powers.
Wide wide_mean(std::int64_t q, const Wide& r) {
    Wide num = 0, den = 1, pw = 1;
    for (std::int64_t w = 1; w <= (q - 1) / 2; ++w) {
        pw *= r;
        num += 2 * w * pw;
        den += 2 * pw;
    }
    if (q % 2 == 0) {
        pw *= r;
        num += (q / 2) * pw;
        den += pw;
    }
    return num / den;
}

Wide wide_beta(std::int64_t q, double t_param) {
    Wide lo = -1, hi = 1;  // beta may be negative for T above the flat mean
    while (wide_mean(q, exp(-lo)) < t_param) lo *= 2;
    while (wide_mean(q, exp(-hi)) > t_param) hi *= 2;
    for (int it = 0; it < 800 && hi - lo > Wide(1e-120); ++it) {
        Wide mid = (lo + hi) / 2;
        if (wide_mean(q, exp(-mid)) > t_param)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

std::vector<double> lee_to_laplace_convergence(double t_param,
                                               const std::vector<std::int64_t>& qs) {
    Wide tt = t_param;
    Wide rinf = exp(-log((1 + sqrt(1 + tt * tt)) / tt));  // e^{-beta_inf}
    Wide lap0 = (1 - rinf) / (1 + rinf);                  // Lap_{Z,1/beta_inf}(0)
    std::vector<double> gaps;
    for (auto q : qs) {
        if (q < 2) throw std::invalid_argument("convergence: q must be >= 2");
        if (!(t_param > 0.0) || !(t_param < static_cast<double>(q / 2)))
            throw std::invalid_argument("convergence: require 0 < T < floor(q/2)");
        Wide r = exp(-wide_beta(q, t_param));
        Wide z = 1, pw = 1;
        for (std::int64_t w = 1; w <= (q - 1) / 2; ++w) {
            pw *= r;
            z += 2 * pw;
        }
        if (q % 2 == 0) z += pw * r;
        Wide c1 = 1 / z;
        Wide gap = 0, mq = c1, lap = lap0, pinf = 1;
        for (std::int64_t j = 0; j <= q / 2; ++j) {
            gap = std::max(gap, Wide(abs(mq - lap)));
            mq *= r;      // m(j) = c1 r^{lwt(j)}, lwt = |j| on this half
            lap *= rinf;  // lap0 rinf^{|j|}
            pinf *= rinf;
        }
        // beyond q/2 the marginal has no mass; the Laplace tail remains
        gap = std::max(gap, Wide(lap0 * pinf));
        gaps.push_back(static_cast<double>(gap));
    }
    return gaps;
}

std::vector<double> renyi_divergence_growth(double t_param,
                                            const std::vector<std::int64_t>& qs) {
    std::vector<double> out;
    for (auto q : qs) out.push_back(renyi_lower_bound(q, t_param).second);
    return out;
}

}  // namespace leelat
