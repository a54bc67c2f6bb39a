#ifndef LEELAT_DISTRIBUTIONS_HPP
#define LEELAT_DISTRIBUTIONS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace leelat {

// Asymptotic per-coordinate law of a uniform vector of relative Lee weight T.
struct LeeMarginal {
    std::int64_t q = 0;
    double t_param = 0;  // T
    double beta = 0;
    double c1 = 0;                    // normaliser, equals p(0)
    std::vector<double> probabilities;  // indexed by the standard representative

    double operator()(std::int64_t j) const;  // accepts centered j as well
};

struct HammingMarginal {
    std::int64_t q = 0;
    double delta = 0;

    double operator()(std::int64_t j) const {
        return j % q == 0 ? 1.0 - delta : delta / static_cast<double>(q - 1);
    }
};

// Finite or truncated distribution over integer support.
struct DiscreteDist {
    std::vector<std::pair<std::int64_t, double>> points;
    double tail_bound = 0;  // mass possibly lost to truncation
};

// beta is the root of T = sum_j lwt(j) e^{-x lwt(j)} / sum_i e^{-x lwt(i)},
// found by bisection on the strictly decreasing right-hand side.
double solve_beta(std::int64_t q, double t_param, double tol = 1e-12);
LeeMarginal lee_marginal(std::int64_t q, double t_param);

// R_inf(F_T || H_delta) closed form; nu(beta) = 1 for beta >= 0, floor(q/2)
// otherwise.
double renyi_inf_lee_hamming(std::int64_t q, double t_param, double delta);
// Minimising delta* and the corresponding lower bound c1 (1 + e^{-beta nu} (q-1)).
std::pair<double, double> renyi_lower_bound(std::int64_t q, double t_param);

// Literal formula evaluation; +infinity when the sum diverges.
double renyi_generic(const DiscreteDist& f, const DiscreteDist& g, double order);
double renyi_inf_generic(const DiscreteDist& f, const DiscreteDist& g);
double kl_generic(const DiscreteDist& f, const DiscreteDist& g);

// KL(Lap_{R,b} || D_{R,sigma}) = log(sigma sqrt(pi/2) / b) + b^2/sigma^2 - 1.
double kl_laplace_gauss_continuous(double b, double sigma);

// S_1(b) = (e^{1/b}+1)/(e^{1/b}-1); S_2(sigma) = theta_3 normaliser by
// symmetric truncated summation (tail < 1e-16 of the total).
double s1(double b);
double s2(double sigma);
double s2_dsigma(double sigma);  // term-wise derivative of the truncated sum

double kl_discrete_laplace_gauss(double b, double sigma);

// Root of (1/S_2) dS_2/dsigma - 2 e^{1/b} / ((e^{1/b}-1)^2 sigma^3) = 0 by
// bisection; returns (sigma_min, KL at sigma_min).
std::pair<double, double> sigma_min_discrete(double b);

// Explicit truncated distributions for generic-formula cross-checks.
DiscreteDist discrete_laplace(double b, std::int64_t truncation);
DiscreteDist discrete_gaussian(double sigma, std::int64_t truncation);
DiscreteDist product_dist(const DiscreteDist& f, const DiscreteDist& g);

// Sup-norm gaps between F_T over centered Z_q and Lap_{Z, 1/beta_inf} with
// beta_inf = log((1 + sqrt(1 + T^2)) / T), one gap per q.
std::vector<double> lee_to_laplace_convergence(double t_param,
                                               const std::vector<std::int64_t>& qs);

// Divergence lower bound c1 (1 + e^{-beta nu} (q-1)) along a q grid.
std::vector<double> renyi_divergence_growth(double t_param,
                                            const std::vector<std::int64_t>& qs);

double beta_limit(double t_param);  // log((1 + sqrt(1 + T^2)) / T)
double c1_limit(double t_param);    // ((1-T) + sqrt(1+T^2)) / ((1+T) + sqrt(1+T^2))

}  // namespace leelat

#endif
