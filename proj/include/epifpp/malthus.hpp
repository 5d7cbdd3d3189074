#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "epifpp/dist.hpp"

namespace epifpp {

// mu(inf) <= 1: no positive growth rate exists
struct SubcriticalError : std::runtime_error {
    explicit SubcriticalError(const std::string &msg) : std::runtime_error(msg) {}
};

// Mean reproduction measure mu(dt) = E[D*] Hbar(t) G(dt).
class ReproductionMeasure {
  public:
    ReproductionMeasure(double size_biased_mean, InfectionLaw g, ContagionLaw h);

    double value(double t) const; // mu(t)
    double total() const;         // mu(inf)
    // E[D*] * int_lo^inf t^k e^{-lambda t} Hbar(t) G(dt)
    double weighted_moment(double lambda, int k, double lo = 0.0) const;

    double size_biased_mean() const { return dstar_mean_; }
    const InfectionLaw &infection() const { return g_; }
    const ContagionLaw &contagion() const { return h_; }

  private:
    double dstar_mean_;
    InfectionLaw g_;
    ContagionLaw h_;
};

// Root of E[D*] int e^{-lambda x} Hbar(x) G(dx) = 1. Bracketing bisection on
// the strictly decreasing transform, then Newton polish.
double solve_malthusian(const ReproductionMeasure &mu);

struct StableAgeMoments {
    double mean; // m*
    double sd;   // sigma*
};
StableAgeMoments stable_age_moments(const ReproductionMeasure &mu, double lambda);

// Limiting residual-time-to-birth law of a uniform coming-generation member:
// 1 - F_R(s) = E[D*]/(mu(inf)-1) int_s^inf (1 - e^{lambda(s-x)}) Hbar(x) G(dx).
class ResidualDistribution {
  public:
    ResidualDistribution(ReproductionMeasure mu, double lambda);
    double cdf(double s) const;
    double density(double x) const;
    double density0() const { return density0_; } // lambda / (mu(inf)-1)
    double growth_rate() const { return lambda_; }

  private:
    ReproductionMeasure mu_;
    double lambda_;
    double total_;
    double density0_;
};

struct GumbelShift {
    double c;
    double b_closed_form; // m* / E[D*-1]
    double b_quadrature;  // int_0^inf F_R(z) e^{-lambda z} dz
};
// The two routes to B must agree within 1e-8 or construction throws.
GumbelShift gumbel_shift(double mean_degree, double size_biased_mean, double lambda,
                         double stable_age_mean, const ResidualDistribution &residual);

struct HopcountParams {
    double mean_coeff; // alpha = 1/(lambda m*)
    double var_coeff;  // beta  = sigma*^2/(lambda m*^3)
};
HopcountParams hopcount_params(double lambda, double stable_age_mean, double stable_age_sd);

double expected_martingale(double mean_degree, double size_biased_mean, double total_offspring,
                           double lambda, double stable_age_mean);

// The full analytic bundle computed from (D, G, Hbar).
struct BranchingParams {
    double malthusian_rate;     // lambda
    double total_offspring_mean; // mu(inf)
    double stable_age_mean;     // m*
    double stable_age_sd;       // sigma*
    double residual_density0;   // f_R(0)
    double gumbel_shift;        // c
    double hop_mean_coeff;      // alpha
    double hop_var_coeff;       // beta
    double martingale_mean;     // E[W]
    double mean_degree;         // E[D]
    double size_biased_mean;    // E[D*]
};

BranchingParams compute_branching_params(const DegreePMF &pmf, const InfectionLaw &g,
                                         const ContagionLaw &h);

// Monte-Carlo estimate of P(t) = P(-log(W)/lambda - Gumbel/lambda + c <= t).
class LimitCurve {
  public:
    LimitCurve(double lambda, double c, std::span<const double> w_samples,
               std::span<const double> gumbel_samples);
    double operator()(double t) const;
    std::size_t sample_count() const { return shifted_.size(); }

  private:
    std::vector<double> shifted_;
};

} // namespace epifpp
