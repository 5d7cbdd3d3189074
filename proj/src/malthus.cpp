#include "epifpp/malthus.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace epifpp {

namespace {

constexpr double kQuadTol = 1e-13;

template <typename F>
double gk_segment(const F &f, double a, double b) {
    if (!(b > a))
        return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 14, kQuadTol);
}

// Integration cut so that the neglected tail is far below the quadrature
// tolerance: the integrand carries e^{-lambda x} and the G-tail.
double upper_cut(const InfectionLaw &g, const ContagionLaw &h, double lambda) {
    double cut = g.support_end();
    if (!std::isfinite(cut))
        cut = g.tail_cut(1e-18);
    if (lambda > 0.0)
        cut = std::min(cut, 55.0 / lambda);
    const double bp = h.breakpoint();
    if (!std::isnan(bp))
        cut = std::min(cut, bp);
    return cut;
}

// Piecewise adaptive integration of f over [lo, hi], splitting at the laws'
// breakpoints and at G-quantiles so every segment is smooth.
template <typename F>
double integrate_piecewise(const F &f, const InfectionLaw &g, double lo, double hi) {
    if (!(hi > lo))
        return 0.0;
    std::vector<double> knots{lo, hi};
    auto add = [&](double x) {
        if (x > lo && x < hi)
            knots.push_back(x);
    };
    if (g.family() == InfectionLaw::Family::uniform) {
        add(g.param1());
        add(g.param2());
    }
    for (double q : {0.5, 0.9, 0.99, 0.999999})
        add(g.quantile(q));
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        acc += gk_segment(f, knots[i], knots[i + 1]);
    return acc;
}

} // namespace

ReproductionMeasure::ReproductionMeasure(double size_biased_mean, InfectionLaw g, ContagionLaw h)
    : dstar_mean_(size_biased_mean), g_(std::move(g)), h_(std::move(h)) {
    if (!(dstar_mean_ > 0.0))
        throw std::invalid_argument("reproduction measure: E[D*] must be > 0");
}

double ReproductionMeasure::weighted_moment(double lambda, int k, double lo) const {
    const double hi = upper_cut(g_, h_, lambda);
    auto f = [&](double x) {
        double v = g_.pdf(x) * h_.survival(x);
        if (lambda != 0.0)
            v *= std::exp(-lambda * x);
        for (int i = 0; i < k; ++i)
            v *= x;
        return v;
    };
    return dstar_mean_ * integrate_piecewise(f, g_, std::max(lo, 0.0), hi);
}

double ReproductionMeasure::value(double t) const {
    if (t <= 0.0)
        return 0.0;
    const double hi = std::min(t, upper_cut(g_, h_, 0.0));
    auto f = [&](double x) { return g_.pdf(x) * h_.survival(x); };
    return dstar_mean_ * integrate_piecewise(f, g_, 0.0, hi);
}

double ReproductionMeasure::total() const { return weighted_moment(0.0, 0); }

double solve_malthusian(const ReproductionMeasure &mu) {
    const double total = mu.total();
    if (!(total > 1.0))
        throw SubcriticalError("subcritical reproduction: mu(inf) = " + std::to_string(total) +
                               " <= 1, no Malthusian rate exists");
    auto f = [&](double lam) { return mu.weighted_moment(lam, 0) - 1.0; };

    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (f(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 100)
            throw std::runtime_error("malthusian solve: bracket expansion failed");
    }
    for (int i = 0; i < 60 && hi - lo > 1e-6 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    double lam = 0.5 * (lo + hi);
    for (int i = 0; i < 40; ++i) {
        const double val = f(lam);
        if (std::abs(val) < 1e-12)
            break;
        const double deriv = -mu.weighted_moment(lam, 1);
        double next = lam - val / deriv;
        if (!(next > lo && next < hi))
            next = val > 0.0 ? 0.5 * (lam + hi) : 0.5 * (lo + lam);
        (val > 0.0 ? lo : hi) = lam;
        lam = next;
    }
    return lam;
}

StableAgeMoments stable_age_moments(const ReproductionMeasure &mu, double lambda) {
    const double m1 = mu.weighted_moment(lambda, 1);
    const double m2 = mu.weighted_moment(lambda, 2);
    return {m1, std::sqrt(std::max(0.0, m2 - m1 * m1))};
}

ResidualDistribution::ResidualDistribution(ReproductionMeasure mu, double lambda)
    : mu_(std::move(mu)), lambda_(lambda), total_(mu_.total()),
      density0_(lambda / (mu_.total() - 1.0)) {
    if (!(total_ > 1.0))
        throw SubcriticalError("residual distribution: mu(inf) <= 1");
}

double ResidualDistribution::cdf(double s) const {
    if (s <= 0.0)
        return 0.0;
    const double tail =
        (mu_.weighted_moment(0.0, 0, s) - std::exp(lambda_ * s) * mu_.weighted_moment(lambda_, 0, s)) /
        (total_ - 1.0);
    return std::min(1.0, std::max(0.0, 1.0 - tail));
}

double ResidualDistribution::density(double x) const {
    if (x < 0.0)
        return 0.0;
    return lambda_ * std::exp(lambda_ * x) * mu_.weighted_moment(lambda_, 0, x) / (total_ - 1.0);
}

GumbelShift gumbel_shift(double mean_degree, double size_biased_mean, double lambda,
                         double stable_age_mean, const ResidualDistribution &residual) {
    const double excess = size_biased_mean - 1.0;
    GumbelShift out;
    out.c = std::log(mean_degree * excess * excess /
                     (lambda * size_biased_mean * stable_age_mean)) /
            lambda;
    out.b_closed_form = stable_age_mean / excess;

    const double hi = 55.0 / lambda;
    auto f = [&](double z) { return residual.cdf(z) * std::exp(-lambda * z); };
    double acc = 0.0;
    double a = 0.0;
    for (double b = 1.0 / lambda; a < hi; a = b, b = std::min(hi, b * 4.0)) {
        acc += gk_segment(f, a, std::min(b, hi));
        if (b >= hi)
            break;
    }
    out.b_quadrature = acc;
    if (std::abs(out.b_quadrature - out.b_closed_form) > 1e-8 * std::max(1.0, out.b_closed_form))
        throw std::logic_error("gumbel shift: B routes disagree beyond 1e-8");
    return out;
}

HopcountParams hopcount_params(double lambda, double stable_age_mean, double stable_age_sd) {
    const double m = stable_age_mean;
    return {1.0 / (lambda * m), stable_age_sd * stable_age_sd / (lambda * m * m * m)};
}

double expected_martingale(double mean_degree, double size_biased_mean, double total_offspring,
                           double lambda, double stable_age_mean) {
    return mean_degree * (total_offspring - 1.0) /
           (size_biased_mean * lambda * stable_age_mean);
}

BranchingParams compute_branching_params(const DegreePMF &pmf, const InfectionLaw &g,
                                         const ContagionLaw &h) {
    const DegreeMoments mom = degree_moments(pmf);
    const ReproductionMeasure mu(mom.size_biased_mean, g, h);
    BranchingParams p{};
    p.mean_degree = mom.mean;
    p.size_biased_mean = mom.size_biased_mean;
    p.total_offspring_mean = mu.total();
    p.malthusian_rate = solve_malthusian(mu);
    const StableAgeMoments age = stable_age_moments(mu, p.malthusian_rate);
    p.stable_age_mean = age.mean;
    p.stable_age_sd = age.sd;
    const ResidualDistribution residual(mu, p.malthusian_rate);
    p.residual_density0 = residual.density0();
    p.gumbel_shift = gumbel_shift(mom.mean, mom.size_biased_mean, p.malthusian_rate,
                                  age.mean, residual)
                         .c;
    const HopcountParams hop = hopcount_params(p.malthusian_rate, age.mean, age.sd);
    p.hop_mean_coeff = hop.mean_coeff;
    p.hop_var_coeff = hop.var_coeff;
    p.martingale_mean = expected_martingale(mom.mean, mom.size_biased_mean,
                                            p.total_offspring_mean, p.malthusian_rate, age.mean);
    return p;
}

LimitCurve::LimitCurve(double lambda, double c, std::span<const double> w_samples,
                       std::span<const double> gumbel_samples) {
    if (w_samples.empty() || w_samples.size() != gumbel_samples.size())
        throw std::invalid_argument("limit curve: need matching nonempty sample sets");
    shifted_.resize(w_samples.size());
    for (std::size_t i = 0; i < w_samples.size(); ++i) {
        if (!(w_samples[i] > 0.0))
            throw std::invalid_argument("limit curve: martingale samples must be positive");
        shifted_[i] = -std::log(w_samples[i]) / lambda - gumbel_samples[i] / lambda + c;
    }
    std::sort(shifted_.begin(), shifted_.end());
}

double LimitCurve::operator()(double t) const {
    const auto it = std::upper_bound(shifted_.begin(), shifted_.end(), t);
    return static_cast<double>(it - shifted_.begin()) / static_cast<double>(shifted_.size());
}

} // namespace epifpp
