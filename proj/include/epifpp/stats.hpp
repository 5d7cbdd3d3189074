#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace epifpp {

class Ecdf {
  public:
    explicit Ecdf(std::vector<double> values);
    double operator()(double t) const;
    const std::vector<double> &sorted() const { return sorted_; }

  private:
    std::vector<double> sorted_;
};

// sup_t |ECDF(t) - cdf(t)| evaluated at the jump points (both sides)
double ks_distance(std::span<const double> sample, const std::function<double(double)> &cdf);

// asymptotic critical value c(alpha)/sqrt(n); alpha in {0.01, 0.05}
double ks_critical(std::size_t n, double alpha);

double normal_cdf(double x);

// P(-Gumbel/lambda + c <= t) = 1 - exp(-e^{-lambda (c - t)})
double gumbel_limit_cdf(double t, double lambda, double c);

// Gaps of {Lambda(T_i)} for increasing arrival times; i.i.d. Exp(1) under the
// Poisson null. Between-event gaps only: a single event yields no gap.
std::vector<double> poisson_rescale(std::span<const double> times,
                                    const std::function<double(double)> &cumulative_intensity);

struct GofReport {
    std::string name;
    std::size_t n = 0;
    double ks = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

GofReport ks_report(const std::string &name, std::span<const double> sample,
                    const std::function<double(double)> &cdf, double threshold);

struct Summary {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
    double se = 0.0;
};
Summary summarize(std::span<const double> values);

} // namespace epifpp
