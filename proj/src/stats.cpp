#include "epifpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epifpp {

Ecdf::Ecdf(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty())
        throw std::invalid_argument("ecdf: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double t) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_distance(std::span<const double> sample, const std::function<double(double)> &cdf) {
    if (sample.empty())
        throw std::invalid_argument("ks distance: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

double ks_critical(std::size_t n, double alpha) {
    double c;
    if (alpha == 0.01)
        c = 1.628;
    else if (alpha == 0.05)
        c = 1.358;
    else
        throw std::invalid_argument("ks critical: alpha must be 0.01 or 0.05");
    return c / std::sqrt(static_cast<double>(n));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double gumbel_limit_cdf(double t, double lambda, double c) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("gumbel limit cdf: lambda must be > 0");
    return 1.0 - std::exp(-std::exp(-lambda * (c - t)));
}

std::vector<double> poisson_rescale(std::span<const double> times,
                                    const std::function<double(double)> &cumulative_intensity) {
    std::vector<double> gaps;
    if (times.size() < 2)
        return gaps;
    gaps.reserve(times.size() - 1);
    double prev = cumulative_intensity(times[0]);
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double cur = cumulative_intensity(times[i]);
        if (cur < prev)
            throw std::invalid_argument("poisson rescale: cumulative intensity not monotone");
        gaps.push_back(cur - prev);
        prev = cur;
    }
    return gaps;
}

GofReport ks_report(const std::string &name, std::span<const double> sample,
                    const std::function<double(double)> &cdf, double threshold) {
    GofReport r;
    r.name = name;
    r.n = sample.size();
    r.ks = ks_distance(sample, cdf);
    r.threshold = threshold;
    r.pass = r.ks <= threshold;
    return r;
}

Summary summarize(std::span<const double> values) {
    Summary s;
    s.n = values.size();
    if (s.n == 0)
        return s;
    double acc = 0.0;
    for (double v : values)
        acc += v;
    s.mean = acc / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values)
            ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.se = s.sd / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

} // namespace epifpp
