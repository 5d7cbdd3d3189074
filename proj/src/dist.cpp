#include "epifpp/dist.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace epifpp {

namespace {

std::vector<double> build_cumulative(const std::vector<double> &probs) {
    std::vector<double> cum(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cum[i] = acc;
    }
    cum.back() = 1.0;
    return cum;
}

std::size_t sample_index(const std::vector<double> &cum, RngStream &rng) {
    double u = rng.uniform01();
    return std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
}

} // namespace

DegreePMF DegreePMF::from_entries(std::vector<Entry> entries, bool strict) {
    if (entries.empty())
        throw std::invalid_argument("degree pmf: no entries");
    std::sort(entries.begin(), entries.end(),
              [](const Entry &a, const Entry &b) { return a.degree < b.degree; });
    double total = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        if (e.degree < 1)
            throw std::invalid_argument("degree pmf: degree < 1");
        if (i > 0 && entries[i - 1].degree == e.degree)
            throw std::invalid_argument("degree pmf: duplicate degree " + std::to_string(e.degree));
        if (e.prob < 0.0 || e.prob > 1.0)
            throw std::invalid_argument("degree pmf: probability outside [0,1]");
        total += e.prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("degree pmf: probabilities sum to " + std::to_string(total));

    DegreePMF pmf;
    pmf.entries_ = std::move(entries);
    if (pmf.entries_.front().degree < 2) {
        if (strict)
            throw std::invalid_argument("degree pmf: degree < 2 violates the regularity condition "
                                        "(use permissive validation to override)");
        std::cerr << "warning: degree pmf has degrees < 2; analytic results do not apply\n";
        pmf.condition_ok_ = false;
    }
    std::vector<double> probs;
    for (const auto &e : pmf.entries_)
        probs.push_back(e.prob);
    pmf.cumulative_ = build_cumulative(probs);
    return pmf;
}

DegreePMF DegreePMF::from_sequence(const std::vector<int> &degrees, bool strict) {
    if (degrees.empty())
        throw std::invalid_argument("degree sequence: empty");
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Entry> entries;
    const double w = 1.0 / static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        entries.push_back({sorted[i], w * static_cast<double>(j - i)});
        i = j;
    }
    return from_entries(std::move(entries), strict);
}

int DegreePMF::sample(RngStream &rng) const {
    return entries_[sample_index(cumulative_, rng)].degree;
}

SizeBiasedPMF SizeBiasedPMF::from_entries(std::vector<Entry> entries) {
    if (entries.empty())
        throw std::invalid_argument("size-biased pmf: no entries");
    std::sort(entries.begin(), entries.end(),
              [](const Entry &a, const Entry &b) { return a.count < b.count; });
    double total = 0.0;
    for (const auto &e : entries) {
        if (e.count < 0)
            throw std::invalid_argument("size-biased pmf: negative count");
        total += e.prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("size-biased pmf: probabilities sum to " + std::to_string(total));
    SizeBiasedPMF pmf;
    pmf.entries_ = std::move(entries);
    std::vector<double> probs;
    for (const auto &e : pmf.entries_)
        probs.push_back(e.prob);
    pmf.cumulative_ = build_cumulative(probs);
    return pmf;
}

double SizeBiasedPMF::mean() const {
    double m = 0.0;
    for (const auto &e : entries_)
        m += static_cast<double>(e.count) * e.prob;
    return m;
}

int SizeBiasedPMF::sample(RngStream &rng) const {
    return entries_[sample_index(cumulative_, rng)].count;
}

SizeBiasedPMF size_bias(const DegreePMF &pmf) {
    const double mean = degree_moments(pmf).mean;
    std::vector<SizeBiasedPMF::Entry> entries;
    for (const auto &e : pmf.entries())
        entries.push_back({e.degree - 1, static_cast<double>(e.degree) * e.prob / mean});
    return SizeBiasedPMF::from_entries(std::move(entries));
}

DegreeMoments degree_moments(const DegreePMF &pmf) {
    DegreeMoments m{0.0, 0.0, 0.0, 0.0};
    for (const auto &e : pmf.entries()) {
        const double d = static_cast<double>(e.degree);
        m.mean += d * e.prob;
        m.factorial_second += d * (d - 1.0) * e.prob;
        m.sq_logplus += d * d * std::max(0.0, std::log(d)) * e.prob;
    }
    m.size_biased_mean = m.factorial_second / m.mean;
    return m;
}

std::vector<int> sample_degree_sequence(const DegreePMF &pmf, std::size_t n, RngStream &rng) {
    if (n < 2)
        throw std::invalid_argument("degree sequence: need n >= 2");
    std::vector<int> degrees(n);
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        degrees[i] = pmf.sample(rng);
        total += degrees[i];
    }
    if (total % 2 != 0)
        degrees[rng.below(n)] += 1;
    return degrees;
}

std::vector<int> read_degree_sequence(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open degree sequence file: " + path);
    std::vector<int> degrees;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        degrees.push_back(std::stoi(line));
    }
    if (degrees.empty())
        throw std::runtime_error("degree sequence file is empty: " + path);
    return degrees;
}

InfectionLaw InfectionLaw::exponential(double rate) {
    if (!(rate > 0.0))
        throw std::invalid_argument("exponential infection law: rate must be > 0");
    return InfectionLaw(Family::exponential, rate, 0.0);
}

InfectionLaw InfectionLaw::uniform(double a, double b) {
    if (!(0.0 <= a && a < b))
        throw std::invalid_argument("uniform infection law: need 0 <= a < b");
    return InfectionLaw(Family::uniform, a, b);
}

InfectionLaw InfectionLaw::weibull(double shape, double scale) {
    if (!(shape > 0.0 && scale > 0.0))
        throw std::invalid_argument("weibull infection law: shape and scale must be > 0");
    return InfectionLaw(Family::weibull, shape, scale);
}

double InfectionLaw::cdf(double x) const {
    if (x <= 0.0)
        return 0.0;
    switch (family_) {
    case Family::exponential:
        return -std::expm1(-p1_ * x);
    case Family::uniform:
        if (x <= p1_)
            return 0.0;
        if (x >= p2_)
            return 1.0;
        return (x - p1_) / (p2_ - p1_);
    case Family::weibull:
        return -std::expm1(-std::pow(x / p2_, p1_));
    }
    return 0.0;
}

double InfectionLaw::pdf(double x) const {
    if (x <= 0.0)
        return 0.0;
    switch (family_) {
    case Family::exponential:
        return p1_ * std::exp(-p1_ * x);
    case Family::uniform:
        return (x > p1_ && x < p2_) ? 1.0 / (p2_ - p1_) : 0.0;
    case Family::weibull: {
        const double z = std::pow(x / p2_, p1_);
        return p1_ / p2_ * std::pow(x / p2_, p1_ - 1.0) * std::exp(-z);
    }
    }
    return 0.0;
}

double InfectionLaw::quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("quantile: p must be in [0,1)");
    switch (family_) {
    case Family::exponential:
        return -std::log1p(-p) / p1_;
    case Family::uniform:
        return p1_ + p * (p2_ - p1_);
    case Family::weibull:
        return p2_ * std::pow(-std::log1p(-p), 1.0 / p1_);
    }
    return 0.0;
}

double InfectionLaw::sample(RngStream &rng) const {
    switch (family_) {
    case Family::exponential:
        return rng.exponential(p1_);
    case Family::uniform:
        return rng.uniform(p1_, p2_);
    case Family::weibull:
        return rng.weibull(p1_, p2_);
    }
    return 0.0;
}

double InfectionLaw::support_end() const {
    return family_ == Family::uniform ? p2_ : kInf;
}

double InfectionLaw::tail_cut(double eps) const {
    if (family_ == Family::uniform)
        return p2_;
    return quantile(1.0 - eps);
}

std::string InfectionLaw::describe() const {
    std::ostringstream os;
    switch (family_) {
    case Family::exponential:
        os << "exponential(rate=" << p1_ << ")";
        break;
    case Family::uniform:
        os << "uniform(" << p1_ << "," << p2_ << ")";
        break;
    case Family::weibull:
        os << "weibull(shape=" << p1_ << ",scale=" << p2_ << ")";
        break;
    }
    return os.str();
}

ContagionLaw ContagionLaw::infinite() { return ContagionLaw(Family::infinite, 0.0); }

ContagionLaw ContagionLaw::exponential(double rate) {
    if (!(rate > 0.0))
        throw std::invalid_argument("exponential contagion law: rate must be > 0");
    return ContagionLaw(Family::exponential, rate);
}

ContagionLaw ContagionLaw::deterministic(double value) {
    if (!(value >= 0.0))
        throw std::invalid_argument("deterministic contagion law: value must be >= 0");
    return ContagionLaw(Family::deterministic, value);
}

double ContagionLaw::survival(double x) const {
    switch (family_) {
    case Family::infinite:
        return 1.0;
    case Family::exponential:
        return x <= 0.0 ? 1.0 : std::exp(-p_ * x);
    case Family::deterministic:
        return x < p_ ? 1.0 : 0.0;
    }
    return 1.0;
}

double ContagionLaw::sample(RngStream &rng) const {
    switch (family_) {
    case Family::infinite:
        return kInf;
    case Family::exponential:
        return rng.exponential(p_);
    case Family::deterministic:
        return p_;
    }
    return kInf;
}

double ContagionLaw::breakpoint() const {
    return family_ == Family::deterministic ? p_ : std::nan("");
}

std::string ContagionLaw::describe() const {
    std::ostringstream os;
    switch (family_) {
    case Family::infinite:
        os << "infinite";
        break;
    case Family::exponential:
        os << "exponential(rate=" << p_ << ")";
        break;
    case Family::deterministic:
        os << "deterministic(" << p_ << ")";
        break;
    }
    return os.str();
}

} // namespace epifpp
