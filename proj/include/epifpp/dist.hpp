#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epifpp/rng.hpp"

namespace epifpp {

// Finite-support degree law. Entries are (degree, probability), distinct
// degrees sorted ascending, probabilities summing to 1 within 1e-12.
// Strict validation additionally requires every degree >= 2 (the regularity
// condition under which the analytics are valid); permissive construction
// only warns so that the simulator can still run on out-of-condition inputs.
class DegreePMF {
  public:
    struct Entry {
        int degree;
        double prob;
    };

    static DegreePMF from_entries(std::vector<Entry> entries, bool strict = true);
    static DegreePMF regular(int degree) { return from_entries({{degree, 1.0}}); }
    // empirical law of an explicit degree sequence
    static DegreePMF from_sequence(const std::vector<int> &degrees, bool strict = true);

    const std::vector<Entry> &entries() const { return entries_; }
    int min_degree() const { return entries_.front().degree; }
    int max_degree() const { return entries_.back().degree; }
    bool condition_ok() const { return condition_ok_; }

    int sample(RngStream &rng) const;

  private:
    std::vector<Entry> entries_;
    std::vector<double> cumulative_;
    bool condition_ok_ = true;
};

// Law of the forward degree (children count) seen along a uniform half-edge:
// P(K = k) = (k+1) P(D = k+1) / E[D].
class SizeBiasedPMF {
  public:
    struct Entry {
        int count;
        double prob;
    };

    static SizeBiasedPMF from_entries(std::vector<Entry> entries);

    const std::vector<Entry> &entries() const { return entries_; }
    double mean() const;
    int sample(RngStream &rng) const;

  private:
    std::vector<Entry> entries_;
    std::vector<double> cumulative_;
};

struct DegreeMoments {
    double mean;             // E[D]
    double factorial_second; // E[D(D-1)]
    double size_biased_mean; // E[D*] = E[D(D-1)]/E[D]
    double sq_logplus;       // E[D^2 log^+ D]
};

SizeBiasedPMF size_bias(const DegreePMF &pmf);
DegreeMoments degree_moments(const DegreePMF &pmf);

// n i.i.d. draws; if the total is odd, one uniformly chosen entry is
// incremented by 1 so the half-edge count is even.
std::vector<int> sample_degree_sequence(const DegreePMF &pmf, std::size_t n, RngStream &rng);

// Plain text degree sequence, one integer per line.
std::vector<int> read_degree_sequence(const std::string &path);

// Continuous transmission-delay law on (0, inf).
class InfectionLaw {
  public:
    enum class Family { exponential, uniform, weibull };

    static InfectionLaw exponential(double rate);
    static InfectionLaw uniform(double a, double b);
    static InfectionLaw weibull(double shape, double scale);

    Family family() const { return family_; }
    double param1() const { return p1_; }
    double param2() const { return p2_; }

    double cdf(double x) const;
    double pdf(double x) const;
    double survival(double x) const { return 1.0 - cdf(x); }
    double quantile(double p) const;
    double sample(RngStream &rng) const;

    // upper end of the support (+inf except uniform)
    double support_end() const;
    // point beyond which the upper tail mass is <= eps
    double tail_cut(double eps) const;

    std::string describe() const;

  private:
    InfectionLaw(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}
    Family family_;
    double p1_, p2_;
};

// Contagious-period law; only the tail function and a sampler are needed.
class ContagionLaw {
  public:
    enum class Family { infinite, exponential, deterministic };

    static ContagionLaw infinite();
    static ContagionLaw exponential(double rate);
    static ContagionLaw deterministic(double value);

    Family family() const { return family_; }
    double param() const { return p_; }
    bool is_infinite() const { return family_ == Family::infinite; }

    // P(C > x), non-increasing
    double survival(double x) const;
    double sample(RngStream &rng) const; // +inf in the infinite case
    // discontinuity of the tail function, NaN if none
    double breakpoint() const;

    std::string describe() const;

  private:
    ContagionLaw(Family f, double p) : family_(f), p_(p) {}
    Family family_;
    double p_;
};

} // namespace epifpp
