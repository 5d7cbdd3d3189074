#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "epifpp/dist.hpp"
#include "epifpp/graph.hpp"

namespace epifpp {

// Pre-drawn randomness for oracle comparison. weight[h] is the delay of the
// directed edge leaving vertex_of(h) through half-edge h; contagion[v] is the
// contagious period of v.
struct EdgeWeights {
    std::vector<double> weight;
    std::vector<double> contagion;
};

EdgeWeights materialize_weights(const HalfEdgeGraph &g, const InfectionLaw &infection,
                                const ContagionLaw &contagion, RngStream &rng);

// (birth time, active half-edge count) sampled at every infection, plus a
// snapshot at the configured stopping rule.
struct ComingGenerationTrace {
    std::vector<std::pair<double, std::uint32_t>> samples;
    double stop_time = kInf;
    std::uint32_t stop_active = 0;
    std::size_t stop_births = 0;
    bool stopped = false;
    std::string rule;
};

struct RunLimits {
    double max_time = kInf;
    std::size_t max_infected = static_cast<std::size_t>(-1); // includes the source
    int stop_at_vertex = -1;  // finish as soon as this vertex is infected
    std::size_t trace_target = 0; // infected count for the trace snapshot; 0 = ceil(sqrt(n))
};

struct EpidemicOutcome {
    int source = 0;
    std::vector<double> sigma;           // +inf if never infected
    std::vector<std::int32_t> hops;      // edges on the infection trail, -1 if never infected
    std::vector<std::int32_t> infector;  // -1 for source / never infected
    std::size_t infected_count = 0;
    ComingGenerationTrace trace;
};

// Event-driven spread: each directed edge carries an independent G-delay,
// usable iff the delay is below the transmitting vertex's contagious period.
// Pairings of fresh half-edges into the active set are resolved at birth, so
// the active count reproduces the half-edge exploration exactly; with C = inf
// the infection times are the first-passage metric.
EpidemicOutcome run_epidemic(const HalfEdgeGraph &g, const InfectionLaw &infection,
                             const ContagionLaw &contagion, int source, RngStream &rng,
                             const RunLimits &limits = {}, const EdgeWeights *pre = nullptr);

// Right-continuous empirical curves P_n(s) and P_n(s, h).
class EpidemicCurve {
  public:
    EpidemicCurve(const EpidemicOutcome &outcome, std::size_t n);

    double value(double s) const;
    // h counts infectives on the trail (edges + 1, source has trail count 1)
    double value_trail(double s, long max_trail) const;
    // edge-count variant used by the CLT-style checks
    double value_edges(double s, long max_edges) const;

  private:
    const std::vector<double> &edge_slice(long max_edges) const;
    std::vector<std::pair<double, std::int32_t>> by_sigma_; // (sigma, edges), sorted
    std::vector<double> sorted_sigma_;
    std::size_t n_;
    mutable std::map<long, std::vector<double>> slice_cache_;
};

struct WEstimate {
    double tau = kInf;
    double active = 0.0;
    double value = 0.0; // e^{-lambda tau} * active
    bool extinct = true;
};

WEstimate estimate_w(const ComingGenerationTrace &trace, double lambda);

struct TwoPointResult {
    double distance = kInf;
    long hops = -1; // edge count
    bool reached = false;
};

TwoPointResult two_point(const HalfEdgeGraph &g, const InfectionLaw &infection,
                         const ContagionLaw &contagion, int source, int target, RngStream &rng,
                         const EdgeWeights *pre = nullptr);

} // namespace epifpp
