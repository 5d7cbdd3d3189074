#include "epifpp/fpp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace epifpp {

namespace {

enum class HeStatus : std::uint8_t { untouched, active, consumed, dead };

struct FireEvent {
    double time;
    std::uint32_t half_edge;
    bool operator>(const FireEvent &o) const {
        if (time != o.time)
            return time > o.time;
        return half_edge > o.half_edge;
    }
};

} // namespace

EdgeWeights materialize_weights(const HalfEdgeGraph &g, const InfectionLaw &infection,
                                const ContagionLaw &contagion, RngStream &rng) {
    EdgeWeights w;
    w.weight.resize(g.half_edge_count());
    for (auto &x : w.weight)
        x = infection.sample(rng);
    w.contagion.resize(g.vertex_count());
    for (auto &c : w.contagion)
        c = contagion.sample(rng);
    return w;
}

EpidemicOutcome run_epidemic(const HalfEdgeGraph &g, const InfectionLaw &infection,
                             const ContagionLaw &contagion, int source, RngStream &rng,
                             const RunLimits &limits, const EdgeWeights *pre) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n)
        throw std::invalid_argument("run_epidemic: source out of range");

    EpidemicOutcome out;
    out.source = source;
    out.sigma.assign(n, kInf);
    out.hops.assign(n, -1);
    out.infector.assign(n, -1);

    std::size_t trace_target = limits.trace_target;
    if (trace_target == 0)
        trace_target = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    out.trace.rule = "infected=" + std::to_string(trace_target);

    std::vector<HeStatus> status(g.half_edge_count(), HeStatus::untouched);
    std::vector<double> fire(g.half_edge_count(), kInf);
    std::priority_queue<FireEvent, std::vector<FireEvent>, std::greater<FireEvent>> queue;
    std::uint32_t active_count = 0;

    auto born = [&](int v, double t, std::int32_t hop, std::int32_t from) {
        out.sigma[v] = t;
        out.hops[v] = hop;
        out.infector[v] = from;
        out.infected_count++;
        const double cv = pre ? pre->contagion[v]
                              : (contagion.is_infinite() ? kInf : contagion.sample(rng));
        for (std::uint32_t h = g.first_half_edge(v); h < g.end_half_edge(v); ++h) {
            if (status[h] != HeStatus::untouched)
                continue;
            const std::uint32_t m = g.mate(h);
            if (g.vertex_of(m) == v) { // self-loop among the fresh half-edges
                status[h] = status[m] = HeStatus::consumed;
                continue;
            }
            if (status[m] == HeStatus::active) { // cycle back into the cluster
                status[h] = status[m] = HeStatus::consumed;
                active_count--;
                continue;
            }
            if (status[m] == HeStatus::dead) { // inert edge to an infected vertex
                status[h] = status[m] = HeStatus::consumed;
                continue;
            }
            const double x = pre ? pre->weight[h] : infection.sample(rng);
            if (x < cv) {
                status[h] = HeStatus::active;
                fire[h] = t + x;
                queue.push({fire[h], h});
                active_count++;
            } else {
                status[h] = HeStatus::dead;
            }
        }
        out.trace.samples.emplace_back(t, active_count);
        if (!out.trace.stopped && out.infected_count >= trace_target) {
            out.trace.stopped = true;
            out.trace.stop_time = t;
            out.trace.stop_active = active_count;
            out.trace.stop_births = out.infected_count;
        }
    };

    born(source, 0.0, 0, -1);

    while (!queue.empty()) {
        if (out.infected_count >= limits.max_infected)
            break;
        if (limits.stop_at_vertex >= 0 && out.sigma[limits.stop_at_vertex] < kInf)
            break;
        const FireEvent ev = queue.top();
        queue.pop();
        const std::uint32_t h = ev.half_edge;
        if (status[h] != HeStatus::active)
            continue; // cancelled by a birth-time pairing
        if (ev.time > limits.max_time)
            break;
        status[h] = HeStatus::consumed;
        active_count--;
        const std::uint32_t m = g.mate(h);
        if (status[m] == HeStatus::untouched) {
            status[m] = HeStatus::consumed;
            born(g.vertex_of(m), ev.time, out.hops[g.vertex_of(h)] + 1, g.vertex_of(h));
        } else if (status[m] == HeStatus::dead) {
            status[m] = HeStatus::consumed;
        }
        // an active mate is impossible: pairs of active half-edges are
        // resolved when the younger one is born
    }

    return out;
}

EpidemicCurve::EpidemicCurve(const EpidemicOutcome &outcome, std::size_t n) : n_(n) {
    for (std::size_t v = 0; v < outcome.sigma.size(); ++v)
        if (outcome.sigma[v] < kInf)
            by_sigma_.emplace_back(outcome.sigma[v], outcome.hops[v]);
    std::sort(by_sigma_.begin(), by_sigma_.end());
    sorted_sigma_.reserve(by_sigma_.size());
    for (const auto &p : by_sigma_)
        sorted_sigma_.push_back(p.first);
}

double EpidemicCurve::value(double s) const {
    const auto it = std::upper_bound(sorted_sigma_.begin(), sorted_sigma_.end(), s);
    return static_cast<double>(it - sorted_sigma_.begin()) / static_cast<double>(n_);
}

const std::vector<double> &EpidemicCurve::edge_slice(long max_edges) const {
    auto it = slice_cache_.find(max_edges);
    if (it == slice_cache_.end()) {
        std::vector<double> slice;
        for (const auto &p : by_sigma_)
            if (p.second <= max_edges)
                slice.push_back(p.first);
        it = slice_cache_.emplace(max_edges, std::move(slice)).first;
    }
    return it->second;
}

double EpidemicCurve::value_edges(double s, long max_edges) const {
    if (max_edges < 0)
        return 0.0;
    const auto &slice = edge_slice(max_edges);
    const auto it = std::upper_bound(slice.begin(), slice.end(), s);
    return static_cast<double>(it - slice.begin()) / static_cast<double>(n_);
}

double EpidemicCurve::value_trail(double s, long max_trail) const {
    return value_edges(s, max_trail - 1);
}

WEstimate estimate_w(const ComingGenerationTrace &trace, double lambda) {
    WEstimate est;
    if (!trace.stopped || trace.stop_active == 0)
        return est;
    est.extinct = false;
    est.tau = trace.stop_time;
    est.active = trace.stop_active;
    est.value = std::exp(-lambda * trace.stop_time) * est.active;
    return est;
}

TwoPointResult two_point(const HalfEdgeGraph &g, const InfectionLaw &infection,
                         const ContagionLaw &contagion, int source, int target, RngStream &rng,
                         const EdgeWeights *pre) {
    if (target < 0 || target >= g.vertex_count())
        throw std::invalid_argument("two_point: target out of range");
    RunLimits limits;
    limits.stop_at_vertex = target;
    const EpidemicOutcome out = run_epidemic(g, infection, contagion, source, rng, limits, pre);
    TwoPointResult r;
    r.distance = out.sigma[target];
    r.hops = out.hops[target];
    r.reached = out.sigma[target] < kInf;
    return r;
}

} // namespace epifpp
