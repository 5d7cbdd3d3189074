#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epifpp/dist.hpp"
#include "epifpp/fpp.hpp"
#include "epifpp/graph.hpp"

namespace epifpp {

// Offspring law bundle: the root reproduces with the full degree law, later
// individuals with the size-biased forward-degree law. Forward runs gate all
// of an individual's children behind one contagious-period draw, backward
// runs draw one period per child.
struct OffspringSpec {
    DegreePMF root_degree;
    SizeBiasedPMF child_counts;
    InfectionLaw infection;
    ContagionLaw contagion;
    bool backward = false;
};

struct BPCaps {
    std::size_t max_births = static_cast<std::size_t>(-1); // total individuals incl. root
    double max_time = kInf;
    std::size_t max_active = static_cast<std::size_t>(-1); // coming-generation size
};

struct PendingBirth {
    double time;
    std::int32_t parent;
    std::int32_t generation;
};

struct BPRecord {
    // per-individual (only when individuals are stored)
    std::vector<double> birth_time;
    std::vector<std::int32_t> parent; // -1 at the root
    std::vector<std::int32_t> generation;
    std::vector<PendingBirth> pending; // scheduled-unborn children at stop, time-sorted
    std::vector<std::pair<double, std::uint32_t>> trace; // (birth time, |A_t| after)

    std::size_t births = 0;
    double stop_time = 0.0;
    std::size_t active_at_stop = 0;
    bool extinct = false;

    // draw log for gating checks
    bool stored_draws = false;
    std::vector<double> contagion_draw;                // forward mode, per individual
    std::vector<std::vector<double>> kept_delays;      // per individual
};

struct BPOptions {
    bool store_individuals = true;
    bool store_draws = false;
};

BPRecord simulate_ctbp(const OffspringSpec &spec, RngStream &rng, const BPCaps &caps,
                       const BPOptions &options = {});

// One e^{-lambda tau}|A_tau| estimate per record at its stop; extinct records
// are skipped and counted.
std::vector<double> martingale_samples(const std::vector<BPRecord> &records, double lambda,
                                       std::size_t *excluded = nullptr);

// Remaining delays, at time t, of scheduled births whose parent was born by t.
// Requires t <= record stop time and stored individuals.
std::vector<double> residual_samples(const BPRecord &record, double t);

struct MeanMeasureBin {
    double lo = 0.0, hi = 0.0;
    double forward_mean = 0.0, backward_mean = 0.0;
    double forward_se = 0.0, backward_se = 0.0;
    double z = 0.0;
};

// Monte-Carlo comparison of E[xi(a,b]] under forward vs backward gating.
std::vector<MeanMeasureBin> mean_measure_check(const SizeBiasedPMF &child_counts,
                                               const InfectionLaw &infection,
                                               const ContagionLaw &contagion,
                                               const std::vector<double> &bin_edges,
                                               std::size_t draws, RngStream &rng);

// Maximal coupling of the graph exploration with its approximating branching
// process (empirical size-biased offspring): trajectories of infected counts
// coincide until the first divergence event, whose time is reported.
struct CouplingReport {
    double divergence_time = kInf; // +inf when coupled through the stopping time
    std::size_t births_at_divergence = 0;
    double stop_time = kInf; // time the graph process reached the target count
    std::size_t stop_births = 0;
    bool agreed = false;
    std::string reason; // "event-ii", "degree-mismatch", "dead-hit", ""
};

CouplingReport coupling_discrepancy(const HalfEdgeGraph &g, const InfectionLaw &infection,
                                    const ContagionLaw &contagion, int source, RngStream &rng,
                                    std::size_t target_infected = 0);

} // namespace epifpp
