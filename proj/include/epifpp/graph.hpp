#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "epifpp/rng.hpp"

namespace epifpp {

// Configuration-model multigraph stored as a perfect matching on half-edges.
// Half-edges are numbered 0..L-1, vertex v owning the contiguous block
// [offset(v), offset(v+1)). mate() is an involution without fixed points.
class HalfEdgeGraph {
  public:
    HalfEdgeGraph(std::vector<int> degrees, std::vector<std::uint32_t> mate);

    int vertex_count() const { return static_cast<int>(degrees_.size()); }
    std::size_t half_edge_count() const { return mate_.size(); }
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int> &degrees() const { return degrees_; }

    std::uint32_t mate(std::uint32_t h) const { return mate_[h]; }
    int vertex_of(std::uint32_t h) const { return owner_[h]; }
    std::uint32_t first_half_edge(int v) const { return offsets_[v]; }
    std::uint32_t end_half_edge(int v) const { return offsets_[v + 1]; }

  private:
    std::vector<int> degrees_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> mate_;
    std::vector<std::uint32_t> owner_;
};

// Uniform pairing: shuffle the half-edge array and pair consecutive entries.
// Total degree must be even.
HalfEdgeGraph pair_half_edges(const std::vector<int> &degrees, RngStream &rng);

struct GraphStats {
    std::size_t self_loops = 0;
    std::size_t multi_edges = 0; // excess parallel edges beyond the first per vertex pair
    std::map<int, std::size_t> degree_histogram;
};

GraphStats graph_stats(const HalfEdgeGraph &g);

// sum_v d_v (d_v - 1) / (2 (L - 1)) under uniform pairing
double expected_self_loops(const std::vector<int> &degrees);

// "u v" per line in pairing order, self-loops included, 0-based ids
void write_edge_list(const HalfEdgeGraph &g, std::ostream &out);

} // namespace epifpp
