#include "epifpp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace epifpp {

HalfEdgeGraph::HalfEdgeGraph(std::vector<int> degrees, std::vector<std::uint32_t> mate)
    : degrees_(std::move(degrees)), mate_(std::move(mate)) {
    offsets_.resize(degrees_.size() + 1);
    offsets_[0] = 0;
    for (std::size_t v = 0; v < degrees_.size(); ++v) {
        if (degrees_[v] < 0)
            throw std::invalid_argument("graph: negative degree");
        offsets_[v + 1] = offsets_[v] + static_cast<std::uint32_t>(degrees_[v]);
    }
    if (offsets_.back() != mate_.size())
        throw std::invalid_argument("graph: degree total does not match pairing size");
    owner_.resize(mate_.size());
    for (std::size_t v = 0; v < degrees_.size(); ++v)
        for (std::uint32_t h = offsets_[v]; h < offsets_[v + 1]; ++h)
            owner_[h] = static_cast<std::uint32_t>(v);
    for (std::size_t h = 0; h < mate_.size(); ++h) {
        if (mate_[h] >= mate_.size() || mate_[h] == h || mate_[mate_[h]] != h)
            throw std::invalid_argument("graph: pairing is not a fixed-point-free involution");
    }
}

HalfEdgeGraph pair_half_edges(const std::vector<int> &degrees, RngStream &rng) {
    long long total = 0;
    for (int d : degrees) {
        if (d < 0)
            throw std::invalid_argument("pairing: negative degree");
        total += d;
    }
    if (total % 2 != 0)
        throw std::invalid_argument("pairing: odd total degree (parity-fix the sequence first)");

    std::vector<std::uint32_t> stubs(static_cast<std::size_t>(total));
    for (std::uint32_t h = 0; h < stubs.size(); ++h)
        stubs[h] = h;
    rng.shuffle(stubs);

    std::vector<std::uint32_t> mate(stubs.size());
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        mate[stubs[i]] = stubs[i + 1];
        mate[stubs[i + 1]] = stubs[i];
    }
    return HalfEdgeGraph(degrees, std::move(mate));
}

GraphStats graph_stats(const HalfEdgeGraph &g) {
    GraphStats s;
    for (int v = 0; v < g.vertex_count(); ++v)
        s.degree_histogram[g.degree(v)]++;

    std::vector<std::pair<int, int>> cross_edges;
    for (std::uint32_t h = 0; h < g.half_edge_count(); ++h) {
        const std::uint32_t m = g.mate(h);
        if (h > m)
            continue;
        const int u = g.vertex_of(h), v = g.vertex_of(m);
        if (u == v)
            s.self_loops++;
        else
            cross_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(cross_edges.begin(), cross_edges.end());
    for (std::size_t i = 1; i < cross_edges.size(); ++i)
        if (cross_edges[i] == cross_edges[i - 1])
            s.multi_edges++;
    return s;
}

double expected_self_loops(const std::vector<int> &degrees) {
    double num = 0.0;
    long long total = 0;
    for (int d : degrees) {
        num += static_cast<double>(d) * (d - 1.0);
        total += d;
    }
    return num / (2.0 * (static_cast<double>(total) - 1.0));
}

void write_edge_list(const HalfEdgeGraph &g, std::ostream &out) {
    for (std::uint32_t h = 0; h < g.half_edge_count(); ++h) {
        const std::uint32_t m = g.mate(h);
        if (h > m)
            continue;
        out << g.vertex_of(h) << ' ' << g.vertex_of(m) << '\n';
    }
}

} // namespace epifpp
