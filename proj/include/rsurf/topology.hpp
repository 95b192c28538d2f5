#ifndef RSURF_TOPOLOGY_HPP
#define RSURF_TOPOLOGY_HPP

#include <cstddef>
#include <vector>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

/// Orbits of the left-hand-turn successor phi = sigma o alpha.  Each cycle is
/// the sequence of departing darts, starting at its smallest dart; cycles are
/// ordered by that dart.  One cycle per cusp; its length is the length of the
/// canonical horocycle around the cusp.
struct LhtDecomposition {
    std::vector<std::vector<Dart>> cycles;
    std::vector<std::size_t> lengths;

    std::size_t count() const noexcept { return cycles.size(); }
};

LhtDecomposition lht_paths(const RibbonGraph& g);

/// Cycle lengths only, same order as lht_paths.  Allocation-light path for campaigns.
std::vector<std::size_t> lht_lengths(const RibbonGraph& g);

struct ComponentTopology {
    std::size_t vertices = 0;
    std::size_t cusps = 0;
    std::size_t genus = 0;
    std::vector<std::size_t> cusp_lengths; // ascending
};

struct SurfaceSummary {
    std::size_t genus = 0;                 // sum over components
    std::size_t cusps = 0;
    std::vector<std::size_t> cusp_lengths; // ascending
    double area = 0.0;                     // 2 pi n
    std::size_t min_cusp_length = 0;
    std::size_t components = 0;
    bool simple = false;
    std::vector<ComponentTopology> per_component;
};

/// Genus of each component from 1 + (n_c - l_c) / 2 where the component has
/// 2 n_c vertices and l_c left-hand-turn cycles.
SurfaceSummary surface_summary(const RibbonGraph& g);

/// True iff every canonical horocycle has length >= min_length.
bool has_large_canonical_cusps(const RibbonGraph& g, std::size_t min_length);

} // namespace rsurf

#endif // RSURF_TOPOLOGY_HPP
