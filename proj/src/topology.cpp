#include "rsurf/topology.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace rsurf {

LhtDecomposition lht_paths(const RibbonGraph& g) {
    LhtDecomposition out;
    std::vector<bool> seen(g.dart_count(), false);
    for (Dart start = 0; start < g.dart_count(); ++start) {
        if (seen[start])
            continue;
        std::vector<Dart> cycle;
        Dart d = start;
        do {
            seen[d] = true;
            cycle.push_back(d);
            d = g.phi(d);
        } while (d != start);
        out.lengths.push_back(cycle.size());
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

std::vector<std::size_t> lht_lengths(const RibbonGraph& g) {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(g.dart_count(), false);
    for (Dart start = 0; start < g.dart_count(); ++start) {
        if (seen[start])
            continue;
        std::size_t len = 0;
        Dart d = start;
        do {
            seen[d] = true;
            ++len;
            d = g.phi(d);
        } while (d != start);
        lengths.push_back(len);
    }
    return lengths;
}

SurfaceSummary surface_summary(const RibbonGraph& g) {
    const auto labels = component_labels(g);
    const std::size_t comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

    SurfaceSummary s;
    s.per_component.resize(comps);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ++s.per_component[labels[v]].vertices;

    const auto lht = lht_paths(g);
    for (std::size_t i = 0; i < lht.count(); ++i) {
        auto& comp = s.per_component[labels[RibbonGraph::vertex_of(lht.cycles[i].front())]];
        ++comp.cusps;
        comp.cusp_lengths.push_back(lht.lengths[i]);
    }

    for (auto& comp : s.per_component) {
        // 2 - 2 genus = V - E + F with E = 3V/2.
        const auto twice = static_cast<long long>(2 + comp.vertices / 2) - static_cast<long long>(comp.cusps);
        if (comp.vertices % 2 != 0 || twice < 0 || twice % 2 != 0)
            throw std::logic_error("surface_summary: Euler characteristic is inconsistent");
        comp.genus = static_cast<std::size_t>(twice / 2);
        std::sort(comp.cusp_lengths.begin(), comp.cusp_lengths.end());
        s.genus += comp.genus;
        s.cusps += comp.cusps;
    }

    s.cusp_lengths = lht.lengths;
    std::sort(s.cusp_lengths.begin(), s.cusp_lengths.end());
    s.min_cusp_length = s.cusp_lengths.empty() ? 0 : s.cusp_lengths.front();
    s.area = 2.0 * std::numbers::pi * static_cast<double>(g.n());
    s.components = comps;
    s.simple = is_simple(g);
    return s;
}

bool has_large_canonical_cusps(const RibbonGraph& g, std::size_t min_length) {
    const auto lengths = lht_lengths(g);
    return std::all_of(lengths.begin(), lengths.end(), [&](std::size_t len) { return len >= min_length; });
}

} // namespace rsurf
