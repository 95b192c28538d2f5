#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

std::vector<std::uint32_t> edge_ids(const rsurf::RibbonGraph& g) {
    const auto alpha = g.alpha_array();
    std::vector<std::uint32_t> ids(alpha.size());
    std::uint32_t next = 0;
    for (std::size_t d = 0; d < alpha.size(); ++d) {
        if (alpha[d] > d) {
            ids[d] = next;
            ids[alpha[d]] = next;
            ++next;
        }
    }
    return ids;
}

EdgeSet edge_set(const rsurf::RibbonGraph& g, const std::vector<rsurf::Dart>& path) {
    const auto ids = edge_ids(g);
    EdgeSet out;
    for (auto d : path)
        out.push_back(ids[d]);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<EdgeSet> cycles_by_edge_subsets(const rsurf::RibbonGraph& g, std::size_t max_len) {
    const auto alpha = g.alpha_array();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends; // endpoints per edge
    for (std::size_t d = 0; d < alpha.size(); ++d)
        if (alpha[d] > d)
            ends.emplace_back(static_cast<std::uint32_t>(d / 3), static_cast<std::uint32_t>(alpha[d] / 3));

    const std::size_t m = ends.size();
    const std::size_t vertices = g.vertex_count();
    std::set<EdgeSet> out;
    std::vector<std::uint32_t> chosen;

    auto is_cycle = [&] {
        std::vector<int> degree(vertices, 0);
        for (auto e : chosen) {
            ++degree[ends[e].first];
            ++degree[ends[e].second];
        }
        for (auto deg : degree)
            if (deg != 0 && deg != 2)
                return false;
        // connectivity over chosen edges
        std::vector<std::uint32_t> parent(vertices);
        for (std::uint32_t v = 0; v < vertices; ++v)
            parent[v] = v;
        std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        for (auto e : chosen)
            parent[find(ends[e].first)] = find(ends[e].second);
        std::uint32_t root = find(ends[chosen.front()].first);
        for (std::uint32_t v = 0; v < vertices; ++v)
            if (degree[v] != 0 && find(v) != root)
                return false;
        return true;
    };

    std::function<void(std::uint32_t)> choose = [&](std::uint32_t from) {
        if (!chosen.empty() && is_cycle())
            out.insert(chosen);
        if (chosen.size() == max_len)
            return;
        for (std::uint32_t e = from; e < m; ++e) {
            chosen.push_back(e);
            choose(e + 1);
            chosen.pop_back();
        }
    };
    choose(0);
    return out;
}

std::set<EdgeSet> cycles_by_closed_walks(const rsurf::RibbonGraph& g, std::size_t max_len) {
    const auto alpha = g.alpha_array();
    const auto ids = edge_ids(g);
    std::set<EdgeSet> out;
    std::vector<rsurf::Dart> walk;

    std::function<void()> extend = [&] {
        const rsurf::Dart last = walk.back();
        const std::uint32_t here = alpha[last] / 3;
        if (here == walk.front() / 3) {
            std::vector<std::uint32_t> vs, es;
            for (auto d : walk) {
                vs.push_back(d / 3);
                es.push_back(ids[d]);
            }
            std::sort(vs.begin(), vs.end());
            std::sort(es.begin(), es.end());
            const bool distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end() &&
                                  std::adjacent_find(es.begin(), es.end()) == es.end();
            if (distinct)
                out.insert(es);
        }
        if (walk.size() == max_len)
            return;
        for (rsurf::Dart k = 0; k < 3; ++k) {
            walk.push_back(3 * here + k);
            extend();
            walk.pop_back();
        }
    };

    for (rsurf::Dart d = 0; d < alpha.size(); ++d) {
        walk.assign(1, d);
        extend();
    }
    return out;
}

Cheeger cheeger_by_subsets(const rsurf::RibbonGraph& g) {
    const auto alpha = g.alpha_array();
    const std::size_t vertices = g.vertex_count();
    Cheeger best{0, 0};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << vertices); ++mask) {
        const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (2 * size > vertices)
            continue;
        std::uint64_t cut = 0;
        for (std::size_t d = 0; d < alpha.size(); ++d) {
            const bool in_a = (mask >> (d / 3)) & 1u;
            const bool in_b = (mask >> (alpha[d] / 3)) & 1u;
            if (in_a && !in_b)
                ++cut;
        }
        if (best.size == 0 || cut * best.size < best.cut * size)
            best = {cut, size};
    }
    return best;
}

Mat2 multiply_turns(const std::vector<bool>& left) {
    Mat2 m;
    for (bool l : left) {
        const Mat2 w = l ? Mat2{1, 1, 0, 1} : Mat2{1, 0, 1, 1};
        m = Mat2{m.a * w.a + m.b * w.c, m.a * w.b + m.b * w.d, m.c * w.a + m.d * w.c, m.c * w.b + m.d * w.d};
    }
    return m;
}

double poisson_pmf(double mu, unsigned k) {
    double p = std::exp(-mu);
    for (unsigned i = 1; i <= k; ++i)
        p *= mu / i;
    return p;
}

} // namespace oracle
