#include "rsurf/ribbon_graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace rsurf {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << "invalid ribbon graph";
    for (const auto& v : violations)
        os << "; " << v.message;
    return os.str();
}

} // namespace

RibbonGraph::RibbonGraph(std::size_t n, std::vector<Dart> sigma, std::vector<Dart> alpha)
    : n_(n), sigma_(std::move(sigma)), alpha_(std::move(alpha)) {}

RibbonGraph RibbonGraph::checked(std::size_t n, std::vector<Dart> sigma, std::vector<Dart> alpha) {
    auto violations = validate(n, sigma, alpha);
    if (!violations.empty())
        throw InvalidGraph(std::move(violations));
    return RibbonGraph(n, std::move(sigma), std::move(alpha));
}

InvalidGraph::InvalidGraph(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(std::size_t n, std::span<const Dart> sigma, std::span<const Dart> alpha) {
    std::vector<Violation> out;
    if (n == 0) {
        out.push_back({"n must be positive", 0});
        return out;
    }
    const std::size_t darts = 6 * n;
    if (sigma.size() != darts)
        out.push_back({"sigma has " + std::to_string(sigma.size()) + " entries, expected " + std::to_string(darts), 0});
    if (alpha.size() != darts)
        out.push_back({"alpha has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(darts), 0});
    if (!out.empty())
        return out;

    for (std::size_t d = 0; d < darts; ++d) {
        const std::string at = " at dart " + std::to_string(d);
        if (sigma[d] >= darts) {
            out.push_back({"sigma out of range" + at, d});
        } else if (sigma[d] / 3 != d / 3) {
            out.push_back({"sigma leaves vertex block of dart " + std::to_string(d), d});
        } else if (sigma[d] == d) {
            out.push_back({"sigma has fixed point" + at, d});
        }

        if (alpha[d] >= darts) {
            out.push_back({"alpha out of range" + at, d});
        } else if (alpha[d] == d) {
            out.push_back({"alpha has fixed point" + at, d});
        } else if (alpha[alpha[d]] != d) {
            out.push_back({"alpha is not an involution" + at, d});
        }
    }

    // A fixed-point-free map of a 3-element block into itself is a 3-cycle iff injective.
    for (std::size_t v = 0; v < 2 * n; ++v) {
        const std::size_t b = 3 * v;
        bool in_block = true;
        for (std::size_t k = 0; k < 3; ++k)
            in_block = in_block && sigma[b + k] < darts && sigma[b + k] / 3 == v;
        if (!in_block)
            continue;
        if (sigma[b] == sigma[b + 1] || sigma[b] == sigma[b + 2] || sigma[b + 1] == sigma[b + 2])
            out.push_back({"sigma is not a 3-cycle on vertex " + std::to_string(v), b});
    }
    return out;
}

std::vector<Violation> validate(const RibbonGraph& g) {
    return validate(g.n(), g.sigma_array(), g.alpha_array());
}

EdgeList edge_list(const RibbonGraph& g) {
    EdgeList list;
    list.edges.reserve(g.edge_count());
    for (Dart d = 0; d < g.dart_count(); ++d) {
        const Dart e = g.alpha(d);
        if (e < d)
            continue;
        const Vertex u = RibbonGraph::vertex_of(d);
        const Vertex v = RibbonGraph::vertex_of(e);
        list.edges.push_back({d, e, u == v});
        ++list.multiplicity[{std::min(u, v), std::max(u, v)}];
    }
    return list;
}

std::vector<std::uint32_t> edge_index_of_darts(const RibbonGraph& g) {
    std::vector<std::uint32_t> index(g.dart_count());
    std::uint32_t next = 0;
    for (Dart d = 0; d < g.dart_count(); ++d) {
        const Dart e = g.alpha(d);
        if (e < d)
            continue;
        index[d] = next;
        index[e] = next;
        ++next;
    }
    return index;
}

bool has_loop(const RibbonGraph& g) {
    for (Dart d = 0; d < g.dart_count(); ++d)
        if (RibbonGraph::vertex_of(g.alpha(d)) == RibbonGraph::vertex_of(d))
            return true;
    return false;
}

bool is_simple(const RibbonGraph& g) {
    // Degree three means a parallel pair shows up as a repeated neighbor inside one block.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Vertex a = RibbonGraph::vertex_of(g.alpha(3 * v));
        const Vertex b = RibbonGraph::vertex_of(g.alpha(3 * v + 1));
        const Vertex c = RibbonGraph::vertex_of(g.alpha(3 * v + 2));
        if (a == v || b == v || c == v || a == b || a == c || b == c)
            return false;
    }
    return true;
}

std::vector<std::uint32_t> component_labels(const RibbonGraph& g) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.vertex_count(), unset);
    std::vector<Vertex> stack;
    std::uint32_t next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != unset)
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Dart d = 3 * v; d < 3 * v + 3; ++d) {
                const Vertex w = RibbonGraph::vertex_of(g.alpha(d));
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<Vertex>> connected_components(const RibbonGraph& g) {
    const auto label = component_labels(g);
    const auto count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<Vertex>> components(count);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        components[label[v]].push_back(v);
    return components;
}

std::vector<std::size_t> bounded_distances(const RibbonGraph& g,
                                           std::span<const Vertex> sources,
                                           std::size_t max_depth) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unreached);
    std::vector<Vertex> frontier;
    for (Vertex s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            frontier.push_back(s);
        }
    }
    std::vector<Vertex> next;
    for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        next.clear();
        for (Vertex v : frontier) {
            for (Dart d = 3 * v; d < 3 * v + 3; ++d) {
                const Vertex w = RibbonGraph::vertex_of(g.alpha(d));
                if (dist[w] == unreached) {
                    dist[w] = depth;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::optional<std::size_t> dart_set_distance(const RibbonGraph& g,
                                             std::span<const Vertex> a,
                                             std::span<const Vertex> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("dart_set_distance: vertex sets must be nonempty");
    for (Vertex v : a)
        if (v >= g.vertex_count())
            throw std::invalid_argument("dart_set_distance: vertex out of range");
    for (Vertex v : b)
        if (v >= g.vertex_count())
            throw std::invalid_argument("dart_set_distance: vertex out of range");

    const auto dist = bounded_distances(g, a, g.vertex_count());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v : b)
        best = std::min(best, dist[v]);
    if (best == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return best;
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
    const auto shift = static_cast<Dart>(a.dart_count());
    std::vector<Dart> sigma(a.sigma_array().begin(), a.sigma_array().end());
    std::vector<Dart> alpha(a.alpha_array().begin(), a.alpha_array().end());
    for (Dart d : b.sigma_array())
        sigma.push_back(d + shift);
    for (Dart d : b.alpha_array())
        alpha.push_back(d + shift);
    return RibbonGraph(a.n() + b.n(), std::move(sigma), std::move(alpha));
}

RibbonGraph mirror(const RibbonGraph& g) {
    std::vector<Dart> sigma(g.dart_count());
    for (Dart d = 0; d < g.dart_count(); ++d)
        sigma[d] = g.sigma_inverse(d);
    return RibbonGraph(g.n(), std::move(sigma),
                       std::vector<Dart>(g.alpha_array().begin(), g.alpha_array().end()));
}

} // namespace rsurf
