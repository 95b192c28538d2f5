#ifndef RSURF_RIBBON_GRAPH_HPP
#define RSURF_RIBBON_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsurf {

using Dart = std::uint32_t;
using Vertex = std::uint32_t;

/// One failed structural check, tied to the dart where it was detected.
struct Violation {
    std::string message;
    std::size_t dart = 0;
};

/**
 * An oriented 3-regular multigraph stored as a pair of permutations on darts.
 *
 * A graph with parameter n has 2n vertices, 3n edges and 6n darts.  Dart d is
 * anchored at vertex d / 3, so the three darts of vertex v are 3v, 3v+1, 3v+2.
 * `sigma` is the rotation system (a 3-cycle on each vertex block) and `alpha`
 * is the fixed-point-free involution pairing darts into edges.  Loops and
 * parallel edges are allowed.
 *
 * The constructor only stores the arrays; use `validate` or `checked` before
 * handing an untrusted graph to any algorithm.
 */
class RibbonGraph {
public:
    RibbonGraph(std::size_t n, std::vector<Dart> sigma, std::vector<Dart> alpha);

    /// Builds the graph and throws InvalidGraph if any invariant fails.
    static RibbonGraph checked(std::size_t n, std::vector<Dart> sigma, std::vector<Dart> alpha);

    std::size_t n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return 2 * n_; }
    std::size_t edge_count() const noexcept { return 3 * n_; }
    std::size_t dart_count() const noexcept { return 6 * n_; }

    static constexpr Vertex vertex_of(Dart d) noexcept { return d / 3; }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inverse(Dart d) const { return sigma_[sigma_[d]]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    /// Left-hand-turn successor: cross the edge, then rotate once.
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

    std::span<const Dart> sigma_array() const noexcept { return sigma_; }
    std::span<const Dart> alpha_array() const noexcept { return alpha_; }

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

private:
    std::size_t n_;
    std::vector<Dart> sigma_;
    std::vector<Dart> alpha_;
};

class InvalidGraph : public std::runtime_error {
public:
    explicit InvalidGraph(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Empty result means the graph is valid.
std::vector<Violation> validate(std::size_t n, std::span<const Dart> sigma, std::span<const Dart> alpha);
std::vector<Violation> validate(const RibbonGraph& g);

struct Edge {
    Dart first;
    Dart second;
    bool loop;
};

struct EdgeList {
    std::vector<Edge> edges;
    /// Keyed by (min vertex, max vertex); loops appear as (v, v).
    std::map<std::pair<Vertex, Vertex>, std::size_t> multiplicity;
};

/// Edges ordered by their smaller dart; edge index e corresponds to edges[e].
EdgeList edge_list(const RibbonGraph& g);

/// Edge index of every dart, consistent with edge_list ordering.
std::vector<std::uint32_t> edge_index_of_darts(const RibbonGraph& g);

bool is_simple(const RibbonGraph& g);

bool has_loop(const RibbonGraph& g);

/// Components sorted by smallest vertex; vertices inside each component ascending.
std::vector<std::vector<Vertex>> connected_components(const RibbonGraph& g);

/// Component id per vertex, numbered in the order of connected_components.
std::vector<std::uint32_t> component_labels(const RibbonGraph& g);

/// Graph distance between two vertex sets in edges; nullopt when they lie in
/// different components.  Throws std::invalid_argument on an empty set.
std::optional<std::size_t> dart_set_distance(const RibbonGraph& g,
                                             std::span<const Vertex> a,
                                             std::span<const Vertex> b);

/// Breadth-first distances from a vertex set, stopping after `max_depth`
/// layers.  Unreached vertices get SIZE_MAX.
std::vector<std::size_t> bounded_distances(const RibbonGraph& g,
                                           std::span<const Vertex> sources,
                                           std::size_t max_depth);

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

/// Same graph with every rotation reversed.
RibbonGraph mirror(const RibbonGraph& g);

} // namespace rsurf

#endif // RSURF_RIBBON_GRAPH_HPP
