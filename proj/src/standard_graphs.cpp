#include "rsurf/standard_graphs.hpp"

#include <stdexcept>

namespace rsurf {

RibbonGraph from_rotation_lists(const std::vector<std::array<Vertex, 3>>& neighbors) {
    const std::size_t vertices = neighbors.size();
    if (vertices == 0 || vertices % 2 != 0)
        throw std::invalid_argument("from_rotation_lists: need a positive even vertex count");

    std::vector<Dart> sigma(3 * vertices);
    std::vector<Dart> alpha(3 * vertices);
    for (Vertex v = 0; v < vertices; ++v) {
        for (Dart k = 0; k < 3; ++k) {
            sigma[3 * v + k] = 3 * v + (k + 1) % 3;
            const Vertex w = neighbors[v][k];
            if (w >= vertices || w == v)
                throw std::invalid_argument("from_rotation_lists: bad neighbor");
            int matches = 0;
            for (Dart j = 0; j < 3; ++j) {
                if (neighbors[w][j] == v) {
                    alpha[3 * v + k] = 3 * w + j;
                    ++matches;
                }
            }
            if (matches != 1)
                throw std::invalid_argument("from_rotation_lists: adjacency is not symmetric and simple");
        }
    }
    return RibbonGraph::checked(vertices / 2, std::move(sigma), std::move(alpha));
}

namespace graphs {

RibbonGraph theta_one_face() {
    return RibbonGraph::checked(1, {1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2});
}

RibbonGraph theta_three_faces() {
    return RibbonGraph::checked(1, {1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2});
}

RibbonGraph loops_and_bridge() {
    return RibbonGraph::checked(1, {1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2});
}

RibbonGraph cube_planar() {
    // Vertex bits are coordinates; neighbor k flips bit k.  Seen from outside,
    // the order x, y, z is counterclockwise exactly at corners of odd weight.
    std::vector<std::array<Vertex, 3>> nbrs(8);
    for (Vertex v = 0; v < 8; ++v) {
        const bool odd = (__builtin_popcount(v) % 2) == 1;
        nbrs[v] = odd ? std::array<Vertex, 3>{v ^ 1u, v ^ 2u, v ^ 4u}
                      : std::array<Vertex, 3>{v ^ 1u, v ^ 4u, v ^ 2u};
    }
    return from_rotation_lists(nbrs);
}

RibbonGraph k4_planar() {
    // Outer triangle 0, 1, 2 counterclockwise with 3 in the middle.
    return from_rotation_lists({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
}

} // namespace graphs
} // namespace rsurf
