#ifndef RSURF_STANDARD_GRAPHS_HPP
#define RSURF_STANDARD_GRAPHS_HPP

#include <array>
#include <vector>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

/// Builds a simple cubic graph from neighbor lists given in rotation order.
/// Throws std::invalid_argument if the lists are not a simple cubic graph.
RibbonGraph from_rotation_lists(const std::vector<std::array<Vertex, 3>>& neighbors);

namespace graphs {

/// Two vertices joined by three edges with rotations (0 1 2)(3 4 5): one face.
RibbonGraph theta_one_face();
/// Same edges with rotations (0 1 2)(3 5 4): three faces of length 2.
RibbonGraph theta_three_faces();
/// Each vertex carries a loop; a single edge joins them.
RibbonGraph loops_and_bridge();
/// 1-skeleton of the cube with the rotation induced by its planar embedding.
RibbonGraph cube_planar();
/// K4 with the rotation induced by its planar embedding.
RibbonGraph k4_planar();

} // namespace graphs
} // namespace rsurf

#endif // RSURF_STANDARD_GRAPHS_HPP
