#ifndef RSURF_GRAPH_IO_HPP
#define RSURF_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

inline constexpr int graph_format_version = 1;

/// Malformed document: bad JSON, missing fields, wrong types or version.
class GraphFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Compact form {"format_version":1,"n":..,"sigma":[..],"alpha":[..]}, keys in that order.
std::string to_json(const RibbonGraph& g);

/// Parses and validates.  Throws GraphFormatError or InvalidGraph.
RibbonGraph graph_from_json(std::string_view text);

void write_graph_file(const std::filesystem::path& path, const RibbonGraph& g);
RibbonGraph read_graph_file(const std::filesystem::path& path);

} // namespace rsurf

#endif // RSURF_GRAPH_IO_HPP
