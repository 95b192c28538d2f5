#include "rsurf/graph_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace rsurf {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const RibbonGraph& g) {
    ordered_json doc;
    doc["format_version"] = graph_format_version;
    doc["n"] = g.n();
    doc["sigma"] = std::vector<Dart>(g.sigma_array().begin(), g.sigma_array().end());
    doc["alpha"] = std::vector<Dart>(g.alpha_array().begin(), g.alpha_array().end());
    return doc.dump();
}

namespace {

std::vector<Dart> read_darts(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw GraphFormatError(std::string("graph json: missing array '") + key + "'");
    std::vector<Dart> out;
    out.reserve(doc[key].size());
    for (const auto& x : doc[key]) {
        if (!x.is_number_unsigned())
            throw GraphFormatError(std::string("graph json: '") + key + "' must hold nonnegative integers");
        const auto value = x.get<std::uint64_t>();
        if (value > std::numeric_limits<Dart>::max())
            throw GraphFormatError(std::string("graph json: '") + key + "' entry too large");
        out.push_back(static_cast<Dart>(value));
    }
    return out;
}

} // namespace

RibbonGraph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphFormatError(std::string("graph json: ") + e.what());
    }
    if (!doc.is_object())
        throw GraphFormatError("graph json: top level must be an object");
    if (!doc.contains("format_version") || doc["format_version"] != graph_format_version)
        throw GraphFormatError("graph json: unsupported or missing format_version");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        throw GraphFormatError("graph json: 'n' must be a nonnegative integer");
    const auto n = doc["n"].get<std::uint64_t>();
    if (n > std::numeric_limits<Dart>::max() / 6)
        throw GraphFormatError("graph json: 'n' too large");
    return RibbonGraph::checked(static_cast<std::size_t>(n), read_darts(doc, "sigma"), read_darts(doc, "alpha"));
}

void write_graph_file(const std::filesystem::path& path, const RibbonGraph& g) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_json(g) << '\n';
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

RibbonGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

} // namespace rsurf
