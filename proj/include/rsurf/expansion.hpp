#ifndef RSURF_EXPANSION_HPP
#define RSURF_EXPANSION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

/// Largest vertex count (2n) accepted by the exhaustive Cheeger search.
inline constexpr std::size_t exhaustive_vertex_limit = 26;

/// Threshold h > 2/11 from the pairing-model expansion estimate.
inline constexpr double bollobas_threshold = 2.0 / 11.0;

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool contains(double x, double tol = 0.0) const noexcept { return lower - tol <= x && x <= upper + tol; }
};

enum class CheegerMethod { Exhaustive, Spectral, Disconnected };

std::string_view to_string(CheegerMethod m);

/// Either an exact value with a witness cut, or a spectral interval.
struct CheegerResult {
    CheegerMethod method = CheegerMethod::Exhaustive;
    std::optional<Rational> exact;
    std::optional<Interval> bounds;
    std::vector<Vertex> witness; // ascending
    std::size_t crossing_edges = 0;
};

class SizeExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edges with exactly one endpoint in `side` (loops never cross), counted with multiplicity.
std::size_t crossing_edges(const RibbonGraph& g, const std::vector<Vertex>& side);

/**
 * Exact graph Cheeger constant: the minimum of crossing(A) / |A| over vertex
 * subsets with 1 <= |A| <= n.  Subsets are walked in Gray-code order with the
 * cut size updated incrementally.  Ties go to the lexicographically smallest
 * sorted vertex list.
 *
 * A disconnected graph yields 0 with its smallest component as witness.
 * Throws SizeExceeded when a connected graph has more than
 * exhaustive_vertex_limit vertices.
 */
CheegerResult cheeger_exact(const RibbonGraph& g);

struct SpectralGap {
    double gap = 0.0; // 3 - mu_1, clamped at 0
    double mu1 = 0.0; // second largest adjacency eigenvalue
    bool disconnected = false;
};

/// Adjacency eigenvalues in ascending order.  Parallel edges add multiplicity
/// and a loop adds 2 to the diagonal, so every row sums to 3.
std::vector<double> adjacency_spectrum(const RibbonGraph& g);

SpectralGap spectral_gap(const RibbonGraph& g);

/// [(3 - mu_1) / 2, sqrt(6 (3 - mu_1))], which always contains h.
Interval cheeger_bounds(const RibbonGraph& g);
Interval cheeger_bounds(const SpectralGap& gap);

enum class Verdict { Above, NotAbove, Indeterminate };

std::string_view to_string(Verdict v);

struct ThresholdCertificate {
    Verdict verdict = Verdict::Indeterminate;
    CheegerMethod method = CheegerMethod::Exhaustive;
    std::optional<Rational> exact;
    std::optional<Interval> bounds;
};

/// Decides h > 2/11 exactly when the graph has at most `exhaustive_limit`
/// vertices, otherwise from the spectral interval.
ThresholdCertificate bollobas_threshold_check(const RibbonGraph& g,
                                              std::size_t exhaustive_limit = exhaustive_vertex_limit);

} // namespace rsurf

#endif // RSURF_EXPANSION_HPP
