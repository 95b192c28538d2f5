#include "rsurf/expansion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace rsurf {

std::string_view to_string(CheegerMethod m) {
    switch (m) {
    case CheegerMethod::Exhaustive:
        return "exhaustive";
    case CheegerMethod::Spectral:
        return "spectral";
    case CheegerMethod::Disconnected:
        return "disconnected";
    }
    return "unknown";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Above:
        return "above";
    case Verdict::NotAbove:
        return "not_above";
    case Verdict::Indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

namespace {

Rational reduced(std::uint64_t num, std::uint64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

// Sorted-list lexicographic order on vertex sets encoded as bitmasks.  The
// set lacking the lowest differing vertex is smaller only if it ends there.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b)
        return false;
    const std::uint64_t diff = a ^ b;
    const std::uint64_t low = diff & (~diff + 1);
    const bool a_has = (a & low) != 0;
    const std::uint64_t other = a_has ? b : a;
    const bool other_ends = (other & ~(low - 1)) == 0;
    return a_has ? !other_ends : other_ends;
}

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

std::size_t crossing_edges(const RibbonGraph& g, const std::vector<Vertex>& side) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : side)
        in[v] = 1;
    std::size_t cut = 0;
    for (Dart d = 0; d < g.dart_count(); ++d)
        if (in[RibbonGraph::vertex_of(d)] && !in[RibbonGraph::vertex_of(g.alpha(d))])
            ++cut;
    return cut;
}

CheegerResult cheeger_exact(const RibbonGraph& g) {
    const auto components = connected_components(g);
    CheegerResult result;
    if (components.size() > 1) {
        const auto smallest = std::min_element(components.begin(), components.end(),
                                               [](const auto& x, const auto& y) { return x.size() < y.size(); });
        result.method = CheegerMethod::Disconnected;
        result.exact = Rational{0, 1};
        result.witness = *smallest;
        result.crossing_edges = 0;
        return result;
    }

    const std::size_t vertices = g.vertex_count();
    if (vertices > exhaustive_vertex_limit)
        throw SizeExceeded("cheeger_exact: " + std::to_string(vertices) + " vertices exceeds the limit of " +
                           std::to_string(exhaustive_vertex_limit));

    // Non-loop neighbors; a loop never crosses a cut.
    std::vector<std::array<int, 3>> nbr(vertices);
    for (Vertex v = 0; v < vertices; ++v) {
        for (int k = 0; k < 3; ++k) {
            const Vertex w = RibbonGraph::vertex_of(g.alpha(3 * v + k));
            nbr[v][k] = (w == v) ? -1 : static_cast<int>(w);
        }
    }

    const std::size_t half = vertices / 2;
    std::uint64_t mask = 0;
    std::size_t size = 0;
    long long cut = 0;
    std::uint64_t best_mask = 0;
    long long best_cut = 0;
    std::size_t best_size = 0;

    const std::uint64_t steps = std::uint64_t{1} << vertices;
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const bool entering = (mask & bit) == 0;
        for (int w : nbr[v]) {
            if (w < 0)
                continue;
            const bool w_in = (mask >> w) & 1u;
            cut += (w_in == entering) ? -1 : 1;
        }
        mask ^= bit;
        size += entering ? 1 : std::size_t(-1);

        if (size == 0 || size > half)
            continue;
        const long long lhs = cut * static_cast<long long>(best_size);
        const long long rhs = best_cut * static_cast<long long>(size);
        if (best_size == 0 || lhs < rhs || (lhs == rhs && lex_less(mask, best_mask))) {
            best_mask = mask;
            best_cut = cut;
            best_size = size;
        }
    }

    result.method = CheegerMethod::Exhaustive;
    result.exact = reduced(static_cast<std::uint64_t>(best_cut), best_size);
    result.witness = mask_to_vertices(best_mask);
    result.crossing_edges = static_cast<std::size_t>(best_cut);
    return result;
}

std::vector<double> adjacency_spectrum(const RibbonGraph& g) {
    const auto vertices = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(vertices, vertices);
    for (Dart d = 0; d < g.dart_count(); ++d)
        adj(RibbonGraph::vertex_of(d), RibbonGraph::vertex_of(g.alpha(d))) += 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

SpectralGap spectral_gap(const RibbonGraph& g) {
    SpectralGap out;
    out.disconnected = connected_components(g).size() > 1;
    const auto spectrum = adjacency_spectrum(g);
    out.mu1 = spectrum.size() >= 2 ? spectrum[spectrum.size() - 2] : 3.0;
    if (out.disconnected) {
        out.mu1 = 3.0;
        out.gap = 0.0;
    } else {
        out.gap = std::max(0.0, 3.0 - out.mu1);
    }
    return out;
}

Interval cheeger_bounds(const SpectralGap& gap) {
    return {gap.gap / 2.0, std::sqrt(6.0 * gap.gap)};
}

Interval cheeger_bounds(const RibbonGraph& g) {
    return cheeger_bounds(spectral_gap(g));
}

ThresholdCertificate bollobas_threshold_check(const RibbonGraph& g, std::size_t exhaustive_limit) {
    ThresholdCertificate cert;
    if (connected_components(g).size() > 1) {
        cert.method = CheegerMethod::Disconnected;
        cert.exact = Rational{0, 1};
        cert.verdict = Verdict::NotAbove;
        return cert;
    }
    if (g.vertex_count() <= std::min(exhaustive_limit, exhaustive_vertex_limit)) {
        const auto h = cheeger_exact(g);
        cert.method = h.method;
        cert.exact = h.exact;
        // 2/11 < p/q  <=>  2q < 11p
        cert.verdict = (2 * h.exact->den < 11 * h.exact->num) ? Verdict::Above : Verdict::NotAbove;
        return cert;
    }
    const auto bounds = cheeger_bounds(g);
    cert.method = CheegerMethod::Spectral;
    cert.bounds = bounds;
    if (bounds.lower > bollobas_threshold)
        cert.verdict = Verdict::Above;
    else if (bounds.upper <= bollobas_threshold)
        cert.verdict = Verdict::NotAbove;
    else
        cert.verdict = Verdict::Indeterminate;
    return cert;
}

} // namespace rsurf
