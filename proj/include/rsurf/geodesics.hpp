#ifndef RSURF_GEODESICS_HPP
#define RSURF_GEODESICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

using BigInt = boost::multiprecision::cpp_int;

/// A closed path given by the dart it leaves along at every step.  Consecutive
/// darts d_i, d_{i+1} satisfy vertex_of(d_{i+1}) == vertex_of(alpha(d_i)),
/// wrapping around at the end.
using DartPath = std::vector<Dart>;

enum class Turn : std::uint8_t { Left, Right };

struct TurnWord {
    std::vector<Turn> letters;
    Dart base_dart = 0;
};

/// Exact 2x2 product of the turn matrices; entries stay nonnegative and the
/// determinant stays 1.
struct WordMatrix {
    BigInt a{1}, b{0}, c{0}, d{1};

    BigInt trace() const { return a + d; }
    BigInt determinant() const { return a * d - b * c; }
};

class InvalidPath : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The same closed path walked backwards.
DartPath reversed_path(const RibbonGraph& g, std::span<const Dart> path);

/// Lexicographically smallest sequence among all rotations of the path and of its reversal.
DartPath canonical_cycle(const RibbonGraph& g, std::span<const Dart> path);

/**
 * Every cycle subgraph with at most `max_len` edges, once each, in canonical
 * form, sorted by length and then lexicographically.  Loops are 1-cycles and
 * each pair of parallel edges is a 2-cycle, so a triple edge yields three.
 */
std::vector<DartPath> enumerate_cycles(const RibbonGraph& g, std::size_t max_len);

/// counts[i] = number of cycle subgraphs with i edges, for 1 <= i <= max_len
/// (counts[0] is unused and zero).  Same set as enumerate_cycles, no storage.
std::vector<std::size_t> count_cycles(const RibbonGraph& g, std::size_t max_len);

/// Turn taken at the vertex reached after each step.  Throws InvalidPath if the
/// path is empty, not closed, or backtracks.
TurnWord turn_word(const RibbonGraph& g, std::span<const Dart> path);

/// Left -> [[1,1],[0,1]], Right -> [[1,0],[1,1]], multiplied left to right.
WordMatrix word_matrix(std::span<const Turn> letters);
inline WordMatrix word_matrix(const TurnWord& w) { return word_matrix(w.letters); }

/// 2 arccosh(trace / 2); exactly 0 for trace 2.  Throws std::domain_error for trace < 2.
double length_from_trace(const BigInt& trace);

double geodesic_length(std::span<const Turn> letters);
inline double geodesic_length(const TurnWord& w) { return geodesic_length(w.letters); }

/// Length of the shortest cycle subgraph; nullopt only for an acyclic graph.
std::optional<std::size_t> girth(const RibbonGraph& g);

struct SpectrumEntry {
    DartPath cycle;
    std::size_t combinatorial_length = 0;
    BigInt trace;
    double length = 0.0;
};

/// Geodesic lengths of all short cycles.  Cycles whose word uses a single
/// letter are parabolic (they wind around a cusp) and are listed separately.
struct SystoleSpectrum {
    std::size_t max_len = 0;
    std::vector<SpectrumEntry> geodesics;  // ascending by length
    std::vector<SpectrumEntry> cusp_loops; // trace 2, canonical order
    std::optional<double> minimum;
};

SystoleSpectrum systole_spectrum(const RibbonGraph& g, std::size_t max_len);

/// cycles[i] counts cycle subgraphs of length i, lht[i] left-hand-turn cycles
/// of length i, for 1 <= i <= max_len.
struct CycleCensus {
    std::size_t max_len = 0;
    std::vector<std::size_t> cycles;
    std::vector<std::size_t> lht;
};

CycleCensus cycle_census(const RibbonGraph& g, std::size_t max_len);

} // namespace rsurf

#endif // RSURF_GEODESICS_HPP
