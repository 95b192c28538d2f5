#include "rsurf/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rsurf/topology.hpp"

namespace rsurf {

namespace {

// Depth-first search over simple cycles whose smallest vertex is the root.
// Every cycle is reached exactly twice, once per direction.
template <class OnCycle>
class CycleWalker {
public:
    CycleWalker(const RibbonGraph& g, std::size_t max_len, OnCycle on_cycle)
        : g_(g), max_len_(max_len), on_path_(g.vertex_count(), 0), on_cycle_(on_cycle) {
        path_.reserve(max_len);
    }

    void run() {
        for (Vertex s = 0; s < g_.vertex_count(); ++s) {
            root_ = s;
            on_path_[s] = 1;
            extend(s, no_dart);
            on_path_[s] = 0;
        }
    }

private:
    static constexpr Dart no_dart = std::numeric_limits<Dart>::max();

    void extend(Vertex v, Dart arrival) {
        for (Dart d = 3 * v; d < 3 * v + 3; ++d) {
            if (d == arrival)
                continue;
            const Dart across = g_.alpha(d);
            const Vertex w = RibbonGraph::vertex_of(across);
            path_.push_back(d);
            if (w == root_) {
                on_cycle_(std::span<const Dart>(path_));
            } else if (w > root_ && !on_path_[w] && path_.size() < max_len_) {
                on_path_[w] = 1;
                extend(w, across);
                on_path_[w] = 0;
            }
            path_.pop_back();
        }
    }

    const RibbonGraph& g_;
    std::size_t max_len_;
    std::vector<char> on_path_;
    std::vector<Dart> path_;
    Vertex root_ = 0;
    OnCycle on_cycle_;
};

// Smallest rotation of a sequence, by direct comparison (cycles are short).
DartPath min_rotation(std::span<const Dart> seq) {
    const std::size_t k = seq.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < k; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            const Dart x = seq[(r + i) % k];
            const Dart y = seq[(best + i) % k];
            if (x != y) {
                if (x < y)
                    best = r;
                break;
            }
        }
    }
    DartPath out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = seq[(best + i) % k];
    return out;
}

} // namespace

DartPath reversed_path(const RibbonGraph& g, std::span<const Dart> path) {
    DartPath out(path.size());
    for (std::size_t i = 0; i < path.size(); ++i)
        out[i] = g.alpha(path[path.size() - 1 - i]);
    return out;
}

DartPath canonical_cycle(const RibbonGraph& g, std::span<const Dart> path) {
    auto forward = min_rotation(path);
    auto backward = min_rotation(reversed_path(g, path));
    return std::min(forward, backward);
}

std::vector<DartPath> enumerate_cycles(const RibbonGraph& g, std::size_t max_len) {
    std::vector<DartPath> found;
    if (max_len == 0)
        return found;
    auto collect = [&](std::span<const Dart> path) { found.push_back(canonical_cycle(g, path)); };
    CycleWalker<decltype(collect)> walker(g, max_len, collect);
    walker.run();

    std::sort(found.begin(), found.end(), [](const DartPath& x, const DartPath& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x < y;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<std::size_t> count_cycles(const RibbonGraph& g, std::size_t max_len) {
    std::vector<std::size_t> twice(max_len + 1, 0);
    if (max_len == 0)
        return twice;
    auto tally = [&](std::span<const Dart> path) { ++twice[path.size()]; };
    CycleWalker<decltype(tally)> walker(g, max_len, tally);
    walker.run();
    for (auto& c : twice)
        c /= 2;
    return twice;
}

TurnWord turn_word(const RibbonGraph& g, std::span<const Dart> path) {
    if (path.empty())
        throw InvalidPath("turn_word: empty path");
    TurnWord word;
    word.base_dart = path.front();
    word.letters.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.dart_count())
            throw InvalidPath("turn_word: dart out of range at step " + std::to_string(i));
        const Dart arrival = g.alpha(path[i]);
        const Dart departure = path[(i + 1) % path.size()];
        if (departure >= g.dart_count() || RibbonGraph::vertex_of(departure) != RibbonGraph::vertex_of(arrival))
            throw InvalidPath("turn_word: path is not closed at step " + std::to_string(i));
        if (departure == arrival)
            throw InvalidPath("turn_word: path backtracks at step " + std::to_string(i));
        word.letters.push_back(departure == g.sigma(arrival) ? Turn::Left : Turn::Right);
    }
    return word;
}

WordMatrix word_matrix(std::span<const Turn> letters) {
    WordMatrix m;
    for (Turn t : letters) {
        if (t == Turn::Left) {
            m.b += m.a;
            m.d += m.c;
        } else {
            m.a += m.b;
            m.c += m.d;
        }
    }
    return m;
}

double length_from_trace(const BigInt& trace) {
    if (trace < 2)
        throw std::domain_error("length_from_trace: trace below 2 is not hyperbolic or parabolic");
    if (trace == 2)
        return 0.0;
    constexpr unsigned exact_bits = 53;
    if (boost::multiprecision::msb(trace) < exact_bits)
        return 2.0 * std::acosh(trace.convert_to<double>() / 2.0);

    // 2 arccosh(t/2) = 2 log t + O(t^-2); keep the top 63 bits of t.
    const unsigned shift = static_cast<unsigned>(boost::multiprecision::msb(trace)) - 62;
    const BigInt top = trace >> shift;
    const double log_t = std::log(top.convert_to<double>()) + shift * std::numbers::ln2;
    return 2.0 * log_t;
}

double geodesic_length(std::span<const Turn> letters) {
    return length_from_trace(word_matrix(letters).trace());
}

std::optional<std::size_t> girth(const RibbonGraph& g) {
    if (has_loop(g))
        return 1;
    if (!is_simple(g))
        return 2;

    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::size_t best = unset;
    std::vector<std::size_t> dist(g.vertex_count(), unset);
    std::vector<Dart> via(g.vertex_count());
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), unset);
        queue.clear();
        dist[root] = 0;
        via[root] = std::numeric_limits<Dart>::max();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            if (best != unset && 2 * dist[v] + 1 >= best)
                break;
            for (Dart d = 3 * v; d < 3 * v + 3; ++d) {
                if (d == via[v])
                    continue;
                const Dart across = g.alpha(d);
                const Vertex w = RibbonGraph::vertex_of(across);
                if (dist[w] == unset) {
                    dist[w] = dist[v] + 1;
                    via[w] = across;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == unset)
        return std::nullopt;
    return best;
}

SystoleSpectrum systole_spectrum(const RibbonGraph& g, std::size_t max_len) {
    SystoleSpectrum out;
    out.max_len = max_len;
    for (auto& cycle : enumerate_cycles(g, max_len)) {
        SpectrumEntry entry;
        entry.combinatorial_length = cycle.size();
        entry.trace = word_matrix(turn_word(g, cycle)).trace();
        entry.length = length_from_trace(entry.trace);
        entry.cycle = std::move(cycle);
        if (entry.trace == 2)
            out.cusp_loops.push_back(std::move(entry));
        else
            out.geodesics.push_back(std::move(entry));
    }
    std::stable_sort(out.geodesics.begin(), out.geodesics.end(),
                     [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.length < y.length; });
    if (!out.geodesics.empty())
        out.minimum = out.geodesics.front().length;
    return out;
}

CycleCensus cycle_census(const RibbonGraph& g, std::size_t max_len) {
    CycleCensus census;
    census.max_len = max_len;
    census.cycles = count_cycles(g, max_len);
    census.lht.assign(max_len + 1, 0);
    for (std::size_t len : lht_lengths(g))
        if (len <= max_len)
            ++census.lht[len];
    return census;
}

} // namespace rsurf
