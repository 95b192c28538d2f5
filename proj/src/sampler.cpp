#include "rsurf/sampler.hpp"

#include <optional>
#include <random>
#include <stdexcept>

#include "rsurf/parallel.hpp"

namespace rsurf {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by multiply-and-reject; identical on every
// platform, unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    u128 m = static_cast<u128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            m = static_cast<u128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace

std::uint64_t trial_seed(SeedSpec seed) noexcept {
    const std::uint64_t mixed = splitmix64(seed.master_seed + (seed.trial_index + 1) * 0x9E3779B97F4A7C15ULL);
    return splitmix64(mixed ^ seed.master_seed);
}

RibbonGraph sample_pairing(std::size_t n, SeedSpec seed) {
    if (n == 0)
        throw std::invalid_argument("sample_pairing: n must be positive");
    const std::size_t darts = 6 * n;
    std::mt19937_64 rng(trial_seed(seed));

    std::vector<Dart> order(darts);
    for (std::size_t i = 0; i < darts; ++i)
        order[i] = static_cast<Dart>(i);
    for (std::size_t i = darts - 1; i > 0; --i)
        std::swap(order[i], order[bounded(rng, i + 1)]);

    std::vector<Dart> alpha(darts);
    for (std::size_t i = 0; i < darts; i += 2) {
        alpha[order[i]] = order[i + 1];
        alpha[order[i + 1]] = order[i];
    }

    std::vector<Dart> sigma(darts);
    std::uint64_t bits = 0;
    for (std::size_t v = 0; v < 2 * n; ++v) {
        if (v % 64 == 0)
            bits = rng();
        const bool reversed = (bits >> (v % 64)) & 1u;
        const auto b = static_cast<Dart>(3 * v);
        if (reversed) {
            sigma[b] = b + 2;
            sigma[b + 1] = b;
            sigma[b + 2] = b + 1;
        } else {
            sigma[b] = b + 1;
            sigma[b + 1] = b + 2;
            sigma[b + 2] = b;
        }
    }
    return RibbonGraph(n, std::move(sigma), std::move(alpha));
}

std::vector<RibbonGraph> sample_batch(std::size_t n, std::size_t trials, std::uint64_t master_seed,
                                      unsigned workers) {
    if (n == 0)
        throw std::invalid_argument("sample_batch: n must be positive");
    std::vector<std::optional<RibbonGraph>> slots = map_indexed(trials, workers, [&](std::size_t i) {
        return std::optional<RibbonGraph>(sample_pairing(n, {master_seed, i}));
    });
    std::vector<RibbonGraph> out;
    out.reserve(trials);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace rsurf
