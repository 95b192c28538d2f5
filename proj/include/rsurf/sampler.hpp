#ifndef RSURF_SAMPLER_HPP
#define RSURF_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

/// Generator seed for one trial: splitmix64 applied to
/// master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15, then once more to the
/// result xor master_seed.  Pure function of the pair.
std::uint64_t trial_seed(SeedSpec seed) noexcept;

/**
 * Draws an oriented cubic multigraph from the pairing model.
 *
 * The 6n darts are shuffled uniformly (Fisher-Yates driven by mt19937_64) and
 * paired consecutively, giving a uniform perfect matching.  Each vertex then
 * receives one of its two cyclic orders with probability 1/2, independently.
 * Throws std::invalid_argument if n == 0.
 */
RibbonGraph sample_pairing(std::size_t n, SeedSpec seed);

/// Trial i is sample_pairing(n, {master_seed, i}); result is in trial order.
std::vector<RibbonGraph> sample_batch(std::size_t n, std::size_t trials, std::uint64_t master_seed,
                                      unsigned workers = 1);

} // namespace rsurf

#endif // RSURF_SAMPLER_HPP
