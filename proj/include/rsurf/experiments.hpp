#ifndef RSURF_EXPERIMENTS_HPP
#define RSURF_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsurf/ribbon_graph.hpp"

namespace rsurf {

/// Counts at or above this value share one tail cell when comparing with a Poisson law.
inline constexpr std::size_t poisson_truncation = 30;

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.5772156649015329;

struct IsolationParams {
    std::size_t l1 = 3;
    std::size_t l2 = 3;
    std::size_t d = 2;
};

/// Campaign parameters.  Every report is a pure function of this struct;
/// `workers` changes speed only.  L = 7 is the cusp length for which the
/// compactified metric is known to stay close to the cusped one.
struct ExperimentConfig {
    std::size_t n = 500;
    std::size_t trials = 20000;
    std::uint64_t master_seed = 7;
    std::size_t max_cycle_len = 6;
    std::size_t L = 7;
    IsolationParams isolation;
    unsigned workers = 1;
};

/// Throws std::invalid_argument naming the first nonpositive field.
void validate_config(const ExperimentConfig& cfg);

/// Per-trial raw statistics.  cycles[i] = X_i for i <= max_cycle_len,
/// lht[i] = Y_i for i <= max(max_cycle_len, L - 1); index 0 unused.
struct TrialCensus {
    std::vector<std::uint32_t> cycles;
    std::vector<std::uint32_t> lht;
    std::uint32_t min_lht = 0;
    bool simple = false;
};

struct CensusData {
    ExperimentConfig config;
    std::vector<TrialCensus> trials; // trial-index order
};

/// Samples cfg.trials graphs and records their cycle and left-hand-turn censuses.
CensusData collect_census(const ExperimentConfig& cfg);

/// Empirical law of one count variable against its Poisson target.
struct CountLaw {
    std::size_t index = 0;                 // cycle length i
    std::vector<std::uint64_t> histogram;  // histogram[k] = trials with count k
    std::vector<double> frequencies;       // histogram / trials
    double mean = 0.0;
    double target_mean = 0.0;
    double tv_distance = 0.0;
};

struct PoissonFitReport {
    ExperimentConfig config;
    std::string variable;                  // "X" (cycles) or "Y" (left-hand-turn cycles)
    std::vector<CountLaw> laws;            // i = 1 .. max_cycle_len
    std::optional<double> simple_fraction; // X report only: P(X_1 = 0 and X_2 = 0)
};

double poisson_pmf(double mean, std::size_t k);

/// 2^i / (2i)
double cycle_count_mean(std::size_t i);
/// 1 / i
double lht_count_mean(std::size_t i);

/// Total variation distance between an empirical count law and Poisson(mean),
/// with all mass at counts > poisson_truncation merged into one cell.
double tv_to_poisson(std::span<const std::uint64_t> histogram, std::uint64_t trials, double mean);

/// 1.96 sqrt(p (1 - p) / trials)
double confidence_half_width(double p, std::size_t trials);

PoissonFitReport fit_cycle_census(const CensusData& data);
PoissonFitReport fit_lht_census(const CensusData& data);
PoissonFitReport run_cycle_census(const ExperimentConfig& cfg);
PoissonFitReport run_lht_census(const ExperimentConfig& cfg);

struct CuspProbabilityReport {
    ExperimentConfig config;
    std::size_t L = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double empirical = 0.0;          // P(min left-hand-turn length >= L)
    double target = 0.0;             // exp(-(1 + 1/2 + ... + 1/(L-1)))
    double comparator = 0.0;         // exp(-gamma) / (L - 1)
    double half_width = 0.0;
    double from_lht_census = 0.0;    // P(Y_1 = ... = Y_{L-1} = 0) on the same trials
};

CuspProbabilityReport large_cusp_probability(const CensusData& data, std::size_t L);
CuspProbabilityReport estimate_large_cusp_probability(const ExperimentConfig& cfg);

struct IsolationRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t close_pairs = 0;     // trials with two distinct nearby short cycles
    double q = 0.0;
    double q_half_width = 0.0;
    std::size_t certified = 0;       // trials passing the relaxed large-cusps certificate
    double certificate = 0.0;
    double certificate_half_width = 0.0;
};

struct IsolationReport {
    ExperimentConfig config;
    std::vector<std::size_t> ladder;
    std::vector<IsolationRow> rows;
    bool q_trend_consistent = false;
    bool certificate_trend_consistent = false;
};

/// Per-graph outcome of the two isolation statistics.
struct IsolationOutcome {
    bool close_pair = false;
    bool certified = false;
};

/**
 * close_pair: distinct cycle subgraphs of lengths l1 and l2 whose vertex sets
 * are within distance d.  certified: no left-hand-turn cycle shorter than L has
 * a cycle subgraph of length <= l2 with a different edge set within distance d.
 */
IsolationOutcome isolation_outcome(const RibbonGraph& g, const IsolationParams& params, std::size_t L);

/// Requires a strictly increasing ladder of at least three sizes.
IsolationReport estimate_isolation(const ExperimentConfig& cfg, std::span<const std::size_t> ladder);

/// A step from a to b is consistent with a decreasing trend unless b exceeds a
/// by more than 1.96 combined standard errors; the endpoints must strictly decrease.
bool decreasing_within_confidence(std::span<const double> p, std::span<const std::size_t> trials);
bool increasing_within_confidence(std::span<const double> p, std::span<const std::size_t> trials);

/// TV distance between the joint empirical law of (X_i, X_j) and the product of
/// their Poisson targets, each coordinate truncated as in tv_to_poisson.
double joint_independence_tv(const CensusData& data, std::size_t i, std::size_t j);
double joint_independence_check(const ExperimentConfig& cfg, std::size_t i, std::size_t j);

} // namespace rsurf

#endif // RSURF_EXPERIMENTS_HPP
