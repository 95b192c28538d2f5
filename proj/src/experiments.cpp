#include "rsurf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rsurf/geodesics.hpp"
#include "rsurf/parallel.hpp"
#include "rsurf/sampler.hpp"
#include "rsurf/topology.hpp"

namespace rsurf {

void validate_config(const ExperimentConfig& cfg) {
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("experiment config: ") + what + " must be positive");
    };
    require(cfg.n > 0, "n");
    require(cfg.trials > 0, "trials");
    require(cfg.max_cycle_len > 0, "max_cycle_len");
    require(cfg.L > 0, "L");
    require(cfg.isolation.l1 > 0, "l1");
    require(cfg.isolation.l2 > 0, "l2");
    require(cfg.workers > 0, "workers");
}

double poisson_pmf(double mean, std::size_t k) {
    if (mean == 0.0)
        return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

double cycle_count_mean(std::size_t i) {
    return std::ldexp(1.0, static_cast<int>(i)) / (2.0 * static_cast<double>(i));
}

double lht_count_mean(std::size_t i) {
    return 1.0 / static_cast<double>(i);
}

double confidence_half_width(double p, std::size_t trials) {
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

// Poisson probabilities for counts 0..poisson_truncation plus the merged tail.
std::vector<double> truncated_poisson(double mean) {
    std::vector<double> p(poisson_truncation + 2, 0.0);
    double head = 0.0;
    for (std::size_t k = 0; k <= poisson_truncation; ++k) {
        p[k] = poisson_pmf(mean, k);
        head += p[k];
    }
    p[poisson_truncation + 1] = std::max(0.0, 1.0 - head);
    return p;
}

std::vector<double> truncated_empirical(std::span<const std::uint64_t> histogram, std::uint64_t trials) {
    std::vector<double> p(poisson_truncation + 2, 0.0);
    for (std::size_t k = 0; k < histogram.size(); ++k)
        p[std::min(k, poisson_truncation + 1)] += static_cast<double>(histogram[k]) / static_cast<double>(trials);
    return p;
}

std::size_t truncated_cell(std::uint32_t count) {
    return std::min<std::size_t>(count, poisson_truncation + 1);
}

CountLaw make_law(std::size_t index, const std::vector<std::uint32_t>& counts, double target) {
    CountLaw law;
    law.index = index;
    law.target_mean = target;
    const std::uint32_t top = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    law.histogram.assign(static_cast<std::size_t>(top) + 1, 0);
    double total = 0.0;
    for (auto c : counts) {
        ++law.histogram[c];
        total += c;
    }
    const auto trials = static_cast<double>(counts.size());
    law.mean = total / trials;
    law.frequencies.reserve(law.histogram.size());
    for (auto h : law.histogram)
        law.frequencies.push_back(static_cast<double>(h) / trials);
    law.tv_distance = tv_to_poisson(law.histogram, counts.size(), target);
    return law;
}

std::size_t lht_depth(const ExperimentConfig& cfg) {
    return std::max(cfg.max_cycle_len, cfg.L > 0 ? cfg.L - 1 : 0);
}

} // namespace

double tv_to_poisson(std::span<const std::uint64_t> histogram, std::uint64_t trials, double mean) {
    if (trials == 0)
        throw std::invalid_argument("tv_to_poisson: no trials");
    const auto emp = truncated_empirical(histogram, trials);
    const auto target = truncated_poisson(mean);
    double tv = 0.0;
    for (std::size_t k = 0; k < emp.size(); ++k)
        tv += std::abs(emp[k] - target[k]);
    return std::clamp(0.5 * tv, 0.0, 1.0);
}

CensusData collect_census(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::size_t depth = lht_depth(cfg);
    CensusData data;
    data.config = cfg;
    data.trials = map_indexed(cfg.trials, cfg.workers, [&](std::size_t t) {
        const RibbonGraph g = sample_pairing(cfg.n, {cfg.master_seed, t});
        TrialCensus tc;
        const auto cycles = count_cycles(g, cfg.max_cycle_len);
        tc.cycles.assign(cycles.begin(), cycles.end());
        tc.lht.assign(depth + 1, 0);
        std::size_t min_len = std::numeric_limits<std::size_t>::max();
        for (std::size_t len : lht_lengths(g)) {
            min_len = std::min(min_len, len);
            if (len <= depth)
                ++tc.lht[len];
        }
        tc.min_lht = static_cast<std::uint32_t>(min_len);
        tc.simple = is_simple(g);
        return tc;
    });
    return data;
}

PoissonFitReport fit_cycle_census(const CensusData& data) {
    PoissonFitReport report;
    report.config = data.config;
    report.variable = "X";
    std::vector<std::uint32_t> column(data.trials.size());
    for (std::size_t i = 1; i <= data.config.max_cycle_len; ++i) {
        for (std::size_t t = 0; t < data.trials.size(); ++t)
            column[t] = data.trials[t].cycles[i];
        report.laws.push_back(make_law(i, column, cycle_count_mean(i)));
    }
    std::size_t simple = 0;
    for (const auto& tc : data.trials)
        simple += tc.simple ? 1 : 0;
    report.simple_fraction = static_cast<double>(simple) / static_cast<double>(data.trials.size());
    return report;
}

PoissonFitReport fit_lht_census(const CensusData& data) {
    PoissonFitReport report;
    report.config = data.config;
    report.variable = "Y";
    std::vector<std::uint32_t> column(data.trials.size());
    for (std::size_t i = 1; i <= data.config.max_cycle_len; ++i) {
        for (std::size_t t = 0; t < data.trials.size(); ++t)
            column[t] = data.trials[t].lht[i];
        report.laws.push_back(make_law(i, column, lht_count_mean(i)));
    }
    return report;
}

PoissonFitReport run_cycle_census(const ExperimentConfig& cfg) {
    return fit_cycle_census(collect_census(cfg));
}

PoissonFitReport run_lht_census(const ExperimentConfig& cfg) {
    return fit_lht_census(collect_census(cfg));
}

CuspProbabilityReport large_cusp_probability(const CensusData& data, std::size_t L) {
    if (L < 2)
        throw std::invalid_argument("large_cusp_probability: L must be at least 2");
    if (L - 1 >= data.trials.front().lht.size())
        throw std::invalid_argument("large_cusp_probability: census does not reach length L - 1");

    CuspProbabilityReport r;
    r.config = data.config;
    r.L = L;
    r.trials = data.trials.size();
    std::size_t all_zero = 0;
    for (const auto& tc : data.trials) {
        if (tc.min_lht >= L)
            ++r.successes;
        bool none_short = true;
        for (std::size_t i = 1; i < L; ++i)
            none_short = none_short && tc.lht[i] == 0;
        all_zero += none_short ? 1 : 0;
    }
    const double trials = static_cast<double>(r.trials);
    r.empirical = static_cast<double>(r.successes) / trials;
    r.from_lht_census = static_cast<double>(all_zero) / trials;

    double harmonic = 0.0;
    for (std::size_t i = 1; i < L; ++i)
        harmonic += 1.0 / static_cast<double>(i);
    r.target = std::exp(-harmonic);
    r.comparator = std::exp(-euler_gamma) / static_cast<double>(L - 1);
    r.half_width = confidence_half_width(r.empirical, r.trials);
    return r;
}

CuspProbabilityReport estimate_large_cusp_probability(const ExperimentConfig& cfg) {
    if (cfg.L < 2)
        throw std::invalid_argument("estimate_large_cusp_probability: L must be at least 2");
    return large_cusp_probability(collect_census(cfg), cfg.L);
}

IsolationOutcome isolation_outcome(const RibbonGraph& g, const IsolationParams& params, std::size_t L) {
    const std::size_t reach = std::max(params.l1, params.l2);
    const auto cycles = enumerate_cycles(g, reach);
    const auto edge_of = edge_index_of_darts(g);

    auto vertices_of = [](std::span<const Dart> path) {
        std::vector<Vertex> vs;
        for (Dart d : path)
            vs.push_back(RibbonGraph::vertex_of(d));
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    };
    auto edges_of = [&](std::span<const Dart> path) {
        std::vector<std::uint32_t> es;
        for (Dart d : path)
            es.push_back(edge_of[d]);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return es;
    };
    auto near = [&](const std::vector<std::size_t>& dist, std::span<const Dart> path) {
        return std::any_of(path.begin(), path.end(),
                           [&](Dart x) { return dist[RibbonGraph::vertex_of(x)] <= params.d; });
    };

    IsolationOutcome out;
    for (std::size_t a = 0; a < cycles.size() && !out.close_pair; ++a) {
        if (cycles[a].size() != params.l1)
            continue;
        const auto dist = bounded_distances(g, vertices_of(cycles[a]), params.d);
        for (std::size_t b = 0; b < cycles.size(); ++b) {
            if (b == a || cycles[b].size() != params.l2)
                continue;
            if (near(dist, cycles[b])) {
                out.close_pair = true;
                break;
            }
        }
    }

    out.certified = true;
    const auto lht = lht_paths(g);
    for (std::size_t c = 0; c < lht.count() && out.certified; ++c) {
        if (lht.lengths[c] >= L)
            continue;
        const auto own_edges = edges_of(lht.cycles[c]);
        const auto dist = bounded_distances(g, vertices_of(lht.cycles[c]), params.d);
        for (const auto& other : cycles) {
            if (other.size() > params.l2 || edges_of(other) == own_edges)
                continue;
            if (near(dist, other)) {
                out.certified = false;
                break;
            }
        }
    }
    return out;
}

namespace {

bool trend_within_confidence(std::span<const double> p, std::span<const std::size_t> trials, double direction) {
    if (p.size() != trials.size() || p.size() < 2)
        throw std::invalid_argument("trend check: need matching series of at least two points");
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const double se = std::sqrt(p[k] * (1.0 - p[k]) / static_cast<double>(trials[k]) +
                                    p[k + 1] * (1.0 - p[k + 1]) / static_cast<double>(trials[k + 1]));
        const double against = direction * (p[k + 1] - p[k]);
        if (against > 1.96 * se)
            return false;
    }
    return direction * (p.back() - p.front()) < 0.0;
}

} // namespace

bool decreasing_within_confidence(std::span<const double> p, std::span<const std::size_t> trials) {
    return trend_within_confidence(p, trials, 1.0);
}

bool increasing_within_confidence(std::span<const double> p, std::span<const std::size_t> trials) {
    return trend_within_confidence(p, trials, -1.0);
}

IsolationReport estimate_isolation(const ExperimentConfig& cfg, std::span<const std::size_t> ladder) {
    validate_config(cfg);
    if (ladder.size() < 3)
        throw std::invalid_argument("estimate_isolation: ladder needs at least three sizes");
    for (std::size_t k = 0; k < ladder.size(); ++k) {
        if (ladder[k] == 0 || (k > 0 && ladder[k] <= ladder[k - 1]))
            throw std::invalid_argument("estimate_isolation: ladder must be positive and strictly increasing");
    }

    IsolationReport report;
    report.config = cfg;
    report.ladder.assign(ladder.begin(), ladder.end());
    for (std::size_t n : ladder) {
        const auto outcomes = map_indexed(cfg.trials, cfg.workers, [&](std::size_t t) {
            return isolation_outcome(sample_pairing(n, {cfg.master_seed, t}), cfg.isolation, cfg.L);
        });
        IsolationRow row;
        row.n = n;
        row.trials = cfg.trials;
        for (const auto& o : outcomes) {
            row.close_pairs += o.close_pair ? 1 : 0;
            row.certified += o.certified ? 1 : 0;
        }
        row.q = static_cast<double>(row.close_pairs) / static_cast<double>(row.trials);
        row.certificate = static_cast<double>(row.certified) / static_cast<double>(row.trials);
        row.q_half_width = confidence_half_width(row.q, row.trials);
        row.certificate_half_width = confidence_half_width(row.certificate, row.trials);
        report.rows.push_back(row);
    }

    std::vector<double> q, cert;
    std::vector<std::size_t> trials;
    for (const auto& row : report.rows) {
        q.push_back(row.q);
        cert.push_back(row.certificate);
        trials.push_back(row.trials);
    }
    report.q_trend_consistent = decreasing_within_confidence(q, trials);
    report.certificate_trend_consistent = increasing_within_confidence(cert, trials);
    return report;
}

double joint_independence_tv(const CensusData& data, std::size_t i, std::size_t j) {
    if (i == j)
        throw std::invalid_argument("joint_independence_tv: indices must differ");
    if (i == 0 || j == 0 || i > data.config.max_cycle_len || j > data.config.max_cycle_len)
        throw std::invalid_argument("joint_independence_tv: indices must lie in 1..max_cycle_len");
    if (data.trials.empty())
        throw std::invalid_argument("joint_independence_tv: no trials");

    constexpr std::size_t cells = poisson_truncation + 2;
    std::vector<double> joint(cells * cells, 0.0);
    const double weight = 1.0 / static_cast<double>(data.trials.size());
    for (const auto& tc : data.trials)
        joint[truncated_cell(tc.cycles[i]) * cells + truncated_cell(tc.cycles[j])] += weight;

    const auto pi = truncated_poisson(cycle_count_mean(i));
    const auto pj = truncated_poisson(cycle_count_mean(j));
    double tv = 0.0;
    for (std::size_t a = 0; a < cells; ++a)
        for (std::size_t b = 0; b < cells; ++b)
            tv += std::abs(joint[a * cells + b] - pi[a] * pj[b]);
    return std::clamp(0.5 * tv, 0.0, 1.0);
}

double joint_independence_check(const ExperimentConfig& cfg, std::size_t i, std::size_t j) {
    validate_config(cfg);
    if (i == j)
        throw std::invalid_argument("joint_independence_check: indices must differ");
    if (i == 0 || j == 0 || i > cfg.max_cycle_len || j > cfg.max_cycle_len)
        throw std::invalid_argument("joint_independence_check: indices must lie in 1..max_cycle_len");
    return joint_independence_tv(collect_census(cfg), i, j);
}

} // namespace rsurf
