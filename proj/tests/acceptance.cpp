// End-to-end acceptance checks.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rsurf/expansion.hpp"
#include "rsurf/experiments.hpp"
#include "rsurf/geodesics.hpp"
#include "rsurf/report_io.hpp"
#include "rsurf/sampler.hpp"
#include "rsurf/standard_graphs.hpp"
#include "rsurf/topology.hpp"

using namespace rsurf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o, double elapsed, double budget) {
    if (budget > 0 && elapsed > budget)
        o.require(false, "runtime " + std::to_string(elapsed) + " s over budget " + std::to_string(budget) + " s");
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), elapsed,
                o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

bool near_rel(double got, double want, double rel) {
    return std::abs(got - want) <= rel * std::abs(want);
}

// ---------------------------------------------------------------------------

void criterion_1() {
    const auto start = Clock::now();
    Outcome o;
    const auto one = surface_summary(graphs::theta_one_face());
    const auto three = surface_summary(graphs::theta_three_faces());
    std::vector<std::size_t> genera{one.genus, three.genus};
    std::sort(genera.begin(), genera.end());
    o.require(genera == std::vector<std::size_t>{0, 1}, "theta genera are {0, 1}");

    const auto cube = lht_paths(graphs::cube_planar());
    o.require(cube.count() == 6, "cube has 6 left-hand-turn paths");
    o.require(std::all_of(cube.lengths.begin(), cube.lengths.end(), [](std::size_t l) { return l == 4; }),
              "cube left-hand-turn paths have length 4");
    o.require(surface_summary(graphs::cube_planar()).genus == 0, "cube genus 0");

    const auto k4 = surface_summary(graphs::k4_planar());
    o.require(k4.genus == 0 && k4.cusps == 4, "K4 genus 0 with 4 cusps");
    o.detail << "theta genera " << genera[0] << "," << genera[1] << "; cube paths " << cube.count() << "; K4 cusps "
             << k4.cusps;
    report(1, "hand-traceable topology", o, seconds_since(start), 1.0);
}

void criterion_2() {
    const auto start = Clock::now();
    Outcome o;
    std::size_t violations = 0;
    const std::vector<std::size_t> sizes{2, 5, 20, 100};
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const std::size_t n = sizes[s];
        for (std::size_t t = 0; t < 2500; ++t) {
            const RibbonGraph g = sample_pairing(n, {20240 + s, t});
            const auto sigma = g.sigma_array();
            const auto alpha = g.alpha_array();
            const auto lht = lht_paths(g);
            const auto summary = surface_summary(g);

            // every dart in exactly one path, and each path follows sigma(alpha(.))
            std::vector<int> seen(6 * n, 0);
            std::size_t total = 0;
            bool ok = true;
            for (std::size_t c = 0; c < lht.count(); ++c) {
                const auto& cyc = lht.cycles[c];
                total += cyc.size();
                ok = ok && cyc.size() == lht.lengths[c];
                for (std::size_t k = 0; k < cyc.size(); ++k) {
                    ++seen[cyc[k]];
                    ok = ok && cyc[(k + 1) % cyc.size()] == sigma[alpha[cyc[k]]];
                }
            }
            ok = ok && std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
            ok = ok && total == 6 * n;

            // Euler identity and parity per component
            std::size_t cusps_seen = 0;
            for (const auto& comp : summary.per_component) {
                const long long v = static_cast<long long>(comp.vertices);
                const long long e = 3 * v / 2;
                const long long f = static_cast<long long>(comp.cusps);
                ok = ok && v % 2 == 0;
                ok = ok && v - e + f == 2 - 2 * static_cast<long long>(comp.genus);
                ok = ok && (comp.cusps % 2) == ((comp.vertices / 2) % 2);
                cusps_seen += comp.cusps;
            }
            ok = ok && cusps_seen == lht.count() && summary.cusps == lht.count();
            ok = ok && summary.min_cusp_length > 0 && summary.cusps * summary.min_cusp_length <= 6 * n;
            if (!ok)
                ++violations;
        }
    }
    o.require(violations == 0, "no invariant violations");
    o.detail << "10000 graphs, violations " << violations;
    report(2, "Euler and partition invariants", o, seconds_since(start), 60.0);
}

void criterion_3() {
    const auto start = Clock::now();
    Outcome o;
    double worst = 0.0;
    for (std::size_t k = 1; k <= 60; ++k) {
        const std::vector<Turn> left(k, Turn::Left);
        o.require(geodesic_length(left) == 0.0, "all-Left word has length 0");
    }
    for (std::size_t r = 2; r <= 50; ++r) {
        std::vector<Turn> w(r - 1, Turn::Left);
        w.push_back(Turn::Right);
        const double t = static_cast<double>(1 + r);
        const double want = 2.0 * std::log((t + std::sqrt(t * t - 4.0)) / 2.0);
        const double got = geodesic_length(w);
        worst = std::max(worst, std::abs(got - want) / want);
        o.require(near_rel(got, want, 1e-9), "Left^(r-1) Right closed form at r=" + std::to_string(r));
    }
    for (std::size_t r = 2; r <= 60; r += 2) {
        std::vector<Turn> w;
        for (std::size_t k = 0; k < r / 2; ++k) {
            w.push_back(Turn::Left);
            w.push_back(Turn::Right);
        }
        const double want = static_cast<double>(r) * std::log((3.0 + std::sqrt(5.0)) / 2.0);
        const double got = geodesic_length(w);
        worst = std::max(worst, std::abs(got - want) / want);
        o.require(near_rel(got, want, 1e-9), "(Left Right)^(r/2) closed form at r=" + std::to_string(r));
    }
    o.detail << "worst relative error " << worst;
    report(3, "geodesic length closed forms", o, seconds_since(start), 1.0);
}

void criterion_4() {
    const auto start = Clock::now();
    Outcome o;
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<std::size_t> len_dist(1, 200);
    std::bernoulli_distribution coin(0.5);
    std::size_t violations = 0, uniform_words = 0;
    for (std::size_t t = 0; t < 10000; ++t) {
        const std::size_t len = len_dist(rng);
        std::vector<Turn> w(len);
        // a tenth of the words are uniform so both sides of the equivalence get exercised
        const bool force_uniform = t % 10 == 0;
        const Turn fill = coin(rng) ? Turn::Left : Turn::Right;
        for (auto& x : w)
            x = force_uniform ? fill : (coin(rng) ? Turn::Left : Turn::Right);
        const bool uniform = std::all_of(w.begin(), w.end(), [&](Turn x) { return x == w.front(); });
        uniform_words += uniform ? 1 : 0;

        const auto m = word_matrix(w);
        bool ok = m.determinant() == 1;
        ok = ok && ((m.trace() == 2) == uniform);

        std::vector<Turn> rotated(w);
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(rng() % len), rotated.end());
        std::vector<Turn> swapped(w.rbegin(), w.rend());
        for (auto& x : swapped)
            x = x == Turn::Left ? Turn::Right : Turn::Left;
        const auto mr = word_matrix(rotated);
        const auto ms = word_matrix(swapped);
        ok = ok && mr.trace() == m.trace() && ms.trace() == m.trace();
        const double l = geodesic_length(w);
        ok = ok && geodesic_length(rotated) == l && geodesic_length(swapped) == l;
        if (!ok)
            ++violations;
    }
    o.require(violations == 0, "no word property violations");
    o.detail << "10000 words (" << uniform_words << " uniform), violations " << violations;
    report(4, "word and trace properties", o, seconds_since(start), 0.0);
}

void criterion_5() {
    const auto start = Clock::now();
    Outcome o;
    std::size_t discrepancies = 0, total_cycles = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        const std::size_t n = 1 + t % 4; // 2n <= 8
        const RibbonGraph g = sample_pairing(n, {55, t});
        const std::size_t max_len = 2 * n; // no cycle can be longer than the vertex count
        std::set<oracle::EdgeSet> mine;
        for (const auto& c : enumerate_cycles(g, max_len))
            mine.insert(oracle::edge_set(g, c));
        const auto expected = oracle::cycles_by_closed_walks(g, max_len);
        total_cycles += expected.size();
        if (mine != expected || enumerate_cycles(g, max_len).size() != expected.size())
            ++discrepancies;
    }
    o.require(discrepancies == 0, "cycle enumeration matches the walk oracle");
    o.detail << "500 graphs, " << total_cycles << " cycles, discrepancies " << discrepancies;
    report(5, "cycle enumeration against exhaustive walks", o, seconds_since(start), 0.0);
}

// ---------------------------------------------------------------------------

struct Campaign {
    ExperimentConfig cfg;
    PoissonFitReport x, y;
    std::vector<CuspProbabilityReport> cusps; // L = 2, 3, 7
    double seconds = 0.0;
};

Campaign run_campaign(unsigned workers) {
    const auto start = Clock::now();
    Campaign c;
    c.cfg.n = 500;
    c.cfg.trials = 20000;
    c.cfg.master_seed = 7;
    c.cfg.max_cycle_len = 6;
    c.cfg.L = 7;
    c.cfg.workers = workers;
    const auto data = collect_census(c.cfg);
    c.x = fit_cycle_census(data);
    c.y = fit_lht_census(data);
    for (std::size_t L : {2u, 3u, 7u})
        c.cusps.push_back(large_cusp_probability(data, L));
    c.seconds = seconds_since(start);
    return c;
}

void criterion_6(const Campaign& c) {
    Outcome o;
    const std::vector<double> means{1.0, 1.0, 4.0 / 3.0};
    for (std::size_t i = 1; i <= 3; ++i) {
        const double m = c.x.laws[i - 1].mean;
        o.require(std::abs(m - means[i - 1]) <= 0.05, "mean of X" + std::to_string(i));
        o.detail << "E X" << i << "=" << m << " ";
    }
    for (std::size_t i = 1; i <= 6; ++i) {
        const double tv = c.x.laws[i - 1].tv_distance;
        o.require(tv <= (i <= 4 ? 0.03 : 0.05), "TV of X" + std::to_string(i));
        o.detail << "TV" << i << "=" << tv << " ";
    }
    const double simple = *c.x.simple_fraction;
    o.require(std::abs(simple - std::exp(-2.0)) <= 0.01, "simple-graph fraction");
    o.detail << "simple=" << simple;
    report(6, "Poisson cycle census", o, c.seconds, 600.0);
}

void criterion_7(const Campaign& c) {
    Outcome o;
    for (std::size_t i = 1; i <= 5; ++i) {
        const double mu = 1.0 / static_cast<double>(i);
        const double m = c.y.laws[i - 1].mean;
        o.require(std::abs(m - mu) <= std::max(0.05 * mu, 0.01), "mean of Y" + std::to_string(i));
        o.detail << "E Y" << i << "=" << m << " ";
    }
    for (std::size_t i = 1; i <= 4; ++i) {
        const double tv = c.y.laws[i - 1].tv_distance;
        o.require(tv <= 0.03, "TV of Y" + std::to_string(i));
        o.detail << "TV" << i << "=" << tv << " ";
    }
    report(7, "Poisson left-hand-turn census", o, c.seconds, 600.0);
}

void criterion_8(const Campaign& c) {
    Outcome o;
    const std::vector<std::size_t> Ls{2, 3, 7};
    for (std::size_t k = 0; k < Ls.size(); ++k) {
        double harmonic = 0.0;
        for (std::size_t i = 1; i < Ls[k]; ++i)
            harmonic += 1.0 / static_cast<double>(i);
        const auto& r = c.cusps[k];
        o.require(std::abs(r.empirical - std::exp(-harmonic)) <= 0.02, "P(min cusp >= " + std::to_string(Ls[k]) + ")");
        o.require(r.empirical == r.from_lht_census, "cusp probability agrees with the census");
        o.detail << "L=" << Ls[k] << ": " << r.empirical << " vs " << std::exp(-harmonic) << "; ";
    }
    const double comparator = c.cusps[2].comparator;
    o.require(std::abs(comparator - std::exp(-euler_gamma) / 6.0) <= 1e-6, "comparator at L=7");
    o.require(std::abs(comparator - 0.0936) <= 1e-4, "comparator near 0.0936");
    o.detail << "comparator=" << comparator;
    report(8, "large-cusp probability", o, c.seconds, 600.0);
}

IsolationReport run_isolation(unsigned workers, double& seconds) {
    const auto start = Clock::now();
    ExperimentConfig cfg;
    cfg.n = 50;
    cfg.trials = 5000;
    cfg.master_seed = 7;
    cfg.L = 7;
    cfg.isolation = {3, 3, 2};
    cfg.workers = workers;
    const std::vector<std::size_t> ladder{50, 100, 200, 400};
    auto r = estimate_isolation(cfg, ladder);
    seconds = seconds_since(start);
    return r;
}

void criterion_9(const IsolationReport& r, double seconds) {
    Outcome o;
    o.require(r.q_trend_consistent, "Q decreases within confidence");
    o.require(r.certificate_trend_consistent, "certificate frequency increases within confidence");
    for (const auto& row : r.rows)
        o.detail << "n=" << row.n << " Q=" << row.q << " cert=" << row.certificate << "; ";
    report(9, "isolation trends", o, seconds, 600.0);
}

void criterion_10() {
    const auto start = Clock::now();
    Outcome o;
    std::size_t above = 0, sandwich_fail = 0, oracle_fail = 0;
    for (std::size_t t = 0; t < 100; ++t) {
        const RibbonGraph g = sample_pairing(8, {1010, t});
        const auto h = cheeger_exact(g);
        if (!h.exact) {
            o.require(false, "exact Cheeger constant computed");
            continue;
        }
        const auto ref = oracle::cheeger_by_subsets(g);
        if (h.exact->num * ref.size != ref.cut * h.exact->den)
            ++oracle_fail;
        const double value = h.exact->value();
        if (value > bollobas_threshold)
            ++above;
        const auto bounds = cheeger_bounds(g);
        if (!(bounds.lower <= value + 1e-9 && value <= bounds.upper + 1e-9))
            ++sandwich_fail;
    }
    o.require(above >= 90, "at least 90% above 2/11");
    o.require(sandwich_fail == 0, "spectral sandwich on every instance");
    o.require(oracle_fail == 0, "exact value matches the subset oracle");
    const auto k4 = cheeger_exact(graphs::k4_planar()).exact;
    const auto theta = cheeger_exact(graphs::theta_one_face()).exact;
    const auto cube = cheeger_exact(graphs::cube_planar()).exact;
    o.require(k4->num == 2 && k4->den == 1, "K4 has h = 2");
    o.require(theta->num == 3 && theta->den == 1, "theta has h = 3");
    o.require(cube->num == 1 && cube->den == 1, "cube has h = 1");
    o.detail << "above=" << above << "/100, sandwich failures " << sandwich_fail << ", oracle mismatches "
             << oracle_fail;
    report(10, "Cheeger constants", o, seconds_since(start), 0.0);
}

std::string campaign_bytes(const Campaign& c) {
    std::string out = to_json(c.x).dump() + to_json(c.y).dump() + census_reports_csv(c.x, c.y);
    for (const auto& r : c.cusps)
        out += to_json(r).dump() + cusp_csv(r);
    return out;
}

void criterion_11(const Campaign& serial, const IsolationReport& serial_iso) {
    const auto start = Clock::now();
    Outcome o;
    const Campaign parallel = run_campaign(4);
    double iso_seconds = 0.0;
    const auto parallel_iso = run_isolation(4, iso_seconds);
    o.require(campaign_bytes(serial) == campaign_bytes(parallel), "census and cusp reports identical");
    o.require(to_json(serial_iso).dump() == to_json(parallel_iso).dump() &&
                  isolation_csv(serial_iso) == isolation_csv(parallel_iso),
              "isolation report identical");
    o.detail << "workers 1 vs 4";
    report(11, "determinism across worker counts", o, seconds_since(start), 0.0);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    const Campaign campaign = run_campaign(1);
    criterion_6(campaign);
    criterion_7(campaign);
    criterion_8(campaign);
    double iso_seconds = 0.0;
    const auto iso = run_isolation(1, iso_seconds);
    criterion_9(iso, iso_seconds);
    criterion_10();
    criterion_11(campaign, iso);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
