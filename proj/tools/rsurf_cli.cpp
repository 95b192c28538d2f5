// rsurf: sample random cubic ribbon graphs, analyze the surfaces they build,
// and run the Monte Carlo campaigns.
//
// Exit codes: 0 success, 1 data error (bad input file, unwritable output),
// 2 usage error (unknown flag, invalid value).

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsurf/expansion.hpp"
#include "rsurf/experiments.hpp"
#include "rsurf/geodesics.hpp"
#include "rsurf/graph_io.hpp"
#include "rsurf/report_io.hpp"
#include "rsurf/sampler.hpp"
#include "rsurf/topology.hpp"

using namespace rsurf;

namespace {

constexpr int exit_data_error = 1;
constexpr int exit_usage_error = 2;

/// Flag combinations that parse but cannot be honoured.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
    if (!out)
        throw std::runtime_error("failed writing " + out_path);
}

std::string summary_line(const RibbonGraph& g) {
    const auto s = surface_summary(g);
    std::ostringstream os;
    os << "n=" << g.n() << " genus=" << s.genus << " cusps=" << s.cusps << " min_cusp_length=" << s.min_cusp_length
       << " components=" << s.components << " simple=" << (s.simple ? "true" : "false")
       << " area=" << format_double(s.area) << '\n';
    return os.str();
}

CheegerResult cheeger_for(const RibbonGraph& g) {
    if (g.vertex_count() <= exhaustive_vertex_limit || connected_components(g).size() > 1)
        return cheeger_exact(g);
    CheegerResult r;
    r.method = CheegerMethod::Spectral;
    r.bounds = cheeger_bounds(g);
    return r;
}

std::string lengths_text(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? " " : "") + std::to_string(xs[k]);
    return out;
}

struct AnalyzeOptions {
    std::string path;
    std::size_t max_cycle_len = 6;
    std::size_t L = 7;
    std::string format = "json";
    std::string out;
};

int cmd_analyze(const AnalyzeOptions& o) {
    const RibbonGraph g = read_graph_file(o.path);
    const auto summary = surface_summary(g);
    const auto census = cycle_census(g, o.max_cycle_len);
    const auto gir = girth(g);
    const auto spectrum = systole_spectrum(g, o.max_cycle_len);
    const auto cheeger = cheeger_for(g);
    const auto threshold = bollobas_threshold_check(g);
    const bool large = has_large_canonical_cusps(g, o.L);

    if (o.format == "json") {
        ordered_json j;
        j["format_version"] = report_format_version;
        j["config"] = ordered_json{{"input", o.path}, {"max_cycle_len", o.max_cycle_len}, {"L", o.L}};
        j["n"] = g.n();
        j["summary"] = to_json(summary);
        j["census"] = to_json(census);
        if (gir)
            j["girth"] = *gir;
        else
            j["girth"] = nullptr;
        j["spectrum"] = to_json(spectrum);
        j["cheeger"] = to_json(cheeger);
        j["threshold"] = to_json(threshold);
        j["large_canonical_cusps"] = large;
        emit(j.dump(2) + "\n", o.out);
        return 0;
    }

    std::ostringstream os;
    os << "format_version: " << report_format_version << '\n';
    os << "input: " << o.path << '\n';
    os << "max_cycle_len: " << o.max_cycle_len << '\n';
    os << "L: " << o.L << '\n';
    os << "n: " << g.n() << '\n';
    os << "genus: " << summary.genus << '\n';
    os << "cusps: " << summary.cusps << '\n';
    os << "cusp_lengths: " << lengths_text(summary.cusp_lengths) << '\n';
    os << "area: " << format_double(summary.area) << '\n';
    os << "components: " << summary.components << '\n';
    os << "simple: " << (summary.simple ? "true" : "false") << '\n';
    os << "girth: " << (gir ? std::to_string(*gir) : std::string("none")) << '\n';
    for (std::size_t i = 1; i <= census.max_len; ++i)
        os << "cycles[" << i << "]: " << census.cycles[i] << " lht_cycles[" << i << "]: " << census.lht[i] << '\n';
    os << "systole: " << (spectrum.minimum ? format_double(*spectrum.minimum) : std::string("none")) << '\n';
    os << "geodesics: " << spectrum.geodesics.size() << '\n';
    if (cheeger.exact) {
        os << "cheeger: " << cheeger.exact->num << '/' << cheeger.exact->den << " ("
           << format_double(cheeger.exact->value()) << ")\n";
        os << "cheeger_witness: " << lengths_text(std::vector<std::size_t>(cheeger.witness.begin(), cheeger.witness.end()))
           << '\n';
    } else {
        os << "cheeger_bounds: [" << format_double(cheeger.bounds->lower) << ", "
           << format_double(cheeger.bounds->upper) << "]\n";
    }
    os << "cheeger_method: " << to_string(cheeger.method) << '\n';
    os << "threshold_verdict: " << to_string(threshold.verdict) << '\n';
    os << "large_canonical_cusps: " << (large ? "true" : "false") << '\n';
    emit(os.str(), o.out);
    return 0;
}

struct CampaignOptions {
    ExperimentConfig cfg;
    std::vector<std::size_t> ladder{50, 100, 200, 400};
    std::string format = "csv";
    std::string out;
};

std::string census_json(const PoissonFitReport& x, const PoissonFitReport& y) {
    ordered_json j;
    j["format_version"] = report_format_version;
    j["config"] = to_json(x.config);
    j["cycles"] = to_json(x);
    j["lht_cycles"] = to_json(y);
    return j.dump(2) + "\n";
}

int cmd_census(const CampaignOptions& o) {
    const auto data = collect_census(o.cfg);
    const auto x = fit_cycle_census(data);
    const auto y = fit_lht_census(data);
    emit(o.format == "json" ? census_json(x, y) : census_reports_csv(x, y), o.out);
    return 0;
}

int cmd_cusps(const CampaignOptions& o) {
    if (o.cfg.L < 2)
        throw UsageError("--L must be at least 2");
    const auto r = estimate_large_cusp_probability(o.cfg);
    emit(o.format == "json" ? to_json(r).dump(2) + "\n" : cusp_csv(r), o.out);
    return 0;
}

int cmd_isolation(const CampaignOptions& o) {
    if (o.ladder.size() < 3)
        throw UsageError("--n-list needs at least three sizes");
    for (std::size_t k = 1; k < o.ladder.size(); ++k)
        if (o.ladder[k] <= o.ladder[k - 1])
            throw UsageError("--n-list must be strictly increasing");
    auto cfg = o.cfg;
    cfg.n = o.ladder.front();
    const auto r = estimate_isolation(cfg, o.ladder);
    emit(o.format == "json" ? to_json(r).dump(2) + "\n" : isolation_csv(r), o.out);
    return 0;
}

void add_campaign_flags(CLI::App* sub, CampaignOptions& o, bool with_n) {
    if (with_n)
        sub->add_option("--n", o.cfg.n, "Graph size (2n vertices)")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--trials", o.cfg.trials, "Number of sampled graphs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", o.cfg.master_seed, "Master seed")->capture_default_str();
    sub->add_option("--workers", o.cfg.workers, "Worker threads; output does not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "Output file (default: standard output)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random Riemann surfaces built from random cubic ribbon graphs"};
    app.require_subcommand(1);

    std::function<int()> action;

    // sample
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::uint64_t sample_trial = 0;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "Draw one random cubic ribbon graph");
    sample->add_option("--n", sample_n, "Graph size (2n vertices)")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_seed, "Master seed")->required();
    sample->add_option("--trial", sample_trial, "Trial index within the seed")->capture_default_str();
    sample->add_option("--out", sample_out, "Graph file to write (default: standard output)");
    sample->callback([&] {
        action = [&] {
            const RibbonGraph g = sample_pairing(sample_n, {sample_seed, sample_trial});
            if (sample_out.empty()) {
                emit(to_json(g) + "\n", "");
                std::cerr << summary_line(g);
            } else {
                write_graph_file(sample_out, g);
                std::cout << summary_line(g);
            }
            return 0;
        };
    });

    // analyze
    AnalyzeOptions analyze_opts;
    auto* analyze = app.add_subcommand("analyze", "Topology, cycles, geodesics and expansion of one graph");
    analyze->add_option("path", analyze_opts.path, "Graph file")->required();
    analyze->add_option("--max-cycle-len", analyze_opts.max_cycle_len, "Longest cycle to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--L", analyze_opts.L, "Cusp length for the large-cusps verdict")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--format", analyze_opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    analyze->add_option("--out", analyze_opts.out, "Output file (default: standard output)");
    analyze->callback([&] { action = [&] { return cmd_analyze(analyze_opts); }; });

    // geodesics
    std::string geo_path, geo_format = "json", geo_out;
    std::size_t geo_max_len = 6;
    auto* geodesics = app.add_subcommand("geodesics", "Closed geodesics up to a combinatorial length");
    geodesics->add_option("path", geo_path, "Graph file")->required();
    geodesics->add_option("--max-len", geo_max_len, "Longest cycle to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    geodesics->add_option("--format", geo_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    geodesics->add_option("--out", geo_out, "Output file (default: standard output)");
    geodesics->callback([&] {
        action = [&] {
            const auto s = systole_spectrum(read_graph_file(geo_path), geo_max_len);
            if (geo_format == "json") {
                ordered_json j;
                j["format_version"] = report_format_version;
                j["config"] = ordered_json{{"input", geo_path}, {"max_len", geo_max_len}};
                j["spectrum"] = to_json(s);
                emit(j.dump(2) + "\n", geo_out);
            } else {
                emit("# format_version=" + std::to_string(report_format_version) + "\n# input=" + geo_path +
                         "\n# max_len=" + std::to_string(geo_max_len) + "\n" + spectrum_csv(s),
                     geo_out);
            }
            return 0;
        };
    });

    // cheeger
    std::string cheeger_path, cheeger_out;
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant: exact when small, spectral bounds otherwise");
    cheeger->add_option("path", cheeger_path, "Graph file")->required();
    cheeger->add_option("--out", cheeger_out, "Output file (default: standard output)");
    cheeger->callback([&] {
        action = [&] {
            const RibbonGraph g = read_graph_file(cheeger_path);
            ordered_json j;
            j["format_version"] = report_format_version;
            j["config"] = ordered_json{{"input", cheeger_path}, {"exhaustive_vertex_limit", exhaustive_vertex_limit}};
            j["cheeger"] = to_json(cheeger_for(g));
            j["spectral_gap"] = spectral_gap(g).gap;
            j["threshold"] = to_json(bollobas_threshold_check(g));
            emit(j.dump(2) + "\n", cheeger_out);
            return 0;
        };
    });

    // census
    CampaignOptions census_opts;
    auto* census = app.add_subcommand("census", "Cycle and left-hand-turn count laws against Poisson targets");
    add_campaign_flags(census, census_opts, true);
    census->add_option("--max-cycle-len", census_opts.cfg.max_cycle_len, "Longest cycle length counted")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    census->callback([&] { action = [&] { return cmd_census(census_opts); }; });

    // cusps
    CampaignOptions cusp_opts;
    auto* cusps = app.add_subcommand("cusps", "Probability that every cusp has length at least L");
    add_campaign_flags(cusps, cusp_opts, true);
    cusps->add_option("--L", cusp_opts.cfg.L, "Minimum cusp length")->check(CLI::PositiveNumber)->capture_default_str();
    cusps->callback([&] { action = [&] { return cmd_cusps(cusp_opts); }; });

    // isolation
    CampaignOptions iso_opts;
    iso_opts.cfg.trials = 5000;
    auto* isolation = app.add_subcommand("isolation", "Trend of nearby short cycles across graph sizes");
    add_campaign_flags(isolation, iso_opts, false);
    isolation->add_option("--n-list", iso_opts.ladder, "Comma-separated increasing graph sizes")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    isolation->add_option("--l1", iso_opts.cfg.isolation.l1, "First cycle length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    isolation->add_option("--l2", iso_opts.cfg.isolation.l2, "Second cycle length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    isolation->add_option("--d", iso_opts.cfg.isolation.d, "Distance bound")->capture_default_str();
    isolation->add_option("--L", iso_opts.cfg.L, "Cusp length for the relaxed certificate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    isolation->callback([&] { action = [&] { return cmd_isolation(iso_opts); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage_error;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const InvalidGraph& e) {
        std::cerr << "invalid graph:\n";
        for (const auto& v : e.violations())
            std::cerr << "  " << v.message << '\n';
        return exit_data_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data_error;
    }
}
