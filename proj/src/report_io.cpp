#include "rsurf/report_io.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace rsurf {

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

namespace {

ordered_json interval_json(const Interval& i) {
    return ordered_json{{"lower", i.lower}, {"upper", i.upper}};
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

ordered_json entry_json(const SpectrumEntry& e) {
    ordered_json j;
    j["cycle"] = e.cycle;
    j["combinatorial_length"] = e.combinatorial_length;
    j["trace"] = e.trace.str();
    j["geodesic_length"] = e.length;
    return j;
}

} // namespace

ordered_json to_json(const SurfaceSummary& s) {
    ordered_json j;
    j["genus"] = s.genus;
    j["cusps"] = s.cusps;
    j["cusp_lengths"] = s.cusp_lengths;
    j["area"] = s.area;
    j["min_cusp_length"] = s.min_cusp_length;
    j["components"] = s.components;
    j["simple"] = s.simple;
    ordered_json comps = ordered_json::array();
    for (const auto& c : s.per_component) {
        comps.push_back(ordered_json{{"vertices", c.vertices},
                                     {"genus", c.genus},
                                     {"cusps", c.cusps},
                                     {"cusp_lengths", c.cusp_lengths}});
    }
    j["per_component"] = std::move(comps);
    return j;
}

ordered_json to_json(const CheegerResult& r) {
    ordered_json j;
    if (r.exact)
        j["value"] = rational_json(*r.exact);
    if (r.bounds)
        j["interval"] = interval_json(*r.bounds);
    j["witness"] = r.witness;
    j["method"] = std::string(to_string(r.method));
    return j;
}

ordered_json to_json(const ThresholdCertificate& c) {
    ordered_json j;
    j["threshold"] = bollobas_threshold;
    j["verdict"] = std::string(to_string(c.verdict));
    j["method"] = std::string(to_string(c.method));
    if (c.exact)
        j["value"] = rational_json(*c.exact);
    if (c.bounds)
        j["interval"] = interval_json(*c.bounds);
    return j;
}

ordered_json to_json(const SystoleSpectrum& s) {
    ordered_json j;
    j["max_len"] = s.max_len;
    if (s.minimum)
        j["minimum"] = *s.minimum;
    else
        j["minimum"] = nullptr;
    ordered_json geo = ordered_json::array();
    for (const auto& e : s.geodesics)
        geo.push_back(entry_json(e));
    ordered_json cusp = ordered_json::array();
    for (const auto& e : s.cusp_loops)
        cusp.push_back(entry_json(e));
    j["geodesics"] = std::move(geo);
    j["cusp_loops"] = std::move(cusp);
    return j;
}

ordered_json to_json(const CycleCensus& c) {
    ordered_json j;
    j["max_len"] = c.max_len;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 1; i <= c.max_len; ++i)
        rows.push_back(ordered_json{{"length", i}, {"cycles", c.cycles[i]}, {"lht_cycles", c.lht[i]}});
    j["counts"] = std::move(rows);
    return j;
}

ordered_json to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["max_cycle_len"] = cfg.max_cycle_len;
    j["L"] = cfg.L;
    j["l1"] = cfg.isolation.l1;
    j["l2"] = cfg.isolation.l2;
    j["d"] = cfg.isolation.d;
    return j;
}

ordered_json to_json(const PoissonFitReport& r) {
    ordered_json j;
    j["format_version"] = report_format_version;
    j["config"] = to_json(r.config);
    j["variable"] = r.variable;
    ordered_json laws = ordered_json::array();
    for (const auto& law : r.laws) {
        ordered_json l;
        l["i"] = law.index;
        l["mean"] = law.mean;
        l["target_mean"] = law.target_mean;
        l["tv_distance"] = law.tv_distance;
        l["histogram"] = law.histogram;
        l["frequencies"] = law.frequencies;
        laws.push_back(std::move(l));
    }
    j["laws"] = std::move(laws);
    if (r.simple_fraction)
        j["simple_fraction"] = *r.simple_fraction;
    return j;
}

ordered_json to_json(const CuspProbabilityReport& r) {
    ordered_json j;
    j["format_version"] = report_format_version;
    j["config"] = to_json(r.config);
    j["L"] = r.L;
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["empirical"] = r.empirical;
    j["half_width"] = r.half_width;
    j["target"] = r.target;
    j["comparator"] = r.comparator;
    j["from_lht_census"] = r.from_lht_census;
    return j;
}

ordered_json to_json(const IsolationReport& r) {
    ordered_json j;
    j["format_version"] = report_format_version;
    j["config"] = to_json(r.config);
    j["ladder"] = r.ladder;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json x;
        x["n"] = row.n;
        x["trials"] = row.trials;
        x["close_pairs"] = row.close_pairs;
        x["q"] = row.q;
        x["q_half_width"] = row.q_half_width;
        x["certified"] = row.certified;
        x["certificate"] = row.certificate;
        x["certificate_half_width"] = row.certificate_half_width;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["q_trend_consistent"] = r.q_trend_consistent;
    j["certificate_trend_consistent"] = r.certificate_trend_consistent;
    return j;
}

std::string csv_preamble(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "# format_version=" << report_format_version << '\n';
    const auto fields = to_json(cfg);
    for (const auto& [key, value] : fields.items())
        os << "# " << key << '=' << value.dump() << '\n';
    return os.str();
}

std::string census_csv(const CycleCensus& c) {
    std::ostringstream os;
    os << "kind,length,count\n";
    for (std::size_t i = 1; i <= c.max_len; ++i)
        os << "X," << i << ',' << c.cycles[i] << '\n';
    for (std::size_t i = 1; i <= c.max_len; ++i)
        os << "Y," << i << ',' << c.lht[i] << '\n';
    return os.str();
}

std::string spectrum_csv(const SystoleSpectrum& s) {
    std::ostringstream os;
    os << "cycle_id,combinatorial_length,trace_digits,geodesic_length\n";
    for (std::size_t k = 0; k < s.geodesics.size(); ++k) {
        const auto& e = s.geodesics[k];
        os << k << ',' << e.combinatorial_length << ',' << e.trace.str() << ',' << format_double(e.length) << '\n';
    }
    return os.str();
}

std::string census_reports_csv(const PoissonFitReport& x, const PoissonFitReport& y) {
    std::ostringstream os;
    os << csv_preamble(x.config);
    if (x.simple_fraction)
        os << "# simple_fraction=" << format_double(*x.simple_fraction) << '\n';
    os << "variable,i,count,trials,frequency,poisson_pmf\n";
    for (const auto* report : {&x, &y}) {
        for (const auto& law : report->laws) {
            for (std::size_t k = 0; k < law.histogram.size(); ++k) {
                os << report->variable << ',' << law.index << ',' << k << ',' << law.histogram[k] << ','
                   << format_double(law.frequencies[k]) << ',' << format_double(poisson_pmf(law.target_mean, k))
                   << '\n';
            }
        }
    }
    return os.str();
}

std::string isolation_csv(const IsolationReport& r) {
    std::ostringstream os;
    os << csv_preamble(r.config);
    os << "n,trials,close_pairs,q,q_half_width,certified,certificate,certificate_half_width\n";
    for (const auto& row : r.rows) {
        os << row.n << ',' << row.trials << ',' << row.close_pairs << ',' << format_double(row.q) << ','
           << format_double(row.q_half_width) << ',' << row.certified << ',' << format_double(row.certificate)
           << ',' << format_double(row.certificate_half_width) << '\n';
    }
    return os.str();
}

std::string cusp_csv(const CuspProbabilityReport& r) {
    std::ostringstream os;
    os << csv_preamble(r.config);
    os << "L,trials,successes,empirical,half_width,target,comparator,from_lht_census\n";
    os << r.L << ',' << r.trials << ',' << r.successes << ',' << format_double(r.empirical) << ','
       << format_double(r.half_width) << ',' << format_double(r.target) << ',' << format_double(r.comparator)
       << ',' << format_double(r.from_lht_census) << '\n';
    return os.str();
}

} // namespace rsurf
