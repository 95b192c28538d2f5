#ifndef RSURF_REPORT_IO_HPP
#define RSURF_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "rsurf/expansion.hpp"
#include "rsurf/experiments.hpp"
#include "rsurf/geodesics.hpp"
#include "rsurf/topology.hpp"

namespace rsurf {

using ordered_json = nlohmann::ordered_json;

inline constexpr int report_format_version = 1;

/// Shortest decimal that round-trips; locale independent.
std::string format_double(double x);

ordered_json to_json(const SurfaceSummary& s);
ordered_json to_json(const CheegerResult& r);
ordered_json to_json(const ThresholdCertificate& c);
ordered_json to_json(const SystoleSpectrum& s);
ordered_json to_json(const CycleCensus& c);
ordered_json to_json(const ExperimentConfig& cfg);
ordered_json to_json(const PoissonFitReport& r);
ordered_json to_json(const CuspProbabilityReport& r);
ordered_json to_json(const IsolationReport& r);

/// "# key=value" lines with format_version and every config field.
std::string csv_preamble(const ExperimentConfig& cfg);

/// kind,length,count with kind X (cycle subgraphs) or Y (left-hand-turn cycles).
std::string census_csv(const CycleCensus& c);

/// cycle_id,combinatorial_length,trace_digits,geodesic_length, one row per geodesic.
std::string spectrum_csv(const SystoleSpectrum& s);

/// One row per histogram cell of every law in every report:
/// variable,i,count,trials,frequency,poisson_pmf.
std::string census_reports_csv(const PoissonFitReport& x, const PoissonFitReport& y);

/// One row per ladder entry.
std::string isolation_csv(const IsolationReport& r);

/// L,trials,successes,empirical,half_width,target,comparator,from_lht_census.
std::string cusp_csv(const CuspProbabilityReport& r);

} // namespace rsurf

#endif // RSURF_REPORT_IO_HPP
