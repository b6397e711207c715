#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vat/metrics.hpp"
#include "vat/spectral.hpp"
#include "vat/verifier.hpp"

namespace vatcli {

using nlohmann::json;

// x rounded to 12 significant digits.
double decimal12(double x);
std::string format12(double x);

// RFC 4180 quoting for cells containing a comma, quote or newline.
std::string csv_field(const std::string& text);

json to_json(const vat::Fraction& f);
json to_json(const vat::VertexSet& s);
json to_json(const vat::Quantity& q);
json to_json(const vat::TheoremReport& r);
json to_json(const vat::SuiteSummary& s);

// Column order of the verification CSV.
inline constexpr const char* kReportCsvHeader =
    "graph_id,n,m,d,theorem,lhs_num,lhs_den,lhs_real,rhs_num,rhs_den,rhs_real,holds,strict_holds,slack,witness";

std::string csv_row(const vat::TheoremReport& r);

void write_reports_json(std::ostream& out, const vat::SuiteResult& result);
void write_reports_csv(std::ostream& out, const vat::SuiteResult& result);

// Every metric computed for one graph by `vatctl metrics`.
struct MetricsRecord {
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    std::optional<int> d;
    std::optional<vat::MetricResult> vat;
    std::optional<vat::MetricResult> conductance;
    std::optional<vat::SpectralResult> spectrum;
    std::optional<vat::SweepResult> sweep;
    std::optional<vat::AlphaBeta> alpha_beta;
    std::optional<vat::WeightedValue> alpha_beta_vat;
    std::optional<vat::WeightedValue> weighted_vat;
};

inline constexpr const char* kMetricsCsvHeader = "graph_id,n,m,d,metric,num,den,real,witness";

json to_json(const MetricsRecord& r);
void write_metrics_json(std::ostream& out, const MetricsRecord& r);
void write_metrics_csv(std::ostream& out, const MetricsRecord& r);

} // namespace vatcli
