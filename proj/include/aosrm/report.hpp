#pragma once

#include "aosrm/metrics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace aosrm {

enum class OutputFormat { Text, Csv, Machine };

struct ComparisonTable {
    std::vector<std::pair<std::string, MetricsReport>> rows; // command-line order
};

struct RenderOptions {
    bool na_as_zero = false; // render NA cells as 0.0 instead
};

/// Cell text for one metric under the render options.
std::string metric_cell(const MetricValue& value, const RenderOptions& options);

std::string render_text(const MetricsReport& report, const RenderOptions& options);
std::string render_compare_text(const ComparisonTable& table, const RenderOptions& options);

/// Header `version,AdIF,PIF,AttIF,AIF,CMIF,CIF`; cells equal metric_cell
/// output exactly.
std::string render_csv(const ComparisonTable& table, const RenderOptions& options);

/// Self-describing key/value document with exact rationals ("num/den"), the
/// tally, per-type DIT/NOC rows, violations and warnings. Exact values are
/// emitted regardless of na_as_zero so the report stays self-verifying.
std::string render_machine(const MetricsReport& report, const RenderOptions& options);
std::string render_compare_machine(const ComparisonTable& table, const RenderOptions& options);

/// Grouped-bar-chart data: one `version,metric,value-or-null` record per
/// line, six records per version, NA emitted as null (never omitted).
std::string chart_records(const ComparisonTable& table, const RenderOptions& options);

} // namespace aosrm
