#pragma once

#include "aosrm/detect.hpp"
#include "aosrm/model.hpp"
#include "aosrm/run_log.hpp"

#include <string>
#include <vector>

namespace aosrm {

/// A metric is NA exactly when its denominator is zero; otherwise it is the
/// exact rational numerator/denominator, kept unreduced so machine output
/// mirrors the tally.
struct MetricValue {
    bool defined = false;
    long long num = 0;
    long long den = 0;

    bool operator==(const MetricValue&) const = default;
};

/// Throws Error{InvalidTally} when num > den (the subset property was broken
/// upstream).
MetricValue ratio(long long num, long long den);

struct SixMetrics {
    MetricValue adif, pif, attif, aif, cmif, cif;

    bool operator==(const SixMetrics&) const = default;
};

/// AdIF = A_r/A_a, PIF = P_r/P_a, AttIF = Att_r/Att_a, AIF = TCA/TAA,
/// CMIF = M_r/M_a, CIF = TEC/TAC.
SixMetrics compute_metrics(const RedefinitionTally& tally);

/// Display form: "NA" when undefined; otherwise the decimal expansion
/// truncated (never rounded) to three fractional digits with trailing zeros
/// dropped, always keeping one fractional digit ("0.0", "0.5", "0.666",
/// "1.0").
std::string format_value(const MetricValue& value);

struct TypeRow {
    std::string name;
    TypeKind kind;
    int dit = 0;
    int noc = 0;
};

/// One row per node, sorted by qualified name.
std::vector<TypeRow> per_type_inheritance(const InheritanceGraph& graph);

struct MetricsReport {
    std::string version_label;
    SixMetrics metrics;
    RedefinitionTally tally;
    std::vector<TypeRow> per_type;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
};

/// Recomputes every metric from the embedded tally and compares exactly;
/// reports are self-verifying by construction, so a mismatch means a bug.
bool verify_report(const MetricsReport& report);

/// Appends the [METRICS] section: six NAME=value lines in AdIF, PIF, AttIF,
/// AIF, CMIF, CIF order followed by the twelve COUNT.* lines.
void append_metrics_section(RunLog& log, const MetricsReport& report);

inline const char* const kMetricNames[6] = {"AdIF", "PIF", "AttIF",
                                            "AIF",  "CMIF", "CIF"};

/// Metric values in canonical order.
std::vector<MetricValue> metric_values(const SixMetrics& metrics);

/// Tally counters in canonical order, paired with their symbol names.
std::vector<std::pair<std::string, long long>> tally_counts(const RedefinitionTally& tally);

} // namespace aosrm
