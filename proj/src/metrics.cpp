#include "aosrm/metrics.hpp"

#include "aosrm/error.hpp"

namespace aosrm {

MetricValue ratio(long long num, long long den) {
    if (num > den) {
        throw Error(ErrorKind::InvalidTally,
                    "redefined count " + std::to_string(num) +
                        " exceeds available count " + std::to_string(den));
    }
    MetricValue v;
    if (den == 0) return v; // NA
    v.defined = true;
    v.num = num;
    v.den = den;
    return v;
}

SixMetrics compute_metrics(const RedefinitionTally& t) {
    SixMetrics m;
    m.adif = ratio(t.A_r, t.A_a);
    m.pif = ratio(t.P_r, t.P_a);
    m.attif = ratio(t.Att_r, t.Att_a);
    m.aif = ratio(t.TCA, t.TAA);
    m.cmif = ratio(t.M_r, t.M_a);
    m.cif = ratio(t.TEC, t.TAC);
    return m;
}

std::string format_value(const MetricValue& value) {
    if (!value.defined) return "NA";
    // Exact integer arithmetic: truncate value*1000 toward zero, then drop
    // trailing zeros. 2/3 -> "0.666", 1/4 -> "0.25", 1/1 -> "1.0".
    long long thousandths = value.num * 1000 / value.den;
    long long whole = thousandths / 1000;
    long long frac = thousandths % 1000;
    char digits[4];
    digits[0] = static_cast<char>('0' + frac / 100);
    digits[1] = static_cast<char>('0' + frac / 10 % 10);
    digits[2] = static_cast<char>('0' + frac % 10);
    digits[3] = '\0';
    std::string frac_str(digits);
    while (frac_str.size() > 1 && frac_str.back() == '0') frac_str.pop_back();
    return std::to_string(whole) + "." + frac_str;
}

std::vector<TypeRow> per_type_inheritance(const InheritanceGraph& graph) {
    std::vector<TypeRow> rows;
    rows.reserve(graph.nodes.size());
    for (const auto& [name, decl] : graph.nodes) {
        TypeRow row;
        row.name = name;
        row.kind = decl->kind;
        row.dit = dit(graph, name);
        row.noc = noc(graph, name);
        rows.push_back(std::move(row));
    }
    return rows; // nodes map is already sorted by qualified name
}

std::vector<MetricValue> metric_values(const SixMetrics& m) {
    return {m.adif, m.pif, m.attif, m.aif, m.cmif, m.cif};
}

std::vector<std::pair<std::string, long long>> tally_counts(const RedefinitionTally& t) {
    return {
        {"A_r", t.A_r},     {"A_a", t.A_a},   {"P_r", t.P_r},   {"P_a", t.P_a},
        {"Att_r", t.Att_r}, {"Att_a", t.Att_a}, {"M_r", t.M_r}, {"M_a", t.M_a},
        {"TCA", t.TCA},     {"TAA", t.TAA},   {"TEC", t.TEC},   {"TAC", t.TAC},
    };
}

bool verify_report(const MetricsReport& report) {
    return compute_metrics(report.tally) == report.metrics;
}

void append_metrics_section(RunLog& log, const MetricsReport& report) {
    log.write_line("[METRICS]");
    std::vector<MetricValue> values = metric_values(report.metrics);
    for (size_t i = 0; i < values.size(); ++i) {
        log.write_line(std::string(kMetricNames[i]) + "=" + format_value(values[i]));
    }
    for (const auto& [symbol, count] : tally_counts(report.tally)) {
        log.write_line("COUNT." + symbol + "=" + std::to_string(count));
    }
    log.flush();
}

} // namespace aosrm
