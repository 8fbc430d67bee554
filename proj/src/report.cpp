#include "aosrm/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace aosrm {

namespace {

std::string exact_text(const MetricValue& v) {
    if (!v.defined) return "NA";
    return std::to_string(v.num) + "/" + std::to_string(v.den);
}

} // namespace

std::string metric_cell(const MetricValue& value, const RenderOptions& options) {
    if (!value.defined && options.na_as_zero) return "0.0";
    return format_value(value);
}

std::string render_text(const MetricsReport& report, const RenderOptions& options) {
    std::ostringstream out;
    out << "version: " << report.version_label << "\n";
    out << "metrics:\n";
    std::vector<MetricValue> values = metric_values(report.metrics);
    for (size_t i = 0; i < values.size(); ++i) {
        out << "  " << std::left << std::setw(6) << kMetricNames[i] << "= "
            << std::setw(6) << metric_cell(values[i], options) << " ["
            << exact_text(values[i]) << "]\n";
    }
    out << "tally:";
    for (const auto& [symbol, count] : tally_counts(report.tally)) {
        out << " " << symbol << "=" << count;
    }
    out << "\n";
    out << "types:\n";
    for (const TypeRow& row : report.per_type) {
        out << "  " << row.name << " " << type_kind_name(row.kind) << " dit=" << row.dit
            << " noc=" << row.noc << "\n";
    }
    if (!report.violations.empty()) {
        out << "violations:\n";
        for (const Violation& v : report.violations) {
            out << "  " << violation_kind_name(v.kind) << " " << v.subject << ": "
                << v.detail << "\n";
        }
    }
    if (!report.warnings.empty()) {
        out << "warnings:\n";
        for (const std::string& w : report.warnings) out << "  " << w << "\n";
    }
    return out.str();
}

std::string render_compare_text(const ComparisonTable& table, const RenderOptions& options) {
    size_t label_width = 7; // "version"
    for (const auto& [label, report] : table.rows) {
        label_width = std::max(label_width, label.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(label_width + 2)) << "version";
    for (const char* name : kMetricNames) out << std::setw(7) << name;
    out << "\n";
    for (const auto& [label, report] : table.rows) {
        out << std::left << std::setw(static_cast<int>(label_width + 2)) << label;
        for (const MetricValue& v : metric_values(report.metrics)) {
            out << std::setw(7) << metric_cell(v, options);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const ComparisonTable& table, const RenderOptions& options) {
    std::ostringstream out;
    out << "version,AdIF,PIF,AttIF,AIF,CMIF,CIF\n";
    for (const auto& [label, report] : table.rows) {
        out << label;
        for (const MetricValue& v : metric_values(report.metrics)) {
            out << "," << metric_cell(v, options);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_machine(const MetricsReport& report, const RenderOptions& options) {
    std::ostringstream out;
    out << "aosrm-machine-report v1\n";
    out << "version=" << report.version_label << "\n";
    out << "[tally]\n";
    for (const auto& [symbol, count] : tally_counts(report.tally)) {
        out << symbol << "=" << count << "\n";
    }
    out << "[metrics]\n";
    std::vector<MetricValue> values = metric_values(report.metrics);
    for (size_t i = 0; i < values.size(); ++i) {
        out << kMetricNames[i] << ".exact=" << exact_text(values[i]) << "\n";
        out << kMetricNames[i] << ".value=" << metric_cell(values[i], options) << "\n";
    }
    out << "[types]\n";
    for (const TypeRow& row : report.per_type) {
        out << row.name << "|" << type_kind_name(row.kind) << "|dit=" << row.dit
            << "|noc=" << row.noc << "\n";
    }
    out << "[violations]\n";
    for (const Violation& v : report.violations) {
        out << violation_kind_name(v.kind) << "|" << v.subject << "|" << v.detail << "\n";
    }
    out << "[warnings]\n";
    for (const std::string& w : report.warnings) out << w << "\n";
    out << "[end]\n";
    return out.str();
}

std::string render_compare_machine(const ComparisonTable& table,
                                   const RenderOptions& options) {
    std::string out;
    for (const auto& [label, report] : table.rows) {
        (void)label;
        out += render_machine(report, options);
    }
    return out;
}

std::string chart_records(const ComparisonTable& table, const RenderOptions& options) {
    std::ostringstream out;
    for (const auto& [label, report] : table.rows) {
        std::vector<MetricValue> values = metric_values(report.metrics);
        for (size_t i = 0; i < values.size(); ++i) {
            out << label << "," << kMetricNames[i] << ",";
            if (!values[i].defined && !options.na_as_zero) out << "null";
            else out << metric_cell(values[i], options);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace aosrm
