#include "aosrm/analyze.hpp"

#include "aosrm/error.hpp"
#include "aosrm/run_log.hpp"
#include "aosrm/signatures.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace aosrm {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorKind::IoFailure, "write failed: " + path.string());
}

} // namespace

AnalysisData analyze_tree(const std::filesystem::path& root, const std::string& label,
                          LangFilter lang, const DetectorConfig& detectors,
                          const std::optional<std::filesystem::path>& log_path) {
    AnalysisData data;
    data.scan = scan_tree(root, lang);

    RunLog log;
    if (log_path) log = open_run_log(*log_path, data.scan);

    std::vector<std::string> warnings;
    size_t failed = 0;
    for (const SourceFile& file : data.scan.files) {
        try {
            std::string text = read_file(file.absolute_path);
            data.units.push_back(parse_unit(tokenize(text), file, warnings));
        } catch (const Error& e) {
            warnings.push_back(file.absolute_path.string() +
                               ": file skipped: " + e.what());
            ++failed;
        }
    }
    if (!data.scan.files.empty() && data.units.empty()) {
        throw Error(ErrorKind::ParseFailure,
                    "no file under " + root.string() + " could be parsed (" +
                        std::to_string(failed) + " failed)");
    }

    BuildResult build = build_graph(data.units);
    data.graph = std::move(build.graph);

    DetectionResult detection = detect_all(data.graph, detectors);
    data.marks = std::move(detection.marks);

    data.report.version_label = label;
    data.report.tally = tally(data.graph, data.marks);
    data.report.metrics = compute_metrics(data.report.tally);
    data.report.per_type = per_type_inheritance(data.graph);
    data.report.violations = std::move(build.violations);
    data.report.violations.insert(data.report.violations.end(),
                                  detection.violations.begin(),
                                  detection.violations.end());
    data.report.warnings = std::move(warnings);
    data.report.warnings.insert(data.report.warnings.end(), build.warnings.begin(),
                                build.warnings.end());

    if (log.is_open()) {
        append_signature_section(log, data.units, data.marks);
        append_metrics_section(log, data.report);
    }
    return data;
}

int analyze_command(const AnalyzeRequest& request, std::ostream& out, std::ostream& err) {
    std::string label = request.label.empty()
                            ? request.root.filename().string()
                            : request.label;
    AnalysisData data;
    try {
        data = analyze_tree(request.root, label, request.lang, request.detectors,
                            request.log_path);
    } catch (const Error& e) {
        err << "aosrm: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }

    RenderOptions render{request.na_as_zero};
    try {
        switch (request.format) {
        case OutputFormat::Text:
            out << render_text(data.report, render);
            break;
        case OutputFormat::Csv: {
            ComparisonTable table;
            table.rows.emplace_back(label, data.report);
            out << render_csv(table, render);
            break;
        }
        case OutputFormat::Machine:
            out << render_machine(data.report, render);
            break;
        }
        if (request.chart_path) {
            ComparisonTable table;
            table.rows.emplace_back(label, data.report);
            write_file(*request.chart_path, chart_records(table, render));
        }
    } catch (const Error& e) {
        err << "aosrm: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }

    if (request.verify && !verify_report(data.report)) {
        err << "aosrm: verification failed: metrics do not reproduce from the tally\n";
        return 1;
    }
    return data.report.violations.empty() ? 0 : 2;
}

int compare_command(const CompareRequest& request, std::ostream& out, std::ostream& err) {
    ComparisonTable table;
    bool violations = false;
    for (const auto& [label, root] : request.roots) {
        try {
            AnalysisData data = analyze_tree(root, label, request.lang,
                                             request.detectors, std::nullopt);
            violations = violations || !data.report.violations.empty();
            table.rows.emplace_back(label, std::move(data.report));
        } catch (const Error& e) {
            err << "aosrm: " << label << ": " << error_kind_name(e.kind()) << ": "
                << e.what() << "\n";
            return 1; // partial results suppressed
        }
    }

    RenderOptions render{request.na_as_zero};
    try {
        switch (request.format) {
        case OutputFormat::Text:
            out << render_compare_text(table, render);
            break;
        case OutputFormat::Csv:
            out << render_csv(table, render);
            break;
        case OutputFormat::Machine:
            out << render_compare_machine(table, render);
            break;
        }
        if (request.chart_path) {
            write_file(*request.chart_path, chart_records(table, render));
        }
    } catch (const Error& e) {
        err << "aosrm: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }

    if (request.verify) {
        for (const auto& [label, report] : table.rows) {
            if (!verify_report(report)) {
                err << "aosrm: " << label
                    << ": verification failed: metrics do not reproduce from the tally\n";
                return 1;
            }
        }
    }
    return violations ? 2 : 0;
}

} // namespace aosrm
