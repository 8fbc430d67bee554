#pragma once

#include "aosrm/detect.hpp"
#include "aosrm/metrics.hpp"
#include "aosrm/parse.hpp"
#include "aosrm/report.hpp"
#include "aosrm/scan.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aosrm {

struct AnalyzeRequest {
    std::filesystem::path root;
    std::string label; // defaults to the root directory name
    LangFilter lang = LangFilter::Auto;
    std::optional<std::filesystem::path> log_path;
    std::optional<std::filesystem::path> chart_path;
    OutputFormat format = OutputFormat::Text;
    DetectorConfig detectors;
    bool na_as_zero = false;
    bool verify = false;
};

struct CompareRequest {
    std::vector<std::pair<std::string, std::filesystem::path>> roots; // (label, path)
    LangFilter lang = LangFilter::Auto;
    std::optional<std::filesystem::path> chart_path;
    OutputFormat format = OutputFormat::Text;
    DetectorConfig detectors;
    bool na_as_zero = false;
    bool verify = false;
};

/// Intermediate pipeline products; tests and the signature log consume the
/// units and marks alongside the final report.
struct AnalysisData {
    ScanResult scan;
    std::vector<SourceUnit> units;
    InheritanceGraph graph;
    RedefinitionMarks marks;
    MetricsReport report;
};

/// Runs scan -> parse -> graph -> detect -> tally -> metrics over one version
/// directory, writing the three-section run log when log_path is given.
/// Throws Error on fatal conditions (missing root, or no file parsed while
/// files exist); per-file parse failures degrade to warnings.
AnalysisData analyze_tree(const std::filesystem::path& root, const std::string& label,
                          LangFilter lang, const DetectorConfig& detectors,
                          const std::optional<std::filesystem::path>& log_path);

/// exit 0 clean, 2 when violations were found (report still produced and
/// printed), 1 fatal.
int analyze_command(const AnalyzeRequest& request, std::ostream& out, std::ostream& err);

/// One row per root in command-line order; any fatal root suppresses all
/// output and exits 1.
int compare_command(const CompareRequest& request, std::ostream& out, std::ostream& err);

} // namespace aosrm
