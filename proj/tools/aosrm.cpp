// aosrm — inheritance-reuse metrics for Java/AspectJ source trees.
//
//   aosrm analyze <dir> [--log run.log] [--format text|csv|machine] ...
//   aosrm compare <dir>... [--labels a,b,...] [--format ...] [--chart f] ...
//
// Exit codes: 0 clean, 2 legality violations found (metrics still produced),
// 1 fatal error.

#include "CLI11.hpp"

#include "aosrm/analyze.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

aosrm::LangFilter parse_lang(const std::string& value) {
    if (value == "java") return aosrm::LangFilter::JavaOnly;
    if (value == "aspectj") return aosrm::LangFilter::AspectJOnly;
    return aosrm::LangFilter::Auto;
}

aosrm::OutputFormat parse_format(const std::string& value) {
    if (value == "csv") return aosrm::OutputFormat::Csv;
    if (value == "machine") return aosrm::OutputFormat::Machine;
    return aosrm::OutputFormat::Text;
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) labels.push_back(item);
    return labels;
}

struct SharedFlags {
    std::string lang = "auto";
    std::string format = "text";
    std::string chart;
    std::string tec = "subclass";
    bool na_as_zero = false;
    bool no_clause_a = false;
    bool no_clause_b = false;
    bool verify = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--lang", lang, "Language filter: auto|java|aspectj")
            ->check(CLI::IsMember({"auto", "java", "aspectj"}));
        cmd->add_option("--format", format, "Output format: text|csv|machine")
            ->check(CLI::IsMember({"text", "csv", "machine"}));
        cmd->add_option("--chart", chart, "Write chart data records to this file");
        cmd->add_option("--tec-semantics", tec,
                        "Extended-class counting: subclass|superclass")
            ->check(CLI::IsMember({"subclass", "superclass"}));
        cmd->add_flag("--na-as-zero", na_as_zero, "Render NA metric cells as 0.0");
        cmd->add_flag("--no-advice-clause-a", no_clause_a,
                      "Ignore advice bound to inherited pointcuts");
        cmd->add_flag("--no-advice-clause-b", no_clause_b,
                      "Ignore advice calling overriding methods");
        cmd->add_flag("--verify", verify,
                      "Recompute metrics from the tally and fail on mismatch");
    }

    aosrm::DetectorConfig detectors() const {
        aosrm::DetectorConfig config;
        config.advice_clause_a = !no_clause_a;
        config.advice_clause_b = !no_clause_b;
        config.tec_semantics = tec == "superclass" ? aosrm::TecSemantics::Superclass
                                                   : aosrm::TecSemantics::Subclass;
        return config;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AOSRM: aspect-oriented software reusability measurement"};
    app.require_subcommand(1);

    std::string analyze_root;
    std::string analyze_log;
    std::string analyze_label;
    SharedFlags analyze_flags;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one version directory");
    analyze->add_option("root", analyze_root, "Directory with .java/.aj sources")
        ->required();
    analyze->add_option("--log", analyze_log, "Write the three-section run log here");
    analyze->add_option("--label", analyze_label,
                        "Version label (defaults to the directory name)");
    analyze_flags.attach(analyze);

    std::vector<std::string> compare_roots;
    std::string compare_labels;
    SharedFlags compare_flags;
    CLI::App* compare = app.add_subcommand("compare", "Compare several versions");
    compare->add_option("roots", compare_roots, "Version directories in row order")
        ->required()
        ->expected(-2);
    compare->add_option("--labels", compare_labels,
                        "Comma-separated row labels (defaults to directory names)");
    compare_flags.attach(compare);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        aosrm::AnalyzeRequest request;
        request.root = analyze_root;
        request.label = analyze_label;
        request.lang = parse_lang(analyze_flags.lang);
        request.format = parse_format(analyze_flags.format);
        if (!analyze_log.empty()) request.log_path = analyze_log;
        if (!analyze_flags.chart.empty()) request.chart_path = analyze_flags.chart;
        request.detectors = analyze_flags.detectors();
        request.na_as_zero = analyze_flags.na_as_zero;
        request.verify = analyze_flags.verify;
        return aosrm::analyze_command(request, std::cout, std::cerr);
    }

    aosrm::CompareRequest request;
    std::vector<std::string> labels = split_labels(compare_labels);
    if (!labels.empty() && labels.size() != compare_roots.size()) {
        std::cerr << "aosrm: --labels must name every root (" << compare_roots.size()
                  << " roots, " << labels.size() << " labels)\n";
        return 1;
    }
    for (size_t i = 0; i < compare_roots.size(); ++i) {
        std::filesystem::path root = compare_roots[i];
        std::string label = labels.empty() ? root.filename().string() : labels[i];
        request.roots.emplace_back(label, root);
    }
    request.lang = parse_lang(compare_flags.lang);
    request.format = parse_format(compare_flags.format);
    if (!compare_flags.chart.empty()) request.chart_path = compare_flags.chart;
    request.detectors = compare_flags.detectors();
    request.na_as_zero = compare_flags.na_as_zero;
    request.verify = compare_flags.verify;
    return aosrm::compare_command(request, std::cout, std::cerr);
}
