#pragma once

#include "aosrm/scan.hpp"

#include <filesystem>
#include <fstream>
#include <string>

namespace aosrm {

/// Append-only three-section run log:
///
///   # AOSRM RUN LOG v1
///   [FILES]        one absolute path per line
///   [SIGNATURES]   KIND|owner|signature-text lines (see signatures.hpp)
///   [METRICS]      NAME=value lines plus COUNT.* lines (see metrics.hpp)
///
/// UTF-8, LF line endings. Single writer; the handle stays positioned for
/// appending the later sections.
class RunLog {
public:
    RunLog() = default;
    RunLog(RunLog&&) = default;
    RunLog& operator=(RunLog&&) = default;

    bool is_open() const { return out_.is_open(); }
    const std::filesystem::path& path() const { return path_; }

    void write_line(const std::string& line);
    void flush();

private:
    friend RunLog open_run_log(const std::filesystem::path&, const ScanResult&);

    std::filesystem::path path_;
    std::ofstream out_;
};

/// Creates/truncates the log and writes the header plus the [FILES] section
/// in ScanResult order. Throws Error{IoFailure} when the file cannot be
/// written.
RunLog open_run_log(const std::filesystem::path& log_path, const ScanResult& scan);

} // namespace aosrm
