#include "aosrm/run_log.hpp"

#include "aosrm/error.hpp"

namespace aosrm {

void RunLog::write_line(const std::string& line) {
    out_ << line << '\n';
    if (!out_) {
        throw Error(ErrorKind::IoFailure, "write to run log failed: " + path_.string());
    }
}

void RunLog::flush() {
    out_.flush();
}

RunLog open_run_log(const std::filesystem::path& log_path, const ScanResult& scan) {
    RunLog log;
    log.path_ = log_path;
    log.out_.open(log_path, std::ios::binary | std::ios::trunc);
    if (!log.out_) {
        throw Error(ErrorKind::IoFailure, "cannot open run log: " + log_path.string());
    }
    log.write_line("# AOSRM RUN LOG v1");
    log.write_line("[FILES]");
    for (const SourceFile& file : scan.files) {
        log.write_line(file.absolute_path.string());
    }
    log.flush();
    return log;
}

} // namespace aosrm
