#pragma once

#include "aosrm/analyze.hpp"
#include "aosrm/model.hpp"
#include "aosrm/parse.hpp"
#include "aosrm/token.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

namespace testsupport {

/// Unique scratch directory under the system temp dir, removed on
/// destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("aosrm-" + tag + "-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& relative, const std::string& content) const {
        std::filesystem::path file = path_ / relative;
        std::filesystem::create_directories(file.parent_path());
        std::ofstream out(file, std::ios::binary);
        out << content;
        return file;
    }

private:
    std::filesystem::path path_;
};

/// Parses a source string as if it were a file at `path` (no disk involved).
inline aosrm::SourceUnit parse_source(const std::string& text,
                                      const std::string& path = "/mem/Unit.java",
                                      std::vector<std::string>* warnings = nullptr) {
    aosrm::SourceFile file;
    file.absolute_path = path;
    file.language_hint = path.size() > 3 && path.substr(path.size() - 3) == ".aj"
                             ? aosrm::Language::AspectJ
                             : aosrm::Language::Java;
    file.byte_length = text.size();
    std::vector<std::string> local;
    return aosrm::parse_unit(aosrm::tokenize(text), file, warnings ? *warnings : local);
}

/// Builds units from (path, source) pairs.
inline std::vector<aosrm::SourceUnit>
parse_corpus(const std::vector<std::pair<std::string, std::string>>& files,
             std::vector<std::string>* warnings = nullptr) {
    std::vector<aosrm::SourceUnit> units;
    for (const auto& [path, text] : files) {
        units.push_back(parse_source(text, path, warnings));
    }
    return units;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    return content;
}

} // namespace testsupport
