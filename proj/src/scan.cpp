#include "aosrm/scan.hpp"

#include "aosrm/error.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <system_error>

namespace fs = std::filesystem;

namespace aosrm {

namespace {

std::string lower_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

bool extension_matches(const std::string& ext, LangFilter filter) {
    if (ext == ".java") return filter != LangFilter::AspectJOnly;
    if (ext == ".aj") return filter != LangFilter::JavaOnly;
    return false;
}

bool is_hidden(const fs::path& p) {
    const std::string name = p.filename().string();
    return !name.empty() && name[0] == '.';
}

void walk(const fs::path& dir, LangFilter filter, ScanResult& result) {
    std::error_code ec;
    fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        result.skipped.emplace_back(dir, ec.message());
        return;
    }
    for (const fs::directory_entry& entry : it) {
        const fs::path& path = entry.path();
        std::error_code entry_ec;
        if (entry.is_directory(entry_ec)) {
            if (is_hidden(path)) continue;
            // Symlinked directories are not descended (cycle safety).
            if (entry.is_symlink(entry_ec)) continue;
            walk(path, filter, result);
            continue;
        }
        std::string ext = lower_extension(path);
        if (ext != ".java" && ext != ".aj") continue;
        if (!extension_matches(ext, filter)) continue;
        bool regular = entry.is_regular_file(entry_ec); // follows file symlinks
        if (entry_ec) {
            result.skipped.emplace_back(path, entry_ec.message());
            continue;
        }
        if (!regular) continue;
        SourceFile file;
        file.absolute_path = fs::absolute(path).lexically_normal();
        file.language_hint = ext == ".aj" ? Language::AspectJ : Language::Java;
        file.byte_length = entry.file_size(entry_ec);
        if (entry_ec) {
            result.skipped.emplace_back(path, entry_ec.message());
            continue;
        }
        result.files.push_back(std::move(file));
    }
}

} // namespace

ScanResult scan_tree(const fs::path& root, LangFilter filter) {
    std::error_code ec;
    if (!fs::exists(root, ec) || !fs::is_directory(root, ec)) {
        throw Error(ErrorKind::RootNotFound,
                    "root directory not found: " + root.string());
    }
    ScanResult result;
    result.root = fs::absolute(root).lexically_normal();
    walk(result.root, filter, result);
    std::sort(result.files.begin(), result.files.end(),
              [](const SourceFile& a, const SourceFile& b) {
                  return a.absolute_path.native() < b.absolute_path.native();
              });
    std::sort(result.skipped.begin(), result.skipped.end());
    return result;
}

} // namespace aosrm
