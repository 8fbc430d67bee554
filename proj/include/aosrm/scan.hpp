#pragma once

#include "aosrm/decl.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace aosrm {

enum class LangFilter { Auto, JavaOnly, AspectJOnly };

struct ScanResult {
    std::filesystem::path root;
    std::vector<SourceFile> files; // sorted by absolute path, byte-wise
    std::vector<std::pair<std::filesystem::path, std::string>> skipped;
};

/// Recursively collects .java/.aj files under root (extension match is
/// case-insensitive). Dot-prefixed directories are skipped, symlinked
/// directories are never descended, and unreadable entries land in skipped.
/// The file list is sorted so repeated scans of an unchanged tree are
/// byte-identical.
///
/// Throws Error{RootNotFound} when root is missing or not a directory.
ScanResult scan_tree(const std::filesystem::path& root, LangFilter filter);

} // namespace aosrm
