#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace ueplint {

struct SkippedEntry {
    std::string path;    // forward-slash, absolute
    std::string reason;  // "excluded: <pattern>", "symlink", "unreadable: ..."

    friend bool operator==(const SkippedEntry&, const SkippedEntry&) = default;
};

/// Classified project files. All list paths are absolute, exist under root at
/// scan time, and are sorted lexicographically with forward-slash separators;
/// that ordering anchors the determinism of every downstream output.
struct FileInventory {
    std::filesystem::path root;  // absolute, normalized
    std::vector<std::filesystem::path> ini_files;
    std::vector<std::filesystem::path> cpp_files;
    std::vector<std::filesystem::path> header_files;
    std::vector<SkippedEntry> skipped;
};

class ScanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Patterns pruned by default: UE build output and VCS metadata.
const std::vector<std::string>& default_exclusions();

/// Recursively walks root and classifies files by case-insensitive extension
/// (.ini, .cpp, .h). Symbolic links are not followed. Exclusion patterns are
/// matched against the root-relative path; a pattern starting with '/' is
/// anchored at the root, anything else also matches below any subdirectory.
/// Excluded candidates and unreadable entries land in `skipped`.
///
/// Throws ScanError when root is missing or not a readable directory.
FileInventory scan(const std::filesystem::path& root,
                   const std::vector<std::string>& exclusions);

}  // namespace ueplint
