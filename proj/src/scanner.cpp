#include "ueplint/scanner.hpp"

#include "ueplint/glob.hpp"
#include "ueplint/util.hpp"

#include <algorithm>
#include <system_error>

namespace fs = std::filesystem;

namespace ueplint {

namespace {

enum class FileKind { Other, Ini, Cpp, Header };

FileKind classify(const fs::path& p) {
    std::string ext = ascii_lower(generic_path(p.extension()));
    if (ext == ".ini") {
        return FileKind::Ini;
    }
    if (ext == ".cpp") {
        return FileKind::Cpp;
    }
    if (ext == ".h") {
        return FileKind::Header;
    }
    return FileKind::Other;
}

// First pattern the relative path matches, or nullptr. Patterns without a
// leading '/' are tried at every directory level, gitignore-style.
const std::string* match_exclusion(const std::vector<std::string>& patterns,
                                   std::string_view rel) {
    for (const std::string& pattern : patterns) {
        if (pattern.empty()) {
            continue;
        }
        if (pattern.front() == '/') {
            if (glob_match_path(std::string_view(pattern).substr(1), rel)) {
                return &pattern;
            }
            continue;
        }
        std::string_view tail = rel;
        while (true) {
            if (glob_match_path(pattern, tail)) {
                return &pattern;
            }
            size_t slash = tail.find('/');
            if (slash == std::string_view::npos) {
                break;
            }
            tail.remove_prefix(slash + 1);
        }
    }
    return nullptr;
}

struct Walker {
    const fs::path& root;
    const std::vector<std::string>& patterns;
    FileInventory& inv;

    void walk(const fs::path& dir) {
        std::error_code ec;
        fs::directory_iterator it(dir, ec);
        if (ec) {
            inv.skipped.push_back({generic_path(dir), "unreadable: " + ec.message()});
            return;
        }
        for (fs::directory_iterator end; it != end; it.increment(ec)) {
            if (ec) {
                inv.skipped.push_back({generic_path(dir), "unreadable: " + ec.message()});
                return;
            }
            const fs::directory_entry& entry = *it;
            std::error_code type_ec;
            if (entry.is_symlink(type_ec)) {
                inv.skipped.push_back({generic_path(entry.path()), "symlink"});
                continue;
            }
            if (entry.is_directory(type_ec)) {
                walk(entry.path());
                continue;
            }
            if (type_ec) {
                inv.skipped.push_back(
                    {generic_path(entry.path()), "unreadable: " + type_ec.message()});
                continue;
            }
            FileKind kind = classify(entry.path());
            if (kind == FileKind::Other) {
                continue;
            }
            std::string rel = generic_path(entry.path().lexically_relative(root));
            if (const std::string* pattern = match_exclusion(patterns, rel)) {
                inv.skipped.push_back({generic_path(entry.path()), "excluded: " + *pattern});
                continue;
            }
            switch (kind) {
                case FileKind::Ini: inv.ini_files.push_back(entry.path()); break;
                case FileKind::Cpp: inv.cpp_files.push_back(entry.path()); break;
                case FileKind::Header: inv.header_files.push_back(entry.path()); break;
                case FileKind::Other: break;
            }
        }
    }
};

void sort_paths(std::vector<fs::path>& paths) {
    std::sort(paths.begin(), paths.end(), [](const fs::path& a, const fs::path& b) {
        return generic_path(a) < generic_path(b);
    });
}

}  // namespace

const std::vector<std::string>& default_exclusions() {
    static const std::vector<std::string> kDefaults = {
        "Intermediate/**", "Saved/**", "Binaries/**", "DerivedDataCache/**", ".git/**",
    };
    return kDefaults;
}

FileInventory scan(const fs::path& root, const std::vector<std::string>& exclusions) {
    std::error_code ec;
    fs::path abs_root = fs::absolute(root, ec);
    if (ec) {
        throw ScanError("cannot resolve project directory '" + generic_path(root) +
                        "': " + ec.message());
    }
    abs_root = abs_root.lexically_normal();
    if (!fs::exists(abs_root, ec) || ec) {
        throw ScanError("project directory does not exist: " + generic_path(abs_root));
    }
    if (!fs::is_directory(abs_root, ec) || ec) {
        throw ScanError("not a directory: " + generic_path(abs_root));
    }

    FileInventory inv;
    inv.root = abs_root;
    Walker{abs_root, exclusions, inv}.walk(abs_root);

    sort_paths(inv.ini_files);
    sort_paths(inv.cpp_files);
    sort_paths(inv.header_files);
    std::sort(inv.skipped.begin(), inv.skipped.end(),
              [](const SkippedEntry& a, const SkippedEntry& b) {
                  return std::tie(a.path, a.reason) < std::tie(b.path, b.reason);
              });
    return inv;
}

}  // namespace ueplint
