#include "ueplint/glob.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ueplint {

namespace {

bool chars_equal(char a, char b, bool ci) {
    if (ci) {
        return std::tolower(static_cast<unsigned char>(a)) ==
               std::tolower(static_cast<unsigned char>(b));
    }
    return a == b;
}

std::vector<std::string_view> split_components(std::string_view s) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (start <= s.size()) {
        size_t slash = s.find('/', start);
        if (slash == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, slash - start));
        start = slash + 1;
    }
    return parts;
}

bool match_components(const std::vector<std::string_view>& pat, size_t pi,
                      const std::vector<std::string_view>& path, size_t si) {
    while (pi < pat.size()) {
        if (pat[pi] == "**") {
            // Collapse consecutive ** and try every suffix.
            while (pi < pat.size() && pat[pi] == "**") {
                ++pi;
            }
            if (pi == pat.size()) {
                return true;
            }
            for (size_t k = si; k <= path.size(); ++k) {
                if (match_components(pat, pi, path, k)) {
                    return true;
                }
            }
            return false;
        }
        if (si == path.size() || !glob_match_name(pat[pi], path[si])) {
            return false;
        }
        ++pi;
        ++si;
    }
    return si == path.size();
}

}  // namespace

bool glob_match_name(std::string_view pattern, std::string_view name,
                     bool case_insensitive) {
    // Iterative backtracking over the last '*'.
    size_t p = 0, n = 0;
    size_t star = std::string_view::npos, star_n = 0;
    while (n < name.size()) {
        if (p < pattern.size() &&
            (pattern[p] == '?' || chars_equal(pattern[p], name[n], case_insensitive))) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_n = n;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            n = ++star_n;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

bool glob_match_path(std::string_view pattern, std::string_view path) {
    return match_components(split_components(pattern), 0, split_components(path), 0);
}

}  // namespace ueplint
