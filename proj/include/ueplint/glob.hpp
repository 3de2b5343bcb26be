#pragma once

#include <string_view>

namespace ueplint {

/// Matches one path component. `*` spans any run, `?` one character,
/// neither crosses `/`.
bool glob_match_name(std::string_view pattern, std::string_view name,
                     bool case_insensitive = false);

/// Matches a full forward-slash path against a pattern where a `**`
/// component spans zero or more directories. Anchored at the first component.
bool glob_match_path(std::string_view pattern, std::string_view path);

}  // namespace ueplint
