#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ueplint {

/// UE config-file entry operators. A line may start with one of `+ - . !`
/// which selects the operation; plain `key=value` lines are Set.
enum class IniOp { Set, ArrayAdd, ArrayRemove, SetIfAbsent, Clear };

struct IniEntry {
    std::string key;    // case preserved, op prefix stripped
    std::string value;  // raw text, outer whitespace trimmed, whole-value quotes stripped
    int line = 0;       // 1-based
    IniOp op = IniOp::Set;

    friend bool operator==(const IniEntry&, const IniEntry&) = default;
};

struct IniSection {
    std::string name;  // brackets stripped
    int line = 0;      // 1-based line of the section header
    std::vector<IniEntry> entries;

    friend bool operator==(const IniSection&, const IniSection&) = default;
};

struct ParseDiagnostic {
    int line = 0;
    std::string message;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

/// Ordered, line-number-preserving model of one UE-style .ini file.
/// Duplicate keys and duplicate section names are retained in file order.
/// Immutable after parsing; safe to share across threads.
struct IniDocument {
    std::filesystem::path path;
    std::vector<IniEntry> entries_before_first_section;
    std::vector<IniSection> sections;
    std::vector<ParseDiagnostic> diagnostics;  // malformed lines, never fatal
};

/// Parses UE-style INI text. Total: any byte sequence yields a document.
///
/// Dialect: `;` / `#` comments (after optional leading whitespace), `[Name]`
/// section headers, `key=value` split at the first unescaped `=`, op prefixes
/// `+ - . !`, values quote-stripped only when the entire value is quoted.
/// Input bytes are decoded per decode_to_utf8 (UTF-8 / UTF-16 BOMs accepted).
/// Malformed lines are skipped and recorded in diagnostics.
IniDocument parse_ini(std::string_view bytes, const std::filesystem::path& path);

/// All entries in sections whose name matches `section` case-insensitively
/// and whose key matches `key` case-insensitively, in file order.
std::vector<IniEntry> lookup(const IniDocument& doc, std::string_view section,
                             std::string_view key);

}  // namespace ueplint
