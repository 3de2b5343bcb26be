#include "ueplint/ini.hpp"

#include "ueplint/encoding.hpp"
#include "ueplint/util.hpp"

namespace ueplint {

namespace {

// Index of the first '=' not preceded by a backslash; npos when absent.
size_t find_separator(std::string_view line) {
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '=' && (i == 0 || line[i - 1] != '\\')) {
            return i;
        }
    }
    return std::string_view::npos;
}

std::string unescape_key(std::string_view raw) {
    std::string key;
    key.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\\' && i + 1 < raw.size() && raw[i + 1] == '=') {
            continue;
        }
        key += raw[i];
    }
    return key;
}

std::string strip_whole_quotes(std::string_view value) {
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        return std::string(value.substr(1, value.size() - 2));
    }
    return std::string(value);
}

}  // namespace

IniDocument parse_ini(std::string_view bytes, const std::filesystem::path& path) {
    IniDocument doc;
    doc.path = path;

    const std::string text = decode_to_utf8(bytes);
    IniSection* current = nullptr;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) {
            break;  // no trailing empty line after a final '\n'
        }
        size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == ';' || stripped.front() == '#') {
            continue;
        }

        if (stripped.front() == '[') {
            if (stripped.back() != ']') {
                doc.diagnostics.push_back({line_no, "unterminated section header"});
                continue;
            }
            std::string name(trim(stripped.substr(1, stripped.size() - 2)));
            if (name.empty()) {
                doc.diagnostics.push_back({line_no, "empty section name"});
                continue;
            }
            doc.sections.push_back(IniSection{std::move(name), line_no, {}});
            current = &doc.sections.back();
            continue;
        }

        IniOp op = IniOp::Set;
        switch (stripped.front()) {
            case '+': op = IniOp::ArrayAdd; break;
            case '-': op = IniOp::ArrayRemove; break;
            case '.': op = IniOp::SetIfAbsent; break;
            case '!': op = IniOp::Clear; break;
            default: break;
        }
        if (op != IniOp::Set) {
            stripped.remove_prefix(1);
        }

        size_t sep = find_separator(stripped);
        if (sep == std::string_view::npos) {
            doc.diagnostics.push_back({line_no, "no '=' separator"});
            continue;
        }
        std::string key = unescape_key(trim(stripped.substr(0, sep)));
        if (key.empty()) {
            doc.diagnostics.push_back({line_no, "empty key"});
            continue;
        }
        std::string value = strip_whole_quotes(trim(stripped.substr(sep + 1)));

        IniEntry entry{std::move(key), std::move(value), line_no, op};
        if (current != nullptr) {
            current->entries.push_back(std::move(entry));
        } else {
            doc.entries_before_first_section.push_back(std::move(entry));
        }
    }

    return doc;
}

std::vector<IniEntry> lookup(const IniDocument& doc, std::string_view section,
                             std::string_view key) {
    std::vector<IniEntry> out;
    for (const IniSection& s : doc.sections) {
        if (!iequals(s.name, section)) {
            continue;
        }
        for (const IniEntry& e : s.entries) {
            if (iequals(e.key, key)) {
                out.push_back(e);
            }
        }
    }
    return out;
}

}  // namespace ueplint
