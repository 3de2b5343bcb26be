#include "ueplint/encoding.hpp"

#include <cstdint>

namespace ueplint {

namespace {

constexpr uint32_t kReplacement = 0xFFFD;

void append_utf8(std::string& out, uint32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        cp = kReplacement;
    }
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

std::string decode_utf16(std::string_view b, bool little_endian) {
    std::string out;
    out.reserve(b.size() / 2 + 4);
    const size_t paired = b.size() & ~size_t{1};
    auto unit = [&](size_t i) -> uint32_t {
        auto lo = static_cast<unsigned char>(b[i]);
        auto hi = static_cast<unsigned char>(b[i + 1]);
        return little_endian ? (lo | (hi << 8)) : (hi | (lo << 8));
    };
    for (size_t i = 0; i < paired; i += 2) {
        uint32_t cp = unit(i);
        if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (i + 3 < paired) {
                uint32_t low = unit(i + 2);
                if (low >= 0xDC00 && low <= 0xDFFF) {
                    cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
                    i += 2;
                } else {
                    cp = kReplacement;
                }
            } else {
                cp = kReplacement;
            }
        } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
            cp = kReplacement;
        }
        append_utf8(out, cp);
    }
    if (b.size() % 2 != 0) {
        append_utf8(out, kReplacement);
    }
    return out;
}

// Re-encodes, replacing ill-formed sequences (overlong forms, lone
// continuation bytes, surrogates, out-of-range values) with U+FFFD.
std::string sanitize_utf8(std::string_view b) {
    std::string out;
    out.reserve(b.size());
    size_t i = 0;
    while (i < b.size()) {
        auto c0 = static_cast<unsigned char>(b[i]);
        if (c0 < 0x80) {
            out += static_cast<char>(c0);
            ++i;
            continue;
        }
        int len = 0;
        uint32_t cp = 0;
        uint32_t min_cp = 0;
        if ((c0 & 0xE0) == 0xC0) {
            len = 2;
            cp = c0 & 0x1F;
            min_cp = 0x80;
        } else if ((c0 & 0xF0) == 0xE0) {
            len = 3;
            cp = c0 & 0x0F;
            min_cp = 0x800;
        } else if ((c0 & 0xF8) == 0xF0) {
            len = 4;
            cp = c0 & 0x07;
            min_cp = 0x10000;
        } else {
            append_utf8(out, kReplacement);
            ++i;
            continue;
        }
        bool ok = i + static_cast<size_t>(len) <= b.size();
        for (int k = 1; ok && k < len; ++k) {
            auto ck = static_cast<unsigned char>(b[i + static_cast<size_t>(k)]);
            if ((ck & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (ck & 0x3F);
            }
        }
        if (!ok || cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            append_utf8(out, kReplacement);
            ++i;  // resync one byte at a time
        } else {
            append_utf8(out, cp);
            i += static_cast<size_t>(len);
        }
    }
    return out;
}

}  // namespace

std::string decode_to_utf8(std::string_view bytes) {
    if (bytes.size() >= 2) {
        auto b0 = static_cast<unsigned char>(bytes[0]);
        auto b1 = static_cast<unsigned char>(bytes[1]);
        if (b0 == 0xFF && b1 == 0xFE) {
            return decode_utf16(bytes.substr(2), /*little_endian=*/true);
        }
        if (b0 == 0xFE && b1 == 0xFF) {
            return decode_utf16(bytes.substr(2), /*little_endian=*/false);
        }
    }
    if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
        static_cast<unsigned char>(bytes[1]) == 0xBB &&
        static_cast<unsigned char>(bytes[2]) == 0xBF) {
        bytes.remove_prefix(3);
    }
    return sanitize_utf8(bytes);
}

}  // namespace ueplint
