#pragma once

#include <string>
#include <string_view>

namespace ueplint {

/// Normalizes raw file bytes to UTF-8 text.
///
/// Recognizes UTF-8, UTF-16LE and UTF-16BE byte-order marks (UE editors emit
/// the first two) and transcodes accordingly. Without a BOM the input is
/// treated as UTF-8. Invalid sequences are replaced with U+FFFD; decoding
/// never fails.
std::string decode_to_utf8(std::string_view bytes);

}  // namespace ueplint
