// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

namespace authorid {
namespace {

// Simple lowercase deltas for the contiguous ranges. even_next/odd_next mark
// the alternating upper/lower layouts of the Latin Extended and Cyrillic
// extension blocks: code points of the named parity map to the next one.
struct FoldRange {
    char32_t first;
    char32_t last;
    enum Kind : unsigned char { add, even_next, odd_next } kind;
    std::int32_t delta;
};

constexpr FoldRange kFoldRanges[] = {
    {0x0041, 0x005A, FoldRange::add, 32},        // ASCII A-Z
    {0x00C0, 0x00D6, FoldRange::add, 32},        // Latin-1 (multiplication sign excluded)
    {0x00D8, 0x00DE, FoldRange::add, 32},
    {0x0100, 0x012F, FoldRange::even_next, 0},   // Latin Extended-A
    {0x0132, 0x0137, FoldRange::even_next, 0},
    {0x0139, 0x0148, FoldRange::odd_next, 0},
    {0x014A, 0x0177, FoldRange::even_next, 0},
    {0x0179, 0x017E, FoldRange::odd_next, 0},
    {0x01CD, 0x01DC, FoldRange::odd_next, 0},    // Latin Extended-B, regular runs
    {0x01DE, 0x01EF, FoldRange::even_next, 0},
    {0x01F4, 0x01F5, FoldRange::even_next, 0},
    {0x01F8, 0x021F, FoldRange::even_next, 0},
    {0x0222, 0x0233, FoldRange::even_next, 0},
    {0x0246, 0x024F, FoldRange::even_next, 0},
    {0x0388, 0x038A, FoldRange::add, 37},        // Greek
    {0x038E, 0x038F, FoldRange::add, 63},
    {0x0391, 0x03A1, FoldRange::add, 32},
    {0x03A3, 0x03AB, FoldRange::add, 32},
    {0x0400, 0x040F, FoldRange::add, 80},        // Cyrillic
    {0x0410, 0x042F, FoldRange::add, 32},
    {0x0460, 0x0481, FoldRange::even_next, 0},
    {0x048A, 0x04BF, FoldRange::even_next, 0},
    {0x04C1, 0x04CD, FoldRange::odd_next, 0},
    {0x04D0, 0x052F, FoldRange::even_next, 0},
    {0x0531, 0x0556, FoldRange::add, 48},        // Armenian
    {0xFF21, 0xFF3A, FoldRange::add, 32},        // fullwidth Latin
};

struct Decoded {
    char32_t cp;
    unsigned len;
    bool valid;
};

// Decodes one UTF-8 sequence starting at s[i]. An invalid or truncated
// sequence yields the single raw byte with valid=false so callers can pass
// it through unchanged.
Decoded decode_utf8(std::string_view s, std::size_t i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) return {b0, 1, true};

    unsigned len = 0;
    char32_t cp = 0;
    if (b0 >= 0xC2 && b0 <= 0xDF) {
        len = 2;
        cp = b0 & 0x1Fu;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
        len = 4;
        cp = b0 & 0x07u;
    } else {
        return {b0, 1, false};
    }
    if (i + len > s.size()) return {b0, 1, false};
    for (unsigned k = 1; k < len; ++k) {
        const unsigned char bk = byte(i + k);
        if ((bk & 0xC0u) != 0x80u) return {b0, 1, false};
        cp = (cp << 6) | (bk & 0x3Fu);
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) return {b0, 1, false};
    if (cp > 0x10FFFF) return {b0, 1, false};
    return {cp, len, true};
}

void encode_utf8(char32_t cp, std::string& out) {
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

}  // namespace

char32_t to_lower(char32_t cp) {
    switch (cp) {
        case 0x0130: return 0x0069;  // İ
        case 0x0178: return 0x00FF;  // Ÿ
        case 0x01F1: return 0x01F3;  // DZ
        case 0x01F2: return 0x01F3;  // Dz
        case 0x0386: return 0x03AC;  // Ά
        case 0x038C: return 0x03CC;  // Ό
        default: break;
    }
    const auto* it = std::lower_bound(
        std::begin(kFoldRanges), std::end(kFoldRanges), cp,
        [](const FoldRange& r, char32_t v) { return r.last < v; });
    if (it == std::end(kFoldRanges) || cp < it->first) return cp;
    switch (it->kind) {
        case FoldRange::add:
            return cp + static_cast<char32_t>(it->delta);
        case FoldRange::even_next:
            return (cp % 2 == 0) ? cp + 1 : cp;
        case FoldRange::odd_next:
            return (cp % 2 == 1) ? cp + 1 : cp;
    }
    return cp;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x0009:
        case 0x000A:
        case 0x000B:
        case 0x000C:
        case 0x000D:
        case 0x0020:
        case 0x0085:
        case 0x00A0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

std::string fold_case(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const Decoded d = decode_utf8(text, i);
        if (d.valid) {
            encode_utf8(to_lower(d.cp), out);
        } else {
            out += text[i];
        }
        i += d.len;
    }
    return out;
}

std::size_t codepoint_count(std::string_view text) {
    std::size_t n = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        i += decode_utf8(text, i).len;
        ++n;
    }
    return n;
}

TokenSeq tokenize(std::string_view text) {
    TokenSeq tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const Decoded d = decode_utf8(text, i);
        if (d.valid && is_space(d.cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else if (d.valid) {
            encode_utf8(to_lower(d.cp), current);
        } else {
            current += text[i];
        }
        i += d.len;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace authorid
