// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace authorid {

using TokenSeq = std::vector<std::string>;

// Simple (one-to-one) lowercase mapping for a code point. Covers ASCII,
// Latin-1, Latin Extended-A, the regular Latin Extended-B runs, Greek,
// Cyrillic, Armenian and fullwidth Latin; anything else passes through
// unchanged.
char32_t to_lower(char32_t cp);

// Unicode White_Space property.
bool is_space(char32_t cp);

// Case-folds a UTF-8 string with to_lower(). Bytes that do not form valid
// UTF-8 are copied through untouched.
std::string fold_case(std::string_view text);

// Number of code points in a UTF-8 string (each invalid byte counts as one).
std::size_t codepoint_count(std::string_view text);

// Case-folds, then splits on runs of Unicode whitespace. Punctuation stays
// attached to its token and no stop words are removed: irregular spelling
// and punctuation are the signal this library classifies on. Whitespace-only
// input yields an empty sequence.
TokenSeq tokenize(std::string_view text);

}  // namespace authorid
