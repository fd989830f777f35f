#pragma once

#include <string>
#include <string_view>

namespace lf::text {

// Canonical text normalization used by both the curation pipeline and the
// scorers: Unicode NFC, lowercase (root locale), trim, collapse internal
// whitespace runs to single spaces, strip leading/trailing punctuation.
// Idempotent: normalize(normalize(x)) == normalize(x).
std::string normalize(std::string_view s);

// Trim + collapse whitespace runs to single spaces (no case folding).
std::string collapse_whitespace(std::string_view s);

// Remove angle-bracket markup tags and decode the five basic character
// entities (&amp; &lt; &gt; &quot; &apos;). A lone '<' with no closing '>'
// is kept as literal text.
std::string strip_markup(std::string_view s);

// True iff `needle` occurs in `haystack` with non-word characters (or the
// string edge) on both sides. Both arguments are expected pre-normalized.
// Any byte >= 0x80 counts as a word character, so multi-byte UTF-8 stays
// inside word boundaries.
bool whole_word_contains(std::string_view haystack, std::string_view needle);

}  // namespace lf::text
