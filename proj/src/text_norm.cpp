#include "listingforge/text_norm.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <cctype>

#include "listingforge/errors.hpp"

namespace lf::text {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// ASCII alnum or any UTF-8 continuation/lead byte counts as word material.
bool is_word_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || u >= 0x80;
}

std::string nfc_lowercase(std::string_view s) {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec)) throw InputError("ICU NFC instance unavailable");
  icu::UnicodeString u =
      icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), int(s.size())));
  icu::UnicodeString composed = nfc->normalize(u, ec);
  if (U_FAILURE(ec)) composed = u;  // invalid sequences pass through
  composed.toLower(icu::Locale::getRoot());
  std::string out;
  composed.toUTF8String(out);
  return out;
}

}  // namespace

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

std::string normalize(std::string_view s) {
  std::string lowered = nfc_lowercase(s);
  std::string collapsed = collapse_whitespace(lowered);
  // Strip punctuation and blanks from the edges until stable.
  std::size_t b = 0, e = collapsed.size();
  while (b < e && (is_ascii_punct(collapsed[b]) || collapsed[b] == ' ')) ++b;
  while (e > b &&
         (is_ascii_punct(collapsed[e - 1]) || collapsed[e - 1] == ' '))
    --e;
  return collapsed.substr(b, e - b);
}

std::string strip_markup(std::string_view s) {
  std::string no_tags;
  no_tags.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      std::size_t close = s.find('>', i + 1);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    no_tags.push_back(s[i]);
    ++i;
  }

  static const struct {
    const char* name;
    char ch;
  } kEntities[] = {{"&amp;", '&'},
                   {"&lt;", '<'},
                   {"&gt;", '>'},
                   {"&quot;", '"'},
                   {"&apos;", '\''}};
  std::string out;
  out.reserve(no_tags.size());
  i = 0;
  while (i < no_tags.size()) {
    if (no_tags[i] == '&') {
      bool replaced = false;
      for (const auto& ent : kEntities) {
        std::size_t len = std::char_traits<char>::length(ent.name);
        if (no_tags.compare(i, len, ent.name) == 0) {
          out.push_back(ent.ch);
          i += len;
          replaced = true;
          break;
        }
      }
      if (replaced) continue;
    }
    out.push_back(no_tags[i]);
    ++i;
  }
  return out;
}

bool whole_word_contains(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return false;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string_view::npos) {
    bool left_ok = pos == 0 || !is_word_byte(haystack[pos - 1]);
    std::size_t end = pos + needle.size();
    bool right_ok = end == haystack.size() || !is_word_byte(haystack[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace lf::text
