#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Devanagari-aware normalization, tokenization and sentence segmentation.
// Everything here works on UTF-8 strings and is pure: no shared state,
// safe to call from any number of threads.
namespace sst::deva {

enum class CharClass {
  IndependentVowel,
  Consonant,
  Matra,
  Virama,
  Anusvara,
  Visarga,
  Danda,
  Digit,
  Other,
};

/// Total classification over Unicode scalar values; exactly one class each.
CharClass classify_char(char32_t c);

/// Decodes UTF-8; malformed sequences yield U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t c);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Canonical cleaned form:
//  - '!' and '?' become danda
//  - zero-width characters (U+200B..U+200D) are stripped outright
//  - any other character that is not Devanagari, space or an ASCII digit is
//    replaced by a space (so removal never glues two words together)
//  - danda is space-separated from the preceding word
//  - space runs are collapsed and the result is trimmed
// Idempotent.
std::string normalize(std::string_view raw);

/// Maximal non-space runs of a normalized text.
std::vector<std::string> tokenize(std::string_view clean);

/// Splits after each danda; sentences keep their terminal danda.
std::vector<std::string> segment_sentences(std::string_view paragraph);

std::size_t token_count(std::string_view clean);

}  // namespace sst::deva
