#include "sst/devanagari.hpp"

namespace sst::deva {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_zero_width(char32_t c) { return c >= 0x200B && c <= 0x200D; }

}  // namespace

CharClass classify_char(char32_t c) {
  if (c == 0x0964 || c == 0x0965) return CharClass::Danda;
  if ((c >= 0x0966 && c <= 0x096F) || (c >= U'0' && c <= U'9'))
    return CharClass::Digit;
  if (c >= 0x0900 && c <= 0x0902) return CharClass::Anusvara;
  if (c == 0x0903) return CharClass::Visarga;
  if (c == 0x094D) return CharClass::Virama;
  // Avagraha stands in for an elided initial vowel; Om is a standalone sign.
  if ((c >= 0x0904 && c <= 0x0914) || c == 0x093D || c == 0x0950 ||
      c == 0x0960 || c == 0x0961 || (c >= 0x0972 && c <= 0x0977))
    return CharClass::IndependentVowel;
  if ((c >= 0x0915 && c <= 0x0939) || (c >= 0x0958 && c <= 0x095F) ||
      (c >= 0x0978 && c <= 0x097F))
    return CharClass::Consonant;
  // Vedic accent marks combine like matras: stripping one must not split
  // the word it sits on.
  if (c == 0x093A || c == 0x093B || c == 0x093C ||
      (c >= 0x093E && c <= 0x094C) || c == 0x094E || c == 0x094F ||
      (c >= 0x0951 && c <= 0x0957) || c == 0x0962 || c == 0x0963)
    return CharClass::Matra;
  return CharClass::Other;
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok || cp > 0x10FFFF) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t c : cps) append_utf8(out, c);
  return out;
}

std::string normalize(std::string_view raw) {
  const auto cps = decode_utf8(raw);
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;  // collapse runs; also used to trim the front
  bool at_start = true;
  auto emit = [&](char32_t c) {
    if (pending_space && !at_start) out.push_back(' ');
    pending_space = false;
    at_start = false;
    append_utf8(out, c);
  };
  for (char32_t c : cps) {
    if (is_zero_width(c)) continue;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = true;
      continue;
    }
    if (c == '!' || c == '?') c = 0x0964;
    const CharClass cls = classify_char(c);
    if (cls == CharClass::Danda) {
      pending_space = true;  // danda is always its own token
      emit(c);
      pending_space = true;
      continue;
    }
    if (cls == CharClass::Other) {
      pending_space = true;  // replaced by a space, never glues words
      continue;
    }
    emit(c);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view clean) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < clean.size()) {
    while (i < clean.size() && (clean[i] == ' ' || clean[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < clean.size() && clean[j] != ' ' && clean[j] != '\n') ++j;
    if (j > i) tokens.emplace_back(clean.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string> segment_sentences(std::string_view paragraph) {
  const auto tokens = tokenize(paragraph);
  std::vector<std::string> sentences;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      sentences.push_back(current);
      current.clear();
    }
  };
  for (const auto& tok : tokens) {
    if (!current.empty()) current.push_back(' ');
    current += tok;
    if (tok == "।" || tok == "॥") flush();
  }
  flush();
  return sentences;
}

std::size_t token_count(std::string_view clean) { return tokenize(clean).size(); }

}  // namespace sst::deva
