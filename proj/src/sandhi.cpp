#include "sst/sandhi.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sst/devanagari.hpp"

namespace sst::sandhi {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool ends_with_danda(std::string_view s) {
  return ends_with(s, "।") || ends_with(s, "॥");
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw RuleLoadError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string apply_word_specific(std::string_view text, const WordSplitDict& dict) {
  auto tokens = deva::tokenize(text);
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (auto& tok : tokens) {
    const auto it = dict.entries.find(tok);
    if (it == dict.entries.end()) {
      out.push_back(std::move(tok));
    } else {
      for (auto& part : deva::tokenize(it->second)) out.push_back(std::move(part));
    }
  }
  return join(out);
}

std::string apply_common_patterns(std::string_view text, const RuleSet& ruleset,
                                  std::vector<std::size_t>* fires) {
  if (fires) fires->assign(ruleset.rules.size(), 0);
  const auto tokens = deva::tokenize(text);
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool fired = false;
    for (std::size_t r = 0; r < ruleset.rules.size() && !fired; ++r) {
      const auto& rule = ruleset.rules[r];
      switch (rule.anchor) {
        case Anchor::Phrase: {
          const auto pat = deva::tokenize(rule.pattern);
          if (i + pat.size() <= tokens.size() &&
              std::equal(pat.begin(), pat.end(), tokens.begin() + i)) {
            for (auto& part : deva::tokenize(rule.replacement))
              out.push_back(std::move(part));
            i += pat.size();
            fired = true;
          }
          break;
        }
        case Anchor::WholeWord: {
          if (tokens[i] != rule.pattern) break;
          if (std::find(rule.exceptions.begin(), rule.exceptions.end(),
                        tokens[i]) != rule.exceptions.end())
            break;
          for (auto& part : deva::tokenize(rule.replacement))
            out.push_back(std::move(part));
          ++i;
          fired = true;
          break;
        }
        case Anchor::WordSuffix:
        case Anchor::WordFinalBoundary: {
          // On whitespace tokens a word-final boundary and a plain suffix
          // coincide: the token end is the boundary.
          const auto& tok = tokens[i];
          if (!ends_with(tok, rule.pattern)) break;
          if (std::find(rule.exceptions.begin(), rule.exceptions.end(), tok) !=
              rule.exceptions.end())
            break;
          const std::string prefix =
              tok.substr(0, tok.size() - rule.pattern.size());
          auto parts = deva::tokenize(rule.replacement);
          if (parts.empty()) {
            if (!prefix.empty()) out.push_back(prefix);
          } else {
            out.push_back(prefix + parts[0]);
            for (std::size_t k = 1; k < parts.size(); ++k)
              out.push_back(std::move(parts[k]));
          }
          ++i;
          fired = true;
          break;
        }
      }
      if (fired && fires) ++(*fires)[r];
    }
    if (!fired) {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  return join(out);
}

RuleSet load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuleLoadError("cannot open rule table: " + path);
  RuleSet ruleset;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto cols = split_tabs(line);
    for (auto& c : cols) c = trim(c);
    if (cols[0] == "common_error") continue;  // header row
    if (cols.size() < 2 || cols.size() > 3)
      fail(path, lineno, "expected 2 or 3 tab-separated columns, got " +
                             std::to_string(cols.size()));
    SplitRule rule;
    rule.line = lineno;
    std::string pattern = cols[0];
    std::string correction = cols[1];
    if (pattern.empty()) fail(path, lineno, "empty pattern");
    std::replace(correction.begin(), correction.end(), '+', ' ');

    // Trailing '_' anchors the pattern at a word-final boundary.
    bool boundary = false;
    if (ends_with(pattern, "_")) {
      pattern.pop_back();
      boundary = true;
    }
    while (ends_with(correction, "_")) {
      correction.pop_back();
      boundary = true;
    }
    correction = trim(correction);
    // A correction wrapped in '_..._' marks a standalone word.
    bool whole_word = false;
    if (!correction.empty() && correction.front() == '_') {
      correction.erase(correction.begin());
      correction = trim(correction);
      whole_word = true;
      boundary = false;
    }
    if (pattern.empty()) fail(path, lineno, "empty pattern after '_' strip");

    if (pattern.find(' ') != std::string::npos) {
      if (!correction.empty())
        fail(path, lineno, "multi-word pattern is only valid as a deletion row");
      rule.anchor = Anchor::Phrase;
    } else if (whole_word || ends_with_danda(pattern)) {
      rule.anchor = Anchor::WholeWord;
    } else if (boundary) {
      rule.anchor = Anchor::WordFinalBoundary;
    } else {
      rule.anchor = Anchor::WordSuffix;
    }
    rule.pattern = pattern;
    rule.replacement = correction;
    rule.is_noop = correction == pattern;

    if (cols.size() == 3 && !cols[2].empty()) {
      // Exceptions are whole words; match them against the pattern stem,
      // without any trailing danda.
      std::string stem = pattern;
      if (ends_with(stem, "।")) stem.resize(stem.size() - std::string("।").size());
      if (ends_with(stem, "॥")) stem.resize(stem.size() - std::string("॥").size());
      std::stringstream ss(cols[2]);
      std::string word;
      while (std::getline(ss, word, ',')) {
        word = trim(word);
        if (word.empty()) continue;
        if (word.find(stem) == std::string::npos)
          fail(path, lineno,
               "dead exception '" + word + "' does not contain pattern '" +
                   pattern + "'");
        rule.exceptions.push_back(word);
      }
    }
    ruleset.rules.push_back(std::move(rule));
  }
  if (ruleset.rules.empty()) throw RuleLoadError("empty rule table: " + path);

  // Fixpoint audit: every replacement must be invariant under the full set,
  // otherwise a second pass would keep splitting and the single-pass
  // contract would not hold.
  for (const auto& rule : ruleset.rules) {
    if (rule.replacement.empty()) continue;
    const std::string again = apply_common_patterns(rule.replacement, ruleset);
    const std::string once = join(deva::tokenize(rule.replacement));
    if (again != once)
      fail(path, rule.line,
           "replacement '" + rule.replacement +
               "' is not a fixed point of the rule set (rewrites to '" +
               again + "')");
    if (rule.is_noop)
      ruleset.audit_notes.push_back("line " + std::to_string(rule.line) +
                                    ": self-mapping row '" + rule.pattern +
                                    "' loaded as a no-op");
    if (ends_with_danda(rule.pattern))
      ruleset.audit_notes.push_back(
          "line " + std::to_string(rule.line) + ": danda-anchored pattern '" +
          rule.pattern + "' cannot match normalized text");
  }
  // Shadow check: an earlier suffix rule whose pattern is a suffix of a
  // later rule's pattern makes the later rule unreachable.
  for (std::size_t a = 0; a < ruleset.rules.size(); ++a) {
    const auto& ra = ruleset.rules[a];
    if (ra.anchor != Anchor::WordSuffix && ra.anchor != Anchor::WordFinalBoundary)
      continue;
    if (!ra.exceptions.empty()) continue;
    for (std::size_t b = a + 1; b < ruleset.rules.size(); ++b) {
      const auto& rb = ruleset.rules[b];
      if (rb.anchor != Anchor::WordSuffix &&
          rb.anchor != Anchor::WordFinalBoundary)
        continue;
      if (rb.pattern != ra.pattern && ends_with(rb.pattern, ra.pattern))
        ruleset.audit_notes.push_back(
            "line " + std::to_string(rb.line) + ": rule '" + rb.pattern +
            "' is shadowed by the earlier suffix rule '" + ra.pattern + "'");
    }
  }
  return ruleset;
}

WordSplitDict load_word_splits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuleLoadError("cannot open word-split dict: " + path);
  WordSplitDict dict;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto cols = split_tabs(line);
    for (auto& c : cols) c = trim(c);
    if (cols.size() != 2)
      fail(path, lineno, "expected 2 tab-separated columns");
    if (cols[0].empty() || cols[1].empty())
      fail(path, lineno, "empty word or split");
    if (cols[0].find(' ') != std::string::npos)
      fail(path, lineno, "dictionary key must be a single token");
    dict.entries[cols[0]] = cols[1];
  }
  return dict;
}

SplitReport split_report(std::string_view before, std::string_view after,
                         std::vector<std::size_t> fires) {
  SplitReport report;
  report.rule_fires = std::move(fires);
  const auto count = [](std::string_view text, std::size_t& total,
                        std::size_t& unique) {
    const auto tokens = deva::tokenize(text);
    total = tokens.size();
    unique = std::unordered_set<std::string>(tokens.begin(), tokens.end()).size();
  };
  count(before, report.total_before, report.unique_before);
  count(after, report.total_after, report.unique_after);
  return report;
}

}  // namespace sst::sandhi
