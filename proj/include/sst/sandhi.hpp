#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Two-phase rule-based sandhi/samyoga splitter. Phase 1 replaces whole
// tokens from an annotated word-split dictionary; phase 2 applies common
// patterns with boundary anchors and exception words in a single
// deterministic left-to-right pass (first matching rule wins per token).
namespace sst::sandhi {

class RuleLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Anchor {
  WholeWord,
  WordSuffix,
  WordFinalBoundary,
  // Multi-token pattern with an empty replacement (deletion rows).
  Phrase,
};

struct SplitRule {
  std::string pattern;
  std::string replacement;  // '+' already converted to spaces; may be empty
  std::vector<std::string> exceptions;
  Anchor anchor = Anchor::WordSuffix;
  // A correction row (e.g. glyph repair) rather than a pure split: the
  // replacement has fewer tokens than usual or rewrites the pattern.
  bool is_noop = false;
  std::size_t line = 0;
};

struct RuleSet {
  std::vector<SplitRule> rules;
  // Fixpoint-audit observations (no-op rows, danda-anchored rows that can
  // never match normalized text, shadowed rules).
  std::vector<std::string> audit_notes;
};

// Sandhified word -> annotated split; file order preserved for reporting.
struct WordSplitDict {
  std::map<std::string, std::string> entries;
};

// Tab-separated: common_error, correction, exception. '#' lines ignored,
// a "common_error" header row ignored. Throws RuleLoadError naming the
// offending line on malformed rows, empty patterns, dead exceptions, or a
// replacement that is not a fixed point of the rule set.
RuleSet load_rules(const std::string& path);

WordSplitDict load_word_splits(const std::string& path);

/// Phase 1: whole-token replacement; partial matches never fire.
std::string apply_word_specific(std::string_view text, const WordSplitDict& dict);

/// Phase 2: one pass, at most one rule per token. `fires`, when given, is
/// resized to the rule count and accumulates per-rule fire counts.
std::string apply_common_patterns(std::string_view text, const RuleSet& rules,
                                  std::vector<std::size_t>* fires = nullptr);

struct SplitReport {
  std::size_t total_before = 0;
  std::size_t total_after = 0;
  std::size_t unique_before = 0;
  std::size_t unique_after = 0;
  std::vector<std::size_t> rule_fires;
};

SplitReport split_report(std::string_view before, std::string_view after,
                         std::vector<std::size_t> fires);

}  // namespace sst::sandhi
