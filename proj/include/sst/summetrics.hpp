#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sst/corpus.hpp"

// Corpus and summary-quality statistics: token counts, novel n-gram
// abstractiveness, compression rate, suitability-assessment aggregation.
namespace sst::summetrics {

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceTotals {
  std::size_t total_tokens = 0;
  std::size_t unique_tokens = 0;
  std::size_t sentence_count = 0;
};

struct CorpusStats {
  std::size_t total_tokens = 0;
  std::size_t unique_tokens = 0;  // global, across sources
  std::size_t sentence_count = 0;
  std::map<std::string, SourceTotals> per_source;
};

CorpusStats corpus_stats(
    const std::map<std::string, std::vector<corpus::SentenceRecord>>& by_source);

enum class NgramMode { Set, Multiset };

/// Percentage of summary n-grams absent from the document. Set mode counts
/// distinct n-grams; Multiset clips by document counts. Throws when the
/// summary has fewer than n tokens.
double novel_ngram_pct(const corpus::DocSummaryPair& pair, std::size_t n,
                       NgramMode mode = NgramMode::Set);

/// Document token count over summary token count.
double compression_rate(const corpus::DocSummaryPair& pair);

struct AssessmentTally {
  std::size_t summary = 0;
  std::size_t reflective = 0;
  std::size_t unrelated = 0;
  std::size_t other = 0;
  std::size_t n() const { return summary + reflective + unrelated + other; }
};

struct SuitabilityReport {
  double summary_pct = 0;
  double reflective_pct = 0;
  double unrelated_pct = 0;
  double other_pct = 0;
  double worthy_pct = 0;
};

/// Per-category percentages plus the share falling in `worthy_categories`
/// (default: summary and reflective). Throws on an empty tally.
SuitabilityReport assess_suitability(
    const AssessmentTally& tally,
    const std::set<std::string>& worthy_categories = {"summary", "reflective"});

/// CSV with header pair_id,category; category must be one of
/// summary/reflective/unrelated/other.
AssessmentTally load_assessment(const std::string& path);

}  // namespace sst::summetrics
