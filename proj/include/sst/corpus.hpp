#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Dataset construction: the LM sentence corpus with source-prefixed
// paragraph ids and the document-summary parallel corpus.
namespace sst::corpus {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceSpec {
  std::string name;
  std::uint64_t base_id = 0;
  // Wikipedia-style sources carry no paragraph numbering: every paragraph
  // of an article shares one sentinel id.
  bool has_paragraph_ids = true;
  std::string input_path;
};

struct SentenceRecord {
  std::uint64_t para_id = 0;
  std::string sentence;
};

struct DocSummaryPair {
  std::string title;
  std::string document;
  std::string summary;
  std::uint64_t id = 0;
};

/// Splits a raw article on blank lines, normalizes each paragraph, drops
/// empties, and assigns ids starting at `next_id` (a single shared id when
/// the source has no paragraph numbering).
std::vector<std::pair<std::uint64_t, std::string>> paragraphs(
    std::string_view raw_article, const SourceSpec& spec, std::uint64_t next_id);

std::vector<SentenceRecord> lm_records(
    const std::vector<std::pair<std::uint64_t, std::string>>& paras);

/// Set union keeping first-occurrence order, a before b.
std::vector<std::string> dedup_merge(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

/// train = floor(n * ratio), test = n - train. Throws on ratio outside (0,1).
std::pair<std::size_t, std::size_t> split_sizes(std::size_t n, double train_ratio);

/// Seeded Fisher-Yates permutation then split_sizes partition; the same
/// seed always produces the same partition, byte for byte.
std::pair<std::vector<std::string>, std::vector<std::string>> shuffle_split(
    std::vector<std::string> records, double train_ratio, std::uint64_t seed);

/// Summary = first sentence, document = the remaining sentences. Empty for
/// paragraphs with fewer than two sentences.
std::optional<DocSummaryPair> first_sentence_pair(std::uint64_t para_id,
                                                  std::string_view paragraph);

struct JournalRow {
  std::string title;
  std::string document;
  std::string summary;
};

struct JournalBuild {
  std::vector<DocSummaryPair> pairs;
  std::size_t skipped = 0;
};

JournalBuild journal_triples(const std::vector<JournalRow>& rows,
                             std::uint64_t base_id);

/// key=value manifest: `source=<name>` opens a source, then `<name>.input`,
/// `<name>.base_id`, `<name>.paragraph_ids`.
std::vector<SourceSpec> load_manifest(const std::string& path);

}  // namespace sst::corpus
