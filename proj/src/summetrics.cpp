#include "sst/summetrics.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "sst/devanagari.hpp"

namespace sst::summetrics {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> ngrams(const std::vector<std::string>& tokens,
                                std::size_t n) {
  std::vector<std::string> out;
  if (tokens.size() < n) return out;
  out.reserve(tokens.size() - n + 1);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      g.push_back(' ');
      g += tokens[i + k];
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

CorpusStats corpus_stats(
    const std::map<std::string, std::vector<corpus::SentenceRecord>>& by_source) {
  CorpusStats stats;
  std::unordered_set<std::string> global_vocab;
  for (const auto& [name, records] : by_source) {
    SourceTotals totals;
    std::unordered_set<std::string> vocab;
    for (const auto& rec : records) {
      ++totals.sentence_count;
      for (auto& tok : deva::tokenize(rec.sentence)) {
        ++totals.total_tokens;
        global_vocab.insert(tok);
        vocab.insert(std::move(tok));
      }
    }
    totals.unique_tokens = vocab.size();
    stats.total_tokens += totals.total_tokens;
    stats.sentence_count += totals.sentence_count;
    stats.per_source.emplace(name, totals);
  }
  stats.unique_tokens = global_vocab.size();
  return stats;
}

double novel_ngram_pct(const corpus::DocSummaryPair& pair, std::size_t n,
                       NgramMode mode) {
  if (n == 0) throw MetricError("n-gram order must be at least 1");
  const auto summ_tokens = deva::tokenize(pair.summary);
  if (summ_tokens.size() < n)
    throw MetricError("summary has fewer tokens than the n-gram order");
  const auto doc_grams = ngrams(deva::tokenize(pair.document), n);
  const auto summ_grams = ngrams(summ_tokens, n);
  if (mode == NgramMode::Set) {
    const std::unordered_set<std::string> doc_set(doc_grams.begin(), doc_grams.end());
    const std::unordered_set<std::string> summ_set(summ_grams.begin(),
                                                   summ_grams.end());
    std::size_t novel = 0;
    for (const auto& g : summ_set)
      if (!doc_set.count(g)) ++novel;
    return 100.0 * static_cast<double>(novel) /
           static_cast<double>(summ_set.size());
  }
  std::unordered_map<std::string, std::size_t> doc_counts;
  for (const auto& g : doc_grams) ++doc_counts[g];
  std::size_t novel = 0;
  for (const auto& g : summ_grams) {
    auto it = doc_counts.find(g);
    if (it == doc_counts.end() || it->second == 0) {
      ++novel;
    } else {
      --it->second;
    }
  }
  return 100.0 * static_cast<double>(novel) /
         static_cast<double>(summ_grams.size());
}

double compression_rate(const corpus::DocSummaryPair& pair) {
  const auto summ = deva::token_count(pair.summary);
  if (summ == 0) throw MetricError("empty summary has no compression rate");
  return static_cast<double>(deva::token_count(pair.document)) /
         static_cast<double>(summ);
}

SuitabilityReport assess_suitability(const AssessmentTally& tally,
                                     const std::set<std::string>& worthy) {
  const auto n = tally.n();
  if (n == 0) throw MetricError("empty assessment tally");
  const auto pct = [n](std::size_t c) {
    return 100.0 * static_cast<double>(c) / static_cast<double>(n);
  };
  SuitabilityReport report;
  report.summary_pct = pct(tally.summary);
  report.reflective_pct = pct(tally.reflective);
  report.unrelated_pct = pct(tally.unrelated);
  report.other_pct = pct(tally.other);
  if (worthy.count("summary")) report.worthy_pct += report.summary_pct;
  if (worthy.count("reflective")) report.worthy_pct += report.reflective_pct;
  if (worthy.count("unrelated")) report.worthy_pct += report.unrelated_pct;
  if (worthy.count("other")) report.worthy_pct += report.other_pct;
  return report;
}

AssessmentTally load_assessment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MetricError("cannot open assessment file: " + path);
  AssessmentTally tally;
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (!saw_header) {
      if (stripped != "pair_id,category")
        throw MetricError(path + ":" + std::to_string(lineno) +
                          ": expected header 'pair_id,category'");
      saw_header = true;
      continue;
    }
    const auto comma = stripped.find(',');
    if (comma == std::string::npos)
      throw MetricError(path + ":" + std::to_string(lineno) +
                        ": expected pair_id,category");
    const std::string category = trim(stripped.substr(comma + 1));
    if (category == "summary") {
      ++tally.summary;
    } else if (category == "reflective") {
      ++tally.reflective;
    } else if (category == "unrelated") {
      ++tally.unrelated;
    } else if (category == "other") {
      ++tally.other;
    } else {
      throw MetricError(path + ":" + std::to_string(lineno) +
                        ": unknown category '" + category + "'");
    }
  }
  if (!saw_header) throw MetricError("empty assessment file: " + path);
  return tally;
}

}  // namespace sst::summetrics
