#include "sst/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <unordered_set>

#include "sst/devanagari.hpp"

namespace sst::corpus {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::string>> paragraphs(
    std::string_view raw_article, const SourceSpec& spec, std::uint64_t next_id) {
  std::vector<std::pair<std::uint64_t, std::string>> out;
  std::size_t start = 0;
  std::uint64_t id = next_id;
  while (start <= raw_article.size()) {
    auto sep = raw_article.find("\n\n", start);
    if (sep == std::string_view::npos) sep = raw_article.size();
    const std::string clean = deva::normalize(raw_article.substr(start, sep - start));
    if (!clean.empty()) {
      out.emplace_back(id, clean);
      if (spec.has_paragraph_ids) ++id;
    }
    start = sep + 2;
  }
  return out;
}

std::vector<SentenceRecord> lm_records(
    const std::vector<std::pair<std::uint64_t, std::string>>& paras) {
  std::vector<SentenceRecord> out;
  for (const auto& [id, para] : paras)
    for (auto& s : deva::segment_sentences(para))
      out.push_back({id, std::move(s)});
  return out;
}

std::vector<std::string> dedup_merge(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::unordered_set<std::string_view> seen;
  for (const auto* src : {&a, &b}) {
    for (const auto& s : *src) {
      if (seen.insert(s).second) out.push_back(s);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> split_sizes(std::size_t n, double train_ratio) {
  if (!(train_ratio > 0.0 && train_ratio < 1.0))
    throw CorpusError("train ratio must lie in (0,1), got " +
                      std::to_string(train_ratio));
  // Nudge before flooring: 0.99 is not representable, and 0.99*200 lands
  // just under 198 in binary floating point.
  const auto train =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_ratio + 1e-9));
  return {train, n - train};
}

std::pair<std::vector<std::string>, std::vector<std::string>> shuffle_split(
    std::vector<std::string> records, double train_ratio, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Hand-rolled Fisher-Yates: std::shuffle's draw sequence is not pinned by
  // the standard, and the split must be bit-identical across toolchains.
  for (std::size_t i = records.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(records[i - 1], records[j]);
  }
  const auto [train_n, test_n] = split_sizes(records.size(), train_ratio);
  (void)test_n;
  std::vector<std::string> test(records.begin() + static_cast<std::ptrdiff_t>(train_n),
                                records.end());
  records.resize(train_n);
  return {std::move(records), std::move(test)};
}

std::optional<DocSummaryPair> first_sentence_pair(std::uint64_t para_id,
                                                  std::string_view paragraph) {
  const auto sentences = deva::segment_sentences(paragraph);
  if (sentences.size() < 2) return std::nullopt;
  DocSummaryPair pair;
  pair.id = para_id;
  pair.summary = sentences[0];
  for (std::size_t i = 1; i < sentences.size(); ++i) {
    if (!pair.document.empty()) pair.document.push_back(' ');
    pair.document += sentences[i];
  }
  return pair;
}

JournalBuild journal_triples(const std::vector<JournalRow>& rows,
                             std::uint64_t base_id) {
  JournalBuild build;
  std::uint64_t id = base_id;
  for (const auto& row : rows) {
    const std::string doc = deva::normalize(row.document);
    const std::string summ = deva::normalize(row.summary);
    if (doc.empty() || summ.empty()) {
      ++build.skipped;
      continue;
    }
    build.pairs.push_back({deva::normalize(row.title), doc, summ, id++});
  }
  return build;
}

std::vector<SourceSpec> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open manifest: " + path);
  std::vector<SourceSpec> specs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw CorpusError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "source") {
      for (const auto& s : specs)
        if (s.name == value)
          throw CorpusError(path + ":" + std::to_string(lineno) +
                            ": duplicate source '" + value + "'");
      SourceSpec spec;
      spec.name = value;
      specs.push_back(std::move(spec));
      continue;
    }
    const auto dot = key.find('.');
    if (dot == std::string::npos || specs.empty() ||
        key.substr(0, dot) != specs.back().name)
      throw CorpusError(path + ":" + std::to_string(lineno) +
                        ": key '" + key + "' does not belong to the open source");
    const std::string field = key.substr(dot + 1);
    auto& spec = specs.back();
    if (field == "input") {
      spec.input_path = value;
    } else if (field == "base_id") {
      spec.base_id = std::stoull(value);
    } else if (field == "paragraph_ids") {
      spec.has_paragraph_ids = (value == "true" || value == "1");
    } else {
      throw CorpusError(path + ":" + std::to_string(lineno) +
                        ": unknown field '" + field + "'");
    }
  }
  if (specs.empty()) throw CorpusError("manifest lists no sources: " + path);
  return specs;
}

}  // namespace sst::corpus
