// Command-line front end: clean, split-sandhi, build-lm, build-sum, stats,
// rouge, ledger, humaneval, pipeline. Logs go to stderr, data to stdout or
// files, so every subcommand composes in a shell. Exit codes: 0 success,
// 1 usage error, 2 data error.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "sst/corpus.hpp"
#include "sst/devanagari.hpp"
#include "sst/humaneval.hpp"
#include "sst/ledger.hpp"
#include "sst/rouge.hpp"
#include "sst/sandhi.hpp"
#include "sst/summetrics.hpp"

namespace fs = std::filesystem;
using namespace sst;

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::ofstream open_out(const std::string& path) {
  if (const auto dir = fs::path(path).parent_path(); !dir.empty())
    fs::create_directories(dir);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  auto out = open_out(path);
  for (const auto& l : lines) out << l << '\n';
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      cols.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return cols;
}

std::vector<corpus::JournalRow> load_journal(const std::string& path) {
  std::vector<corpus::JournalRow> rows;
  bool saw_header = false;
  std::size_t lineno = 0;
  for (const auto& line : read_lines(path)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cols = split_tabs(line);
    if (!saw_header) {
      if (cols.size() < 3 || cols[0] != "title")
        throw DataError(path + ": expected header title\\tdocument\\tsummary");
      saw_header = true;
      continue;
    }
    if (cols.size() != 3)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 3 columns");
    rows.push_back({cols[0], cols[1], cols[2]});
  }
  return rows;
}

struct Config {
  std::map<std::string, std::string> kv;
  std::string get(const std::string& key, const std::string& fallback = "") const {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }
};

Config load_config(const std::string& path) {
  Config cfg;
  std::size_t lineno = 0;
  for (const auto& raw : read_lines(path)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected key=value");
    cfg.kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

// ---- stage implementations shared by the subcommands and `pipeline` ----

std::vector<std::string> clean_article(const std::string& raw) {
  std::vector<std::string> paras;
  corpus::SourceSpec spec;  // ids unused here, one line per paragraph
  for (auto& [id, text] : corpus::paragraphs(raw, spec, 0)) paras.push_back(text);
  return paras;
}

std::string split_line(const std::string& line, const sandhi::WordSplitDict* dict,
                       const sandhi::RuleSet* rules,
                       std::vector<std::size_t>* fires) {
  std::string text = line;
  if (dict) text = sandhi::apply_word_specific(text, *dict);
  if (rules) {
    std::vector<std::size_t> local;
    text = sandhi::apply_common_patterns(text, *rules, fires ? &local : nullptr);
    if (fires) {
      fires->resize(local.size(), 0);
      for (std::size_t i = 0; i < local.size(); ++i) (*fires)[i] += local[i];
    }
  }
  return text;
}

struct BuiltSources {
  // Paragraphs per source, already normalized and sandhi-split.
  std::vector<std::pair<corpus::SourceSpec,
                        std::vector<std::pair<std::uint64_t, std::string>>>> sources;
};

BuiltSources build_sources(const std::string& manifest_path,
                           const sandhi::WordSplitDict* dict,
                           const sandhi::RuleSet* rules) {
  BuiltSources built;
  for (auto& spec : corpus::load_manifest(manifest_path)) {
    if (spec.input_path.empty())
      throw DataError("source '" + spec.name + "' has no input path");
    auto paras = corpus::paragraphs(read_file(spec.input_path), spec, spec.base_id);
    for (auto& [id, text] : paras) text = split_line(text, dict, rules, nullptr);
    built.sources.emplace_back(std::move(spec), std::move(paras));
  }
  return built;
}

std::vector<std::string> lm_lines(const BuiltSources& built) {
  std::vector<std::string> lines;
  std::unordered_set<std::string> seen;  // dedup on sentence text, first wins
  for (const auto& [spec, paras] : built.sources) {
    for (const auto& rec : corpus::lm_records(paras)) {
      if (!seen.insert(rec.sentence).second) continue;
      lines.push_back(std::to_string(rec.para_id) + '\t' + rec.sentence);
    }
  }
  return lines;
}

std::string pair_line(const corpus::DocSummaryPair& p) {
  return p.title + '\t' + p.document + '\t' + p.summary + '\t' +
         std::to_string(p.id);
}

std::vector<std::string> sum_lines(const BuiltSources& built,
                                   const std::string& journal_path,
                                   std::uint64_t journal_base_id,
                                   const sandhi::WordSplitDict* dict,
                                   const sandhi::RuleSet* rules,
                                   std::size_t* journal_skipped) {
  std::vector<std::string> lines;
  for (const auto& [spec, paras] : built.sources)
    for (const auto& [id, text] : paras)
      if (auto pair = corpus::first_sentence_pair(id, text))
        lines.push_back(pair_line(*pair));
  if (!journal_path.empty()) {
    const auto build =
        corpus::journal_triples(load_journal(journal_path), journal_base_id);
    if (journal_skipped) *journal_skipped = build.skipped;
    for (auto pair : build.pairs) {
      pair.document = split_line(pair.document, dict, rules, nullptr);
      pair.summary = split_line(pair.summary, dict, rules, nullptr);
      lines.push_back(pair_line(pair));
    }
  }
  return lines;
}

void write_split(const std::string& out_dir, const std::string& stem,
                 std::vector<std::string> lines, double ratio, std::uint64_t seed,
                 std::optional<long long> expected_train) {
  const auto [train, test] = corpus::shuffle_split(std::move(lines), ratio, seed);
  write_lines(out_dir + "/" + stem + "_train" + (stem == "lm" ? ".txt" : ".tsv"),
              train);
  write_lines(out_dir + "/" + stem + "_test" + (stem == "lm" ? ".txt" : ".tsv"),
              test);
  std::cerr << stem << ": " << train.size() << " train + " << test.size()
            << " test records (ratio " << ratio << ", seed " << seed << ")\n";
  if (expected_train) {
    const long long delta =
        static_cast<long long>(train.size()) - *expected_train;
    std::cerr << stem << ": expected " << *expected_train
              << " train records, got " << train.size() << " (delta " << delta
              << ")\n";
  }
}

std::string stats_report(
    const std::map<std::string, std::vector<corpus::SentenceRecord>>& by_source) {
  const auto stats = summetrics::corpus_stats(by_source);
  std::ostringstream out;
  out << "sentence_count=" << stats.sentence_count << '\n'
      << "total_tokens=" << stats.total_tokens << '\n'
      << "unique_tokens=" << stats.unique_tokens << '\n';
  for (const auto& [name, t] : stats.per_source) {
    out << name << ".sentence_count=" << t.sentence_count << '\n'
        << name << ".total_tokens=" << t.total_tokens << '\n'
        << name << ".unique_tokens=" << t.unique_tokens << '\n';
  }
  return out.str();
}

std::map<std::string, std::vector<corpus::SentenceRecord>> records_from_lm_file(
    const std::string& path) {
  std::vector<corpus::SentenceRecord> records;
  for (const auto& line : read_lines(path)) {
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError(path + ": expected <para_id>\\t<sentence> lines");
    records.push_back(
        {std::stoull(line.substr(0, tab)), line.substr(tab + 1)});
  }
  return {{fs::path(path).stem().string(), std::move(records)}};
}

// ---- subcommand bodies ----

int cmd_clean(const std::string& input, const std::string& out_path) {
  const auto paras = clean_article(read_file(input));
  if (out_path.empty()) {
    for (const auto& p : paras) std::cout << p << '\n';
  } else {
    write_lines(out_path, paras);
  }
  std::cerr << "clean: " << paras.size() << " paragraphs from " << input << "\n";
  return 0;
}

int cmd_split_sandhi(const std::string& input, const std::string& rules_path,
                     const std::string& dict_path, const std::string& out_path,
                     bool report) {
  const auto rules = sandhi::load_rules(rules_path);
  std::optional<sandhi::WordSplitDict> dict;
  if (!dict_path.empty()) dict = sandhi::load_word_splits(dict_path);
  for (const auto& note : rules.audit_notes)
    std::cerr << "split-sandhi: note: " << note << '\n';

  std::vector<std::string> out;
  std::vector<std::size_t> fires;
  std::string before, after;
  for (const auto& line : read_lines(input)) {
    const std::string clean = deva::normalize(line);
    const std::string split =
        split_line(clean, dict ? &*dict : nullptr, &rules, &fires);
    if (!before.empty()) before.push_back(' ');
    before += clean;
    if (!after.empty()) after.push_back(' ');
    after += split;
    out.push_back(split);
  }
  if (out_path.empty()) {
    for (const auto& l : out) std::cout << l << '\n';
  } else {
    write_lines(out_path, out);
  }
  const auto rep = sandhi::split_report(before, after, fires);
  std::cerr << "split-sandhi: " << rep.total_before << " -> " << rep.total_after
            << " tokens (" << rep.unique_before << " -> " << rep.unique_after
            << " unique)\n";
  if (report) {
    for (std::size_t i = 0; i < rep.rule_fires.size(); ++i)
      if (rep.rule_fires[i] > 0)
        std::cerr << "  rule line " << rules.rules[i].line << " '"
                  << rules.rules[i].pattern << "': " << rep.rule_fires[i]
                  << " fires\n";
  }
  return 0;
}

int cmd_build_lm(const std::string& manifest, const std::string& rules_path,
                 const std::string& dict_path, double ratio, std::uint64_t seed,
                 const std::string& out_dir,
                 std::optional<long long> expected_train) {
  std::optional<sandhi::RuleSet> rules;
  if (!rules_path.empty()) rules = sandhi::load_rules(rules_path);
  std::optional<sandhi::WordSplitDict> dict;
  if (!dict_path.empty()) dict = sandhi::load_word_splits(dict_path);
  const auto built = build_sources(manifest, dict ? &*dict : nullptr,
                                   rules ? &*rules : nullptr);
  write_split(out_dir, "lm", lm_lines(built), ratio, seed, expected_train);
  return 0;
}

int cmd_build_sum(const std::string& manifest, const std::string& journal,
                  std::uint64_t journal_base_id, const std::string& rules_path,
                  const std::string& dict_path, double ratio, std::uint64_t seed,
                  const std::string& out_dir,
                  std::optional<long long> expected_train) {
  std::optional<sandhi::RuleSet> rules;
  if (!rules_path.empty()) rules = sandhi::load_rules(rules_path);
  std::optional<sandhi::WordSplitDict> dict;
  if (!dict_path.empty()) dict = sandhi::load_word_splits(dict_path);
  BuiltSources built;
  if (!manifest.empty())
    built = build_sources(manifest, dict ? &*dict : nullptr,
                          rules ? &*rules : nullptr);
  std::size_t skipped = 0;
  auto lines = sum_lines(built, journal, journal_base_id,
                         dict ? &*dict : nullptr, rules ? &*rules : nullptr,
                         &skipped);
  if (skipped > 0)
    std::cerr << "build-sum: skipped " << skipped
              << " journal rows with empty document or summary\n";
  write_split(out_dir, "sum", std::move(lines), ratio, seed, expected_train);
  return 0;
}

int cmd_stats(const std::vector<std::string>& lm_files,
              const std::string& assessment_path) {
  std::map<std::string, std::vector<corpus::SentenceRecord>> by_source;
  for (const auto& f : lm_files) by_source.merge(records_from_lm_file(f));
  if (!by_source.empty()) std::cout << stats_report(by_source);
  if (!assessment_path.empty()) {
    const auto tally = summetrics::load_assessment(assessment_path);
    const auto rep = summetrics::assess_suitability(tally);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "assessment.n=%zu\nassessment.summary_pct=%.1f\n"
                  "assessment.reflective_pct=%.1f\nassessment.unrelated_pct=%.1f\n"
                  "assessment.other_pct=%.1f\nassessment.worthy_pct=%.1f\n",
                  tally.n(), rep.summary_pct, rep.reflective_pct,
                  rep.unrelated_pct, rep.other_pct, rep.worthy_pct);
    std::cout << buf;
  }
  return 0;
}

int cmd_rouge(const std::string& pairs_path, const std::string& ref_path,
              const std::string& hyp_path) {
  std::vector<std::pair<rouge::Tokens, rouge::Tokens>> pairs;
  if (!pairs_path.empty()) {
    for (const auto& line : read_lines(pairs_path)) {
      if (trim(line).empty()) continue;
      const auto cols = split_tabs(line);
      if (cols.size() != 3)
        throw DataError(pairs_path + ": expected id\\treference\\thypothesis");
      if (cols[0] == "id") continue;  // header
      pairs.emplace_back(deva::tokenize(deva::normalize(cols[1])),
                         deva::tokenize(deva::normalize(cols[2])));
    }
  } else {
    const auto refs = read_lines(ref_path);
    const auto hyps = read_lines(hyp_path);
    if (refs.size() != hyps.size())
      throw DataError("reference and hypothesis files differ in line count");
    for (std::size_t i = 0; i < refs.size(); ++i)
      pairs.emplace_back(deva::tokenize(deva::normalize(refs[i])),
                         deva::tokenize(deva::normalize(hyps[i])));
  }
  const auto means = rouge::rouge_batch(
      pairs, {rouge::Variant::R1, rouge::Variant::R2, rouge::Variant::RL});
  std::cout << "variant\trecall\tprecision\tf1\n";
  for (const auto& [v, s] : means) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s\t%.3f\t%.3f\t%.3f\n",
                  rouge::variant_name(v).c_str(), s.recall, s.precision, s.f1);
    std::cout << buf;
  }
  std::cerr << "rouge: scored " << pairs.size() << " pairs\n";
  return 0;
}

int cmd_ledger(const std::string& path, std::size_t patience, double min_delta,
               double epsilon) {
  const auto led = ledger::load_ledger(path);
  for (const auto& m : led.perplexity_mismatches)
    std::cerr << "ledger: perplexity mismatch: " << m << '\n';
  const auto stop = ledger::early_stop(led.records, patience, min_delta);
  const auto& best = led.records[stop.best_index];
  const auto& last = led.records.back();
  std::cout << "rows=" << led.records.size() << '\n'
            << "best_epoch=" << best.epoch << '\n'
            << "best_eval_loss=" << best.eval_loss << '\n'
            << "best_perplexity=" << ledger::perplexity(best.eval_loss) << '\n';
  if (stop.stop_index) {
    std::cout << "stop_epoch=" << led.records[*stop.stop_index].epoch << '\n';
  } else {
    std::cout << "stop_epoch=none\n";
  }
  std::cout << "final_fit="
            << ledger::fit_class_name(ledger::fit_class(last, epsilon)) << '\n';
  return 0;
}

int cmd_humaneval(const std::string& ratings_path, const std::string& quality,
                  int threshold, const std::string& votes_path) {
  if (!ratings_path.empty()) {
    const auto counts = humaneval::scaled_counts(
        humaneval::load_ratings(ratings_path), quality, threshold);
    std::cout << "system\thigh\tlow\tn\n";
    for (const auto& [system, c] : counts)
      std::cout << system << '\t' << c.high << '\t' << c.low << '\t' << c.n
                << '\n';
  }
  if (!votes_path.empty()) {
    const auto scores =
        humaneval::best_worst(humaneval::load_votes(votes_path));
    std::cout << "system\tbest\tworst\tscore\n";
    for (const auto& system : humaneval::rank_systems(scores)) {
      const auto& s = scores.at(system);
      std::cout << system << '\t' << s.best << '\t' << s.worst << '\t'
                << s.score() << '\n';
    }
    std::size_t best_total = 0, worst_total = 0;
    for (const auto& [system, s] : scores) {
      best_total += s.best;
      worst_total += s.worst;
    }
    std::cerr << "humaneval: " << best_total << " best and " << worst_total
              << " worst votes\n";
  }
  return 0;
}

int cmd_pipeline(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override) {
  const auto cfg = load_config(config_path);
  const std::string manifest = cfg.get("manifest");
  if (manifest.empty()) throw DataError(config_path + ": missing manifest=");
  const std::string rules_path = cfg.get("rules");
  const std::string dict_path = cfg.get("word_splits");
  const std::string journal = cfg.get("journal");
  const auto journal_base_id = std::stoull(cfg.get("journal_base_id", "0"));
  const double ratio_lm = std::stod(cfg.get("train_ratio_lm", "0.9"));
  const double ratio_sum = std::stod(cfg.get("train_ratio_sum", "0.99"));
  const std::uint64_t seed =
      seed_override ? *seed_override : std::stoull(cfg.get("seed", "42"));

  std::optional<sandhi::RuleSet> rules;
  if (!rules_path.empty()) rules = sandhi::load_rules(rules_path);
  std::optional<sandhi::WordSplitDict> dict;
  if (!dict_path.empty()) dict = sandhi::load_word_splits(dict_path);

  // Stage 1+2: clean and sandhi-split, with per-source intermediates so the
  // stages can be inspected or diffed against the standalone subcommands.
  BuiltSources built;
  for (auto& spec : corpus::load_manifest(manifest)) {
    const auto raw = read_file(spec.input_path);
    write_lines(out_dir + "/clean_" + spec.name + ".txt", clean_article(raw));
    auto paras = corpus::paragraphs(raw, spec, spec.base_id);
    std::vector<std::string> split_texts;
    for (auto& [id, text] : paras) {
      text = split_line(text, dict ? &*dict : nullptr,
                        rules ? &*rules : nullptr, nullptr);
      split_texts.push_back(text);
    }
    write_lines(out_dir + "/split_" + spec.name + ".txt", split_texts);
    built.sources.emplace_back(std::move(spec), std::move(paras));
  }

  // Stage 3: LM corpus.
  write_split(out_dir, "lm", lm_lines(built), ratio_lm, seed, std::nullopt);

  // Stage 4: summarization corpus.
  std::size_t skipped = 0;
  auto sum = sum_lines(built, journal, journal_base_id,
                       dict ? &*dict : nullptr, rules ? &*rules : nullptr,
                       &skipped);
  if (skipped > 0)
    std::cerr << "pipeline: skipped " << skipped << " journal rows\n";
  write_split(out_dir, "sum", std::move(sum), ratio_sum, seed, std::nullopt);

  // Stage 5: corpus statistics over the split sentences.
  std::map<std::string, std::vector<corpus::SentenceRecord>> by_source;
  for (const auto& [spec, paras] : built.sources)
    by_source[spec.name] = corpus::lm_records(paras);
  auto out = open_out(out_dir + "/stats.txt");
  out << stats_report(by_source);
  std::cerr << "pipeline: artifacts written to " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sanskrit summarization corpus toolkit"};
  app.require_subcommand(1);

  std::string input, out_path, rules_path, dict_path, manifest, journal;
  std::string pairs_path, ref_path, hyp_path, ratings_path, votes_path;
  std::string config_path, out_dir = "out", quality = "coherence_readability";
  std::vector<std::string> lm_files;
  double ratio = 0.9, min_delta = 0.0, epsilon = 0.1;
  std::uint64_t seed = 42, journal_base_id = 0;
  std::size_t patience = 3;
  int threshold = 4;
  bool report = false;
  long long expected_train = -1;
  std::optional<std::uint64_t> seed_override;

  auto* clean = app.add_subcommand("clean", "Normalize a raw article");
  clean->add_option("input", input)->required();
  clean->add_option("--out", out_path);

  auto* split = app.add_subcommand("split-sandhi", "Apply sandhi splitting");
  split->add_option("input", input)->required();
  split->add_option("--rules", rules_path)->required();
  split->add_option("--word-splits", dict_path);
  split->add_option("--out", out_path);
  split->add_flag("--report", report, "Per-rule fire counts on stderr");

  auto* lm = app.add_subcommand("build-lm", "Build the LM sentence corpus");
  lm->add_option("--manifest", manifest)->required();
  lm->add_option("--rules", rules_path);
  lm->add_option("--word-splits", dict_path);
  lm->add_option("--ratio", ratio);
  lm->add_option("--seed", seed);
  lm->add_option("--out", out_dir);
  lm->add_option("--expected-train", expected_train,
                 "Log the delta against an expected train count");

  auto* sum = app.add_subcommand("build-sum", "Build the summary corpus");
  sum->add_option("--manifest", manifest);
  sum->add_option("--journal", journal);
  sum->add_option("--journal-base-id", journal_base_id);
  sum->add_option("--rules", rules_path);
  sum->add_option("--word-splits", dict_path);
  double ratio_sum = 0.99;
  sum->add_option("--ratio", ratio_sum);
  sum->add_option("--seed", seed);
  sum->add_option("--out", out_dir);
  sum->add_option("--expected-train", expected_train);

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  std::string assessment_path;
  stats->add_option("--lm", lm_files, "LM corpus files (<para_id>\\t<sentence>)");
  stats->add_option("--assessment", assessment_path,
                    "Suitability assessment CSV (pair_id,category)");

  auto* rg = app.add_subcommand("rouge", "ROUGE-1/2/L scoring");
  rg->add_option("--pairs", pairs_path, "TSV: id, reference, hypothesis");
  rg->add_option("--ref", ref_path);
  rg->add_option("--hyp", hyp_path);

  auto* led = app.add_subcommand("ledger", "Training-loss ledger report");
  led->add_option("file", input)->required();
  led->add_option("--patience", patience);
  led->add_option("--min-delta", min_delta);
  led->add_option("--epsilon", epsilon, "Convergence band for fit labels");

  auto* he = app.add_subcommand("humaneval", "Aggregate human ratings/votes");
  he->add_option("--ratings", ratings_path);
  he->add_option("--quality", quality);
  he->add_option("--threshold", threshold);
  he->add_option("--votes", votes_path);

  auto* pipe = app.add_subcommand("pipeline", "Run all stages from a config");
  pipe->add_option("--config", config_path)->required();
  pipe->add_option("--out", out_dir);
  pipe->add_option("--seed", [&seed_override](const std::vector<std::string>& v) {
    seed_override = std::stoull(v.at(0));
    return true;
  }, "Override the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage errors are always exit 1
  }

  try {
    if (clean->parsed()) return cmd_clean(input, out_path);
    if (split->parsed())
      return cmd_split_sandhi(input, rules_path, dict_path, out_path, report);
    if (lm->parsed())
      return cmd_build_lm(manifest, rules_path, dict_path, ratio, seed, out_dir,
                          expected_train >= 0
                              ? std::optional<long long>(expected_train)
                              : std::nullopt);
    if (sum->parsed())
      return cmd_build_sum(manifest, journal, journal_base_id, rules_path,
                           dict_path, ratio_sum, seed, out_dir,
                           expected_train >= 0
                               ? std::optional<long long>(expected_train)
                               : std::nullopt);
    if (stats->parsed()) {
      if (lm_files.empty() && assessment_path.empty()) {
        std::cerr << "stats: need --lm files or --assessment\n";
        return 1;
      }
      return cmd_stats(lm_files, assessment_path);
    }
    if (rg->parsed()) {
      if (pairs_path.empty() && (ref_path.empty() || hyp_path.empty())) {
        std::cerr << "rouge: need --pairs or both --ref and --hyp\n";
        return 1;
      }
      return cmd_rouge(pairs_path, ref_path, hyp_path);
    }
    if (led->parsed()) return cmd_ledger(input, patience, min_delta, epsilon);
    if (he->parsed()) {
      if (ratings_path.empty() && votes_path.empty()) {
        std::cerr << "humaneval: need --ratings or --votes\n";
        return 1;
      }
      return cmd_humaneval(ratings_path, quality, threshold, votes_path);
    }
    if (pipe->parsed()) return cmd_pipeline(config_path, out_dir, seed_override);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
