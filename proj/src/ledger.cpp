#include "sst/ledger.hpp"

#include <cmath>
#include <fstream>

namespace sst::ledger {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  // Accept either separator; ledgers in the wild come both ways.
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',' || line[i] == '\t') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw LedgerError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

double perplexity(double loss) {
  if (!std::isfinite(loss)) throw LedgerError("loss must be finite");
  return std::exp(loss);
}

EarlyStop early_stop(const std::vector<EpochRecord>& records,
                     std::size_t patience, double min_delta) {
  if (records.empty()) throw LedgerError("empty ledger");
  if (patience == 0) throw LedgerError("patience must be at least 1");
  EarlyStop result;
  double best = records[0].eval_loss;
  std::size_t stale = 0;
  std::size_t end = records.size();
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (best - records[i].eval_loss > min_delta) {
      best = records[i].eval_loss;
      stale = 0;
    } else {
      // An improvement below min_delta still moves the reported minimum
      // but does not reset the patience counter.
      if (records[i].eval_loss < best) best = records[i].eval_loss;
      ++stale;
      if (stale >= patience) {
        result.stop_index = i;
        end = i + 1;
        break;
      }
    }
  }
  // Earliest epoch attaining the minimum over the rows that training,
  // stopped or not, actually covers.
  std::size_t best_index = 0;
  for (std::size_t i = 1; i < end; ++i)
    if (records[i].eval_loss < records[best_index].eval_loss) best_index = i;
  result.best_index = best_index;
  return result;
}

FitClass fit_class(const EpochRecord& record, double epsilon) {
  const double diff = record.train_loss - record.eval_loss;
  if (std::fabs(diff) <= epsilon) return FitClass::Converged;
  return diff > 0 ? FitClass::OverfitPerPaperRule : FitClass::UnderfitPerPaperRule;
}

std::string fit_class_name(FitClass c) {
  switch (c) {
    case FitClass::OverfitPerPaperRule: return "overfit-per-paper-rule";
    case FitClass::UnderfitPerPaperRule: return "underfit-per-paper-rule";
    case FitClass::Converged: return "converged";
  }
  return "?";
}

Ledger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LedgerError("cannot open ledger: " + path);
  Ledger ledger;
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  bool has_ppl_column = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto fields = split_fields(stripped);
    if (!saw_header) {
      if (fields.size() < 3 || fields[0] != "epoch" ||
          fields[1] != "train_loss" || fields[2] != "eval_loss")
        fail(path, lineno, "expected header epoch,train_loss,eval_loss[,perplexity]");
      if (fields.size() == 4 && fields[3] == "perplexity") {
        has_ppl_column = true;
      } else if (fields.size() != 3) {
        fail(path, lineno, "unexpected header columns");
      }
      saw_header = true;
      continue;
    }
    const std::size_t want = has_ppl_column ? 4 : 3;
    if (fields.size() != want)
      fail(path, lineno, "expected " + std::to_string(want) + " fields, got " +
                             std::to_string(fields.size()));
    EpochRecord rec;
    try {
      rec.epoch = std::stoll(fields[0]);
      rec.train_loss = std::stod(fields[1]);
      rec.eval_loss = std::stod(fields[2]);
    } catch (const std::exception&) {
      fail(path, lineno, "unparseable row");
    }
    if (!std::isfinite(rec.train_loss) || !std::isfinite(rec.eval_loss))
      fail(path, lineno, "non-finite loss");
    if (!ledger.records.empty() && rec.epoch <= ledger.records.back().epoch)
      fail(path, lineno, "epochs must be strictly increasing");
    if (has_ppl_column) {
      double printed = 0;
      try {
        printed = std::stod(fields[3]);
      } catch (const std::exception&) {
        fail(path, lineno, "unparseable perplexity");
      }
      const double expected = perplexity(rec.eval_loss);
      if (std::fabs(printed - expected) / printed > 0.001)
        ledger.perplexity_mismatches.push_back(
            path + ":" + std::to_string(lineno) + ": printed " + fields[3] +
            " vs exp(eval_loss) " + std::to_string(expected));
    }
    ledger.records.push_back(rec);
  }
  if (ledger.records.empty()) throw LedgerError("ledger has no rows: " + path);
  return ledger;
}

}  // namespace sst::ledger
