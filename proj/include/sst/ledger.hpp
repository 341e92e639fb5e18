#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Epoch-wise training/evaluation loss ledgers: perplexity, early stopping,
// fit classification.
namespace sst::ledger {

class LedgerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpochRecord {
  long long epoch = 0;
  double train_loss = 0;
  double eval_loss = 0;
};

struct Ledger {
  std::vector<EpochRecord> records;
  // Rows whose printed perplexity column deviated from exp(eval_loss) by
  // more than 0.1% relative error.
  std::vector<std::string> perplexity_mismatches;
};

/// exp(loss). Throws on NaN or infinite input.
double perplexity(double loss);

struct EarlyStop {
  std::size_t best_index = 0;  // earliest epoch attaining the minimum eval loss
  std::optional<std::size_t> stop_index;
};

/// Stop fires at the first epoch after which `patience` consecutive epochs
/// failed to improve the running minimum eval loss by more than min_delta.
/// When the stop fires, rows past it are ignored: they describe training the
/// stopping rule would have cut off, so best_index is the earliest minimum
/// over the rows up to and including the stop.
EarlyStop early_stop(const std::vector<EpochRecord>& records,
                     std::size_t patience = 3, double min_delta = 0.0);

// The labels carry a "-per-paper-rule" suffix on purpose: the underlying
// rule inverts the usual machine-learning convention (here train loss above
// eval loss reads as overfit), so bare labels would mislead.
enum class FitClass { OverfitPerPaperRule, UnderfitPerPaperRule, Converged };

FitClass fit_class(const EpochRecord& record, double epsilon);
std::string fit_class_name(FitClass c);

/// Comma- or tab-separated, header epoch,train_loss,eval_loss[,perplexity].
/// Throws naming the line on unparseable rows or non-monotone epochs.
Ledger load_ledger(const std::string& path);

}  // namespace sst::ledger
