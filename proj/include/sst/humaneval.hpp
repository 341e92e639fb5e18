#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Human-evaluation aggregation: scaled-ranking counts per quality and
// best-worst scaling with system ranking.
namespace sst::humaneval {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rating {
  std::string evaluator;
  std::string system;  // model plus decoding, e.g. "bert2bert/greedy"
  std::string quality;
  int score = 0;  // 1 (poor) to 5 (excellent)
};

struct BWVote {
  std::string evaluator;
  std::string system;
  bool is_best = false;  // false means a worst vote
};

struct ScaledCount {
  std::size_t high = 0;  // score >= threshold
  std::size_t low = 0;
  std::size_t n = 0;
};

/// Per-system counts of ratings at or above the threshold for one quality.
/// Throws when no rating matches the quality.
std::map<std::string, ScaledCount> scaled_counts(const std::vector<Rating>& ratings,
                                                 const std::string& quality,
                                                 int threshold = 4);

struct BWScore {
  std::size_t best = 0;
  std::size_t worst = 0;
  long long score() const {
    return static_cast<long long>(best) - static_cast<long long>(worst);
  }
};

std::map<std::string, BWScore> best_worst(const std::vector<BWVote>& votes);

/// Descending by score, ties broken by system label.
std::vector<std::string> rank_systems(const std::map<std::string, BWScore>& scores);

/// CSV, header evaluator,system,quality,score.
std::vector<Rating> load_ratings(const std::string& path);

/// CSV, header evaluator,system,vote with vote in {best, worst}.
std::vector<BWVote> load_votes(const std::string& path);

}  // namespace sst::humaneval
