#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "sst/humaneval.hpp"

using namespace sst::humaneval;

namespace {

const std::string kRatings =
    std::string(SST_DATA_DIR) + "/humaneval/ratings_coherence.csv";
const std::string kVotes =
    std::string(SST_DATA_DIR) + "/humaneval/votes_best_worst.csv";

std::string write_temp(const std::string& content) {
  static int counter = 0;
  const std::string path =
      "/tmp/sst_humaneval_test_" + std::to_string(counter++) + ".csv";
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("scaled counts split at the threshold") {
  const std::vector<Rating> ratings = {
      {"e1", "sys", "overall", 4}, {"e2", "sys", "overall", 5},
      {"e3", "sys", "overall", 3}, {"e1", "other", "overall", 1},
      {"e1", "sys", "keyword_capture", 5},  // different quality, ignored
  };
  const auto counts = scaled_counts(ratings, "overall");
  CHECK(counts.at("sys").high == 2);
  CHECK(counts.at("sys").low == 1);
  CHECK(counts.at("sys").n == 3);
  CHECK(counts.at("other").high == 0);
  CHECK(counts.at("other").n == 1);
}

TEST_CASE("threshold is configurable") {
  const std::vector<Rating> ratings = {
      {"e", "s", "q", 4}, {"e", "s", "q", 5}, {"e", "s", "q", 5}};
  const auto counts = scaled_counts(ratings, "q", 5);
  CHECK(counts.at("s").high == 2);
  CHECK(counts.at("s").low == 1);
}

TEST_CASE("scaled counts reject an unknown quality") {
  const std::vector<Rating> ratings = {{"e", "s", "q", 4}};
  CHECK_THROWS_AS(scaled_counts(ratings, "nope"), EvalError);
  CHECK_THROWS_AS(scaled_counts({}, "q"), EvalError);
}

TEST_CASE("high plus low always equals n") {
  const auto counts = scaled_counts(load_ratings(kRatings),
                                    "coherence_readability");
  CHECK(counts.size() == 20);
  for (const auto& [system, c] : counts) {
    CAPTURE(system);
    CHECK(c.high + c.low == c.n);
    CHECK(c.n == 20);
  }
  CHECK(counts.at("bert2bert/greedy").high == 11);
  CHECK(counts.at("bert2bert/greedy").low == 9);
}

TEST_CASE("best-worst scores") {
  std::vector<BWVote> votes;
  for (int i = 0; i < 13; ++i) votes.push_back({"e", "A", true});
  for (int i = 0; i < 7; ++i) votes.push_back({"e", "A", false});
  for (int i = 0; i < 8; ++i) votes.push_back({"e", "B", true});
  for (int i = 0; i < 12; ++i) votes.push_back({"e", "B", false});
  const auto scores = best_worst(votes);
  CHECK(scores.at("A").score() == 6);
  CHECK(scores.at("B").score() == -4);
  CHECK(best_worst({}).empty());
}

TEST_CASE("score is invariant under evaluator relabeling") {
  std::vector<BWVote> votes = {{"e1", "A", true}, {"e2", "A", false},
                               {"e3", "A", true}};
  auto relabeled = votes;
  for (auto& v : relabeled) v.evaluator = "x";
  CHECK(best_worst(votes).at("A").score() ==
        best_worst(relabeled).at("A").score());
}

TEST_CASE("ranking is descending with lexicographic ties") {
  std::map<std::string, BWScore> scores;
  scores["b"] = {6, 0};
  scores["a"] = {1, 5};
  scores["c"] = {3, 3};
  scores["d"] = {6, 6};  // ties with c at 0
  const auto order = rank_systems(scores);
  CHECK(order == std::vector<std::string>{"b", "c", "d", "a"});
  CHECK(rank_systems({{"solo", {1, 0}}}) == std::vector<std::string>{"solo"});
}

TEST_CASE("vote conservation on the shipped fixture") {
  const auto votes = load_votes(kVotes);
  const auto scores = best_worst(votes);
  std::size_t best_total = 0, worst_total = 0, best_cast = 0, worst_cast = 0;
  for (const auto& [system, s] : scores) {
    best_total += s.best;
    worst_total += s.worst;
  }
  for (const auto& v : votes) (v.is_best ? best_cast : worst_cast) += 1;
  CHECK(best_total == best_cast);
  CHECK(worst_total == worst_cast);
  CHECK(scores.size() == 20);
  CHECK(scores.at("bert2bert/greedy").score() == 6);
  CHECK(scores.at("robertashare/greedy").score() == -18);
}

TEST_CASE("csv loaders validate their input") {
  SUBCASE("bad header") {
    const auto path = write_temp("who,what\n");
    CHECK_THROWS_AS(load_ratings(path), EvalError);
    std::remove(path.c_str());
  }
  SUBCASE("score out of range") {
    const auto path = write_temp("evaluator,system,quality,score\ne,s,q,6\n");
    CHECK_THROWS_AS(load_ratings(path), EvalError);
    std::remove(path.c_str());
  }
  SUBCASE("unparseable score") {
    const auto path = write_temp("evaluator,system,quality,score\ne,s,q,x\n");
    CHECK_THROWS_AS(load_ratings(path), EvalError);
    std::remove(path.c_str());
  }
  SUBCASE("invalid vote value") {
    const auto path = write_temp("evaluator,system,vote\ne,s,middling\n");
    CHECK_THROWS_AS(load_votes(path), EvalError);
    std::remove(path.c_str());
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_votes("/nonexistent.csv"), EvalError);
  }
}
