#include "sst/humaneval.hpp"

#include <algorithm>
#include <fstream>

namespace sst::humaneval {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw EvalError(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& header,
                                               std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (!saw_header) {
      if (stripped != header)
        fail(path, lineno, "expected header '" + header + "'");
      saw_header = true;
      continue;
    }
    auto fields = split_commas(stripped);
    if (fields.size() != columns)
      fail(path, lineno, "expected " + std::to_string(columns) + " fields");
    rows.push_back(std::move(fields));
  }
  if (!saw_header) throw EvalError("empty file: " + path);
  return rows;
}

}  // namespace

std::map<std::string, ScaledCount> scaled_counts(const std::vector<Rating>& ratings,
                                                 const std::string& quality,
                                                 int threshold) {
  std::map<std::string, ScaledCount> counts;
  for (const auto& r : ratings) {
    if (r.quality != quality) continue;
    auto& c = counts[r.system];
    ++c.n;
    if (r.score >= threshold) {
      ++c.high;
    } else {
      ++c.low;
    }
  }
  if (counts.empty())
    throw EvalError("no ratings for quality '" + quality + "'");
  return counts;
}

std::map<std::string, BWScore> best_worst(const std::vector<BWVote>& votes) {
  std::map<std::string, BWScore> scores;
  for (const auto& v : votes) {
    auto& s = scores[v.system];
    if (v.is_best) {
      ++s.best;
    } else {
      ++s.worst;
    }
  }
  return scores;
}

std::vector<std::string> rank_systems(const std::map<std::string, BWScore>& scores) {
  std::vector<std::string> order;
  order.reserve(scores.size());
  for (const auto& [system, s] : scores) order.push_back(system);
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     const auto sa = scores.at(a).score();
                     const auto sb = scores.at(b).score();
                     if (sa != sb) return sa > sb;
                     return a < b;
                   });
  return order;
}

std::vector<Rating> load_ratings(const std::string& path) {
  std::vector<Rating> ratings;
  for (const auto& row : read_csv(path, "evaluator,system,quality,score", 4)) {
    Rating r{row[0], row[1], row[2], 0};
    try {
      r.score = std::stoi(row[3]);
    } catch (const std::exception&) {
      throw EvalError(path + ": unparseable score '" + row[3] + "'");
    }
    if (r.score < 1 || r.score > 5)
      throw EvalError(path + ": score out of range 1..5: " + row[3]);
    ratings.push_back(std::move(r));
  }
  return ratings;
}

std::vector<BWVote> load_votes(const std::string& path) {
  std::vector<BWVote> votes;
  for (const auto& row : read_csv(path, "evaluator,system,vote", 3)) {
    if (row[2] != "best" && row[2] != "worst")
      throw EvalError(path + ": vote must be best or worst, got '" + row[2] + "'");
    votes.push_back({row[0], row[1], row[2] == "best"});
  }
  return votes;
}

}  // namespace sst::humaneval
