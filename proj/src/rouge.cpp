#include "sst/rouge.hpp"

#include <algorithm>
#include <unordered_map>

namespace sst::rouge {

namespace {

RougeScore from_counts(std::size_t overlap, std::size_t ref_n, std::size_t hyp_n) {
  RougeScore score;
  if (ref_n == 0 || hyp_n == 0) return score;
  score.recall = static_cast<double>(overlap) / static_cast<double>(ref_n);
  score.precision = static_cast<double>(overlap) / static_cast<double>(hyp_n);
  if (score.recall + score.precision > 0)
    score.f1 = 2 * score.recall * score.precision / (score.recall + score.precision);
  return score;
}

std::unordered_map<std::string, std::size_t> ngram_counts(const Tokens& tokens,
                                                          std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      g.push_back('\x1f');  // unit separator, cannot occur in a token
      g += tokens[i + k];
    }
    ++counts[std::move(g)];
  }
  return counts;
}

}  // namespace

RougeScore rouge_n(const Tokens& reference, const Tokens& hypothesis, std::size_t n) {
  if (n == 0) throw RougeError("n-gram order must be at least 1");
  const auto ref_counts = ngram_counts(reference, n);
  const auto hyp_counts = ngram_counts(hypothesis, n);
  std::size_t ref_total = 0, hyp_total = 0, overlap = 0;
  for (const auto& [g, c] : ref_counts) ref_total += c;
  for (const auto& [g, c] : hyp_counts) {
    hyp_total += c;
    const auto it = ref_counts.find(g);
    if (it != ref_counts.end()) overlap += std::min(c, it->second);
  }
  return from_counts(overlap, ref_total, hyp_total);
}

std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  if (a.empty() || b.empty()) return 0;
  // Two-row DP keeps memory linear in the shorter side.
  const Tokens& rows = a.size() <= b.size() ? b : a;
  const Tokens& cols = a.size() <= b.size() ? a : b;
  std::vector<std::size_t> prev(cols.size() + 1, 0), cur(cols.size() + 1, 0);
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    for (std::size_t j = 1; j <= cols.size(); ++j) {
      cur[j] = rows[i - 1] == cols[j - 1] ? prev[j - 1] + 1
                                          : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[cols.size()];
}

RougeScore rouge_l(const Tokens& reference, const Tokens& hypothesis) {
  return from_counts(lcs_length(reference, hypothesis), reference.size(),
                     hypothesis.size());
}

std::map<Variant, RougeScore> rouge_batch(
    const std::vector<std::pair<Tokens, Tokens>>& pairs,
    const std::vector<Variant>& variants) {
  if (pairs.empty()) throw RougeError("cannot average an empty pair list");
  std::map<Variant, RougeScore> means;
  for (const Variant v : variants) {
    RougeScore sum;
    for (const auto& [ref, hyp] : pairs) {
      RougeScore s;
      switch (v) {
        case Variant::R1: s = rouge_n(ref, hyp, 1); break;
        case Variant::R2: s = rouge_n(ref, hyp, 2); break;
        case Variant::RL: s = rouge_l(ref, hyp); break;
      }
      sum.recall += s.recall;
      sum.precision += s.precision;
      sum.f1 += s.f1;
    }
    const auto n = static_cast<double>(pairs.size());
    means[v] = {sum.recall / n, sum.precision / n, sum.f1 / n};
  }
  return means;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::R1: return "rouge-1";
    case Variant::R2: return "rouge-2";
    case Variant::RL: return "rouge-l";
  }
  return "?";
}

}  // namespace sst::rouge
