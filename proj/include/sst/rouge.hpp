#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// From-scratch ROUGE-1/2/L with recall, precision and F1.
namespace sst::rouge {

class RougeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RougeScore {
  double recall = 0;
  double precision = 0;
  double f1 = 0;
};

using Tokens = std::vector<std::string>;

/// Clipped n-gram overlap: for each distinct n-gram take
/// min(count in reference, count in hypothesis). Either side without an
/// n-gram of order n scores all zeros.
RougeScore rouge_n(const Tokens& reference, const Tokens& hypothesis, std::size_t n);

/// Token-level longest common subsequence, not necessarily contiguous.
RougeScore rouge_l(const Tokens& reference, const Tokens& hypothesis);

std::size_t lcs_length(const Tokens& a, const Tokens& b);

enum class Variant { R1, R2, RL };

/// Macro-average: unweighted mean of per-pair recall, precision and F1.
std::map<Variant, RougeScore> rouge_batch(
    const std::vector<std::pair<Tokens, Tokens>>& pairs,
    const std::vector<Variant>& variants);

std::string variant_name(Variant v);

}  // namespace sst::rouge
