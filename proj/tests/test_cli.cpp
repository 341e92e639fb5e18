#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = SST_CLI_PATH;
const std::string kRoot = SST_SOURCE_DIR;

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string err_path =
      "/tmp/sst_cli_test_err_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      "cd " + kRoot + " && " + kCli + " " + args + " 2>" + err_path;
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), n);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  result.err = ss.str();
  std::remove(err_path.c_str());
  return result;
}

std::string write_temp(const std::string& content, const std::string& ext) {
  static int counter = 0;
  const std::string path =
      "/tmp/sst_cli_test_in_" + std::to_string(counter++) + ext;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("clean normalizes and splits paragraphs") {
  const auto in = write_temp("रामः  गच्छति!\n\nसीता तिष्ठति।\n", ".txt");
  const auto r = run("clean " + in);
  CHECK(r.status == 0);
  CHECK(r.out == "रामः गच्छति ।\nसीता तिष्ठति ।\n");
  std::remove(in.c_str());
}

TEST_CASE("split-sandhi applies the rule table") {
  const auto in = write_temp("इत्युच्यते\n", ".txt");
  const auto r = run("split-sandhi " + in + " --rules data/rules/sandhi_rules.tsv");
  CHECK(r.status == 0);
  CHECK(r.out == "इति उच्यते\n");
  std::remove(in.c_str());
}

TEST_CASE("rouge on identical texts yields 1.000 rows") {
  const auto ref = write_temp("रामः गच्छति\nसीता तिष्ठति\n", ".txt");
  const auto r = run("rouge --ref " + ref + " --hyp " + ref);
  CHECK(r.status == 0);
  CHECK(r.out.find("rouge-1\t1.000\t1.000\t1.000") != std::string::npos);
  CHECK(r.out.find("rouge-l\t1.000\t1.000\t1.000") != std::string::npos);
  std::remove(ref.c_str());
}

TEST_CASE("build-lm emits one record per sentence with paragraph ids") {
  const auto out_dir = "/tmp/sst_cli_test_lm";
  fs::remove_all(out_dir);
  const auto r = run(
      "build-lm --manifest data/samples/sources.manifest --out " +
      std::string(out_dir));
  CHECK(r.status == 0);
  const auto train = slurp(fs::path(out_dir) / "lm_train.txt");
  CHECK(train.find("100000\t") != std::string::npos);
  CHECK(train.find('\t') != std::string::npos);
  // 3 mkb paragraphs give 3 distinct ids; wiki shares one sentinel.
  const auto all = train + slurp(fs::path(out_dir) / "lm_test.txt");
  for (const char* id : {"100000\t", "100001\t", "100002\t", "500000\t"})
    CHECK(all.find(id) != std::string::npos);
  fs::remove_all(out_dir);
}

TEST_CASE("build-lm logs the expected-vs-actual train delta") {
  const auto out_dir = "/tmp/sst_cli_test_lm_delta";
  fs::remove_all(out_dir);
  const auto r = run(
      "build-lm --manifest data/samples/sources.manifest --expected-train 11 "
      "--out " + std::string(out_dir));
  CHECK(r.status == 0);
  CHECK(r.err.find("delta -2") != std::string::npos);
  fs::remove_all(out_dir);
}

TEST_CASE("ledger subcommand reports perplexity and early stopping") {
  const auto r = run("ledger data/ledgers/gpt2_lm.tsv");
  CHECK(r.status == 0);
  CHECK(r.out.find("rows=50") != std::string::npos);
  CHECK(r.out.find("best_epoch=") != std::string::npos);
  CHECK(r.out.find("final_fit=") != std::string::npos);
}

TEST_CASE("humaneval subcommand reproduces fixture scores") {
  const auto r = run(
      "humaneval --votes data/humaneval/votes_best_worst.csv "
      "--ratings data/humaneval/ratings_coherence.csv "
      "--quality coherence_readability");
  CHECK(r.status == 0);
  CHECK(r.out.find("bert2bert/greedy\t11\t9\t20") != std::string::npos);
  CHECK(r.out.find("bert2bert/greedy\t13\t7\t6") != std::string::npos);
}

TEST_CASE("pipeline is deterministic byte for byte") {
  const fs::path a = "/tmp/sst_cli_test_pipe_a";
  const fs::path b = "/tmp/sst_cli_test_pipe_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const auto ra =
      run("pipeline --config data/samples/pipeline.conf --out " + a.string());
  const auto rb =
      run("pipeline --config data/samples/pipeline.conf --out " + b.string());
  CHECK(ra.status == 0);
  CHECK(rb.status == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    CAPTURE(entry.path().string());
    CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
  }
  CHECK(files >= 7);  // clean/split per source + lm + sum splits + stats
  // A different seed produces a different shuffle.
  const fs::path c = "/tmp/sst_cli_test_pipe_c";
  fs::remove_all(c);
  const auto rc = run("pipeline --config data/samples/pipeline.conf --seed 7 --out " +
                      c.string());
  CHECK(rc.status == 0);
  CHECK(slurp(a / "lm_train.txt") != slurp(c / "lm_train.txt"));
  fs::remove_all(a);
  fs::remove_all(b);
  fs::remove_all(c);
}

TEST_CASE("stats reports key=value totals") {
  const auto lm = write_temp("1\tअ ब\n1\tब ग\n", ".txt");
  const auto r = run("stats --lm " + lm);
  CHECK(r.status == 0);
  CHECK(r.out.find("sentence_count=2") != std::string::npos);
  CHECK(r.out.find("total_tokens=4") != std::string::npos);
  CHECK(r.out.find("unique_tokens=3") != std::string::npos);
  std::remove(lm.c_str());
}

TEST_CASE("stats aggregates a suitability assessment") {
  const auto r = run("stats --assessment data/assessment/oscar_assessment.csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("assessment.summary_pct=58.0") != std::string::npos);
  CHECK(r.out.find("assessment.worthy_pct=80.0") != std::string::npos);
  CHECK(run("stats").status == 1);
}

TEST_CASE("exit codes distinguish usage and data errors") {
  CHECK(run("no-such-subcommand").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("clean /nonexistent/input.txt").status == 2);
  CHECK(run("ledger /nonexistent/ledger.tsv").status == 2);
  CHECK(run("rouge").status == 1);
}
