#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(HALLFORGE_BIN) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "hallforge_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("a2.json", R"({"vertices":2,"arrows":[[0,1]],"q":2})");
    write("a2desc.json", R"({"vertices":2,"arrows":[[0,1]],"q":2,"antipode_order":"descending"})");
    write("kr3.json", R"({"vertices":2,"arrows":[[0,1],[0,1]],"q":3})");
    write("one3.json", R"({"vertices":1,"arrows":[],"q":3})");
    write("bad.json", R"({"vertices":2,"arrows":[[0,1],[1,0]],"q":2})");
    write("small.json", R"({"vertices":2,"arrows":[[0,1]],"q":2,"caps":{"vertex":2,"total":3}})");
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static void write(const std::string& name, const std::string& body) { std::ofstream(dir_ / name) << body; }
  static std::string cfg(const std::string& name) { return "--config " + (dir_ / name).string(); }

  static nlohmann::json json_of(const std::string& s) { return nlohmann::json::parse(s); }

  static inline fs::path dir_;
};

}  // namespace

TEST_F(Cli, ObjectsCounts) {
  Result r = run("objects " + cfg("a2.json") + " --dim 1,1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r.out)["count"], 2);
  r = run("objects " + cfg("a2.json") + " --dim 0,0");
  EXPECT_EQ(json_of(r.out)["count"], 1);
  r = run("objects " + cfg("kr3.json") + " --dim 1,1");
  EXPECT_EQ(json_of(r.out)["count"], 5);
}

TEST_F(Cli, ComputeExamples) {
  Result r = run("compute " + cfg("a2.json") + " '(counit (cls S1))'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r.out), json_of(R"({"a":"0","b":"0"})"));
  r = run("compute " + cfg("one3.json") + " '(pair (cls S) (cls S))'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r.out), json_of(R"({"a":"3/2","b":"0"})"));
  r = run("compute " + cfg("a2.json") + " '(hmul (cls S2) (cls S1))'");
  ASSERT_EQ(r.code, 0);
  const auto terms = json_of(r.out)["terms"];
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0]["coeff"], json_of(R"({"a":"0","b":"1"})"));
  EXPECT_EQ(terms[0]["left"]["dim"], json_of("[1,1]"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("verify " + cfg("a2.json") + " --suite hopf").code, 0);
  EXPECT_EQ(run("verify " + cfg("a2desc.json") + " --suite hopf").code, 3);
  EXPECT_EQ(run("compute " + cfg("a2.json") + " '(hmul (cls S1)'").code, 1);
  EXPECT_EQ(run("objects " + cfg("bad.json") + " --dim 1,1").code, 1);
  EXPECT_EQ(run("verify " + cfg("a2.json") + " --suite nonsense").code, 1);
  EXPECT_EQ(run("objects " + cfg("small.json") + " --dim 3,0").code, 2);
  EXPECT_EQ(run("verify " + cfg("a2.json") + " --suite fstar --reflect-vertex 7").code, 1);
}

TEST_F(Cli, VerifySummaryLine) {
  const Result r = run("verify " + cfg("a2desc.json") + " --suite hopf --max-total 2");
  ASSERT_EQ(r.code, 3);
  const std::string last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  const auto summary = json_of(last)["summary"];
  EXPECT_EQ(summary["suite"], "hopf");
  EXPECT_GT(summary["failed"].get<int>(), 0);
  EXPECT_FALSE(summary["smallest_failure"]["pass"].get<bool>());
}

TEST_F(Cli, CacheIsByteTransparent) {
  const fs::path cache = dir_ / "cache";
  const std::string args = "verify " + cfg("kr3.json") + " --suite hopf --max-total 2";
  const Result none = run(args);
  const Result cold = run(args + " --cache-dir " + cache.string());
  ASSERT_FALSE(fs::is_empty(cache));
  const Result warm = run(args + " --cache-dir " + cache.string());
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(none.out, cold.out);
  EXPECT_EQ(cold.out, warm.out);
}

TEST_F(Cli, JobsDoNotChangeOutput) {
  const std::string args = "verify " + cfg("a2.json") + " --suite pairing --max-total 2";
  const Result one = run(args + " --jobs 1");
  const Result three = run(args + " --jobs 3");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
}
