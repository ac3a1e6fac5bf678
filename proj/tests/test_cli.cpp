#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("env -u SCHUBERT_GOLDEN_DIR ") + SCHUBERT_CLI_PATH + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

/// Fresh copy of the golden data with `edit` applied to one file.
class GoldenCopy {
public:
  GoldenCopy(const std::string& tag) : dir_(fs::temp_directory_path() / ("schubert_golden_" + tag)) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    for (const auto& e : fs::directory_iterator(SCHUBERT_DEFAULT_GOLDEN_DIR)) fs::copy(e.path(), dir_ / e.path().filename());
  }
  ~GoldenCopy() { fs::remove_all(dir_); }

  void replace(const std::string& file, const std::string& from, const std::string& to) {
    std::ifstream in(dir_ / file);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    const auto pos = text.find(from);
    ASSERT_NE(pos, std::string::npos) << from;
    text.replace(pos, from.size(), to);
    std::ofstream(dir_ / file) << text;
  }

  [[nodiscard]] std::string flag() const { return "--golden-dir " + dir_.string(); }

private:
  fs::path dir_;
};

} // namespace

TEST(Cli, HasseCounts) {
  auto e6 = run("hasse e6");
  EXPECT_EQ(e6.code, 0);
  EXPECT_NE(e6.out.find("27 nodes, 36 covers"), std::string::npos);

  auto e7 = run("--format json hasse e7");
  ASSERT_EQ(e7.code, 0);
  const auto j = nlohmann::json::parse(e7.out);
  EXPECT_EQ(j["nodes"].size(), 56u);
  EXPECT_EQ(j["covers"].size(), 84u);

  auto gr = run("-f json hasse gr:2,4");
  ASSERT_EQ(gr.code, 0);
  EXPECT_EQ(nlohmann::json::parse(gr.out)["nodes"].size(), 6u);

  auto dot = run("-f dot hasse gr:2,4");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count_lines_with(dot.out, "->"), 6);
}

TEST(Cli, ClassifyAndLookups) {
  auto c = run("classify gr:2,4 2,4");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("Flexible"), std::string::npos);
  EXPECT_NE(c.out.find("ModuliGr"), std::string::npos);
  EXPECT_EQ(run("classify gr:2,4:2,4").out, c.out);

  auto j = run("-f json classify e6 4:1a");
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["verdict"], "MultiRigid");
  EXPECT_TRUE(doc["witnesses"].empty());
  EXPECT_EQ(run("classify og:5").code, 2);

  EXPECT_NE(run("degree e6 12:45").out.find("degree 45"), std::string::npos);
  EXPECT_NE(run("dual gr:2,4 1,3").out.find("-> 2,4"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  auto t = run("verify table1");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("27/27 pass"), std::string::npos);
  auto e6 = run("verify e6");
  EXPECT_EQ(e6.code, 0);
  EXPECT_NE(e6.out.find("27/27"), std::string::npos);
  EXPECT_NE(e6.out.find("0 violations"), std::string::npos);
  auto all = run("-f json verify all");
  ASSERT_EQ(all.code, 0);
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 3u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("hasse f4").code, 2);
  EXPECT_EQ(run("hasse gr:5,4").code, 2);
  EXPECT_EQ(run("classify e6 4:1").code, 2);
  EXPECT_EQ(run("classify gr:2,4 3,3").code, 2);
  EXPECT_EQ(run("tits e6").code, 2);
  EXPECT_EQ(run("verify e8").code, 2);
  EXPECT_EQ(run("-f dot verify e6").code, 2);
}

TEST(Cli, TamperedDecorationExitsOne) {
  GoldenCopy g("decoration");
  g.replace("e6.tsv", "1\t1\t1\tplus", "1\t1\t1\tstar");
  auto r = run(g.flag() + " verify e6");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("verify FAILED e6"), std::string::npos);
  EXPECT_EQ(run(g.flag() + " verify table1").code, 0);
}

TEST(Cli, CorruptedGoldenExitsThree) {
  {
    GoldenCopy g("degree");
    g.replace("e7.tsv", "13110", "13111");
    auto r = run(g.flag() + " verify e7", true);
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("data integrity error:"), std::string::npos);
  }
  {
    GoldenCopy g("table");
    g.replace("table1.tsv", "10:2*", "10;2*");
    EXPECT_EQ(run(g.flag() + " verify table1").code, 3);
  }
  {
    GoldenCopy g("mismatch");
    g.replace("table1.tsv", "10:2*", "10:3*");
    EXPECT_EQ(run(g.flag() + " verify table1").code, 1);
  }
  auto missing = run("--golden-dir /nonexistent/golden verify e6", true);
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(missing.out.find("missing golden data:"), std::string::npos);
}

TEST(Cli, EnvironmentSelectsGoldenDir) {
  const std::string cmd = std::string("SCHUBERT_GOLDEN_DIR=/nonexistent/golden ") + SCHUBERT_CLI_PATH + " verify e6 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"-f json hasse e7", "-f dot hasse e6", "-f json verify all", "-f json tits e6 --P 6 --Q 1",
                           "-f json tits table1", "-f json classify og:5 2,3"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, OutputFile) {
  const auto path = fs::temp_directory_path() / "schubert_cli_out.json";
  fs::remove(path);
  EXPECT_EQ(run("-f json -o " + path.string() + " hasse gr:2,4").code, 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(nlohmann::json::parse(text)["nodes"].size(), 6u);
  fs::remove(path);
}
