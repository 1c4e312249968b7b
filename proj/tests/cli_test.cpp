#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "gcis/corpus.hpp"

namespace gcis {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gcis_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args, const std::string& stdout_file = "") const {
    std::string cmd = std::string(GCIS_CLI_PATH) + " " + args;
    cmd += stdout_file.empty() ? " > /dev/null" : " > " + stdout_file;
    cmd += " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static void write(const std::string& p, const std::vector<std::uint8_t>& data) {
    std::ofstream(p, std::ios::binary).write(reinterpret_cast<const char*>(data.data()),
                                             static_cast<std::streamsize>(data.size()));
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

TEST_F(Cli, CompressDecompressRoundtrip) {
  const auto data = corpus::fibonacci(20);
  write(path("f.txt"), data);
  ASSERT_EQ(run("compress " + path("f.txt") + " " + path("f.gcis")), 0);
  ASSERT_EQ(run("decompress " + path("f.gcis") + " " + path("out")), 0);
  EXPECT_EQ(read(path("out")), read(path("f.txt")));
  EXPECT_LT(fs::file_size(path("f.gcis")), data.size());
}

TEST_F(Cli, StdinAndStdout) {
  write(path("in"), corpus::thue_morse(5000));
  ASSERT_EQ(run("compress - - < " + path("in"), path("a.gcis")), 0);
  ASSERT_EQ(run("decompress - - < " + path("a.gcis"), path("out")), 0);
  EXPECT_EQ(read(path("out")), read(path("in")));
}

TEST_F(Cli, StatOnBanana) {
  write(path("b.txt"), {'b', 'a', 'n', 'a', 'n', 'a'});
  ASSERT_EQ(run("compress " + path("b.txt") + " " + path("b.gcis")), 0);
  ASSERT_EQ(run("stat " + path("b.gcis"), path("stat.txt")), 0);
  const std::string text = read(path("stat.txt"));
  EXPECT_NE(text.find("levels:         1"), std::string::npos) << text;
  EXPECT_NE(text.find("level 1: sigma=3"), std::string::npos) << text;
  // 119-byte archive over 6 bytes of input.
  EXPECT_NE(text.find("1983.333 %"), std::string::npos) << text;

  ASSERT_EQ(run("stat --format json " + path("b.gcis"), path("stat.json")), 0);
  EXPECT_NE(read(path("stat.json")).find("\"sigma\": 3"), std::string::npos);
}

TEST_F(Cli, VerifyAndFlags) {
  write(path("r.bin"), corpus::random(20000, 7, 1));
  EXPECT_EQ(run("verify " + path("r.bin")), 0);
  EXPECT_EQ(run("verify --no-greedy-stop " + path("r.bin")), 0);
  EXPECT_EQ(run("verify --max-levels 1 " + path("r.bin")), 0);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("compress " + path("missing") + " " + path("x")), 2);
  write(path("junk.gcis"), {'N', 'O', 'P', 'E', 1, 2, 3});
  EXPECT_EQ(run("decompress " + path("junk.gcis") + " " + path("x")), 3);
  EXPECT_EQ(run("stat " + path("junk.gcis")), 3);
}

TEST_F(Cli, BenchCsv) {
  ASSERT_EQ(run("bench --corpus fib:k=15 --corpus tm:n=2000 --trials 1 --format csv", path("bench.csv")), 0);
  std::istringstream lines(read(path("bench.csv")));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);
  EXPECT_EQ(run("bench --corpus bogus:1"), 1);
}

}  // namespace
}  // namespace gcis
