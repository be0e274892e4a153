#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cremona/cli.hpp"
#include "cremona/field.hpp"

using namespace cremona;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cremona_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

int count_rows(const std::string& table, const std::string& status) {
  std::istringstream in(table);
  std::string line;
  int n = 0;
  std::getline(in, line);  // header
  while (std::getline(in, line))
    if (line.find(status) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_F(Cli, ForgeWritesCaseBCertificate) {
  const auto r = run({"forge", "-d", "2", "-e", "4", "-o", path("c.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(path("c.json"));
  EXPECT_NE(text.find("\"case\": \"B\""), std::string::npos);
  EXPECT_NE(text.find("\"ell\": 0"), std::string::npos);
  EXPECT_NE(text.find("\"m\": 0"), std::string::npos);
  EXPECT_EQ(run({"verify", path("c.json")}).code, 0);
}

TEST_F(Cli, ForgeToStdout) {
  const auto r = run({"forge", "-d", "2", "-e", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
}

TEST_F(Cli, ForgeOutOfRange) {
  for (const auto& e : {"3", "17"}) {
    const auto r = run({"forge", "-d", "4", "-e", e});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("sqrt(d) <= e <= d^2"), std::string::npos) << r.err;
  }
}

TEST_F(Cli, ForgeIsByteIdentical) {
  EXPECT_EQ(run({"forge", "-d", "3", "-e", "9", "--seed", "7", "-o", path("a.json")}).code, 0);
  EXPECT_EQ(run({"forge", "-d", "3", "-e", "9", "--seed", "7", "-o", path("b.json")}).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(run({"forge", "-d", "3", "-e", "9", "--seed", "8", "-o", path("c.json")}).code, 0);
  EXPECT_NE(slurp(path("a.json")), slurp(path("c.json")));
}

TEST_F(Cli, VerifyExitCodes) {
  ASSERT_EQ(run({"forge", "-d", "3", "-e", "5", "-o", path("c.json")}).code, 0);
  const std::string text = slurp(path("c.json"));
  EXPECT_EQ(run({"verify", path("c.json")}).code, 0);

  // Change one coefficient of g.
  const auto at = text.find("\"coeff\": \"", text.find("\"g\": ["));
  ASSERT_NE(at, std::string::npos);
  std::string tampered = text;
  const auto digit = at + std::string("\"coeff\": \"").size();
  tampered[digit] = tampered[digit] == '1' ? '2' : '1';
  std::ofstream(path("t.json"), std::ios::binary) << tampered;
  EXPECT_EQ(run({"verify", path("t.json")}).code, 1);

  std::ofstream(path("half.json"), std::ios::binary) << text.substr(0, text.size() / 2);
  EXPECT_EQ(run({"verify", path("half.json")}).code, 2);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, 2);
}

TEST_F(Cli, SweepSmallDegrees) {
  const auto r2 = run({"sweep", "-d", "2"});
  EXPECT_EQ(r2.code, 0);
  EXPECT_EQ(count_rows(r2.out, "verified"), 3);
  const auto r3 = run({"sweep", "-d", "3"});
  EXPECT_EQ(r3.code, 0);
  EXPECT_EQ(count_rows(r3.out, "verified"), 7);
  EXPECT_EQ(r3.out.substr(0, 1), "e");
}

TEST_F(Cli, SweepRanges) {
  EXPECT_EQ(run({"sweep", "-d", "5", "--e-min", "30", "--e-max", "20"}).code, 2);
  EXPECT_EQ(run({"sweep", "-d", "5", "--e-min", "4"}).code, 2);
  EXPECT_EQ(run({"sweep", "-d", "5", "--e-max", "26"}).code, 2);
  EXPECT_EQ(run({"sweep", "-d", "1"}).code, 2);
  const auto r = run({"sweep", "-d", "5", "--e-min", "20", "--e-max", "22"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_rows(r.out, "verified"), 3);
}

TEST_F(Cli, SweepJobsDoNotChangeCertificates) {
  ASSERT_EQ(run({"sweep", "-d", "4", "--jobs", "1", "--out", path("one")}).code, 0);
  ASSERT_EQ(run({"sweep", "-d", "4", "--jobs", "4", "--out", path("four")}).code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(path("one"))) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(fs::path(path("four")) / entry.path().filename()));
    EXPECT_EQ(run({"verify", entry.path().string()}).code, 0);
  }
  EXPECT_EQ(files, 13);
}

TEST_F(Cli, SweepSummaryRowsInOrder) {
  const auto s = run_sweep(3, 3, 9, 0, {}, 3);
  ASSERT_EQ(s.rows.size(), 7u);
  for (std::size_t i = 0; i < s.rows.size(); ++i) EXPECT_EQ(s.rows[i].e, 3 + static_cast<int>(i));
  EXPECT_TRUE(s.all_verified());
  EXPECT_EQ(s.rows[0].tag, "A{m=2}");
}

TEST_F(Cli, Plane) {
  EXPECT_EQ(run({"plane", "-r", "2", "-o", path("p.json")}).code, 0);
  EXPECT_EQ(run({"verify", path("p.json")}).code, 0);
  EXPECT_EQ(run({"plane", "-r", "1"}).code, 2);
  EXPECT_EQ(run({"plane", "-r", "8", "--seed", "3", "-o", path("p8.json")}).code, 0);
  EXPECT_EQ(run({"verify", path("p8.json")}).code, 0);
}

TEST_F(Cli, PrimeHandling) {
  EXPECT_EQ(run({"forge", "-d", "2", "-e", "3", "--prime", "100"}).code, 2);
  EXPECT_EQ(run({"forge", "-d", "2", "-e", "3", "--prime", "3"}).code, 2);
  EXPECT_EQ(run({"forge", "-d", "3", "-e", "6", "--prime", "1000003", "-o", path("c.json")}).code, 0);
  EXPECT_NE(slurp(path("c.json")).find("\"prime\": \"1000003\""), std::string::npos);
  EXPECT_EQ(run({"verify", path("c.json")}).code, 0);
  EXPECT_EQ(modulus(), kDefaultPrime);

  ::setenv(kPrimeEnvVar, "65537", 1);
  EXPECT_EQ(run({"forge", "-d", "2", "-e", "3", "-o", path("env.json")}).code, 0);
  ::setenv(kPrimeEnvVar, "65536", 1);
  EXPECT_EQ(run({"forge", "-d", "2", "-e", "3"}).code, 2);
  ::setenv(kPrimeEnvVar, "junk", 1);
  EXPECT_EQ(run({"forge", "-d", "2", "-e", "3"}).code, 2);
  ::unsetenv(kPrimeEnvVar);
  EXPECT_NE(slurp(path("env.json")).find("\"prime\": \"65537\""), std::string::npos);
}

TEST_F(Cli, ExhaustionExitsThree) {
  // P^1(F_5) has 6 directions; case A with d = 4, m = 0 needs 9 distinct ones.
  const auto r = run({"forge", "-d", "4", "-e", "7", "--prime", "5"});
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.err.find("ForgeExhausted"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"forge", "-d", "2"}).code, 2);
  EXPECT_EQ(run({"forge", "-d", "two", "-e", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
