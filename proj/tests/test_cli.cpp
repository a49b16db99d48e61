// Copyright 2026 The lindqsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lqsl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string(LQSL_CLI_PATH) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string stdout_text() const { return read(dir_ / "stdout.txt"); }
  std::string stderr_text() const { return read(dir_ / "stderr.txt"); }

  fs::path dir_;
};

TEST_F(Cli, QslToStdout) {
  ASSERT_EQ(run("qsl"), 0);
  EXPECT_EQ(stdout_text().rfind("sweep_value,delta_h0,g_term,e_term,v_coeff,t_qsl,t_lower,status\n",
                                0),
            0u);
}

TEST_F(Cli, OutputFileWithMetadataSidecar) {
  const fs::path out = dir_ / "fig1a.csv";
  ASSERT_EQ(run("fig1a --output " + out.string()), 0);
  ASSERT_TRUE(fs::exists(out));
  const std::string meta = read(out.string() + ".meta.json");
  for (const char* key : {"\"version\"", "\"config\"", "\"dt\"", "\"gamma_eff_calibrated\"",
                          "\"seed\"", "\"command\": \"fig1a\""}) {
    EXPECT_NE(meta.find(key), std::string::npos) << key;
  }
}

TEST_F(Cli, ByteIdenticalReruns) {
  const fs::path cfg = write("c.ini", "[model]\npreset = dephasing\ngamma = 0.3\n"
                                      "[sweep]\nname = theta_target\nvalues = [0.1, 0.5, 1.0]\n");
  const fs::path a = dir_ / "a.csv", b = dir_ / "b.csv";
  ASSERT_EQ(run("qsl --config " + cfg.string() + " --output " + a.string()), 0);
  ASSERT_EQ(run("qsl --config " + cfg.string() + " --output " + b.string()), 0);
  EXPECT_EQ(read(a), read(b));
  EXPECT_EQ(read(a.string() + ".meta.json"), read(b.string() + ".meta.json"));
}

TEST_F(Cli, JsonFormat) {
  ASSERT_EQ(run("qfi --format json"), 0);
  EXPECT_EQ(stdout_text().front(), '{');
}

TEST_F(Cli, ConfigErrorExitsWithOne) {
  const fs::path cfg = write("bad.ini", "[model]\npreset = custom\n"
                                        "hamiltonian = [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]\n"
                                        "psi0 = [1, 0]\n");
  EXPECT_EQ(run("qsl --config " + cfg.string()), 1);
  EXPECT_NE(stderr_text().find("line 3"), std::string::npos);
  EXPECT_EQ(run("qsl --format xml"), 1);
  EXPECT_EQ(run("nonsense"), 1);
}

TEST_F(Cli, IntegrationFailureExitsWithTwo) {
  const fs::path cfg =
      write("coarse.ini", "[model]\npreset = emission\ngamma = 50\n"
                          "[integrator]\ndt = 0.2\nhorizon = 2\n");
  EXPECT_EQ(run("evolve --config " + cfg.string()), 2);
}

TEST_F(Cli, VerifyViolationExitsWithThree) {
  // The bounds hold with room to spare; a negative tolerance demands a margin
  // larger than any model provides.
  const fs::path cfg = write("strict.ini", "[verify]\nmodels = 3\nfisher_models = 1\n"
                                           "log_samples = 10\ntolerance = -1\n");
  EXPECT_EQ(run("verify --config " + cfg.string()), 3);
  EXPECT_NE(stdout_text().find("\"sub_seed\""), std::string::npos);
}

TEST_F(Cli, VerifySmallRunIsDeterministic) {
  const fs::path cfg = write("small.ini", "[verify]\nmodels = 5\nfisher_models = 3\n"
                                          "log_samples = 100\n");
  ASSERT_EQ(run("verify --seed 7 --config " + cfg.string()), 0);
  const std::string first = stdout_text();
  ASSERT_EQ(run("verify --seed 7 --workers 3 --config " + cfg.string()), 0);
  EXPECT_EQ(stdout_text(), first);
}

}  // namespace
