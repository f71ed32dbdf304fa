// Copyright 2026 The AMT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the `amt` executable end to end and checks exit codes and outputs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "amt/bench.hpp"
#include "amt/mesh_io.hpp"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("amt_cli_test_") +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(AMT_CLI_PATH) + " " + args + " >" + path("stdout.txt") +
                            " 2>" + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenTokenizeDetokenizeRoundTrip) {
  ASSERT_EQ(run("gen icosphere --subdivisions 2 --out " + path("ico.obj")), 0);
  ASSERT_EQ(run("tokenize " + path("ico.obj") + " --out " + path("ico.bin")), 0);
  ASSERT_EQ(run("detokenize " + path("ico.bin") + " --out " + path("back.obj")), 0);
  EXPECT_FALSE(read("ico.bin").empty());

  // Detokenized output is the canonical grid mesh, written in OBJ frame.
  const amt::CanonicalMesh expected = amt::prepare(fs::path(path("ico.obj")), amt::CorpusConfig{});
  EXPECT_EQ(read("back.obj"), amt::write_obj(expected));

  const auto back = amt::load_obj(path("back.obj"));
  EXPECT_EQ(back.mesh.face_count(), 320);
}

TEST_F(CliTest, NaiveCodecAndJson) {
  ASSERT_EQ(run("gen grid --width 3 --height 2 --out " + path("g.obj")), 0);
  ASSERT_EQ(run("tokenize " + path("g.obj") + " --codec naive --json " + path("g.json")), 0);
  ASSERT_EQ(run("detokenize " + path("g.json") + " --out " + path("g2.obj")), 0);
  EXPECT_EQ(amt::load_obj(path("g2.obj")).mesh.face_count(), 12);
  EXPECT_NE(read("g.json").find("FULL_FACE"), std::string::npos);
}

TEST_F(CliTest, TokenizePrintsDebugText) {
  amt::save_text(path("sq.obj"), "v 0 0 0\nv 1 0 0\nv 0 0 1\nv 1 0 1\nf 1 2 3\nf 2 4 3\n");
  ASSERT_EQ(run("tokenize " + path("sq.obj")), 0);
  EXPECT_EQ(read("stdout.txt"), "v0 v1 v2 v3\n");
}

TEST_F(CliTest, BenchWritesReports) {
  ASSERT_EQ(run("gen strip --n 100 --out " + path("strip.obj")), 0);
  ASSERT_EQ(run("gen soup --n 10 --seed 3 --out " + path("soup.obj")), 0);
  ASSERT_EQ(run("bench " + dir_.string() + " --csv " + path("r.csv") + " --json " +
                path("r.json") + " --svg " + path("r.svg") + " --jobs 2"),
            0);
  const std::string csv = read("r.csv");
  EXPECT_NE(csv.find(",306,900,"), std::string::npos) << csv;
  EXPECT_NE(csv.find(",99,90,"), std::string::npos) << csv;
  EXPECT_NE(read("r.svg").find("<svg"), std::string::npos);

  ASSERT_EQ(run("plot " + path("r.json") + " --faces --out " + path("faces.svg")), 0);
  EXPECT_NE(read("faces.svg").find("</svg>"), std::string::npos);
}

TEST_F(CliTest, VerifyCorpus) {
  ASSERT_EQ(run("gen random_triangulation --seed 9 --out " + path("r.obj")), 0);
  ASSERT_EQ(run("gen fan --n 12 --out " + path("f.obj")), 0);
  EXPECT_EQ(run("verify " + dir_.string()), 0);
  EXPECT_NE(read("stdout.txt").find("2 passed, 0 failed"), std::string::npos);
}

TEST_F(CliTest, VerifyEmptyCorpusSucceeds) {
  fs::create_directories(dir_ / "empty");
  EXPECT_EQ(run("verify " + path("empty")), 0);
}

TEST_F(CliTest, IoAndParseFailuresExitOne) {
  EXPECT_EQ(run("tokenize " + path("missing.obj")), 1);
  amt::save_text(path("bad.obj"), "v 0 0 0\nf 1 2 3\n");
  EXPECT_EQ(run("tokenize " + path("bad.obj")), 1);
  EXPECT_NE(read("stderr.txt").find("line 2"), std::string::npos) << read("stderr.txt");

  amt::save_text(path("junk.bin"), "not a token file");
  EXPECT_EQ(run("detokenize " + path("junk.bin") + " --out " + path("x.obj")), 1);

  fs::create_directories(dir_ / "allbad");
  amt::save_text((dir_ / "allbad" / "a.obj").string(), "f 1 2 3\n");
  EXPECT_EQ(run("bench " + path("allbad")), 1);
  EXPECT_EQ(run("verify " + path("allbad")), 1);
}

TEST_F(CliTest, UsageErrorsAreNonzero) {
  EXPECT_NE(run(""), 0);
  EXPECT_NE(run("tokenize"), 0);
  EXPECT_NE(run("gen torus --out " + path("t.obj")), 0);
}

}  // namespace
