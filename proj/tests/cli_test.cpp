/*
 * Copyright 2026 The logfano Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "logfano/cli.hpp"

using namespace logfano;

namespace {

RunConfig config_for(const std::string& type, std::optional<Word> word, Mode mode) {
  RunConfig c;
  c.type = type;
  c.word = std::move(word);
  c.mode = mode;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(LOGFANO_GOLDEN_DIR) + "/" + name + ".json"); }

}  // namespace

TEST(Run, CertifyA2) {
  const auto r = run(config_for("A2", Word{1, 2, 1}, Mode::Certify));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["overall"], true);
  EXPECT_EQ(doc["M"], 2);
  EXPECT_EQ(doc["delta"], Json::array({"1/2", "1/2"}));
  EXPECT_EQ(doc["delta_tilde"], Json::array({"1/2", "0/1", "1/2"}));
  EXPECT_FALSE(doc.contains("root_height"));
}

TEST(Run, CertifyRejectsNonReduced) {
  const auto r = run(config_for("A2", Word{1, 1}, Mode::Certify));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("NotReduced"), std::string::npos);
}

TEST(Run, InvalidInputsExitTwo) {
  EXPECT_EQ(run(config_for("Q7", Word{1}, Mode::Certify)).exit_code, 2);
  EXPECT_EQ(run(config_for("A2", Word{3}, Mode::Certify)).exit_code, 2);
  EXPECT_EQ(run(config_for("A2", std::nullopt, Mode::Certify)).exit_code, 2);
  EXPECT_EQ(run(config_for("A2", std::nullopt, Mode::Report)).exit_code, 2);
  auto small_m = config_for("A2", Word{1, 2, 1}, Mode::Certify);
  small_m.m = 1;
  const auto r = run(small_m);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("MTooSmall"), std::string::npos);
  RunConfig none;
  EXPECT_EQ(run(none).exit_code, 2);
  auto both = config_for("A2", Word{1}, Mode::Certify);
  both.cartan_file = "x.json";
  EXPECT_EQ(run(both).exit_code, 2);
  auto missing = config_for("", Word{1}, Mode::Certify);
  missing.cartan_file = "/nonexistent/cartan.json";
  EXPECT_EQ(run(missing).exit_code, 2);
}

TEST(Run, SweepB3) {
  auto c = config_for("B3", std::nullopt, Mode::Sweep);
  c.max_length = 9;
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["elements_checked"], 48);
  EXPECT_TRUE(doc["failures"].empty());
}

TEST(Run, SweepFailureExitsOne) {
  auto c = config_for("A2", std::nullopt, Mode::Sweep);
  c.m = 2;  // too small for the length-2 elements
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(Json::parse(r.out)["failures"].empty());
}

TEST(Run, AffineSweepNeedsBoundOrCap) {
  auto c = config_for("A1~", std::nullopt, Mode::Sweep);
  c.cap = 50;
  EXPECT_EQ(run(c).exit_code, 2);  // CapExceeded
  c.max_length = 8;
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["elements_checked"], 17);
}

TEST(Run, CapFromEnvironment) {
  auto c = config_for("A1~", std::nullopt, Mode::Sweep);
  c.max_length = 8;
  ::setenv("LOGFANO_CAP", "5", 1);
  const auto limited = run(c);
  ::unsetenv("LOGFANO_CAP");
  EXPECT_EQ(limited.exit_code, 2);
  EXPECT_NE(limited.err.find("CapExceeded"), std::string::npos);
  c.cap = 100;  // the flag wins over the environment
  ::setenv("LOGFANO_CAP", "5", 1);
  const auto flagged = run(c);
  ::unsetenv("LOGFANO_CAP");
  EXPECT_EQ(flagged.exit_code, 0);
}

TEST(Run, ReducedWords) {
  const auto r = run(config_for("A2", Word{2, 1, 2}, Mode::ReducedWords));
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["reduced_words"], Json::parse("[[1,2,1],[2,1,2]]"));
  EXPECT_EQ(doc["canonical"], Json::parse("[1,2,1]"));
  EXPECT_EQ(doc["length"], 3);
}

TEST(Run, ReportOfNonReducedWordHasOnlyBottSamelsonData) {
  const auto r = run(config_for("A1", Word{1, 1}, Mode::Report));
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["reduced"], false);
  EXPECT_EQ(doc["b"], Json::parse("[-1,1]"));
  EXPECT_EQ(doc["anticanonical_bs"], Json::parse("[0,2]"));
  EXPECT_EQ(doc["nonpositive_b"], true);
  EXPECT_EQ(doc["negative_anticanonical"], false);
  EXPECT_FALSE(doc.contains("divisors"));
}

TEST(Run, OutputIsByteStable) {
  for (const auto mode : {Mode::Report, Mode::Certify}) {
    const auto c = config_for("B3", Word{1, 2, 3, 2, 1}, mode);
    EXPECT_EQ(run(c).out, run(c).out);
  }
  auto s = config_for("G2", std::nullopt, Mode::Sweep);
  EXPECT_EQ(run(s).out, run(s).out);
}

TEST(Run, CartanFileRoundTripMatchesBuiltin) {
  const auto path = std::filesystem::temp_directory_path() / "logfano_roundtrip_b3.json";
  {
    std::ofstream out(path);
    out << root_datum_to_json(RootDatum{"B3", builtin("B3")}).dump(2);
  }
  for (const auto mode : {Mode::Report, Mode::Certify, Mode::ReducedWords}) {
    auto from_file = config_for("", Word{1, 2, 3, 2, 1}, mode);
    from_file.cartan_file = path.string();
    const auto a = run(from_file);
    const auto b = run(config_for("B3", Word{1, 2, 3, 2, 1}, mode));
    EXPECT_EQ(a.exit_code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  std::filesystem::remove(path);
}

TEST(Run, CartanFileValidation) {
  const auto path = std::filesystem::temp_directory_path() / "logfano_bad.json";
  auto run_with = [&](const std::string& text) {
    {
      std::ofstream out(path);
      out << text;
    }
    auto c = config_for("", Word{1}, Mode::Certify);
    c.cartan_file = path.string();
    return run(c);
  };
  EXPECT_EQ(run_with(R"({"rank": 2, "cartan": [[2,0],[-1,2]]})").exit_code, 2);
  EXPECT_NE(run_with(R"({"rank": 2, "cartan": [[2,0],[-1,2]]})").err.find("AsymmetricZeroPattern"), std::string::npos);
  EXPECT_EQ(run_with(R"({"rank": 3, "cartan": [[2,-1],[-1,2]]})").exit_code, 2);
  EXPECT_EQ(run_with(R"({"cartan": [[2,-1],[-1,2]]})").exit_code, 2);
  EXPECT_EQ(run_with("not json").exit_code, 2);
  const auto ok = run_with(R"({"rank": 2, "cartan": [[2,-3],[-3,2]]})");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(Json::parse(ok.out)["type"], "custom");
  std::filesystem::remove(path);
}

TEST(Run, TableFormat) {
  auto c = config_for("A2", Word{1, 2, 1}, Mode::Certify);
  c.format = Format::Table;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("a1+a2"), std::string::npos);
  EXPECT_NE(r.out.find("overall"), std::string::npos);
  c.word = Word{1, 1};
  c.mode = Mode::Report;
  EXPECT_NE(run(c).out.find("not reduced"), std::string::npos);
}

TEST(Run, MatchesGoldenCertificates) {
  EXPECT_EQ(run(config_for("A2", Word{1, 2, 1}, Mode::Certify)).out, golden("A2_121_certify"));
  EXPECT_EQ(run(config_for("B2", Word{1, 2, 1, 2}, Mode::Certify)).out, golden("B2_1212_certify"));
  EXPECT_EQ(run(config_for("A1~", Word{1, 2, 1}, Mode::Certify)).out, golden("A1aff_121_certify"));
}

TEST(ParseWord, Forms) {
  EXPECT_EQ(parse_word("1,2,1"), (Word{1, 2, 1}));
  EXPECT_EQ(parse_word(""), Word{});
  EXPECT_EQ(parse_word("[3,1]"), (Word{3, 1}));
  for (const char* bad : {"1,x", "1,,2", "1.5", "[1,", "2a"}) {
    try {
      parse_word(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << bad;
    }
  }
}

TEST(FormatVector, RootNotation) {
  EXPECT_EQ(format_vector(RootVector{{1, 2}}), "a1+2a2");
  EXPECT_EQ(format_vector(RootVector{{0, 0}}), "0");
  EXPECT_EQ(format_vector(RootVector{{-1, -3}}), "-a1-3a2");
  EXPECT_EQ(format_vector(RootVector{{0, 1, 0}}), "a2");
  EXPECT_EQ(format_vector(CorootVector{{2, 1}}, "a", "v"), "2a1v+a2v");
}
