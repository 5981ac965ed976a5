// Copyright 2026 The Groves Toolkit Authors
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


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "groves/errors.hpp"
#include "groves/fixtures.hpp"
#include "groves/oel.hpp"
#include "groves/spec_io.hpp"
#include "groves/transforms.hpp"
#include "support.hpp"

namespace groves {
namespace {

const char* kLinear = R"({
  "domain": {"type": "multi_unit", "units": 2},
  "grid": {"n": 4, "values": ["0", "1", "2", "3"], "L": "0", "U": "3"},
  "redistribution": {"type": "linear_anonymous", "constant": "0", "coefficients": ["0", "0", "1/2"]}
})";

std::string message_of(std::string_view text) {
  try {
    load_mechanism(text, "case.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool same_mechanism(const GrovesMechanism& a, const GrovesMechanism& b) {
  return a.setting() == b.setting() && a.tabulated().tables == b.tabulated().tables;
}

TEST(SpecIoTest, LoadsLinearSpec) {
  const auto mech = load_mechanism(kLinear);
  EXPECT_EQ(mech.domain(), Domain::multi_unit(2));
  EXPECT_EQ(mech.agents(), 4u);
  const auto bc = bcgc(GrovesMechanism::vcg(Domain::multi_unit(2), integer_grid(4, 0, 3)));
  EXPECT_TRUE(same_mechanism(mech, bc));
}

TEST(SpecIoTest, CanonicalRoundTripIsByteIdentical) {
  std::vector<GrovesMechanism> mechs{load_mechanism(kLinear), tabulated_separation_pair().first,
                                     tie_pattern_separation_pair().first,
                                     priority_improve(GrovesMechanism::vcg(Domain::single_item(), integer_grid(3, 0, 2)),
                                                      PriorityOrder::identity(3)),
                                     GrovesMechanism::vcg(Domain::public_project_equal(Rational(5, 2)),
                                                          TypeGrid(3, {Rational(0), Rational(1, 2), Rational(5, 2)}))};
  const auto inst = unequal_shares_instance();
  mechs.push_back(bcgc(GrovesMechanism::vcg(inst.domain, inst.grid)));
  for (const auto& m : mechs) {
    const std::string text = dump_mechanism(m);
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(text.back(), '\n');
    const auto again = load_mechanism(text);
    EXPECT_TRUE(same_mechanism(m, again));
    EXPECT_EQ(dump_mechanism(again), text);
  }
}

TEST(SpecIoTest, AnonymousKeysAcceptAnyOrder) {
  const auto pair = tabulated_separation_pair();
  std::string text = dump_mechanism(pair.first);
  const std::string from = "\"3\",\n          \"2\",\n          \"1\"";
  const std::string to = "\"1\",\n          \"3\",\n          \"2\"";
  const auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  std::string shuffled = text;
  shuffled.replace(pos, from.size(), to);
  const auto loaded = load_mechanism(shuffled);
  EXPECT_TRUE(same_mechanism(loaded, pair.first));
  EXPECT_EQ(dump_mechanism(loaded), text);
}

TEST(SpecIoTest, SyntaxErrorReportsBytePosition) {
  const std::string msg = message_of("{\"domain\": [1, 2,, 3]}");
  EXPECT_NE(msg.find("case.json"), std::string::npos);
  EXPECT_NE(msg.find("byte 18"), std::string::npos) << msg;
}

TEST(SpecIoTest, SemanticErrorsReportJsonPointers) {
  std::string text = kLinear;
  EXPECT_NE(message_of(std::string(text).replace(text.find("\"units\": 2"), 10, "\"units\": \"2\"")).find("/domain/units"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(text).replace(text.find("\"1/2\""), 5, "\"1/0\"")).find("/redistribution/coefficients/2"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(text).replace(text.find("\"type\": \"multi_unit\""), 20, "\"type\": \"lottery\"")).find("/domain/type"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(text).replace(text.find("\"n\": 4"), 6, "\"n\": 2")).find("/domain"),
            std::string::npos);
  const std::string no_grid = R"({"domain": {"type": "single_item"}, "redistribution": {"type": "linear_anonymous", "constant": "0", "coefficients": ["0"]}})";
  EXPECT_NE(message_of(no_grid).find(": /: missing field 'grid'"), std::string::npos) << message_of(no_grid);
}

TEST(SpecIoTest, TableProblemsAreRejected) {
  const auto bc = bcgc(GrovesMechanism::vcg(Domain::single_item(), integer_grid(3, 0, 1)));
  const std::string text = dump_mechanism(bc);
  const std::string entry = "      {\n        \"key\": [\n          \"1\",\n          \"0\"\n        ],\n        \"value\": \"0\"\n      },\n";
  const auto pos = text.find(entry);
  ASSERT_NE(pos, std::string::npos) << text;
  std::string missing = text;
  missing.erase(pos, entry.size());
  EXPECT_NE(message_of(missing).find("/redistribution/entries"), std::string::npos) << message_of(missing);
  std::string duplicate = text;
  duplicate.insert(pos, entry);
  const std::string dup_msg = message_of(duplicate);
  EXPECT_NE(dup_msg.find("duplicate"), std::string::npos) << dup_msg;
  std::string off_grid = text;
  off_grid.replace(pos + entry.find("\"1\""), 3, "\"7\"");
  EXPECT_NE(message_of(off_grid).find("/redistribution/entries/"), std::string::npos);
}

TEST(SpecIoTest, FileHelpers) {
  const auto path = std::filesystem::temp_directory_path() / "groves_spec_io_test.json";
  const auto mech = load_mechanism(kLinear);
  save_mechanism_file(mech, path.string());
  EXPECT_TRUE(same_mechanism(load_mechanism_file(path.string()), mech));
  std::filesystem::remove(path);
  EXPECT_THROW(load_mechanism_file(path.string()), ParseError);
}

}  // namespace
}  // namespace groves
