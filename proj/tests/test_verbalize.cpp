// Copyright 2026 The ists Authors.
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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "ists/verbalize.hpp"

using namespace ists;
using ists::testing::record;

namespace {

const char* kBusAccidentText =
    "The two sentences are very similar.\n"
    "Note that 'in bus accident' is a bit more specific than 'in road accident' in this "
    "context.\n"
    "Note also that '12' and '10' are very similar in this context.\n"
    "Note also that 'in Pakistan' is a bit more general than 'in NW Pakistan' in this context.";

}  // namespace

TEST_CASE("bus accident paragraph") {
  CHECK(verbalize_pair(ists::testing::bus_accident(), VerbalizationConfig::defaults()) ==
        kBusAccidentText);
}

TEST_CASE("single sentences") {
  const auto p = ists::testing::bus_accident();
  const auto c = VerbalizationConfig::defaults();
  CHECK(verbalize_alignment(p, p.alignments[2], c) ==
        "'in bus accident' is a bit more specific than 'in road accident' in this context");
  CHECK(verbalize_alignment(p, p.alignments[0], c) == "'12' and '10' are very similar in this context");
  CHECK(verbalize_alignment(p, p.alignments[1], c) ==
        "'killed' and 'killed' mean the same in this context");

  auto q = p;
  q.alignments[0].score = 3.0;
  CHECK(verbalize_alignment(q, q.alignments[0], c) == "'12' and '10' are similar in this context");
  q.alignments[0].label = AlignmentLabel{CoreLabel::kRel, true, true};
  CHECK(verbalize_alignment(q, q.alignments[0], c) ==
        "'12' and '10' don't mean the same but are related in this context; note a difference "
        "in factuality; note a difference in polarity");
  q.alignments[0].label = AlignmentLabel{CoreLabel::kOppo, false, false};
  CHECK(verbalize_alignment(q, q.alignments[0], c) == "'12' and '10' mean the opposite in this context");
}

TEST_CASE("unaligned records are not verbalized") {
  auto p = ists::testing::bus_accident();
  const auto alic = record({kNullToken}, {7}, CoreLabel::kAlic, std::nullopt);
  CHECK_THROWS_AS(verbalize_alignment(p, alic, VerbalizationConfig::defaults()),
                  std::invalid_argument);
}

TEST_CASE("pair without aligned records gives the opener only") {
  InterpretablePair p;
  p.id = "9";
  p.sent1 = ists::testing::chunked("dogs bark", {{1, 2}});
  p.sent2 = ists::testing::chunked("cats sleep", {{1, 2}});
  p.alignments = {record({1, 2}, {kNullToken}, CoreLabel::kNoali, std::nullopt),
                  record({kNullToken}, {1, 2}, CoreLabel::kNoali, std::nullopt)};
  CHECK(overall_score(p) == 0.0);
  CHECK(verbalize_pair(p, VerbalizationConfig::defaults()) ==
        "The two sentences are quite different.");
}

TEST_CASE("election law pair with EQUI sentences") {
  const auto p = read_wa_file(ists::testing::data_path("election_law.wa")).at(0);
  auto c = VerbalizationConfig::defaults();
  const std::string without = verbalize_pair(p, c);
  CHECK(without.find("'approve' and 'approves'") == std::string::npos);
  c.include_equi = true;
  const std::string text = verbalize_pair(p, c);
  CHECK(text.rfind("The two sentences are very similar.\n", 0) == 0);
  CHECK(text.find("'Afghan legislators' and 'Afghan president' don't mean the same but are "
                  "closely related in this context.") != std::string::npos);
  CHECK(text.find("'approve' and 'approves' mean the same in this context.") !=
        std::string::npos);
  CHECK(text.find("'new election law' and 'new election law' are very similar in this context.") !=
        std::string::npos);
  CHECK(verbalize_pair(p, c) == text);
}

TEST_CASE("qualifiers are monotone in the score") {
  const auto c = VerbalizationConfig::defaults();
  for (CoreLabel label : {CoreLabel::kSpe1, CoreLabel::kSpe2, CoreLabel::kSimi, CoreLabel::kRel}) {
    const Bands& bands = c.qualifiers.at(label);
    int previous = 0;
    for (double s = 0.0; s <= 5.0; s += 0.05) {
      const std::string& q = band_for(bands, s);
      int rank = 0;
      while (bands[rank].second != q) ++rank;
      // Higher scores never move to a later (weaker) band.
      CHECK((s == 0.0 || rank <= previous));
      previous = rank;
    }
  }
  CHECK(band_for(c.openers, 5.0) == "The two sentences mean the same.");
  CHECK(band_for(c.openers, 4.49) == "The two sentences are very similar.");
  CHECK(band_for(c.openers, 2.5) == "The two sentences are somewhat similar.");
  CHECK(band_for(c.openers, 1.5) == "The two sentences share some details.");
}

TEST_CASE("config file overrides") {
  const std::string path = "verbalize_test.cfg";
  {
    std::ofstream out(path);
    out << "SIMI={X} resembles {Y} {QUAL}\n"
        << "SIMI.bands=4:strongly|0:weakly\n"
        << "include_equi=true\n";
  }
  const auto c = VerbalizationConfig::load(path);
  std::remove(path.c_str());
  CHECK(c.include_equi);
  const auto p = ists::testing::bus_accident();
  CHECK(verbalize_alignment(p, p.alignments[0], c) == "'12' resembles '10' strongly in this context");
  auto bad = VerbalizationConfig::defaults();
  bad.qualifiers[CoreLabel::kSimi] = parse_bands("4:a|2:b");
  CHECK_THROWS_AS(bad.check(), ValidationError);
  CHECK_THROWS_AS(parse_bands("4 a"), ValidationError);
}
