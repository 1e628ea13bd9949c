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

#include <set>

#include "helpers.hpp"
#include "ists/core.hpp"

using namespace ists;
using ists::testing::chunked;
using ists::testing::record;

namespace {

bool mentions(const std::vector<Violation>& vs, const std::string& text) {
  for (const auto& v : vs) {
    if (v.severity == Violation::Severity::kError && v.message.find(text) != std::string::npos) {
      return true;
    }
  }
  return false;
}

InterpretablePair one_to_one(CoreLabel label, AlignmentScore score) {
  InterpretablePair p;
  p.id = "t";
  p.sent1 = chunked("red car", {{1, 2}});
  p.sent2 = chunked("blue car", {{1, 2}});
  p.alignments = {record({1, 2}, {1, 2}, label, score)};
  return p;
}

}  // namespace

TEST_CASE("label names round trip with flags") {
  for (CoreLabel l : kAllCoreLabels) {
    CHECK(parse_core_label(label_name(l)) == l);
  }
  auto lab = AlignmentLabel::parse("EQUI_POL");
  REQUIRE(lab);
  CHECK(lab->core == CoreLabel::kEqui);
  CHECK(lab->pol);
  CHECK_FALSE(lab->fact);
  CHECK(lab->to_string() == "EQUI_POL");
  auto both = AlignmentLabel::parse("NOALI_FACT_POL");
  REQUIRE(both);
  CHECK(both->core == CoreLabel::kNoali);
  CHECK(both->fact);
  CHECK(both->pol);
  CHECK_FALSE(AlignmentLabel::parse("SAME"));
}

TEST_CASE("EQUI with score 5 is valid") {
  CHECK(validate_pair(one_to_one(CoreLabel::kEqui, 5.0)).empty());
}

TEST_CASE("EQUI with another score is reported") {
  CHECK(mentions(validate_pair(one_to_one(CoreLabel::kEqui, 4.0)), "EQUI must have score 5"));
}

TEST_CASE("SIMI with score 5 is reported") {
  CHECK(mentions(validate_pair(one_to_one(CoreLabel::kSimi, 5.0)), "non-EQUI score must be < 5"));
}

TEST_CASE("relation score must be positive") {
  CHECK(mentions(validate_pair(one_to_one(CoreLabel::kRel, 0.0)), "must be > 0"));
  CHECK(validate_pair(one_to_one(CoreLabel::kRel, 0.5)).empty());
  CHECK(mentions(validate_pair(one_to_one(CoreLabel::kSimi, std::nullopt)), "must have a score"));
}

TEST_CASE("NOALI with score 3 is reported") {
  InterpretablePair p;
  p.sent1 = chunked("today", {{1, 1}});
  p.sent2 = chunked("now", {{1, 1}});
  p.alignments = {record({1}, {kNullToken}, CoreLabel::kNoali, 3.0),
                  record({kNullToken}, {1}, CoreLabel::kNoali, std::nullopt)};
  const auto vs = validate_pair(p);
  CHECK(mentions(vs, "NOALI must have NIL score"));
  // NIL written as 0 is accepted.
  p.alignments[0].score = 0.0;
  CHECK_FALSE(has_errors(validate_pair(p)));
}

TEST_CASE("null side only for unaligned labels") {
  InterpretablePair p;
  p.sent1 = chunked("today", {{1, 1}});
  p.sent2 = chunked("now", {{1, 1}});
  p.alignments = {record({1}, {kNullToken}, CoreLabel::kSimi, 3.0),
                  record({kNullToken}, {1}, CoreLabel::kNoali, std::nullopt)};
  CHECK(mentions(validate_pair(p), "null side"));
  p.alignments[0] = record({kNullToken}, {kNullToken}, CoreLabel::kNoali, std::nullopt);
  CHECK(mentions(validate_pair(p), "both sides are null"));
}

TEST_CASE("each chunk appears in exactly one record") {
  InterpretablePair p;
  p.sent1 = chunked("a b", {{1, 1}, {2, 2}});
  p.sent2 = chunked("c d", {{1, 1}, {2, 2}});
  p.alignments = {record({1}, {1}, CoreLabel::kEqui, 5.0),
                  record({1}, {2}, CoreLabel::kEqui, 5.0)};
  const auto vs = validate_pair(p);
  CHECK(mentions(vs, "appears in 2 records"));
  CHECK(mentions(vs, "appears in 0 records"));
}

TEST_CASE("token sets must be whole chunks") {
  InterpretablePair p;
  p.sent1 = chunked("a b", {{1, 2}});
  p.sent2 = chunked("c", {{1, 1}});
  p.alignments = {record({1}, {1}, CoreLabel::kEqui, 5.0)};
  CHECK(mentions(validate_pair(p), "whole chunk"));
  p.alignments = {record({1, 9}, {1}, CoreLabel::kEqui, 5.0)};
  CHECK(mentions(validate_pair(p), "out of range"));
}

TEST_CASE("FACT on an unaligned chunk is informational only") {
  InterpretablePair p;
  p.sent1 = chunked("never", {{1, 1}});
  p.sent2 = chunked("now", {{1, 1}});
  p.alignments = {record({1}, {kNullToken}, CoreLabel::kAlic, std::nullopt, true),
                  record({kNullToken}, {1}, CoreLabel::kNoali, std::nullopt)};
  const auto vs = validate_pair(p);
  CHECK_FALSE(has_errors(vs));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].severity == Violation::Severity::kInfo);
}

TEST_CASE("label to entailment mapping") {
  auto rel = [](CoreLabel l) { return label_to_entailment(AlignmentLabel{l, false, false}); };
  CHECK(rel(CoreLabel::kEqui) == EntailmentRelation::kEquivalence);
  CHECK(entailment_symbol(rel(CoreLabel::kEqui)) == "≡");
  CHECK(rel(CoreLabel::kOppo) == EntailmentRelation::kNegation);
  CHECK(rel(CoreLabel::kSpe1) == EntailmentRelation::kForwardEntailment);
  CHECK(rel(CoreLabel::kSpe2) == EntailmentRelation::kReverseEntailment);
  CHECK(rel(CoreLabel::kSimi) == EntailmentRelation::kRelated);
  CHECK(rel(CoreLabel::kRel) == EntailmentRelation::kRelated);
  CHECK_THROWS_AS(rel(CoreLabel::kNoali), std::invalid_argument);
  CHECK_THROWS_AS(rel(CoreLabel::kAlic), std::invalid_argument);

  std::set<EntailmentRelation> image;
  for (CoreLabel l : kRelationLabels) image.insert(rel(l));
  CHECK(image.size() == 5);
  CHECK_FALSE(image.count(EntailmentRelation::kIndependent));
}

TEST_CASE("bus accident gold annotation is valid") {
  CHECK(validate_pair(ists::testing::bus_accident()).empty());
}
