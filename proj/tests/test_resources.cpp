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

#include <cmath>
#include <map>
#include <sstream>

#include "helpers.hpp"
#include "ists/resources.hpp"

using namespace ists;

namespace {

EmbeddingSpace space_from(const std::string& text) {
  std::istringstream in(text);
  return EmbeddingSpace::parse(in, "mem");
}

Taxonomy taxonomy_from(const std::string& text) {
  std::istringstream in(text);
  return Taxonomy::parse(in, "mem");
}

// a=(0,0) b=(3,4) c=(6,8): d(a,b)=5, d(b,c)=5, d(a,c)=10.
const char* kToySpace = "3 2\na 0 0\nb 3 4\nc 6 8\n";

}  // namespace

TEST_CASE("three-word space matches 1 - d / max(D)") {
  EmbeddingSpace s = space_from(kToySpace);
  CHECK(s.size() == 3);
  CHECK(s.dimension() == 2);
  for (const char* w : {"a", "b", "c"}) {
    for (const char* v : {"a", "b", "c"}) s.observe(w, v);
  }
  CHECK(s.max_distance() == doctest::Approx(10.0));
  CHECK(*s.similarity("a", "b") == doctest::Approx(0.5));
  CHECK(*s.similarity("b", "c") == doctest::Approx(0.5));
  CHECK(*s.similarity("a", "c") == doctest::Approx(0.0));
  CHECK(*s.similarity("b", "b") == doctest::Approx(1.0));
  CHECK(*s.similarity("a", "b") == *s.similarity("b", "a"));
  CHECK_FALSE(s.similarity("a", "zebra"));
}

TEST_CASE("a fresh pair updates the running maximum first") {
  EmbeddingSpace s = space_from(kToySpace);
  // (a,b) alone: d = max = 5, similarity 0.
  CHECK(*embedding_similarity(s, "a", "b") == doctest::Approx(0.0));
  CHECK(*embedding_similarity(s, "a", "c") == doctest::Approx(0.0));
  CHECK(*embedding_similarity(s, "a", "b") == doctest::Approx(0.5));
  CHECK(s.max_distance() >= 10.0);
}

TEST_CASE("embedding rows of different width are rejected") {
  CHECK_THROWS_WITH_AS(space_from("a 1 2\nb 1 2 3\n"), doctest::Contains("dimension mismatch"),
                       ResourceError);
}

TEST_CASE("paraphrase similarity averages both directions") {
  std::istringstream in("cow\tcattle\t0.8\ncattle\tcow\t0.6\nhorse\tpony\t0.4\n");
  const ParaphraseTable t = ParaphraseTable::parse(in, "mem");
  CHECK(*paraphrase_similarity(t, "cow", "cattle") == doctest::Approx(0.7));
  CHECK(*paraphrase_similarity(t, "horse", "pony") == doctest::Approx(0.4));
  CHECK(*paraphrase_similarity(t, "pony", "horse") == doctest::Approx(0.4));
  CHECK_FALSE(paraphrase_similarity(t, "cow", "pony"));
  std::istringstream bad("a\tb\t1.5\n");
  CHECK_THROWS_AS(ParaphraseTable::parse(bad, "mem"), ResourceError);
}

TEST_CASE("idf default") {
  std::istringstream with("#default\t7.5\nthe\t0.1\nbus\t4\n");
  const IdfTable a = IdfTable::parse(with, "mem");
  CHECK(a.idf("BUS") == doctest::Approx(4.0));
  CHECK(a.idf("unseen") == doctest::Approx(7.5));
  std::istringstream without("the\t0.1\nbus\t4\n");
  const IdfTable b = IdfTable::parse(without, "mem");
  CHECK(b.idf("unseen") == doctest::Approx(4.0));
  LexicalResources none;
  CHECK(none.idf_of("anything") == 1.0);
}

TEST_CASE("word similarity") {
  LexicalResources empty;
  CHECK(word_similarity(empty, "Bus", "bus") == 1.0);
  CHECK(word_similarity(empty, "bus", "car") == 0.0);

  // embeddings1 gives 0.3, embeddings2 absent, paraphrases 0.55.
  LexicalResources r;
  r.embeddings1 = space_from("w 0\nv 7\nz -3\n");
  r.observe("v", "z");
  r.paraphrases = ParaphraseTable{};
  r.paraphrases->add("w", "v", 0.55);
  CHECK(*resource_similarity(r, SimilaritySource::kEmbeddings1, "w", "v") ==
        doctest::Approx(0.3));
  CHECK_FALSE(resource_similarity(r, SimilaritySource::kEmbeddings2, "w", "v"));
  CHECK(word_similarity(r, "w", "v") == doctest::Approx(0.55));
  CHECK(word_similarity(r, "v", "w") == doctest::Approx(0.55));
  CHECK(word_similarity(r, "unknown", "unknown") == 1.0);
}

TEST_CASE("toy taxonomy: specificity") {
  const Taxonomy tax = Taxonomy::load(ists::testing::data_path("toy_taxonomy.tsv"));
  CHECK(tax.size() == 5);
  CHECK(tax.max_depth() == 4);
  CHECK(*tax.lemma_depth("entity") == 1);
  CHECK(*tax.lemma_depth("crow") == 4);
  CHECK(is_more_specific(tax, "crow", "bird"));
  CHECK(is_more_specific(tax, "crow", "entity"));
  CHECK_FALSE(is_more_specific(tax, "bird", "crow"));
  CHECK_FALSE(is_more_specific(tax, "crow", "crow"));
  CHECK_FALSE(is_more_specific(tax, "crow", "unicorn"));
  CHECK_FALSE(is_more_specific(tax, "crow", "dog"));
  const char* lemmas[] = {"entity", "animal", "bird", "crow", "dog"};
  for (const char* a : lemmas) {
    for (const char* b : lemmas) {
      CHECK_FALSE((is_more_specific(tax, a, b) && is_more_specific(tax, b, a)));
    }
  }
}

TEST_CASE("toy taxonomy: path and lch values") {
  const Taxonomy tax = Taxonomy::load(ists::testing::data_path("toy_taxonomy.tsv"));
  auto sim = [&](const char* a, const char* b, TaxonomyMeasure m, RootMode r) {
    return taxonomy_similarity(tax, a, b, m, r);
  };
  CHECK(*sim("crow", "crow", TaxonomyMeasure::kPath, RootMode::kTrueRoot) == 1.0);
  CHECK(*sim("crow", "bird", TaxonomyMeasure::kPath, RootMode::kTrueRoot) ==
        doctest::Approx(0.5));
  CHECK(*sim("crow", "dog", TaxonomyMeasure::kPath, RootMode::kTrueRoot) ==
        doctest::Approx(0.25));
  CHECK_FALSE(sim("crow", "unicorn", TaxonomyMeasure::kPath, RootMode::kTrueRoot));
  // lch with D = 4: -log((e + 1) / 8).
  CHECK(*sim("crow", "bird", TaxonomyMeasure::kLch, RootMode::kTrueRoot) ==
        doctest::Approx(std::log(4.0)));
  // lcs as root: lcs(crow, dog) = animal with height 2, so D' = 3.
  CHECK(*sim("crow", "dog", TaxonomyMeasure::kLch, RootMode::kLcsAsRoot) ==
        doctest::Approx(-std::log(4.0 / 6.0)));
  // jcn needs information content.
  CHECK_FALSE(sim("crow", "dog", TaxonomyMeasure::kJcn, RootMode::kTrueRoot));
}

TEST_CASE("jcn from information content") {
  Taxonomy tax = Taxonomy::load(ists::testing::data_path("toy_taxonomy.tsv"));
  std::istringstream ic("n1\t0\nn2\t1\nn3\t2\nn4\t3.5\nn5\t2.5\n");
  tax.load_information_content(ic, "mem");
  const double jcn = *taxonomy_similarity(tax, "crow", "dog", TaxonomyMeasure::kJcn,
                                          RootMode::kTrueRoot);
  CHECK(jcn == doctest::Approx(1.0 / (3.5 + 2.5 - 2.0 + kJcnEpsilon)));
  CHECK(*taxonomy_similarity(tax, "crow", "dog", TaxonomyMeasure::kJcn, RootMode::kLcsAsRoot) ==
        doctest::Approx(jcn));
  std::istringstream negative("n1\t-1\n");
  CHECK_THROWS_AS(tax.load_information_content(negative, "mem"), ResourceError);
}

TEST_CASE("cyclic taxonomy is rejected") {
  CHECK_THROWS_AS(taxonomy_from("a\tn\tx\tb\nb\tn\ty\ta\n"), ResourceError);
  CHECK_THROWS_AS(taxonomy_from("a\tn\tx\tmissing\n"), ResourceError);
}

TEST_CASE("path similarity matches an all-pairs shortest path oracle") {
  // Five synsets with a shared child:      r
  //                                      /   \.
  //                                     p     q
  //                                      \   / \.
  //                                        s    t
  const std::string text =
      "r\tn\troot\t\np\tn\tpee\tr\nq\tn\tcue\tr\ns\tn\tess\tp,q\nt\tn\ttee\tq\n";
  const Taxonomy tax = taxonomy_from(text);
  const std::vector<std::string> ids = {"r", "p", "q", "s", "t"};
  const std::vector<std::string> lemmas = {"root", "pee", "cue", "ess", "tee"};
  const std::vector<std::pair<int, int>> up = {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {4, 2}};
  // Upward distances by Floyd-Warshall over hypernym edges.
  const int n = 5, inf = 1000;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int k = 0; k < n; ++k) d[k][k] = 0;
  for (auto [child, parent] : up) d[child][parent] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int best = inf;
      for (int c = 0; c < n; ++c) best = std::min(best, d[a][c] + d[b][c]);
      const auto got = taxonomy_similarity(tax, lemmas[a], lemmas[b], TaxonomyMeasure::kPath,
                                           RootMode::kTrueRoot);
      REQUIRE(got);
      CHECK(*got == doctest::Approx(1.0 / (1.0 + best)));
      CHECK(*got > 0.0);
      CHECK(*got <= 1.0);
    }
  }
}

TEST_CASE("resource bundle capability flags") {
  LexicalResources none = load_resources(ResourcePaths{});
  CHECK_FALSE(none.has_paraphrases());
  CHECK_FALSE(resource_similarity(none, SimilaritySource::kParaphrases, "a", "b"));
  ResourcePaths paths;
  paths.taxonomy = ists::testing::data_path("toy_taxonomy.tsv");
  const LexicalResources tax = load_resources(paths);
  CHECK(tax.has_taxonomy());
  CHECK_FALSE(tax.has_information_content());
  paths.taxonomy = ists::testing::data_path("no_such_file.tsv");
  CHECK_THROWS_AS(load_resources(paths), ResourceError);
}
