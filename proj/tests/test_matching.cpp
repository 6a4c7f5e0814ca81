#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "pressmatch/matching.hpp"
#include "support/oracles.hpp"

namespace pm = pressmatch;
using namespace pressmatch::matching;

namespace {

std::string random_string(std::mt19937_64& rng, std::size_t max_len) {
  std::string s(oracle::draw(rng, max_len + 1), 'a');
  for (auto& c : s) c = static_cast<char>('a' + oracle::draw(rng, 4));
  return s;
}

pm::corpus::JournalistProfile journalist(std::string first, std::string last) {
  pm::corpus::JournalistProfile p;
  p.first_name = std::move(first);
  p.last_name = std::move(last);
  p.full_name = p.first_name + " " + p.last_name;
  return p;
}

}  // namespace

TEST(Levenshtein, KnownDistances) {
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("flaw", "lawn"), 2u);
  EXPECT_EQ(levenshtein("same", "same"), 0u);
  EXPECT_EQ(levenshtein("caf\xC3\xA9", "cafe"), 1u);
}

TEST(Levenshtein, AgreesWithRecursiveOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(rng, 9), b = random_string(rng, 9);
    ASSERT_EQ(levenshtein(a, b), oracle::levenshtein(a, b)) << a << " / " << b;
  }
}

TEST(Levenshtein, MetricProperties) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(rng, 8), b = random_string(rng, 8), c = random_string(rng, 8);
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
    EXPECT_LE(levenshtein(a, c), levenshtein(a, b) + levenshtein(b, c));
    EXPECT_EQ(levenshtein(a, b) == 0, a == b);
  }
}

TEST(MatchRatio, RangeAndEquality) {
  EXPECT_EQ(match_ratio("abc", "abc"), 100);
  EXPECT_EQ(match_ratio("kitten", "sitting"), 57);
  EXPECT_EQ(match_ratio("abc", "xyz"), 1);
  EXPECT_EQ(match_ratio("", "x"), 1);
  EXPECT_LT(match_ratio(std::string(300, 'a'), std::string(299, 'a') + "b"), 100);
  EXPECT_THROW(match_ratio("", ""), pm::InvalidArgument);
}

TEST(MuckrackSlug, NormalisesNameParts) {
  EXPECT_EQ(muckrack_slug("Jane", "Doe"), "https://muckrack.com/jane-doe");
  EXPECT_EQ(muckrack_slug("Mary-Ann", "O'Brien"), "https://muckrack.com/maryann-obrien");
  EXPECT_EQ(muckrack_slug("Jos\xC3\xA9", "Ruiz"), "https://muckrack.com/jos\xC3\xA9-ruiz");
  EXPECT_THROW(muckrack_slug("", "Doe"), pm::InvalidArgument);
  EXPECT_THROW(muckrack_slug("Jane", "--"), pm::InvalidArgument);
}

TEST(CharNgrams, PaddedTrigrams) {
  EXPECT_EQ(char_ngrams("ab", 3), (std::vector<std::string>{"^ab", "ab$"}));
  EXPECT_EQ(char_ngrams("", 2), (std::vector<std::string>{"^$"}));
  EXPECT_TRUE(char_ngrams("", 3).empty());
  EXPECT_EQ(char_ngrams("\xC3\xA9", 2), (std::vector<std::string>{"^\xC3\xA9", "\xC3\xA9$"}));
  EXPECT_THROW(char_ngrams("x", 0), pm::InvalidArgument);
}

TEST(FuzzyMatch, ExactMemberScoresOne) {
  const auto idx = build_sitemap_index({"https://muckrack.com/jane-doe", "https://muckrack.com/john-roe"});
  const auto r = fuzzy_match(idx, "https://muckrack.com/jane-doe");
  EXPECT_EQ(r.candidate, "https://muckrack.com/jane-doe");
  EXPECT_DOUBLE_EQ(r.score, 1.0);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.method, Method::ngram_tfidf);

  const auto single = build_sitemap_index({"https://muckrack.com/solo-entry"});
  EXPECT_TRUE(fuzzy_match(single, "https://muckrack.com/solo-entry").accepted);
}

TEST(FuzzyMatch, TypoFindsPlantedEntryAndThresholdIsStrict) {
  const auto idx = build_sitemap_index({"https://muckrack.com/jane-doe", "https://muckrack.com/john-roe",
                                        "https://muckrack.com/maria-lopez", "https://muckrack.com/sam-lee"});
  const auto r = fuzzy_match(idx, "https://muckrack.com/maria-lopes");
  EXPECT_EQ(r.candidate, "https://muckrack.com/maria-lopez");
  EXPECT_GT(r.score, 0.0);
  EXPECT_LT(r.score, 1.0);
  EXPECT_FALSE(fuzzy_match(idx, "https://muckrack.com/maria-lopes", r.score).accepted);
  EXPECT_TRUE(fuzzy_match(idx, "https://muckrack.com/maria-lopes", std::nextafter(r.score, 0.0)).accepted);
}

TEST(FuzzyMatch, NoSharedFeatureGivesEmptyCandidate) {
  const auto idx = build_sitemap_index({"aaaa", "bbbb", "cccc"});
  const auto r = fuzzy_match(idx, "zzzz");
  EXPECT_TRUE(r.candidate.empty());
  EXPECT_FALSE(r.accepted);
}

TEST(LevenshteinMatch, LeastDistanceWithLexicalTies) {
  const std::vector<std::string> c = {"abd", "abc", "xyz"};
  const auto r = levenshtein_match(c, "abx");
  EXPECT_EQ(r.candidate, "abc");
  EXPECT_EQ(r.score, 67.0);
  EXPECT_FALSE(r.accepted);
  EXPECT_TRUE(levenshtein_match(c, "abc").accepted);
  EXPECT_TRUE(levenshtein_match(std::vector<std::string>{}, "abc").candidate.empty());
}

TEST(LinkProfiles, ExactFuzzyAndUnresolved) {
  const auto idx = build_sitemap_index({"https://muckrack.com/jane-doe", "https://muckrack.com/maria-lopez-2",
                                        "https://muckrack.com/sam-lee"});
  const std::vector<pm::corpus::JournalistProfile> js = {journalist("Jane", "Doe"), journalist("Maria", "Lopez"),
                                                         journalist("Quentin", "Zyx"), journalist("", "")};
  const auto rep = link_profiles(js, idx, 0.7);
  ASSERT_EQ(rep.outcomes.size(), 4u);
  EXPECT_EQ(rep.outcomes[0].status, LinkStatus::exact);
  EXPECT_EQ(rep.outcomes[1].status, LinkStatus::fuzzy);
  EXPECT_EQ(rep.outcomes[1].url, "https://muckrack.com/maria-lopez-2");
  EXPECT_EQ(rep.outcomes[2].status, LinkStatus::unresolved);
  EXPECT_TRUE(rep.outcomes[3].slug.empty());
  EXPECT_FALSE(rep.outcomes[3].note.empty());
  EXPECT_EQ(rep.exact + rep.fuzzy + rep.unresolved, js.size());
}

TEST(Sitemap, ParseSkipsBlanksAndComments) {
  EXPECT_EQ(parse_sitemap("# header\n a \n\nb\r\n"), (std::vector<std::string>{"a", "b"}));
}

TEST(SyntheticSitemap, DeterministicPerSeed) {
  const auto a = make_synthetic_sitemap(500, 20, 3);
  const auto b = make_synthetic_sitemap(500, 20, 3);
  const auto c = make_synthetic_sitemap(500, 20, 4);
  EXPECT_EQ(a.entries, b.entries);
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_NE(a.entries, c.entries);
  EXPECT_EQ(a.entries.size(), 500u);
  EXPECT_EQ(std::set<std::string>(a.entries.begin(), a.entries.end()).size(), 500u);
  for (std::size_t i = 0; i < a.queries.size(); ++i) {
    EXPECT_NE(a.queries[i], a.planted[i]);
    EXPECT_LE(levenshtein(a.queries[i], a.planted[i]), 2u);
  }
}

TEST(Benchmark, TwoRowsPerQueryCount) {
  const auto data = make_synthetic_sitemap(300, 10, 1);
  const std::vector<std::size_t> counts = {1, 5, 10};
  const auto res = benchmark_matchers(data, counts);
  ASSERT_EQ(res.rows.size(), 6u);
  EXPECT_EQ(res.levenshtein_best.size(), 10u);
  EXPECT_EQ(res.fuzzy_best.size(), 10u);
  const auto csv = benchmark_csv(res.rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_EQ(csv.rfind("method,corpus_size,queries,seconds\n", 0), 0u);
  const std::vector<std::size_t> too_many = {11};
  EXPECT_THROW(benchmark_matchers(data, too_many), pm::InvalidArgument);
}
