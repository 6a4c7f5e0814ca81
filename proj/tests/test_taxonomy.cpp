#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pressmatch/taxonomy.hpp"
#include "support/oracles.hpp"

namespace pm = pressmatch;
using namespace pressmatch::taxonomy;
using pm::textprep::TokenList;

namespace {

TokenList toks(std::vector<std::string> t) { return TokenList{std::move(t), 0}; }

TierLabelSet tier1(std::vector<std::string> ids) {
  TierLabelSet s;
  for (auto& id : ids) s.add(1, std::move(id));
  return s;
}

TaxonomyTree shipped() { return load_taxonomy(pm::textprep::default_data_dir() + "/iab_taxonomy.csv"); }

std::size_t nb_slot(const NbModel& m, int tier, const std::string& id) {
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    if (m.labels[i].tier == tier && m.labels[i].label == id) return i;
  ADD_FAILURE() << "no label " << id;
  return 0;
}

}  // namespace

TEST(Tree, EducationChainIsAccepted) {
  const auto tree = parse_taxonomy(
      "id,name,tier,parent_id\n"
      "edu,Education,1,\n"
      "edu-college,College Education,2,edu\n"
      "edu-testing,Standardized Testing,3,edu-college\n"
      "edu-prof,Professional School,4,edu-testing\n");
  EXPECT_EQ(tree.size(), 4u);
  EXPECT_EQ(tree.path("edu-prof"), (std::vector<std::string>{"edu", "edu-college", "edu-testing", "edu-prof"}));
  EXPECT_EQ(tree.resolve("Professional School"), std::optional<std::string>("edu-prof"));
  EXPECT_EQ(tree.resolve("edu"), std::optional<std::string>("edu"));
  EXPECT_FALSE(tree.resolve("Nothing"));
}

TEST(Tree, StructuralErrorsNameTheNode) {
  auto message = [](const char* csv) {
    try {
      parse_taxonomy(csv);
    } catch (const pm::InvalidArgument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message("id,name,tier,parent_id\nedu,E,1,\nbad,B,3,edu\n").find("'bad'"), std::string::npos);
  EXPECT_NE(message("id,name,tier,parent_id\norphan,O,2,\n").find("'orphan'"), std::string::npos);
  EXPECT_NE(message("id,name,tier,parent_id\na,A,1,\nb,B,2,zzz\n").find("zzz"), std::string::npos);
  EXPECT_NE(message("id,name,tier,parent_id\na,A,1,\na,B,1,\n").find("duplicate"), std::string::npos);
  EXPECT_NE(message("id,name,tier,parent_id\na,A,5,\n").find("'a'"), std::string::npos);
  EXPECT_EQ(message(""), "taxonomy: empty file");
}

TEST(Tree, ShippedFileIsValid) {
  const auto tree = shipped();
  EXPECT_GT(tree.size(), 20u);
  ASSERT_NE(tree.find("edu-college-testing-prof"), nullptr);
  EXPECT_EQ(tree.find("edu-college-testing-prof")->tier, 4);
}

TEST(Labels, ValidateAndPlaceByTier) {
  const auto tree = shipped();
  const auto s = labels_from_ids({"edu-college", "edu", "sports"}, tree);
  EXPECT_EQ(s.tier(1), (std::vector<std::string>{"edu", "sports"}));
  EXPECT_EQ(s.tier(2), (std::vector<std::string>{"edu-college"}));
  EXPECT_NO_THROW(validate(s, tree));
  TierLabelSet wrong;
  wrong.add(1, "edu-college");
  EXPECT_THROW(validate(wrong, tree), pm::InvalidArgument);
  EXPECT_THROW(labels_from_ids({"nope"}, tree), pm::InvalidArgument);
}

TEST(Labels, JsonlRoundTrip) {
  const auto docs = parse_labeled_docs(
      "{\"id\":\"d1\",\"text\":\"hello\",\"tier1\":[\"b\",\"a\",\"a\"],\"tier3\":[\"c\"]}\n"
      "\n"
      "{\"text\":\"no id\"}\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].labels.tier(1), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(docs[1].id, "3");
  EXPECT_TRUE(docs[1].labels.empty());
  const auto back = parse_labeled_docs(labeled_docs_jsonl(docs, true));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].labels, docs[0].labels);
  EXPECT_EQ(back[1].text, "no id");
  EXPECT_THROW(parse_labeled_docs("{oops\n"), pm::IoError);
  EXPECT_THROW(parse_labeled_docs("{\"tier1\":\"a\"}\n"), pm::InvalidArgument);
}

TEST(NaiveBayes, TwoDocumentFixture) {
  const std::vector<TokenList> docs = {toks({"college", "exam", "tuition"}), toks({"match", "goal", "league"})};
  const std::vector<TierLabelSet> labels = {tier1({"edu"}), tier1({"sports"})};
  const auto m = train_nb(docs, labels);
  const auto post = nb_posteriors(m, toks({"college", "tuition"}));
  EXPECT_GT(post[nb_slot(m, 1, "edu")], 0.5);
  EXPECT_LT(post[nb_slot(m, 1, "sports")], 0.5);
  EXPECT_EQ(predict_nb(m, toks({"college", "tuition"})), tier1({"edu"}));
}

TEST(NaiveBayes, LaplaceSmoothingForUnseenTerm) {
  const std::vector<TokenList> docs = {toks({"a", "a", "b"}), toks({"c"})};
  const auto m = train_nb(docs, {tier1({"x"}), tier1({"y"})});
  const auto& bx = m.labels[nb_slot(m, 1, "x")];
  const std::size_t c = m.term_index.at("c"), a = m.term_index.at("a");
  EXPECT_NEAR(bx.log_likelihood[1][c], std::log(1.0 / (3.0 + 3.0)), 1e-15);
  EXPECT_NEAR(bx.log_likelihood[1][a], std::log(3.0 / 6.0), 1e-15);
  EXPECT_NEAR(bx.log_likelihood[0][c], std::log(2.0 / 4.0), 1e-15);
  EXPECT_NEAR(bx.log_prior[1], std::log(0.5), 1e-15);
}

TEST(NaiveBayes, PosteriorsMatchProductFormOracle) {
  std::mt19937_64 rng(8);
  const char* words[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<std::string>> raw;
    std::vector<TokenList> docs;
    std::vector<TierLabelSet> labels;
    std::vector<bool> positive;
    for (int d = 0; d < 8; ++d) {
      std::vector<std::string> t;
      for (std::size_t w = 0; w < 2 + oracle::draw(rng, 5); ++w) t.push_back(words[oracle::draw(rng, 6)]);
      const bool pos = d == 0 || (d != 1 && oracle::draw(rng, 2));
      raw.push_back(t);
      docs.push_back(toks(t));
      labels.push_back(tier1({pos ? "p" : "n"}));
      positive.push_back(pos);
    }
    const double alpha = 0.5 + static_cast<double>(trial % 3);
    const auto m = train_nb(docs, labels, alpha);
    const std::vector<std::string> q = {words[oracle::draw(rng, 6)], words[oracle::draw(rng, 6)], "unseen"};
    EXPECT_NEAR(nb_posteriors(m, toks(q))[nb_slot(m, 1, "p")], oracle::nb_posterior(raw, positive, q, alpha), 1e-12);
  }
}

TEST(NaiveBayes, ThresholdExtremes) {
  const std::vector<TokenList> docs = {toks({"a", "b"}), toks({"c"}), toks({"a", "d"})};
  TierLabelSet l0 = tier1({"x"}), l1 = tier1({"y"}), l2 = tier1({"x", "z"});
  l0.add(2, "x-1");
  l1.add(2, "y-1");
  const auto m = train_nb(docs, {l0, l1, l2});
  const auto all = predict_nb(m, toks({"a"}), 0.0);
  EXPECT_EQ(all.all().size(), m.labels.size());
  const auto one = predict_nb(m, toks({"a"}), 1.0 + 1e-9);
  EXPECT_EQ(one.tier(1).size(), 1u);
  EXPECT_EQ(one.tier(2).size(), 1u);
  EXPECT_TRUE(one.tier(3).empty());
}

TEST(NaiveBayes, DroppedAndInvalidInputs) {
  const std::vector<TokenList> docs = {toks({"a"}), toks({"b"})};
  const auto m = train_nb(docs, {tier1({"x"}), tier1({"y"})}, 1.0, {{1, "x"}, {2, "ghost"}});
  EXPECT_EQ(m.dropped, (std::vector<std::string>{"ghost"}));
  EXPECT_THROW(train_nb(docs, {tier1({"x"})}), pm::InvalidArgument);
  EXPECT_THROW(train_nb({}, {}), pm::InvalidArgument);
  EXPECT_THROW(train_nb(docs, {tier1({"x"}), tier1({"y"})}, 0.0), pm::InvalidArgument);
  const auto every = train_nb(docs, {tier1({"x"}), tier1({"x"})});
  EXPECT_DOUBLE_EQ(nb_posteriors(every, toks({"a"}))[0], 1.0);
}

TEST(Knn, MajorityVoteOverThreeNeighbours) {
  const std::vector<TokenList> docs = {toks({"apple", "pie"}), toks({"apple", "tart"}), toks({"apple", "cake"}),
                                       toks({"motor", "race"})};
  const auto m = train_knn(docs, {tier1({"A", "B"}), tier1({"A"}), tier1({"C"}), tier1({"D"})});
  const auto p = predict_knn_detailed(m, toks({"apple"}), 3);
  EXPECT_EQ(p.k_used, 3u);
  EXPECT_EQ(p.neighbors, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.labels, tier1({"A"}));
}

TEST(Knn, UnanimousNeighboursAndFallback) {
  const std::vector<TokenList> docs = {toks({"a", "x"}), toks({"a", "y"}), toks({"b", "z"})};
  TierLabelSet both = tier1({"L"});
  both.add(2, "L-1");
  TierLabelSet other = tier1({"M"});
  other.add(2, "M-1");
  const auto m = train_knn(docs, {both, both, other});
  EXPECT_EQ(predict_knn(m, toks({"a"}), 2), both);
  const auto split = train_knn(docs, {tier1({"P"}), tier1({"Q"}), tier1({"R"})});
  const auto p = predict_knn_detailed(split, toks({"a", "x"}), 3);
  EXPECT_EQ(p.labels, tier1({"P"}));
}

TEST(Knn, KClampedToTrainingSize) {
  const std::vector<TokenList> docs = {toks({"a"}), toks({"b"})};
  const auto m = train_knn(docs, {tier1({"X"}), tier1({"X"})});
  const auto p = predict_knn_detailed(m, toks({"a"}), 10);
  EXPECT_EQ(p.k_used, 2u);
  EXPECT_EQ(p.labels, tier1({"X"}));
  EXPECT_THROW(predict_knn(m, toks({"a"}), 0), pm::InvalidArgument);
}

TEST(Metrics, HandComputedExample) {
  const std::vector<TierLabelSet> truth = {tier1({"a", "b"}), tier1({"a"}), tier1({"c"})};
  const std::vector<TierLabelSet> pred = {tier1({"a"}), tier1({"a", "c"}), tier1({"c"})};
  const auto r = evaluate(pred, truth);
  EXPECT_DOUBLE_EQ(r.accuracy, 1.0 / 3.0);
  // a: tp2; b: fn1; c: tp1 fp1
  EXPECT_DOUBLE_EQ(r.micro.precision, 3.0 / 4.0);
  EXPECT_DOUBLE_EQ(r.micro.recall, 3.0 / 4.0);
  EXPECT_DOUBLE_EQ(r.macro.precision, (1.0 + 0.0 + 0.5) / 3.0);
  EXPECT_DOUBLE_EQ(r.macro.recall, (1.0 + 0.0 + 1.0) / 3.0);
  EXPECT_NEAR(r.macro.f1, (1.0 + 0.0 + 2.0 / 3.0) / 3.0, 1e-15);
  EXPECT_NEAR(r.weighted.f1, (2 * 1.0 + 1 * 0.0 + 1 * (2.0 / 3.0)) / 4.0, 1e-15);
}

TEST(Metrics, PerfectPredictionAndZeroSupport) {
  const std::vector<TierLabelSet> truth = {tier1({"a"}), tier1({"b"})};
  const auto perfect = evaluate(truth, truth);
  for (double v : perfect.values()) EXPECT_DOUBLE_EQ(v, 1.0);
  const auto r = evaluate({tier1({"a", "z"}), tier1({"b"})}, truth);
  EXPECT_EQ(r.zero_support, (std::vector<std::string>{"z"}));
  EXPECT_DOUBLE_EQ(r.macro.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.micro.precision, 2.0 / 3.0);
  EXPECT_THROW(evaluate({}, {}), pm::InvalidArgument);
  EXPECT_THROW(evaluate({tier1({"a"})}, truth), pm::InvalidArgument);
}

TEST(Metrics, F1IsHarmonicMeanPerLabelAndMicro) {
  std::mt19937_64 rng(30);
  const char* ids[] = {"a", "b", "c", "d"};
  std::vector<TierLabelSet> pred, truth;
  for (int i = 0; i < 50; ++i) {
    TierLabelSet p, t;
    for (auto id : ids) {
      if (oracle::draw(rng, 2)) p.add(1, id);
      if (oracle::draw(rng, 2)) t.add(1, id);
    }
    pred.push_back(p);
    truth.push_back(t);
  }
  const auto r = evaluate(pred, truth);
  auto hm = [](const Prf& s) { return s.precision + s.recall > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0; };
  EXPECT_NEAR(r.micro.f1, hm(r.micro), 1e-15);
  for (const auto& [id, c] : r.per_label) EXPECT_NEAR(prf(c).f1, hm(prf(c)), 1e-15);
  for (double v : r.values()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  const auto j = to_json(r);
  EXPECT_EQ(j["samples"], 50);
  EXPECT_NE(to_text(r).find("micro"), std::string::npos);
}

TEST(BeatTier, MappingAndExclusions) {
  const auto mapping = parse_beat_mapping(
      "beat_name,tier1_label\nHigher Education,Education\nHigher Education,Careers\nWire Copy,Content Source\n"
      "Markets,Business and Finance\n");
  EXPECT_EQ(mapping.at("Higher Education").size(), 2u);
  const std::vector<std::vector<std::string>> pred = {
      {"Careers"}, {"Sports"}, {"Content Source"}, {"Business and Finance"}, {"Education"}};
  const std::vector<std::vector<std::string>> beats = {
      {"Higher Education"}, {"Higher Education"}, {"Wire Copy"}, {"Markets", "Content Language"}, {}};
  const auto r = beat_tier_eval(pred, beats, mapping);
  EXPECT_EQ(r.evaluated, 3u);
  EXPECT_EQ(r.correct, 2u);
  EXPECT_EQ(r.excluded, (std::vector<std::size_t>{2, 4}));
  EXPECT_DOUBLE_EQ(r.accuracy(), 2.0 / 3.0);
  EXPECT_THROW(beat_tier_eval(pred, {}, mapping), pm::InvalidArgument);
  EXPECT_DOUBLE_EQ(BeatTierReport{}.accuracy(), 0.0);
}

TEST(BeatTier, ShippedMappingResolvesAgainstTree) {
  const auto tree = shipped();
  const auto mapping = load_beat_mapping(pm::textprep::default_data_dir() + "/beat_mapping.csv");
  const auto& skip = default_excluded_beats();
  for (const auto& [beat, labels] : mapping)
    for (const auto& l : labels)
      if (std::find(skip.begin(), skip.end(), l) == skip.end()) { EXPECT_TRUE(tree.resolve(l)) << l; }
}
