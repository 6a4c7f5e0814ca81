// pressmatch: command-line front end for the journalist recommender pipeline.
//
// Shared settings (data directory, thresholds, k values, seed, resource
// paths) are top-level options and may also come from a key=value file given
// with --config; command-line flags take precedence over the file.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pressmatch/pressmatch.hpp"

namespace pm = pressmatch;
using json = nlohmann::json;

namespace {

struct RunConfig {
  std::string data_dir;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string output;
  std::string lexicon;
  std::string taxonomy;
  std::string beat_mapping;
  std::string domains;
  double fuzzy_threshold = pm::matching::kDefaultFuzzyThreshold;
  double linkage_threshold = 0.5;
  double nb_tau = 0.5;
  double nb_alpha = 1.0;
  std::size_t k = 5;
  std::size_t taxonomy_k = 3;
  std::size_t min_articles = 10;
  std::string lemmatizer = "dictionary";
  bool require_english = false;

  std::string data_file(const std::string& explicit_path, const char* name) const {
    return explicit_path.empty() ? data_dir + "/" + name : explicit_path;
  }

  bool structured() const { return format == "structured"; }

  pm::textprep::CleanConfig clean_config() const {
    auto c = pm::textprep::CleanConfig::defaults(pm::textprep::Resources::load(data_dir));
    if (lemmatizer == "dictionary") c.lemmatizer = pm::textprep::LemmatizerMode::dictionary_pos;
    else if (lemmatizer == "suffix") c.lemmatizer = pm::textprep::LemmatizerMode::suffix_stemmer;
    else c.lemmatizer = pm::textprep::LemmatizerMode::off;
    c.require_english = require_english;
    c.validate();
    return c;
  }
};

// Machine-readable output goes to --output when set. Without --output it goes
// to stdout in structured mode, and the human summary goes to stdout otherwise.
void emit(const RunConfig& cfg, const std::string& machine, const std::string& human) {
  if (!cfg.output.empty()) {
    pm::str::write_file(cfg.output, machine);
    std::cout << human;
  } else if (cfg.structured()) {
    std::cout << machine;
  } else {
    std::cout << human;
  }
}

pm::corpus::Format guess_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return pm::corpus::parse_format(flag);
  return path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0 ? pm::corpus::Format::jsonl
                                                                             : pm::corpus::Format::csv;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::vector<pm::corpus::Article> load_articles_reported(const std::string& path, const std::string& format) {
  auto loaded = pm::corpus::load_articles(path, guess_format(path, format));
  if (loaded.report.rejected)
    std::cerr << "warning: " << loaded.report.rejected << " article record(s) rejected in " << path << "\n";
  return std::move(loaded.items);
}

// --------------------------------------------------------------------------

struct IngestArgs {
  std::string articles, input_format, outlets, outlets_output;
};

void run_ingest(const RunConfig& cfg, const IngestArgs& a) {
  auto loaded = pm::corpus::load_articles(a.articles, guess_format(a.articles, a.input_format));
  const auto profiles = pm::corpus::build_journalists(loaded.items, cfg.min_articles);
  std::string human = "articles accepted: " + std::to_string(loaded.report.accepted) +
                      "\narticles rejected: " + std::to_string(loaded.report.rejected) +
                      "\njournalists with >= " + std::to_string(cfg.min_articles) +
                      " articles: " + std::to_string(profiles.size()) + "\n";
  for (const auto& r : loaded.report.rejections)
    human += "  rejected record " + std::to_string(r.record) + ": " + r.reason + "\n";
  if (!a.outlets.empty()) {
    auto outlets = pm::corpus::load_outlets(a.outlets);
    const auto kept = pm::corpus::filter_outlets(outlets.items);
    human += "outlets kept: " + std::to_string(kept.size()) + " of " + std::to_string(outlets.items.size()) + "\n";
    if (!a.outlets_output.empty()) {
      std::string out = "name\n";
      for (const auto& o : kept) out += pm::csv::format_row({o.name});
      pm::str::write_file(a.outlets_output, out);
    }
  }
  emit(cfg, pm::corpus::write_profiles(profiles), human);
}

struct BuildIndexArgs {
  std::string articles, input_format, profiles;
};

void run_build_index(const RunConfig& cfg, const BuildIndexArgs& a) {
  if (cfg.output.empty()) throw pm::InvalidArgument("build-index needs --output for the index file");
  const auto articles = load_articles_reported(a.articles, a.input_format);
  auto profiles = a.profiles.empty() ? pm::corpus::build_journalists(articles, cfg.min_articles)
                                     : pm::corpus::load_profiles(a.profiles);
  auto built = pm::recommend::build_index(articles, std::move(profiles), cfg.clean_config());
  pm::recommend::save(built.index, cfg.output);
  const auto& r = built.report;
  std::cout << "indexed articles: " << r.indexed << "\n"
            << "skipped (no profiled author): " << r.without_profiled_author << "\n"
            << "skipped (empty after cleaning): " << r.empty_after_cleaning << "\n"
            << "skipped (not English): " << r.non_english << "\n"
            << "vocabulary: " << built.index.model().vocabulary().size() << " terms\n"
            << "journalists: " << built.index.profiles().size() << "\n";
}

struct RecommendArgs {
  std::string index, text;
};

void run_recommend(const RunConfig& cfg, const RecommendArgs& a) {
  const auto index = pm::recommend::load(a.index);
  const std::string release = a.text == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                            : pm::str::read_file(a.text);
  const auto recs = pm::recommend::recommend(index, release, cfg.clean_config(), cfg.k);
  emit(cfg, pm::recommend::to_json(recs).dump(2) + "\n", pm::recommend::to_text(recs));
}

struct MatchProfilesArgs {
  std::string profiles, sitemap, profiles_output;
};

void run_match_profiles(const RunConfig& cfg, const MatchProfilesArgs& a) {
  auto profiles = pm::corpus::load_profiles(a.profiles);
  const auto index = pm::matching::build_sitemap_index(pm::matching::load_sitemap(a.sitemap));
  const auto report = pm::matching::link_profiles(profiles, index, cfg.fuzzy_threshold);
  std::string out = "journalist,slug,status,url,score\n";
  for (const auto& o : report.outcomes)
    out += pm::csv::format_row({o.journalist, o.slug, std::string(pm::matching::to_string(o.status)), o.url,
                                fmt("%.6f", o.score)});
  if (!a.profiles_output.empty()) {
    for (std::size_t i = 0; i < profiles.size(); ++i)
      if (report.outcomes[i].status != pm::matching::LinkStatus::unresolved)
        profiles[i].muckrack_url = report.outcomes[i].url;
    pm::str::write_file(a.profiles_output, pm::corpus::write_profiles(profiles));
  }
  emit(cfg, out,
       "exact: " + std::to_string(report.exact) + "\nfuzzy: " + std::to_string(report.fuzzy) +
           "\nunresolved: " + std::to_string(report.unresolved) + "\n");
}

struct LinkEmailsArgs {
  std::string profiles, emails, oracle, comparator = "levenshtein";
};

void run_link_emails(const RunConfig& cfg, const LinkEmailsArgs& a) {
  const auto profiles = pm::corpus::load_profiles(a.profiles);
  const auto emails = pm::corpus::load_emails(a.emails);
  if (emails.report.rejected)
    std::cerr << "warning: " << emails.report.rejected << " email record(s) rejected\n";
  const auto domains = pm::linkage::load_domain_map(cfg.data_file(cfg.domains, "outlet_domains.csv"));
  pm::linkage::LinkOptions opt;
  opt.threshold = cfg.linkage_threshold;
  opt.comparator = a.comparator == "ngram" ? pm::linkage::Comparator::ngram : pm::linkage::Comparator::levenshtein;
  auto result = pm::linkage::link_emails(profiles, emails.items, domains, opt);
  std::string human = "candidate pairs: " + std::to_string(result.candidate_pairs) +
                      "\ncomparisons: " + std::to_string(result.comparisons) +
                      "\nmatches: " + std::to_string(result.matches.size()) +
                      "\njournalists skipped: " + std::to_string(result.skipped.size()) + "\n";
  auto matches = std::move(result.matches);
  if (!a.oracle.empty()) {
    const auto labelled = pm::linkage::label_matches(std::move(matches), pm::linkage::load_oracle(a.oracle));
    using pm::linkage::Label;
    for (Label l : {Label::true_match, Label::false_match, Label::invalid})
      human += std::string(pm::linkage::to_string(l)) + ": " + std::to_string(labelled[l].count) +
               " (mean similarity " + fmt("%.4f", labelled[l].mean_similarity) + ")\n";
    matches = labelled.matches;
  }
  emit(cfg, pm::linkage::matches_csv(matches), human);
}

struct SentimentArgs {
  std::string articles, input_format, profiles, outlet, journalist;
};

void run_sentiment_report(const RunConfig& cfg, const SentimentArgs& a) {
  const auto articles = load_articles_reported(a.articles, a.input_format);
  const auto lexicon = pm::sentiment::ValenceLexicon::load(cfg.data_file(cfg.lexicon, "AFINN-111.txt"));
  const pm::sentiment::ArticleScores scores(articles, lexicon, cfg.clean_config());
  auto profiles = a.profiles.empty() ? pm::corpus::build_journalists(articles, cfg.min_articles)
                                     : pm::corpus::load_profiles(a.profiles);
  if (!a.journalist.empty()) {
    for (const auto& p : profiles) {
      if (p.full_name != a.journalist) continue;
      const auto js = pm::sentiment::journalist_sentiment(p, scores);
      std::string out = "article_id,valence_sum,positive_word_proportion,negative_word_proportion\n";
      for (const auto& [id, s] : js.per_article)
        out += pm::csv::format_row({id, std::to_string(s.valence_sum), fmt("%.6f", s.positive_word_proportion),
                                    fmt("%.6f", s.negative_word_proportion)});
      emit(cfg, out,
           js.journalist + ": mean valence " + fmt("%.4f", js.mean_valence) + " over " +
               std::to_string(js.per_article.size()) + " articles\n");
      return;
    }
    throw pm::InvalidArgument("unknown journalist '" + a.journalist + "'");
  }
  if (!a.outlet.empty()) {
    const auto rows = pm::sentiment::outlet_report(a.outlet, profiles, scores);
    std::string human;
    for (const auto& r : rows)
      human += r.journalist + "  articles " + std::to_string(r.articles) + "  mean valence " +
               fmt("%.4f", r.mean_valence) + "\n";
    emit(cfg, pm::sentiment::outlet_csv(rows), human);
    return;
  }
  const auto rows = pm::sentiment::topic_breakdown(articles, scores);
  std::string human;
  for (const auto& r : rows)
    human += std::string(pm::corpus::to_string(r.topic)) + "  articles " + std::to_string(r.articles) +
             "  mean valence " + fmt("%.4f", r.mean_valence) + "\n";
  emit(cfg, pm::sentiment::topic_csv(rows), human);
}

pm::textprep::TokenList clean_or_empty(const std::string& text, const pm::textprep::CleanConfig& config) {
  try {
    return pm::textprep::clean(text, config);
  } catch (const pm::NonEnglishText&) {
    return {};
  }
}

struct ClassifyArgs {
  std::string train, input, method = "nb";
};

void run_classify(const RunConfig& cfg, const ClassifyArgs& a) {
  const auto tree = pm::taxonomy::load_taxonomy(cfg.data_file(cfg.taxonomy, "iab_taxonomy.csv"));
  const auto clean = cfg.clean_config();
  const auto train = pm::taxonomy::load_labeled_docs(a.train);
  std::vector<pm::textprep::TokenList> docs;
  std::vector<pm::taxonomy::TierLabelSet> labels;
  for (const auto& d : train) {
    pm::taxonomy::validate(d.labels, tree);
    docs.push_back(clean_or_empty(d.text, clean));
    labels.push_back(d.labels);
  }
  auto input = pm::taxonomy::load_labeled_docs(a.input);
  if (a.method == "nb") {
    const auto model = pm::taxonomy::train_nb(docs, labels, cfg.nb_alpha);
    for (auto& d : input) d.labels = pm::taxonomy::predict_nb(model, clean_or_empty(d.text, clean), cfg.nb_tau);
  } else {
    if (train.size() < cfg.taxonomy_k)
      std::cerr << "warning: k=" << cfg.taxonomy_k << " exceeds the " << train.size()
                << " training documents; using all of them\n";
    const auto model = pm::taxonomy::train_knn(docs, labels);
    for (auto& d : input) d.labels = pm::taxonomy::predict_knn(model, clean_or_empty(d.text, clean), cfg.taxonomy_k);
  }
  std::string human;
  for (const auto& d : input) {
    human += d.id + ":";
    for (const auto& id : d.labels.all()) human += " " + tree.find(id)->name;
    human += "\n";
  }
  emit(cfg, pm::taxonomy::labeled_docs_jsonl(input), human);
}

struct EvaluateArgs {
  std::string predictions, truth, beats;
};

void run_evaluate(const RunConfig& cfg, const EvaluateArgs& a) {
  const auto predicted = pm::taxonomy::load_labeled_docs(a.predictions);
  const auto truth = pm::taxonomy::load_labeled_docs(a.truth);
  std::map<std::string, const pm::taxonomy::TierLabelSet*> by_id;
  for (const auto& p : predicted) by_id[p.id] = &p.labels;
  std::vector<pm::taxonomy::TierLabelSet> pred_sets, true_sets;
  for (const auto& t : truth) {
    auto it = by_id.find(t.id);
    if (it == by_id.end()) throw pm::InvalidArgument("no prediction for document '" + t.id + "'");
    pred_sets.push_back(*it->second);
    true_sets.push_back(t.labels);
  }
  const auto report = pm::taxonomy::evaluate(pred_sets, true_sets);
  json machine = pm::taxonomy::to_json(report);
  std::string human = pm::taxonomy::to_text(report);

  if (!a.beats.empty()) {
    const auto tree = pm::taxonomy::load_taxonomy(cfg.data_file(cfg.taxonomy, "iab_taxonomy.csv"));
    auto mapping = pm::taxonomy::load_beat_mapping(cfg.data_file(cfg.beat_mapping, "beat_mapping.csv"));
    for (auto& [beat, labels] : mapping)
      for (auto& l : labels)
        if (auto id = tree.resolve(l)) l = *id;
    std::map<std::string, std::vector<std::string>> beats_by_id;
    std::size_t line_no = 0;
    for (auto line : pm::str::lines(pm::str::read_file(a.beats))) {
      ++line_no;
      if (pm::str::trim(line).empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("id") || !j.contains("beats"))
        throw pm::IoError("beats: malformed record at line " + std::to_string(line_no));
      beats_by_id[j["id"].get<std::string>()] = j["beats"].get<std::vector<std::string>>();
    }
    std::vector<std::vector<std::string>> tier1, beats;
    for (const auto& p : predicted) {
      tier1.push_back(p.labels.tier(1));
      auto it = beats_by_id.find(p.id);
      beats.push_back(it == beats_by_id.end() ? std::vector<std::string>{} : it->second);
    }
    const auto bt = pm::taxonomy::beat_tier_eval(tier1, beats, mapping);
    machine["beat_tier"] = {{"correct", bt.correct}, {"evaluated", bt.evaluated},
                            {"excluded", bt.excluded.size()}, {"accuracy", bt.accuracy()}};
    human += "beat-tier agreement: " + std::to_string(bt.correct) + "/" + std::to_string(bt.evaluated) + " (" +
             fmt("%.4f", bt.accuracy()) + "), " + std::to_string(bt.excluded.size()) +
             " article(s) without a mappable beat\n";
  }
  emit(cfg, machine.dump(2) + "\n", human);
}

struct BenchmarkArgs {
  std::size_t corpus_size = 50000;
  std::vector<std::size_t> queries{1, 10, 100};
};

void run_benchmark(const RunConfig& cfg, const BenchmarkArgs& a) {
  std::size_t most = 0;
  for (auto q : a.queries) most = std::max(most, q);
  const auto data = pm::matching::make_synthetic_sitemap(a.corpus_size, most, cfg.seed);
  const auto result = pm::matching::benchmark_matchers(data, a.queries);
  std::string human;
  for (const auto& r : result.rows)
    human += std::string(pm::matching::to_string(r.method)) + "  corpus " + std::to_string(r.corpus_size) +
             "  queries " + std::to_string(r.queries) + "  " + fmt("%.4f", r.seconds) + " s\n";
  emit(cfg, pm::matching::benchmark_csv(result.rows), human);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pressmatch: recommend journalists for a press release"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read settings from a key=value file (flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  cfg.data_dir = pm::textprep::default_data_dir();
  app.add_option("--data-dir", cfg.data_dir, "Directory holding stopwords, lexicons and taxonomy files")
      ->check(CLI::ExistingDirectory);
  app.add_option("--seed", cfg.seed, "Seed for synthetic data");
  app.add_option("--format", cfg.format, "Standard output style")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--output,-o", cfg.output, "Write machine-readable output to this file");
  app.add_option("--lexicon", cfg.lexicon, "Valence lexicon (default: <data-dir>/AFINN-111.txt)")
      ->check(CLI::ExistingFile);
  app.add_option("--taxonomy", cfg.taxonomy, "Taxonomy CSV (default: <data-dir>/iab_taxonomy.csv)")
      ->check(CLI::ExistingFile);
  app.add_option("--beat-mapping", cfg.beat_mapping, "Beat mapping CSV (default: <data-dir>/beat_mapping.csv)")
      ->check(CLI::ExistingFile);
  app.add_option("--domains", cfg.domains, "Outlet domain CSV (default: <data-dir>/outlet_domains.csv)")
      ->check(CLI::ExistingFile);
  app.add_option("--fuzzy-threshold", cfg.fuzzy_threshold, "Profile match acceptance (score must exceed it)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--linkage-threshold", cfg.linkage_threshold, "Email linkage acceptance")->check(CLI::Range(0.0, 1.0));
  app.add_option("--nb-tau", cfg.nb_tau, "Naive Bayes decision threshold")->check(CLI::Range(0.0, 2.0));
  app.add_option("--nb-alpha", cfg.nb_alpha, "Naive Bayes smoothing")->check(CLI::PositiveNumber);
  app.add_option("--k", cfg.k, "Nearest articles considered by recommend")->check(CLI::PositiveNumber);
  app.add_option("--taxonomy-k", cfg.taxonomy_k, "Neighbours for the KNN classifier")->check(CLI::PositiveNumber);
  app.add_option("--min-articles", cfg.min_articles, "Articles needed for a journalist profile")
      ->check(CLI::PositiveNumber);
  app.add_option("--lemmatizer", cfg.lemmatizer, "Lemmatizer mode")
      ->check(CLI::IsMember({"dictionary", "suffix", "off"}));
  app.add_flag("--require-english", cfg.require_english, "Reject texts failing the English check");

  auto* ingest = app.add_subcommand("ingest", "Load articles and write journalist profiles (JSONL)");
  IngestArgs ingest_args;
  ingest->add_option("--articles", ingest_args.articles, "Article CSV or JSONL")->required()->check(CLI::ExistingFile);
  ingest->add_option("--input-format", ingest_args.input_format, "csv or jsonl (default: by extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  ingest->add_option("--outlets", ingest_args.outlets, "Outlet CSV to filter")->check(CLI::ExistingFile);
  ingest->add_option("--outlets-output", ingest_args.outlets_output, "Write kept outlet names here");

  auto* build = app.add_subcommand("build-index", "Build the recommender index");
  BuildIndexArgs build_args;
  build->add_option("--articles", build_args.articles, "Article CSV or JSONL")->required()->check(CLI::ExistingFile);
  build->add_option("--input-format", build_args.input_format, "csv or jsonl (default: by extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  build->add_option("--profiles", build_args.profiles, "Profiles JSONL (default: built from the articles)")
      ->check(CLI::ExistingFile);

  auto* rec = app.add_subcommand("recommend", "Recommend journalists for a press release");
  RecommendArgs rec_args;
  rec->add_option("--index", rec_args.index, "Index file from build-index")->required()->check(CLI::ExistingFile);
  rec->add_option("--text", rec_args.text, "Press release text file, or - for stdin")->required();

  auto* match = app.add_subcommand("match-profiles", "Link profiles to sitemap URLs");
  MatchProfilesArgs match_args;
  match->add_option("--profiles", match_args.profiles, "Profiles JSONL")->required()->check(CLI::ExistingFile);
  match->add_option("--sitemap", match_args.sitemap, "Sitemap, one URL per line")->required()->check(CLI::ExistingFile);
  match->add_option("--profiles-output", match_args.profiles_output, "Write profiles with linked URLs here");

  auto* link = app.add_subcommand("link-emails", "Link profiles to an email dataset");
  LinkEmailsArgs link_args;
  link->add_option("--profiles", link_args.profiles, "Profiles JSONL")->required()->check(CLI::ExistingFile);
  link->add_option("--emails", link_args.emails, "Email CSV")->required()->check(CLI::ExistingFile);
  link->add_option("--oracle", link_args.oracle, "Known journalist/email pairs for labelling")
      ->check(CLI::ExistingFile);
  link->add_option("--comparator", link_args.comparator, "levenshtein or ngram")
      ->check(CLI::IsMember({"levenshtein", "ngram"}));

  auto* senti = app.add_subcommand("sentiment-report", "Valence reports by topic, outlet or journalist");
  SentimentArgs senti_args;
  senti->add_option("--articles", senti_args.articles, "Article CSV or JSONL")->required()->check(CLI::ExistingFile);
  senti->add_option("--input-format", senti_args.input_format, "csv or jsonl (default: by extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  senti->add_option("--profiles", senti_args.profiles, "Profiles JSONL")->check(CLI::ExistingFile);
  senti->add_option("--outlet", senti_args.outlet, "Report journalists of this outlet");
  senti->add_option("--journalist", senti_args.journalist, "Report one journalist's articles");

  auto* classify = app.add_subcommand("classify", "Predict taxonomy tiers for documents");
  ClassifyArgs classify_args;
  classify->add_option("--train", classify_args.train, "Labelled training JSONL")->required()->check(CLI::ExistingFile);
  classify->add_option("--input", classify_args.input, "Documents to label (JSONL with id, text)")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--method", classify_args.method, "nb or knn")->check(CLI::IsMember({"nb", "knn"}));

  auto* eval = app.add_subcommand("evaluate", "Score tier predictions against truth");
  EvaluateArgs eval_args;
  eval->add_option("--predictions", eval_args.predictions, "Predicted labels JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--truth", eval_args.truth, "True labels JSONL")->required()->check(CLI::ExistingFile);
  eval->add_option("--beats", eval_args.beats, "Author beats JSONL (id, beats) for the beat-tier check")
      ->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("benchmark-matchers", "Time Levenshtein against n-gram TF-IDF matching");
  BenchmarkArgs bench_args;
  bench->add_option("--corpus-size", bench_args.corpus_size, "Synthetic sitemap size")->check(CLI::PositiveNumber);
  bench->add_option("--queries", bench_args.queries, "Query counts")->delimiter(',');

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.help();
    return e.get_exit_code() ? e.get_exit_code() : 2;
  }

  try {
    if (*ingest) run_ingest(cfg, ingest_args);
    else if (*build) run_build_index(cfg, build_args);
    else if (*rec) run_recommend(cfg, rec_args);
    else if (*match) run_match_profiles(cfg, match_args);
    else if (*link) run_link_emails(cfg, link_args);
    else if (*senti) run_sentiment_report(cfg, senti_args);
    else if (*classify) run_classify(cfg, classify_args);
    else if (*eval) run_evaluate(cfg, eval_args);
    else if (*bench) run_benchmark(cfg, bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
