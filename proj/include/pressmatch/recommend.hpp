#pragma once

// Journalist recommender: TF-IDF index over journalist-authored articles and
// exact cosine k-nearest-neighbour search for a press release.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pressmatch/corpus.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/strings.hpp"
#include "pressmatch/textprep.hpp"
#include "pressmatch/vectorspace.hpp"

namespace pressmatch::recommend {

using json = nlohmann::json;

struct IndexedArticle {
  std::string id;
  std::string title;
  std::string outlet;
  std::vector<std::string> authors;  // profiled authors only
  vectorspace::SparseVector vector;
};

struct BuildReport {
  std::size_t indexed = 0;
  std::size_t empty_after_cleaning = 0;
  std::size_t non_english = 0;
  std::size_t without_profiled_author = 0;
};

class RecommenderIndex {
public:
  RecommenderIndex() = default;
  RecommenderIndex(vectorspace::TfIdfModel model, std::vector<IndexedArticle> articles,
                   std::vector<corpus::JournalistProfile> profiles)
      : model_(std::move(model)), articles_(std::move(articles)), profiles_(std::move(profiles)) {
    std::sort(profiles_.begin(), profiles_.end(),
              [](const auto& a, const auto& b) { return a.full_name < b.full_name; });
    for (std::size_t i = 0; i < profiles_.size(); ++i) by_name_.emplace(profiles_[i].full_name, i);
    for (const auto& a : articles_)
      for (const auto& author : a.authors)
        if (!by_name_.count(author))
          throw InvalidArgument("recommender index: article '" + a.id + "' references unknown author '" + author + "'");
  }

  const vectorspace::TfIdfModel& model() const { return model_; }
  const std::vector<IndexedArticle>& articles() const { return articles_; }
  const std::vector<corpus::JournalistProfile>& profiles() const { return profiles_; }

  const corpus::JournalistProfile* profile(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &profiles_[it->second];
  }

private:
  vectorspace::TfIdfModel model_;
  std::vector<IndexedArticle> articles_;
  std::vector<corpus::JournalistProfile> profiles_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

struct BuiltIndex {
  RecommenderIndex index;
  BuildReport report;
};

// Cleans title + description + body of every article, fits TF-IDF over the
// usable ones and stores their vectors. Articles that clean to nothing, fail
// the language filter, or have no profiled author are left out and counted.
inline BuiltIndex build_index(const std::vector<corpus::Article>& articles,
                              std::vector<corpus::JournalistProfile> profiles,
                              const textprep::CleanConfig& config) {
  std::unordered_map<std::string, bool> profiled;
  for (const auto& p : profiles) profiled[p.full_name] = true;

  BuildReport report;
  std::vector<const corpus::Article*> kept;
  std::vector<std::vector<std::string>> kept_authors;
  std::vector<textprep::TokenList> docs;
  for (const auto& a : articles) {
    std::vector<std::string> authors;
    for (const auto& raw : a.authors) {
      std::string name = textprep::repair_unicode(str::trim(raw));
      if (profiled.count(name) && std::find(authors.begin(), authors.end(), name) == authors.end())
        authors.push_back(std::move(name));
    }
    if (authors.empty()) {
      ++report.without_profiled_author;
      continue;
    }
    textprep::TokenList toks;
    try {
      toks = textprep::clean(a.document_text(), config);
    } catch (const NonEnglishText&) {
      ++report.non_english;
      continue;
    }
    if (toks.empty()) {
      ++report.empty_after_cleaning;
      continue;
    }
    kept.push_back(&a);
    kept_authors.push_back(std::move(authors));
    docs.push_back(std::move(toks));
  }
  if (docs.empty()) throw InvalidArgument("build_index: no indexable articles");

  auto model = vectorspace::fit(docs);
  std::vector<IndexedArticle> indexed;
  indexed.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i)
    indexed.push_back({kept[i]->id, kept[i]->title, kept[i]->outlet, std::move(kept_authors[i]), model.transform(docs[i])});
  report.indexed = indexed.size();
  return {RecommenderIndex(std::move(model), std::move(indexed), std::move(profiles)), report};
}

struct PressRelease {
  std::string title;
  std::string description;
  std::string body;

  std::string text() const {
    corpus::Article a;
    a.title = title;
    a.description = description;
    a.full_text = body;
    return a.document_text();
  }
};

struct Neighbor {
  std::size_t article;  // position in index.articles()
  double similarity;
};

// The k most similar articles, ties by ascending article id.
inline std::vector<Neighbor> nearest_articles(const RecommenderIndex& index, const vectorspace::SparseVector& query,
                                              std::size_t k) {
  const auto& arts = index.articles();
  std::vector<Neighbor> all;
  all.reserve(arts.size());
  for (std::size_t i = 0; i < arts.size(); ++i) all.push_back({i, vectorspace::cosine_similarity(query, arts[i].vector)});
  const std::size_t take = std::min(k, all.size());
  auto before = [&](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return arts[a.article].id < arts[b.article].id;
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take), all.end(), before);
  all.resize(take);
  return all;
}

struct Evidence {
  std::string article_id;
  std::string title;
  std::string outlet;
  double similarity = 0.0;
};

struct Recommendation {
  corpus::JournalistProfile journalist;
  std::vector<Evidence> evidence;  // most similar first
  double best_similarity = 0.0;
};

inline vectorspace::SparseVector vectorize_query(const RecommenderIndex& index, std::string_view text,
                                                 const textprep::CleanConfig& config) {
  const auto toks = textprep::clean(text, config);
  if (toks.empty()) throw NoSignal("no signal: press release has no content words after cleaning");
  auto v = index.model().transform(toks);
  if (v.empty()) throw NoSignal("no signal: press release shares no weighted terms with the indexed articles");
  return v;
}

// Journalists behind the k nearest articles, in order of their best
// similarity. Fewer than k journalists come back when authors repeat.
inline std::vector<Recommendation> recommend(const RecommenderIndex& index, std::string_view press_release,
                                             const textprep::CleanConfig& config, std::size_t k = 5) {
  if (k < 1) throw InvalidArgument("recommend: k must be at least 1");
  const auto query = vectorize_query(index, press_release, config);
  std::vector<Recommendation> out;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& n : nearest_articles(index, query, k)) {
    const auto& a = index.articles()[n.article];
    for (const auto& author : a.authors) {
      auto [it, fresh] = slot.emplace(author, out.size());
      if (fresh) {
        Recommendation r;
        r.journalist = *index.profile(author);
        r.best_similarity = n.similarity;
        out.push_back(std::move(r));
      }
      out[it->second].evidence.push_back({a.id, a.title, a.outlet, n.similarity});
    }
  }
  return out;
}

inline std::vector<Recommendation> recommend(const RecommenderIndex& index, const PressRelease& release,
                                             const textprep::CleanConfig& config, std::size_t k = 5) {
  return recommend(index, release.text(), config, k);
}

// ---------------------------------------------------------------------------
// Output

inline json to_json(const std::vector<Recommendation>& recs) {
  json arr = json::array();
  for (const auto& r : recs) {
    json contacts = json::object();
    if (r.journalist.email) contacts["email"] = *r.journalist.email;
    if (r.journalist.muckrack_url) contacts["muckrack_url"] = *r.journalist.muckrack_url;
    for (const auto& [platform, handle] : r.journalist.social_handles) contacts[platform] = handle;
    json outlets = json::array();
    for (const auto& o : r.journalist.outlets) outlets.push_back({{"outlet", o.outlet}, {"articles", o.articles}});
    json evidence = json::array();
    for (const auto& e : r.evidence)
      evidence.push_back({{"article_id", e.article_id}, {"title", e.title}, {"outlet", e.outlet}, {"similarity", e.similarity}});
    arr.push_back({{"journalist", r.journalist.full_name},
                   {"best_similarity", r.best_similarity},
                   {"beats", r.journalist.beats},
                   {"outlets", outlets},
                   {"contacts", contacts},
                   {"evidence", evidence}});
  }
  return arr;
}

inline std::string to_text(const std::vector<Recommendation>& recs) {
  std::string out;
  char buf[64];
  int rank = 0;
  for (const auto& r : recs) {
    std::snprintf(buf, sizeof buf, "%.4f", r.best_similarity);
    out += std::to_string(++rank) + ". " + r.journalist.full_name + "  (similarity " + buf + ")\n";
    if (!r.journalist.beats.empty()) out += "   beats: " + str::join(r.journalist.beats, ", ") + "\n";
    if (auto o = r.journalist.modal_outlet()) out += "   main outlet: " + *o + "\n";
    if (r.journalist.email) out += "   email: " + *r.journalist.email + "\n";
    if (r.journalist.muckrack_url) out += "   muckrack: " + *r.journalist.muckrack_url + "\n";
    for (const auto& [platform, handle] : r.journalist.social_handles) out += "   " + platform + ": " + handle + "\n";
    for (const auto& e : r.evidence) {
      std::snprintf(buf, sizeof buf, "%.4f", e.similarity);
      out += "   - [" + std::string(buf) + "] " + e.title + " (" + e.outlet + ", " + e.article_id + ")\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   pressmatch-index<TAB>1
//   <TF-IDF model container>
//   articles<TAB>N
//   <id><TAB><title><TAB><outlet><TAB><author|author...><TAB><idx:hexweight idx:hexweight ...>
//   profiles<TAB>M
//   <profile as one JSON object>

inline constexpr std::string_view kIndexMagic = "pressmatch-index";
inline constexpr int kIndexVersion = 1;

inline std::string serialize(const RecommenderIndex& index) {
  std::string out = std::string(kIndexMagic) + '\t' + std::to_string(kIndexVersion) + '\n';
  vectorspace::write_model(out, index.model());
  out += "articles\t" + std::to_string(index.articles().size()) + '\n';
  for (const auto& a : index.articles()) {
    out += str::escape_field(a.id) + '\t' + str::escape_field(a.title) + '\t' + str::escape_field(a.outlet) + '\t' +
           str::escape_field(str::join(a.authors, "|")) + '\t';
    bool first = true;
    for (const auto& [idx, w] : a.vector.entries()) {
      if (!first) out += ' ';
      out += std::to_string(idx) + ':' + str::hexfloat(w);
      first = false;
    }
    out += '\n';
  }
  out += "profiles\t" + std::to_string(index.profiles().size()) + '\n';
  for (const auto& p : index.profiles()) out += corpus::to_json(p).dump() + '\n';
  return out;
}

inline RecommenderIndex deserialize(std::string_view text) {
  vectorspace::LineReader in(text);
  int version = 0;
  if (!str::parse_int(in.expect(kIndexMagic), version) || version != kIndexVersion)
    throw IoError("unsupported index version");
  auto model = vectorspace::read_model(in);
  const auto n_articles = in.expect_int<std::size_t>("articles");
  std::vector<IndexedArticle> articles;
  articles.reserve(n_articles);
  for (std::size_t i = 0; i < n_articles; ++i) {
    const auto f = str::split(in.next(), '\t');
    if (f.size() != 5) throw IoError("index: malformed article line " + std::to_string(in.line_number()));
    IndexedArticle a;
    a.id = str::unescape_field(f[0]);
    a.title = str::unescape_field(f[1]);
    a.outlet = str::unescape_field(f[2]);
    a.authors = str::split(str::unescape_field(f[3]), '|');
    std::vector<vectorspace::SparseVector::Entry> entries;
    for (const auto& tok : str::split_whitespace(f[4])) {
      const auto colon = tok.find(':');
      vectorspace::TermIndex idx = 0;
      double w = 0.0;
      if (colon == std::string::npos || !str::parse_int(std::string_view(tok).substr(0, colon), idx) ||
          !str::parse_double(std::string_view(tok).substr(colon + 1), w) || idx >= model.vocabulary().size())
        throw IoError("index: malformed vector entry at line " + std::to_string(in.line_number()));
      entries.emplace_back(idx, w);
    }
    a.vector = vectorspace::SparseVector::from_entries(std::move(entries));
    articles.push_back(std::move(a));
  }
  const auto n_profiles = in.expect_int<std::size_t>("profiles");
  std::vector<corpus::JournalistProfile> profiles;
  profiles.reserve(n_profiles);
  for (std::size_t i = 0; i < n_profiles; ++i) {
    json j = json::parse(in.next(), nullptr, false);
    if (j.is_discarded()) throw IoError("index: malformed profile at line " + std::to_string(in.line_number()));
    profiles.push_back(corpus::profile_from_json(j));
  }
  return RecommenderIndex(std::move(model), std::move(articles), std::move(profiles));
}

inline void save(const RecommenderIndex& index, const std::string& path) { str::write_file(path, serialize(index)); }
inline RecommenderIndex load(const std::string& path) { return deserialize(str::read_file(path)); }

}  // namespace pressmatch::recommend
