#pragma once

// Data model for articles, journalists, outlets and email records, with the
// CSV / JSON-lines loaders and the corpus filters.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pressmatch/csv.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/strings.hpp"
#include "pressmatch/textprep.hpp"
#include "pressmatch/utf8.hpp"

namespace pressmatch::corpus {

using json = nlohmann::json;

enum class Topic { sports, politics, entertainment, tech, business, unknown };

inline constexpr Topic kMainTopics[] = {Topic::sports, Topic::politics, Topic::entertainment, Topic::tech,
                                        Topic::business};

inline std::string_view to_string(Topic t) {
  switch (t) {
    case Topic::sports: return "sports";
    case Topic::politics: return "politics";
    case Topic::entertainment: return "entertainment";
    case Topic::tech: return "tech";
    case Topic::business: return "business";
    case Topic::unknown: return "unknown";
  }
  return "unknown";
}

inline Topic parse_topic(std::string_view s) {
  const std::string t = utf8::to_lower(str::trim(s));
  if (t == "sports" || t == "sport") return Topic::sports;
  if (t == "politics") return Topic::politics;
  if (t == "entertainment") return Topic::entertainment;
  if (t == "tech" || t == "technology") return Topic::tech;
  if (t == "business") return Topic::business;
  return Topic::unknown;
}

struct Article {
  std::string id;
  std::string title;
  std::string description;
  std::string full_text;
  Topic topic = Topic::unknown;
  std::vector<std::string> authors;
  std::string outlet;
  std::optional<std::string> url;

  // Title, description and body joined; the text that gets indexed.
  std::string document_text() const {
    std::string out = title;
    if (!description.empty()) out += (out.empty() ? "" : "\n") + description;
    if (!full_text.empty()) out += (out.empty() ? "" : "\n") + full_text;
    return out;
  }
};

struct SentimentStats {
  long long valence_sum = 0;
  double positive_word_proportion = 0.0;
  double negative_word_proportion = 0.0;
  std::size_t scored_token_count = 0;
  std::size_t total_token_count = 0;
  friend bool operator==(const SentimentStats&, const SentimentStats&) = default;
};

struct OutletCount {
  std::string outlet;
  std::size_t articles = 0;
  friend bool operator==(const OutletCount&, const OutletCount&) = default;
};

struct JournalistProfile {
  std::string full_name;
  std::string first_name;
  std::string last_name;
  std::vector<std::string> article_ids;
  std::vector<OutletCount> outlets;  // sorted by outlet name
  std::vector<std::string> beats;
  std::optional<std::string> muckrack_url;
  std::optional<std::string> email;
  std::map<std::string, std::string> social_handles;
  std::optional<SentimentStats> sentiment;
  std::optional<double> mean_valence;

  // Outlet with the most articles; ties go to the alphabetically first name.
  std::optional<std::string> modal_outlet() const {
    const OutletCount* best = nullptr;
    for (const auto& o : outlets)
      if (!best || o.articles > best->articles) best = &o;
    if (!best) return std::nullopt;
    return best->outlet;
  }

  std::size_t articles_at(std::string_view outlet) const {
    for (const auto& o : outlets)
      if (o.outlet == outlet) return o.articles;
    return 0;
  }
};

struct Outlet {
  std::string name;
  std::size_t journalist_count = 0;
  std::size_t article_count = 0;
  std::optional<long long> twitter_followers;
  std::optional<long long> alexa_popularity;
  std::optional<long long> reach_rank;
  std::optional<long long> country_rank;
  friend bool operator==(const Outlet&, const Outlet&) = default;
};

struct EmailRecord {
  std::string first_name;
  std::string last_name;
  std::string address;
};

struct Rejection {
  std::size_t record = 0;  // 1-based data row / line
  std::string reason;
};

struct LoadReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<Rejection> rejections;

  void reject(std::size_t record, std::string reason) {
    ++rejected;
    rejections.push_back({record, std::move(reason)});
  }
};

template <typename T>
struct Loaded {
  std::vector<T> items;
  LoadReport report;
};

// ---------------------------------------------------------------------------
// Names

// Split author strings on these words once separators are applied. Matching
// is case-insensitive and ignores a trailing ':' or '.'.
inline std::vector<std::string> default_byline_stop_tokens() {
  return {"by", "staff", "writer", "writers", "reporter", "reporters", "correspondent", "contributor",
          "contributing", "editor", "columnist", "senior"};
}

// "By Jane Doe, John Roe and Ann Poe" -> [Jane Doe, John Roe, Ann Poe].
// Separators: ',', ';', '&', '|' and the word "and". Duplicates removed,
// first occurrence kept.
inline std::vector<std::string> split_authors(std::string_view field,
                                              const std::vector<std::string>& stop_tokens =
                                                  default_byline_stop_tokens()) {
  std::set<std::string> stop;
  for (const auto& s : stop_tokens) stop.insert(utf8::to_lower(s));

  std::vector<std::string> pieces;
  std::string cur;
  auto flush = [&] {
    pieces.push_back(cur);
    cur.clear();
  };
  for (char c : field) {
    if (c == ',' || c == ';' || c == '&' || c == '|') flush();
    else cur.push_back(c);
  }
  flush();

  std::vector<std::string> names;
  for (const auto& piece : pieces) {
    std::vector<std::string> words;
    auto emit = [&] {
      if (!words.empty()) names.push_back(str::join(words, " "));
      words.clear();
    };
    for (auto& w : str::split_whitespace(piece)) {
      std::string key = utf8::to_lower(w);
      while (!key.empty() && (key.back() == ':' || key.back() == '.')) key.pop_back();
      if (key == "and") {
        emit();
        continue;
      }
      if (stop.count(key)) continue;
      words.push_back(std::move(w));
    }
    emit();
  }
  std::vector<std::string> out;
  for (auto& n : names)
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  return out;
}

// First whitespace token and last whitespace token; middle names ignored.
inline std::pair<std::string, std::string> split_name(std::string_view full_name) {
  const auto words = str::split_whitespace(full_name);
  if (words.empty()) return {};
  return {words.front(), words.back()};
}

// ---------------------------------------------------------------------------
// Articles

enum class Format { csv, jsonl };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  throw InvalidArgument("unknown corpus format: " + std::string(s));
}

// Canonical field -> column/key name in the input file.
struct ColumnMap {
  std::string id = "id";
  std::string title = "title";
  std::string description = "description";
  std::string full_text = "full_text";
  std::string topic = "topic";
  std::string authors = "authors";
  std::string outlet = "outlet";
  std::string url = "url";
};

struct ArticleLoadOptions {
  ColumnMap columns;
  std::vector<std::string> byline_stop_tokens = default_byline_stop_tokens();
};

namespace detail {

// Validates one raw record; returns a reason string on rejection.
inline std::optional<std::string> finish_article(Article& a, std::set<std::string>& seen_ids) {
  if (str::trim(a.id).empty()) return "empty id";
  if (!seen_ids.insert(a.id).second) return "duplicate id '" + a.id + "'";
  if (str::trim(a.full_text).empty()) return "empty full_text";
  if (a.authors.empty()) return "no authors";
  return std::nullopt;
}

inline std::string json_text(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (it->is_string()) return it->get<std::string>();
  return it->dump();
}

}  // namespace detail

inline Loaded<Article> parse_articles(std::string_view text, Format format, const ArticleLoadOptions& opt = {}) {
  Loaded<Article> out;
  std::set<std::string> seen_ids;
  const ColumnMap& c = opt.columns;
  auto accept = [&](Article&& a, std::size_t record) {
    if (auto why = detail::finish_article(a, seen_ids)) {
      out.report.reject(record, *why);
    } else {
      out.items.push_back(std::move(a));
      ++out.report.accepted;
    }
  };

  if (format == Format::csv) {
    const auto table = csv::Table::from_text(text);
    if (table.empty()) return out;
    table.require({c.id, c.full_text, c.authors});
    std::size_t record = 0;
    for (const auto& row : table.rows()) {
      ++record;
      if (row.size() != table.header().size()) {
        out.report.reject(record, "expected " + std::to_string(table.header().size()) + " fields, got " +
                                      std::to_string(row.size()));
        continue;
      }
      Article a;
      a.id = std::string(table.cell(row, c.id));
      a.title = std::string(table.cell(row, c.title));
      a.description = std::string(table.cell(row, c.description));
      a.full_text = std::string(table.cell(row, c.full_text));
      a.topic = parse_topic(table.cell(row, c.topic));
      a.authors = split_authors(table.cell(row, c.authors), opt.byline_stop_tokens);
      a.outlet = std::string(str::trim(table.cell(row, c.outlet)));
      if (auto u = str::trim(table.cell(row, c.url)); !u.empty()) a.url = std::string(u);
      accept(std::move(a), record);
    }
    return out;
  }

  std::size_t record = 0;
  for (auto line : str::lines(text)) {
    ++record;
    if (str::trim(line).empty()) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      out.report.reject(record, "malformed JSON");
      continue;
    }
    Article a;
    a.id = detail::json_text(obj, c.id);
    a.title = detail::json_text(obj, c.title);
    a.description = detail::json_text(obj, c.description);
    a.full_text = detail::json_text(obj, c.full_text);
    a.topic = parse_topic(detail::json_text(obj, c.topic));
    a.outlet = std::string(str::trim(detail::json_text(obj, c.outlet)));
    if (auto u = detail::json_text(obj, c.url); !str::trim(u).empty()) a.url = u;
    if (auto it = obj.find(c.authors); it != obj.end() && it->is_array()) {
      for (const auto& v : *it)
        if (v.is_string())
          for (auto& n : split_authors(v.get<std::string>(), opt.byline_stop_tokens))
            if (std::find(a.authors.begin(), a.authors.end(), n) == a.authors.end()) a.authors.push_back(n);
    } else {
      a.authors = split_authors(detail::json_text(obj, c.authors), opt.byline_stop_tokens);
    }
    accept(std::move(a), record);
  }
  return out;
}

inline Loaded<Article> load_articles(const std::string& path, Format format, const ArticleLoadOptions& opt = {}) {
  return parse_articles(str::read_file(path), format, opt);
}

// ---------------------------------------------------------------------------
// Journalists

// Names still holding U+FFFD after unicode repair.
inline bool has_bad_unicode(std::string_view repaired) {
  for (std::size_t pos = 0; pos < repaired.size();)
    if (utf8::next(repaired, pos) == utf8::kReplacement) return true;
  return false;
}

// One profile per author credited on at least min_articles articles; every
// author of a shared article is credited once. Profiles sorted by name.
inline std::vector<JournalistProfile> build_journalists(const std::vector<Article>& articles,
                                                        std::size_t min_articles = 10) {
  if (min_articles < 1) throw InvalidArgument("build_journalists: min_articles must be at least 1");
  std::map<std::string, JournalistProfile> by_name;
  for (const auto& a : articles) {
    std::set<std::string> credited;
    for (const auto& raw : a.authors) {
      std::string name = textprep::repair_unicode(str::trim(raw));
      if (name.empty() || has_bad_unicode(name)) continue;
      if (!credited.insert(name).second) continue;
      auto& p = by_name[name];
      p.article_ids.push_back(a.id);
      auto it = std::find_if(p.outlets.begin(), p.outlets.end(),
                             [&](const OutletCount& o) { return o.outlet == a.outlet; });
      if (it == p.outlets.end()) p.outlets.push_back({a.outlet, 1});
      else ++it->articles;
    }
  }
  std::vector<JournalistProfile> out;
  for (auto& [name, p] : by_name) {
    if (p.article_ids.size() < min_articles) continue;
    p.full_name = name;
    std::tie(p.first_name, p.last_name) = split_name(name);
    std::sort(p.outlets.begin(), p.outlets.end(),
              [](const OutletCount& x, const OutletCount& y) { return x.outlet < y.outlet; });
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Outlets

namespace detail {

inline double median(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return static_cast<double>(v[n / 2]);
  return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

}  // namespace detail

// Keeps outlets with at least min_journalists journalists, followers strictly
// above the median and Alexa rank strictly below the median. Medians are taken
// over the outlets that pass the journalist-count test and carry the statistic.
inline std::vector<Outlet> filter_outlets(const std::vector<Outlet>& outlets, std::size_t min_journalists = 3) {
  std::vector<const Outlet*> eligible;
  for (const auto& o : outlets)
    if (o.journalist_count >= min_journalists) eligible.push_back(&o);
  std::vector<long long> followers, alexa;
  for (const Outlet* o : eligible) {
    if (o->twitter_followers) followers.push_back(*o->twitter_followers);
    if (o->alexa_popularity) alexa.push_back(*o->alexa_popularity);
  }
  if (followers.empty() || alexa.empty()) return {};
  const double f_med = detail::median(followers);
  const double a_med = detail::median(alexa);
  std::vector<Outlet> out;
  for (const Outlet* o : eligible) {
    if (!o->twitter_followers || !o->alexa_popularity) continue;
    if (static_cast<double>(*o->twitter_followers) > f_med && static_cast<double>(*o->alexa_popularity) < a_med)
      out.push_back(*o);
  }
  return out;
}

inline Loaded<Outlet> parse_outlets(std::string_view text) {
  Loaded<Outlet> out;
  const auto table = csv::Table::from_text(text);
  if (table.empty()) return out;
  table.require({"name", "journalist_count"});
  std::size_t record = 0;
  for (const auto& row : table.rows()) {
    ++record;
    Outlet o;
    o.name = std::string(str::trim(table.cell(row, "name")));
    if (o.name.empty()) {
      out.report.reject(record, "empty name");
      continue;
    }
    std::string why;
    auto count = [&](const char* col, std::size_t& dst) {
      auto cell = str::trim(table.cell(row, col));
      if (cell.empty()) return;
      if (!str::parse_int(cell, dst)) why = std::string("bad ") + col;
    };
    auto optional_int = [&](const char* col, std::optional<long long>& dst, bool rank) {
      auto cell = str::trim(table.cell(row, col));
      if (cell.empty()) return;
      long long v = 0;
      if (!str::parse_int(cell, v)) why = std::string("bad ") + col;
      else if (rank && v < 1) why = std::string(col) + " must be >= 1";
      else if (v < 0) why = std::string(col) + " must be >= 0";
      else dst = v;
    };
    count("journalist_count", o.journalist_count);
    count("article_count", o.article_count);
    optional_int("twitter_followers", o.twitter_followers, false);
    optional_int("alexa_popularity", o.alexa_popularity, true);
    optional_int("reach_rank", o.reach_rank, true);
    optional_int("country_rank", o.country_rank, true);
    if (!why.empty()) {
      out.report.reject(record, why);
      continue;
    }
    out.items.push_back(std::move(o));
    ++out.report.accepted;
  }
  return out;
}

inline Loaded<Outlet> load_outlets(const std::string& path) { return parse_outlets(str::read_file(path)); }

// ---------------------------------------------------------------------------
// Email records

inline bool valid_address(std::string_view address) {
  const auto at = address.find('@');
  if (at == std::string_view::npos || at == 0) return false;
  if (address.find('@', at + 1) != std::string_view::npos) return false;
  const auto domain = address.substr(at + 1);
  return !domain.empty() && domain.find_first_of(" \t") == std::string_view::npos;
}

inline Loaded<EmailRecord> parse_emails(std::string_view text) {
  Loaded<EmailRecord> out;
  const auto table = csv::Table::from_text(text);
  if (table.empty()) return out;
  table.require({"first_name", "last_name", "address"});
  std::size_t record = 0;
  for (const auto& row : table.rows()) {
    ++record;
    EmailRecord e{std::string(str::trim(table.cell(row, "first_name"))),
                  std::string(str::trim(table.cell(row, "last_name"))),
                  std::string(str::trim(table.cell(row, "address")))};
    if (!valid_address(e.address)) {
      out.report.reject(record, "invalid address '" + e.address + "'");
      continue;
    }
    out.items.push_back(std::move(e));
    ++out.report.accepted;
  }
  return out;
}

inline Loaded<EmailRecord> load_emails(const std::string& path) { return parse_emails(str::read_file(path)); }

// ---------------------------------------------------------------------------
// Profile persistence (JSON lines, one profile per line)

inline json to_json(const JournalistProfile& p) {
  json j;
  j["full_name"] = p.full_name;
  j["first_name"] = p.first_name;
  j["last_name"] = p.last_name;
  j["article_ids"] = p.article_ids;
  json outlets = json::array();
  for (const auto& o : p.outlets) outlets.push_back({{"outlet", o.outlet}, {"articles", o.articles}});
  j["outlets"] = outlets;
  j["beats"] = p.beats;
  if (p.muckrack_url) j["muckrack_url"] = *p.muckrack_url;
  if (p.email) j["email"] = *p.email;
  if (!p.social_handles.empty()) j["social_handles"] = p.social_handles;
  if (p.sentiment) {
    j["sentiment"] = {{"valence_sum", p.sentiment->valence_sum},
                      {"positive_word_proportion", p.sentiment->positive_word_proportion},
                      {"negative_word_proportion", p.sentiment->negative_word_proportion},
                      {"scored_token_count", p.sentiment->scored_token_count},
                      {"total_token_count", p.sentiment->total_token_count}};
  }
  if (p.mean_valence) j["mean_valence"] = *p.mean_valence;
  return j;
}

inline JournalistProfile profile_from_json(const json& j) {
  JournalistProfile p;
  p.full_name = j.at("full_name").get<std::string>();
  auto [first, last] = split_name(p.full_name);
  p.first_name = j.value("first_name", first);
  p.last_name = j.value("last_name", last);
  p.article_ids = j.value("article_ids", std::vector<std::string>{});
  if (auto it = j.find("outlets"); it != j.end())
    for (const auto& o : *it) p.outlets.push_back({o.at("outlet").get<std::string>(), o.value("articles", std::size_t{0})});
  std::sort(p.outlets.begin(), p.outlets.end(), [](const OutletCount& x, const OutletCount& y) { return x.outlet < y.outlet; });
  p.beats = j.value("beats", std::vector<std::string>{});
  if (j.contains("muckrack_url")) p.muckrack_url = j.at("muckrack_url").get<std::string>();
  if (j.contains("email")) p.email = j.at("email").get<std::string>();
  p.social_handles = j.value("social_handles", std::map<std::string, std::string>{});
  if (auto it = j.find("sentiment"); it != j.end()) {
    SentimentStats s;
    s.valence_sum = it->value("valence_sum", 0LL);
    s.positive_word_proportion = it->value("positive_word_proportion", 0.0);
    s.negative_word_proportion = it->value("negative_word_proportion", 0.0);
    s.scored_token_count = it->value("scored_token_count", std::size_t{0});
    s.total_token_count = it->value("total_token_count", std::size_t{0});
    p.sentiment = s;
  }
  if (j.contains("mean_valence")) p.mean_valence = j.at("mean_valence").get<double>();
  return p;
}

inline std::string write_profiles(const std::vector<JournalistProfile>& profiles) {
  std::string out;
  for (const auto& p : profiles) out += to_json(p).dump() + '\n';
  return out;
}

inline std::vector<JournalistProfile> parse_profiles(std::string_view text) {
  std::vector<JournalistProfile> out;
  std::size_t line_no = 0;
  for (auto line : str::lines(text)) {
    ++line_no;
    if (str::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("full_name"))
      throw IoError("profiles: malformed record at line " + std::to_string(line_no));
    out.push_back(profile_from_json(j));
  }
  return out;
}

inline std::vector<JournalistProfile> load_profiles(const std::string& path) {
  return parse_profiles(str::read_file(path));
}

// Article lookup by id.
inline std::unordered_map<std::string, const Article*> index_by_id(const std::vector<Article>& articles) {
  std::unordered_map<std::string, const Article*> out;
  for (const auto& a : articles) out.emplace(a.id, &a);
  return out;
}

}  // namespace pressmatch::corpus
