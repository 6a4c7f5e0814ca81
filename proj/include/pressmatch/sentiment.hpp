#pragma once

// Lexicon valence scoring (AFINN word list) and the journalist, outlet and
// topic aggregates built on it.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pressmatch/corpus.hpp"
#include "pressmatch/csv.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/textprep.hpp"

namespace pressmatch::sentiment {

using corpus::SentimentStats;

// word -> integer valence in [-5, 5], never zero.
class ValenceLexicon {
public:
  ValenceLexicon() = default;

  // word<TAB>valence per line. Multi-word phrases and zero valences are
  // skipped (tokens are single words); out-of-range values are an error.
  static ValenceLexicon parse(std::string_view text) {
    ValenceLexicon lex;
    std::size_t line_no = 0;
    for (auto line : str::lines(text)) {
      ++line_no;
      if (str::trim(line).empty() || line.front() == '#') continue;
      const auto tab = line.rfind('\t');
      int v = 0;
      if (tab == std::string_view::npos || !str::parse_int(line.substr(tab + 1), v))
        throw IoError("valence lexicon: malformed line " + std::to_string(line_no));
      const auto word = str::trim(line.substr(0, tab));
      if (v < -5 || v > 5) throw IoError("valence lexicon: value out of [-5,5] at line " + std::to_string(line_no));
      if (word.find(' ') != std::string_view::npos || v == 0) continue;
      lex.add(std::string(word), v);
    }
    return lex;
  }

  static ValenceLexicon load(const std::string& path) { return parse(str::read_file(path)); }

  void add(std::string word, int valence) {
    if (valence == 0 || valence < -5 || valence > 5) throw InvalidArgument("valence must be a nonzero integer in [-5,5]");
    valence_[std::move(word)] = valence;
  }

  const int* find(const std::string& word) const {
    auto it = valence_.find(word);
    return it == valence_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return valence_.size(); }
  bool empty() const { return valence_.empty(); }

  ValenceLexicon negated() const {
    ValenceLexicon out;
    for (const auto& [w, v] : valence_) out.valence_.emplace(w, -v);
    return out;
  }

private:
  std::unordered_map<std::string, int> valence_;
};

inline SentimentStats score(const std::vector<std::string>& tokens, const ValenceLexicon& lexicon) {
  if (lexicon.empty()) throw InvalidArgument("sentiment score: empty lexicon");
  SentimentStats s;
  s.total_token_count = tokens.size();
  std::size_t pos = 0, neg = 0;
  for (const auto& t : tokens) {
    if (const int* v = lexicon.find(t)) {
      s.valence_sum += *v;
      ++s.scored_token_count;
      (*v > 0 ? pos : neg) += 1;
    }
  }
  if (s.total_token_count) {
    const auto n = static_cast<double>(s.total_token_count);
    s.positive_word_proportion = static_cast<double>(pos) / n;
    s.negative_word_proportion = static_cast<double>(neg) / n;
  }
  return s;
}

inline SentimentStats score(const textprep::TokenList& tokens, const ValenceLexicon& lexicon) {
  return score(tokens.tokens, lexicon);
}

// Scores every article once; cleaning failures (e.g. non-English) score as empty.
class ArticleScores {
public:
  ArticleScores(const std::vector<corpus::Article>& articles, const ValenceLexicon& lexicon,
                const textprep::CleanConfig& config) {
    for (const auto& a : articles) {
      textprep::TokenList toks;
      try {
        toks = textprep::clean(a.document_text(), config);
      } catch (const NonEnglishText&) {
      }
      stats_.emplace(a.id, score(toks, lexicon));
    }
  }

  const SentimentStats* find(const std::string& id) const {
    auto it = stats_.find(id);
    return it == stats_.end() ? nullptr : &it->second;
  }

private:
  std::unordered_map<std::string, SentimentStats> stats_;
};

struct JournalistSentiment {
  std::string journalist;
  double mean_valence = 0.0;
  SentimentStats total;  // pooled over all articles
  std::vector<std::pair<std::string, SentimentStats>> per_article;
};

// Mean of per-article valence sums over the journalist's articles.
inline JournalistSentiment journalist_sentiment(const corpus::JournalistProfile& profile,
                                                const ArticleScores& scores) {
  JournalistSentiment out;
  out.journalist = profile.full_name;
  std::size_t pos = 0, neg = 0;
  long long sum = 0;
  for (const auto& id : profile.article_ids) {
    const SentimentStats* s = scores.find(id);
    if (!s) continue;
    out.per_article.emplace_back(id, *s);
    sum += s->valence_sum;
    out.total.valence_sum += s->valence_sum;
    out.total.scored_token_count += s->scored_token_count;
    out.total.total_token_count += s->total_token_count;
    // proportion * total recovers the integer word counts exactly
    pos += static_cast<std::size_t>(std::llround(s->positive_word_proportion * static_cast<double>(s->total_token_count)));
    neg += static_cast<std::size_t>(std::llround(s->negative_word_proportion * static_cast<double>(s->total_token_count)));
  }
  if (out.per_article.empty())
    throw InvalidArgument("journalist_sentiment: no articles found for " + profile.full_name);
  out.mean_valence = static_cast<double>(sum) / static_cast<double>(out.per_article.size());
  if (out.total.total_token_count) {
    const auto n = static_cast<double>(out.total.total_token_count);
    out.total.positive_word_proportion = static_cast<double>(pos) / n;
    out.total.negative_word_proportion = static_cast<double>(neg) / n;
  }
  return out;
}

inline JournalistSentiment journalist_sentiment(const corpus::JournalistProfile& profile,
                                                const std::vector<corpus::Article>& articles,
                                                const ValenceLexicon& lexicon, const textprep::CleanConfig& config) {
  std::vector<corpus::Article> own;
  std::unordered_map<std::string, bool> wanted;
  for (const auto& id : profile.article_ids) wanted[id] = true;
  for (const auto& a : articles)
    if (wanted.count(a.id)) own.push_back(a);
  return journalist_sentiment(profile, ArticleScores(own, lexicon, config));
}

struct OutletRow {
  std::string journalist;
  std::size_t articles = 0;  // articles at this outlet
  double mean_valence = 0.0;  // over all of the journalist's articles
};

// Journalists writing for the outlet, most articles first, ties by name.
inline std::vector<OutletRow> outlet_report(std::string_view outlet,
                                            const std::vector<corpus::JournalistProfile>& profiles,
                                            const ArticleScores& scores) {
  std::vector<OutletRow> rows;
  bool known = false;
  for (const auto& p : profiles) {
    const std::size_t n = p.articles_at(outlet);
    if (n == 0) continue;
    known = true;
    rows.push_back({p.full_name, n, journalist_sentiment(p, scores).mean_valence});
  }
  if (!known) throw InvalidArgument("outlet_report: unknown outlet '" + std::string(outlet) + "'");
  std::sort(rows.begin(), rows.end(), [](const OutletRow& a, const OutletRow& b) {
    if (a.articles != b.articles) return a.articles > b.articles;
    return a.journalist < b.journalist;
  });
  return rows;
}

struct TopicRow {
  corpus::Topic topic;
  std::size_t articles = 0;
  long long valence_sum = 0;
  double mean_valence = 0.0;
  double mean_positive_proportion = 0.0;
  double mean_negative_proportion = 0.0;
};

// One row per main topic, in fixed topic order; unknown-topic articles are left out.
inline std::vector<TopicRow> topic_breakdown(const std::vector<corpus::Article>& articles,
                                             const ArticleScores& scores) {
  std::vector<TopicRow> rows;
  for (corpus::Topic t : corpus::kMainTopics) rows.push_back({t});
  for (const auto& a : articles) {
    if (a.topic == corpus::Topic::unknown) continue;
    const SentimentStats* s = scores.find(a.id);
    if (!s) continue;
    auto& r = rows[static_cast<std::size_t>(a.topic)];
    ++r.articles;
    r.valence_sum += s->valence_sum;
    r.mean_positive_proportion += s->positive_word_proportion;
    r.mean_negative_proportion += s->negative_word_proportion;
  }
  for (auto& r : rows) {
    if (!r.articles) continue;
    const auto n = static_cast<double>(r.articles);
    r.mean_valence = static_cast<double>(r.valence_sum) / n;
    r.mean_positive_proportion /= n;
    r.mean_negative_proportion /= n;
  }
  return rows;
}

namespace detail {
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}
}  // namespace detail

inline std::string outlet_csv(const std::vector<OutletRow>& rows) {
  std::string out = "journalist,articles,mean_valence\n";
  for (const auto& r : rows) out += csv::format_row({r.journalist, std::to_string(r.articles), detail::fmt(r.mean_valence)});
  return out;
}

inline std::string topic_csv(const std::vector<TopicRow>& rows) {
  std::string out = "topic,articles,valence_sum,mean_valence,mean_positive_proportion,mean_negative_proportion\n";
  for (const auto& r : rows)
    out += csv::format_row({std::string(corpus::to_string(r.topic)), std::to_string(r.articles),
                            std::to_string(r.valence_sum), detail::fmt(r.mean_valence),
                            detail::fmt(r.mean_positive_proportion), detail::fmt(r.mean_negative_proportion)});
  return out;
}

}  // namespace pressmatch::sentiment
