#pragma once

// Fuzzy matching of journalists to profile URLs: edit distance and its 1..100
// ratio, character n-gram TF-IDF matching over a sitemap, the
// slug -> exact -> fuzzy -> unresolved linking pipeline, and a timing harness
// comparing the two matchers.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pressmatch/corpus.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/utf8.hpp"
#include "pressmatch/vectorspace.hpp"

namespace pressmatch::matching {

// ---------------------------------------------------------------------------
// Edit distance

// Unit-cost Levenshtein distance over any two random-access sequences, with
// a single row of O(min(|a|,|b|)) memory.
template <typename SeqA, typename SeqB>
std::size_t levenshtein_seq(const SeqA& a, const SeqB& b) {
  if (a.size() < b.size()) return levenshtein_seq(b, a);
  const std::size_t m = b.size();
  if (m == 0) return a.size();
  std::vector<std::size_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({row[j - 1] + 1, up + 1, sub});
      diag = up;
    }
  }
  return row[m];
}

// Distance in code points.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (utf8::is_ascii(a) && utf8::is_ascii(b)) return levenshtein_seq(a, b);
  return levenshtein_seq(utf8::decode(a), utf8::decode(b));
}

// round(100 * (1 - d / max_len)) clamped to [1, 100]; 100 only for equal strings.
inline int match_ratio(std::string_view a, std::string_view b) {
  const std::size_t la = utf8::length(a), lb = utf8::length(b);
  if (la == 0 && lb == 0) throw InvalidArgument("match_ratio: both strings empty");
  const std::size_t d = levenshtein(a, b);
  const double raw = 100.0 * (1.0 - static_cast<double>(d) / static_cast<double>(std::max(la, lb)));
  long r = std::lround(raw);
  // Rounding can lift a near-identical pair of long strings to 100.
  if (r >= 100 && d > 0) r = 99;
  return static_cast<int>(std::clamp(r, 1L, 100L));
}

// ---------------------------------------------------------------------------
// Results

enum class Method { levenshtein_ratio, ngram_tfidf };

inline std::string_view to_string(Method m) {
  return m == Method::levenshtein_ratio ? "levenshtein-ratio" : "ngram-tfidf";
}

struct MatchResult {
  std::string query;
  std::string candidate;  // empty when nothing shares a feature with the query
  double score = 0.0;
  Method method = Method::ngram_tfidf;
  bool accepted = false;
};

inline constexpr double kDefaultFuzzyThreshold = 0.85;
inline constexpr double kDefaultRatioThreshold = 90.0;

// ---------------------------------------------------------------------------
// Slugs

inline constexpr std::string_view kMuckrackBase = "https://muckrack.com/";

// Lowercase and drop everything that is not a letter or digit.
inline std::string normalize_name_part(std::string_view s) {
  const std::string lowered = utf8::to_lower(s);
  std::string out;
  for (std::size_t pos = 0; pos < lowered.size();) {
    const std::size_t start = pos;
    if (utf8::is_word_char(utf8::next(lowered, pos))) out.append(lowered.substr(start, pos - start));
  }
  return out;
}

inline std::string muckrack_slug(std::string_view first, std::string_view last) {
  const std::string f = normalize_name_part(first);
  const std::string l = normalize_name_part(last);
  if (f.empty() || l.empty()) throw InvalidArgument("muckrack_slug: empty name after normalization");
  return std::string(kMuckrackBase) + f + "-" + l;
}

// ---------------------------------------------------------------------------
// Character n-grams

inline constexpr char32_t kPadStart = U'^';
inline constexpr char32_t kPadEnd = U'$';

// n-grams of "^" + s + "$" over code points, in order of occurrence.
inline std::vector<std::string> char_ngrams(std::string_view s, std::size_t n) {
  if (n == 0) throw InvalidArgument("char_ngrams: n must be at least 1");
  std::u32string padded;
  padded.reserve(s.size() + 2);
  padded.push_back(kPadStart);
  padded += utf8::decode(s);
  padded.push_back(kPadEnd);
  std::vector<std::string> out;
  if (padded.size() < n) return out;
  out.reserve(padded.size() - n + 1);
  for (std::size_t i = 0; i + n <= padded.size(); ++i) out.push_back(utf8::encode(std::u32string_view(padded).substr(i, n)));
  return out;
}

// Sitemap entries with an n-gram TF-IDF model and an inverted index over it.
class SitemapIndex {
public:
  struct Posting {
    std::uint32_t entry;
    double weight;
  };

  SitemapIndex(std::vector<std::string> entries, std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("sitemap index: n must be at least 1");
    for (auto& e : entries)
      if (members_.insert(e).second) entries_.push_back(std::move(e));
    if (entries_.empty()) throw InvalidArgument("sitemap index: no entries");

    std::vector<std::vector<std::string>> grams;
    grams.reserve(entries_.size());
    for (const auto& e : entries_) grams.push_back(char_ngrams(e, n_));
    model_ = vectorspace::fit_with(grams, [](const std::vector<std::string>& g) -> const auto& { return g; });

    postings_.assign(model_.vocabulary().size(), {});
    vectors_.reserve(entries_.size());
    for (std::uint32_t i = 0; i < entries_.size(); ++i) {
      vectors_.push_back(model_.transform_tokens(grams[i]));
      for (const auto& [term, w] : vectors_.back().entries()) postings_[term].push_back({i, w});
    }
  }

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t n() const { return n_; }
  const vectorspace::TfIdfModel& model() const { return model_; }
  const vectorspace::SparseVector& vector(std::size_t i) const { return vectors_.at(i); }
  const std::vector<Posting>& postings(vectorspace::TermIndex t) const { return postings_.at(t); }

  bool contains(const std::string& entry) const { return members_.count(entry) > 0; }

  vectorspace::SparseVector vectorize(std::string_view s) const {
    return model_.transform_tokens(char_ngrams(s, n_));
  }

private:
  std::size_t n_;
  std::vector<std::string> entries_;
  std::unordered_set<std::string> members_;
  vectorspace::TfIdfModel model_;
  std::vector<vectorspace::SparseVector> vectors_;
  std::vector<std::vector<Posting>> postings_;
};

inline SitemapIndex build_sitemap_index(std::vector<std::string> entries, std::size_t n = 3) {
  return SitemapIndex(std::move(entries), n);
}

// Best cosine match; ties go to the lexicographically smaller candidate.
// Accepted only when the score is strictly above the threshold.
inline MatchResult fuzzy_match(const SitemapIndex& index, std::string_view query,
                               double threshold = kDefaultFuzzyThreshold) {
  MatchResult r;
  r.query = std::string(query);
  r.method = Method::ngram_tfidf;
  // A member matches itself with cosine 1, even when every one of its
  // n-grams has zero idf (e.g. a one-entry sitemap).
  if (index.contains(r.query)) {
    r.candidate = r.query;
    r.score = 1.0;
    r.accepted = r.score > threshold;
    return r;
  }
  const auto q = index.vectorize(query);
  if (q.empty()) return r;

  // Accumulate dot products only for entries sharing an n-gram with the query.
  std::vector<double> scores(index.entries().size(), 0.0);
  std::vector<std::uint32_t> touched;
  for (const auto& [term, qw] : q.entries()) {
    for (const auto& p : index.postings(term)) {
      if (scores[p.entry] == 0.0) touched.push_back(p.entry);
      scores[p.entry] += qw * p.weight;
    }
  }
  // Entry and query vectors are unit length, so the dot product is the cosine.
  const double qnorm = q.norm();
  double best = 0.0;
  const std::string* best_entry = nullptr;
  for (std::uint32_t e : touched) {
    const double s = std::min(1.0, scores[e] / qnorm);
    const std::string& cand = index.entries()[e];
    if (!best_entry || s > best || (s == best && cand < *best_entry)) {
      best = s;
      best_entry = &cand;
    }
  }
  if (!best_entry || best <= 0.0) return r;
  r.candidate = *best_entry;
  r.score = best;
  r.accepted = best > threshold;
  return r;
}

// Full pairwise scan: least edit distance, ties to the lexicographically
// smaller candidate; the score is the 1..100 match ratio.
inline MatchResult levenshtein_match(std::span<const std::string> candidates, std::string_view query,
                                     double ratio_threshold = kDefaultRatioThreshold) {
  MatchResult r;
  r.query = std::string(query);
  r.method = Method::levenshtein_ratio;
  std::size_t best_d = 0;
  const std::string* best = nullptr;
  for (const auto& c : candidates) {
    const std::size_t d = levenshtein(query, c);
    if (!best || d < best_d || (d == best_d && c < *best)) {
      best_d = d;
      best = &c;
    }
  }
  if (!best) return r;
  r.candidate = *best;
  r.score = (query.empty() && best->empty()) ? 100.0 : match_ratio(query, *best);
  r.accepted = r.score > ratio_threshold;
  return r;
}

// ---------------------------------------------------------------------------
// Profile linking

enum class LinkStatus { exact, fuzzy, unresolved };

inline std::string_view to_string(LinkStatus s) {
  switch (s) {
    case LinkStatus::exact: return "exact";
    case LinkStatus::fuzzy: return "fuzzy";
    case LinkStatus::unresolved: return "unresolved";
  }
  return "unresolved";
}

struct LinkOutcome {
  std::string journalist;
  std::string slug;          // empty if no slug could be built
  LinkStatus status = LinkStatus::unresolved;
  std::string url;           // linked URL, or best fuzzy candidate when unresolved
  double score = 0.0;
  std::string note;
};

struct LinkReport {
  std::vector<LinkOutcome> outcomes;
  std::size_t exact = 0;
  std::size_t fuzzy = 0;
  std::size_t unresolved = 0;
};

// Slug, then exact sitemap hit, then n-gram match above the threshold, else
// unresolved with the best score kept.
inline LinkReport link_profiles(std::span<const corpus::JournalistProfile> journalists, const SitemapIndex& index,
                                double threshold = kDefaultFuzzyThreshold) {
  LinkReport report;
  for (const auto& j : journalists) {
    LinkOutcome o;
    o.journalist = j.full_name;
    try {
      o.slug = muckrack_slug(j.first_name, j.last_name);
    } catch (const InvalidArgument& e) {
      o.note = e.what();
      ++report.unresolved;
      report.outcomes.push_back(std::move(o));
      continue;
    }
    if (index.contains(o.slug)) {
      o.status = LinkStatus::exact;
      o.url = o.slug;
      o.score = 1.0;
      ++report.exact;
    } else {
      const MatchResult m = fuzzy_match(index, o.slug, threshold);
      o.url = m.candidate;
      o.score = m.score;
      if (m.accepted) {
        o.status = LinkStatus::fuzzy;
        ++report.fuzzy;
      } else {
        ++report.unresolved;
      }
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

inline std::vector<std::string> parse_sitemap(std::string_view text) {
  std::vector<std::string> out;
  for (auto line : str::lines(text)) {
    auto t = str::trim(line);
    if (!t.empty() && t.front() != '#') out.emplace_back(t);
  }
  return out;
}

inline std::vector<std::string> load_sitemap(const std::string& path) { return parse_sitemap(str::read_file(path)); }

// ---------------------------------------------------------------------------
// Benchmark

// Seeded synthetic sitemap: "https://muckrack.com/<first>-<last>[-<n>]"
// slugs built from random syllables, plus queries that are planted entries
// with a light perturbation (a typo, or a dropped numeric suffix).
struct SyntheticSitemap {
  std::vector<std::string> entries;
  std::vector<std::string> queries;
  std::vector<std::string> planted;  // planted[i] is the true match of queries[i]
};

namespace detail {

// Uniform draw in [0, n) from raw engine output; independent of the
// standard library's distribution implementations.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline std::string random_word(std::mt19937_64& rng) {
  static constexpr std::string_view onsets[] = {"b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p",
                                                "r", "s", "t", "v", "w", "z", "br", "ch", "sh", "st", "th", "tr"};
  static constexpr std::string_view vowels[] = {"a", "e", "i", "o", "u", "ai", "ea", "ie", "oo", "ou"};
  static constexpr std::string_view codas[] = {"", "", "n", "r", "s", "l", "m", "t", "ck", "nd"};
  std::string w;
  const std::size_t syllables = 2 + draw(rng, 2);
  for (std::size_t i = 0; i < syllables; ++i) {
    w += onsets[draw(rng, std::size(onsets))];
    w += vowels[draw(rng, std::size(vowels))];
    w += codas[draw(rng, std::size(codas))];
  }
  return w;
}

}  // namespace detail

inline SyntheticSitemap make_synthetic_sitemap(std::size_t corpus_size, std::size_t query_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SyntheticSitemap s;
  std::unordered_set<std::string> seen;
  s.entries.reserve(corpus_size);
  while (s.entries.size() < corpus_size) {
    std::string slug = std::string(kMuckrackBase) + detail::random_word(rng) + "-" + detail::random_word(rng);
    if (detail::draw(rng, 10) == 0) slug += "-" + std::to_string(1 + detail::draw(rng, 9));
    if (seen.insert(slug).second) s.entries.push_back(std::move(slug));
  }
  static constexpr std::string_view letters = "abcdefghijklmnopqrstuvwxyz";
  for (std::size_t q = 0; q < query_count && !s.entries.empty(); ++q) {
    const std::string& target = s.entries[detail::draw(rng, s.entries.size())];
    std::string query = target;
    const std::size_t path = kMuckrackBase.size();
    const auto last_dash = query.rfind('-');
    const bool has_number = last_dash != std::string::npos && last_dash > path &&
                            std::isdigit(static_cast<unsigned char>(query.back()));
    if (has_number) {
      query.erase(last_dash);  // "jane-doe-2" queried as "jane-doe"
    } else {
      const std::size_t pos = path + detail::draw(rng, query.size() - path);
      switch (detail::draw(rng, 3)) {
        case 0: query[pos] = letters[detail::draw(rng, letters.size())]; break;
        case 1: query.erase(pos, 1); break;
        default: query.insert(query.begin() + static_cast<std::ptrdiff_t>(pos), letters[detail::draw(rng, letters.size())]);
      }
    }
    s.queries.push_back(std::move(query));
    s.planted.push_back(target);
  }
  return s;
}

struct BenchmarkRow {
  Method method;
  std::size_t corpus_size;
  std::size_t queries;
  double seconds;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;
  // Best candidates from the largest query batch, per method.
  std::vector<MatchResult> levenshtein_best;
  std::vector<MatchResult> fuzzy_best;
};

// Times both matchers for each query count. The fuzzy timing includes
// building the n-gram index, as a cold run would.
inline BenchmarkResult benchmark_matchers(const SyntheticSitemap& data, std::span<const std::size_t> query_counts,
                                          std::size_t n = 3) {
  using clock = std::chrono::steady_clock;
  BenchmarkResult out;
  std::size_t largest = 0;
  for (std::size_t q : query_counts) largest = std::max(largest, q);
  for (std::size_t q : query_counts) {
    if (q > data.queries.size()) throw InvalidArgument("benchmark: more queries requested than generated");
    std::vector<MatchResult> lev, fuzzy;
    auto t0 = clock::now();
    for (std::size_t i = 0; i < q; ++i) lev.push_back(levenshtein_match(data.entries, data.queries[i]));
    auto t1 = clock::now();
    {
      const SitemapIndex index(data.entries, n);
      for (std::size_t i = 0; i < q; ++i) fuzzy.push_back(fuzzy_match(index, data.queries[i]));
    }
    auto t2 = clock::now();
    out.rows.push_back({Method::levenshtein_ratio, data.entries.size(), q,
                        std::chrono::duration<double>(t1 - t0).count()});
    out.rows.push_back({Method::ngram_tfidf, data.entries.size(), q, std::chrono::duration<double>(t2 - t1).count()});
    if (q == largest) {
      out.levenshtein_best = std::move(lev);
      out.fuzzy_best = std::move(fuzzy);
    }
  }
  return out;
}

// CSV with header method,corpus_size,queries,seconds.
inline std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "method,corpus_size,queries,seconds\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    out += std::string(to_string(r.method)) + "," + std::to_string(r.corpus_size) + "," + std::to_string(r.queries) +
           "," + buf + "\n";
  }
  return out;
}

}  // namespace pressmatch::matching
