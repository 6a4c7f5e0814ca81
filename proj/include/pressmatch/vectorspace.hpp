#pragma once

// TF-IDF vector space: vocabulary with document frequencies, idf = ln(N/df)
// without smoothing, sparse document vectors and cosine similarity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pressmatch/error.hpp"
#include "pressmatch/strings.hpp"
#include "pressmatch/textprep.hpp"

namespace pressmatch::vectorspace {

using TermIndex = std::uint32_t;

class Vocabulary {
public:
  Vocabulary() = default;

  // Terms must be sorted and unique; indices follow that order.
  Vocabulary(std::vector<std::string> terms, std::vector<std::uint32_t> df, std::uint32_t documents)
      : terms_(std::move(terms)), df_(std::move(df)), document_count_(documents) {
    if (terms_.size() != df_.size()) throw InvalidArgument("vocabulary: term/df size mismatch");
    index_.reserve(terms_.size());
    for (TermIndex i = 0; i < terms_.size(); ++i) {
      if (df_[i] < 1 || df_[i] > document_count_)
        throw InvalidArgument("vocabulary: document frequency out of range for '" + terms_[i] + "'");
      if (!index_.emplace(terms_[i], i).second)
        throw InvalidArgument("vocabulary: duplicate term '" + terms_[i] + "'");
    }
  }

  std::size_t size() const { return terms_.size(); }
  std::uint32_t document_count() const { return document_count_; }
  const std::string& term(TermIndex i) const { return terms_.at(i); }
  std::uint32_t document_frequency(TermIndex i) const { return df_.at(i); }
  const std::vector<std::string>& terms() const { return terms_; }

  const TermIndex* find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    return it == index_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.terms_ == b.terms_ && a.df_ == b.df_ && a.document_count_ == b.document_count_;
  }

private:
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> df_;
  std::uint32_t document_count_ = 0;
  std::unordered_map<std::string, TermIndex> index_;
};

// Sorted (index, weight) pairs with no stored zeros.
class SparseVector {
public:
  using Entry = std::pair<TermIndex, double>;

  SparseVector() = default;

  // Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (const auto& e : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == e.first)
        v.entries_.back().second += e.second;
      else
        v.entries_.push_back(e);
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0.0; });
    return v;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  double norm() const {
    double s = 0.0;
    for (const auto& [i, w] : entries_) s += w * w;
    return std::sqrt(s);
  }

  double weight(TermIndex idx) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, TermIndex i) { return e.first < i; });
    return (it != entries_.end() && it->first == idx) ? it->second : 0.0;
  }

  SparseVector scaled(double alpha) const {
    SparseVector v = *this;
    for (auto& e : v.entries_) e.second *= alpha;
    std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0.0; });
    return v;
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  std::vector<Entry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) ++i;
    else if (x[i].first > y[j].first) ++j;
    else s += x[i++].second * y[j++].second;
  }
  return s;
}

// dot(a,b) / (|a| |b|), 0 when either side is empty. Cosine distance is 1 - this.
inline double cosine_similarity(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double denom = a.norm() * b.norm();
  if (denom == 0.0) return 0.0;
  return std::clamp(dot(a, b) / denom, -1.0, 1.0);
}

enum class Norm { l2, none };

class TfIdfModel {
public:
  TfIdfModel() = default;
  TfIdfModel(Vocabulary vocab, std::vector<double> idf, Norm norm)
      : vocab_(std::move(vocab)), idf_(std::move(idf)), norm_(norm) {
    if (idf_.size() != vocab_.size()) throw InvalidArgument("tfidf: idf size does not match vocabulary");
  }

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<double>& idf() const { return idf_; }
  double idf(TermIndex i) const { return idf_.at(i); }
  Norm norm() const { return norm_; }

  // weight(t) = count(t) * idf(t); unknown tokens ignored, zeros dropped.
  template <typename Tokens>
  SparseVector transform_tokens(const Tokens& tokens) const {
    std::map<TermIndex, double> counts;
    for (const auto& tok : tokens)
      if (const TermIndex* idx = vocab_.find(tok)) counts[*idx] += 1.0;
    std::vector<SparseVector::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [idx, tf] : counts) entries.emplace_back(idx, tf * idf_[idx]);
    SparseVector v = SparseVector::from_entries(std::move(entries));
    if (norm_ == Norm::l2 && !v.empty()) v = v.scaled(1.0 / v.norm());
    return v;
  }

  SparseVector transform(const textprep::TokenList& doc) const { return transform_tokens(doc.tokens); }

  friend bool operator==(const TfIdfModel& a, const TfIdfModel& b) {
    return a.vocab_ == b.vocab_ && a.idf_ == b.idf_ && a.norm_ == b.norm_;
  }

private:
  Vocabulary vocab_;
  std::vector<double> idf_;
  Norm norm_ = Norm::l2;
};

// Fits vocabulary and idf over any range of token sequences.
template <typename Corpus, typename TokensOf>
TfIdfModel fit_with(const Corpus& corpus, TokensOf tokens_of, Norm norm = Norm::l2) {
  std::map<std::string, std::uint32_t> df;
  std::size_t documents = 0;
  bool any_tokens = false;
  for (const auto& doc : corpus) {
    ++documents;
    const auto& toks = tokens_of(doc);
    std::vector<std::string_view> uniq(toks.begin(), toks.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto t : uniq) {
      ++df[std::string(t)];
      any_tokens = true;
    }
  }
  if (documents == 0) throw InvalidArgument("tfidf fit: empty corpus");
  if (!any_tokens) throw InvalidArgument("tfidf fit: every document is empty");

  std::vector<std::string> terms;
  std::vector<std::uint32_t> freq;
  std::vector<double> idf;
  terms.reserve(df.size());
  freq.reserve(df.size());
  idf.reserve(df.size());
  const auto n = static_cast<double>(documents);
  for (auto& [term, d] : df) {
    terms.push_back(term);
    freq.push_back(d);
    // Terms present in every document get exactly ln(1) = 0.
    idf.push_back(d == documents ? 0.0 : std::log(n / static_cast<double>(d)));
  }
  return TfIdfModel(Vocabulary(std::move(terms), std::move(freq), static_cast<std::uint32_t>(documents)),
                    std::move(idf), norm);
}

inline TfIdfModel fit(std::span<const textprep::TokenList> corpus, Norm norm = Norm::l2) {
  return fit_with(corpus, [](const textprep::TokenList& d) -> const auto& { return d.tokens; }, norm);
}

inline SparseVector transform(const TfIdfModel& model, const textprep::TokenList& doc) {
  return model.transform(doc);
}

// n highest weights, ties by ascending term index.
inline std::vector<std::pair<std::string, double>> top_terms(const SparseVector& v, std::size_t n,
                                                             const Vocabulary& vocab) {
  if (n == 0) throw InvalidArgument("top_terms: n must be at least 1");
  std::vector<SparseVector::Entry> entries = v.entries();
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > n) entries.resize(n);
  std::vector<std::pair<std::string, double>> out;
  out.reserve(entries.size());
  for (const auto& [idx, w] : entries) out.emplace_back(vocab.term(idx), w);
  return out;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   pressmatch-tfidf<TAB>1
//   norm<TAB>l2|none
//   documents<TAB>N
//   terms<TAB>V
//   <term><TAB><df><TAB><idf as C99 hex float>     (V lines, term escaped)
//
// Hex floats make the idf (and so every derived weight) round-trip bit for bit.

inline constexpr std::string_view kModelMagic = "pressmatch-tfidf";
inline constexpr int kModelVersion = 1;

inline void write_model(std::string& out, const TfIdfModel& m) {
  const auto& v = m.vocabulary();
  out += std::string(kModelMagic) + '\t' + std::to_string(kModelVersion) + '\n';
  out += std::string("norm\t") + (m.norm() == Norm::l2 ? "l2" : "none") + '\n';
  out += "documents\t" + std::to_string(v.document_count()) + '\n';
  out += "terms\t" + std::to_string(v.size()) + '\n';
  for (TermIndex i = 0; i < v.size(); ++i) {
    out += str::escape_field(v.term(i));
    out += '\t';
    out += std::to_string(v.document_frequency(i));
    out += '\t';
    out += str::hexfloat(m.idf(i));
    out += '\n';
  }
}

inline std::string serialize(const TfIdfModel& m) {
  std::string out;
  write_model(out, m);
  return out;
}

// Line cursor shared by the container readers.
class LineReader {
public:
  explicit LineReader(std::string_view text) : lines_(str::lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::string_view next() {
    if (done()) throw IoError("unexpected end of container at line " + std::to_string(pos_ + 1));
    return lines_[pos_++];
  }
  std::size_t line_number() const { return pos_; }

  // Reads "key<TAB>value" and returns value.
  std::string_view expect(std::string_view key) {
    std::string_view line = next();
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.substr(0, tab) != key)
      throw IoError("expected '" + std::string(key) + "' at line " + std::to_string(pos_));
    return line.substr(tab + 1);
  }

  template <typename T>
  T expect_int(std::string_view key) {
    T v{};
    if (!str::parse_int(expect(key), v))
      throw IoError("bad integer for '" + std::string(key) + "' at line " + std::to_string(pos_));
    return v;
  }

private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

inline TfIdfModel read_model(LineReader& in) {
  int version = 0;
  if (!str::parse_int(in.expect(kModelMagic), version) || version != kModelVersion)
    throw IoError("unsupported tfidf model version");
  const std::string_view norm_s = in.expect("norm");
  if (norm_s != "l2" && norm_s != "none") throw IoError("bad norm in tfidf model");
  const auto documents = in.expect_int<std::uint32_t>("documents");
  const auto count = in.expect_int<std::size_t>("terms");
  std::vector<std::string> terms;
  std::vector<std::uint32_t> df;
  std::vector<double> idf;
  terms.reserve(count);
  df.reserve(count);
  idf.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto fields = str::split(in.next(), '\t');
    std::uint32_t d = 0;
    double w = 0.0;
    if (fields.size() != 3 || !str::parse_int(fields[1], d) || !str::parse_double(fields[2], w))
      throw IoError("malformed term line " + std::to_string(in.line_number()));
    terms.push_back(str::unescape_field(fields[0]));
    df.push_back(d);
    idf.push_back(w);
  }
  return TfIdfModel(Vocabulary(std::move(terms), std::move(df), documents), std::move(idf),
                    norm_s == "l2" ? Norm::l2 : Norm::none);
}

inline TfIdfModel deserialize(std::string_view text) {
  LineReader in(text);
  return read_model(in);
}

}  // namespace pressmatch::vectorspace
