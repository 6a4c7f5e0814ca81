#pragma once

// Text cleaning: unicode repair, emoji removal, tokenization, stopwords,
// POS-guided lemmatization and an English language filter.

#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pressmatch/error.hpp"
#include "pressmatch/strings.hpp"
#include "pressmatch/utf8.hpp"

namespace pressmatch::textprep {

struct TokenList {
  std::vector<std::string> tokens;
  std::size_t source_len = 0;  // code points in the raw input

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
  friend bool operator==(const TokenList&, const TokenList&) = default;
};

enum class PosTag { noun, verb, adjective, adverb, other };

inline std::string_view to_string(PosTag t) {
  switch (t) {
    case PosTag::noun: return "noun";
    case PosTag::verb: return "verb";
    case PosTag::adjective: return "adjective";
    case PosTag::adverb: return "adverb";
    case PosTag::other: return "other";
  }
  return "other";
}

inline PosTag parse_tag(std::string_view s) {
  if (s == "noun") return PosTag::noun;
  if (s == "verb") return PosTag::verb;
  if (s == "adjective") return PosTag::adjective;
  if (s == "adverb") return PosTag::adverb;
  if (s == "other") return PosTag::other;
  throw InvalidArgument("unknown POS tag: " + std::string(s));
}

enum class LemmatizerMode { dictionary_pos, suffix_stemmer, off };

// ---------------------------------------------------------------------------
// Data files

// Directory holding the shipped word lists. PRESSMATCH_DATA_DIR in the
// environment wins over the compiled-in location.
inline std::string default_data_dir() {
  if (const char* env = std::getenv("PRESSMATCH_DATA_DIR"); env && *env) return env;
#ifdef PRESSMATCH_DEFAULT_DATA_DIR
  return PRESSMATCH_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

namespace detail {

// Non-comment, non-blank lines of a data file, split on tabs.
inline std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  const std::string text = str::read_file(path);
  std::vector<std::vector<std::string>> out;
  for (auto line : str::lines(text)) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(str::split(line, '\t'));
  }
  return out;
}

}  // namespace detail

inline std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::unordered_set<std::string> out;
  for (const auto& fields : detail::read_tsv(path)) {
    auto w = str::trim(fields[0]);
    if (!w.empty()) out.insert(utf8::to_lower(w));
  }
  return out;
}

// word -> tag
class TagLexicon {
public:
  TagLexicon() = default;

  static TagLexicon load(const std::string& path) {
    TagLexicon lex;
    for (const auto& f : detail::read_tsv(path)) {
      if (f.size() < 2) throw IoError("tag lexicon: expected word<TAB>tag in " + path);
      lex.add(f[0], parse_tag(f[1]));
    }
    return lex;
  }

  void add(std::string word, PosTag tag) { tags_.emplace(std::move(word), tag); }

  const PosTag* find(const std::string& word) const {
    auto it = tags_.find(word);
    return it == tags_.end() ? nullptr : &it->second;
  }
  bool contains(const std::string& word) const { return tags_.count(word) > 0; }
  std::size_t size() const { return tags_.size(); }

private:
  std::unordered_map<std::string, PosTag> tags_;
};

// (form, tag) -> lemma
class LemmaTable {
public:
  static LemmaTable load(const std::string& path) {
    LemmaTable t;
    for (const auto& f : detail::read_tsv(path)) {
      if (f.size() < 3) throw IoError("lemma table: expected form<TAB>tag<TAB>lemma in " + path);
      t.add(f[0], parse_tag(f[1]), f[2]);
    }
    return t;
  }

  void add(const std::string& form, PosTag tag, std::string lemma) {
    by_tag_[key(form, tag)] = lemma;
    any_.emplace(form, std::move(lemma));
  }

  // Lemma for the exact (form, tag), else for the form under any tag.
  const std::string* find(const std::string& form, PosTag tag) const {
    if (auto it = by_tag_.find(key(form, tag)); it != by_tag_.end()) return &it->second;
    if (auto it = any_.find(form); it != any_.end()) return &it->second;
    return nullptr;
  }
  std::size_t size() const { return by_tag_.size(); }

private:
  static std::string key(const std::string& form, PosTag tag) {
    return form + '\t' + std::string(to_string(tag));
  }
  std::unordered_map<std::string, std::string> by_tag_;
  std::unordered_map<std::string, std::string> any_;
};

// Trigram-coverage English detector. A text's score is the share of its
// space-padded letter trigrams that appear in the profile.
class LanguageProfile {
public:
  static constexpr double kDefaultThreshold = 0.5;
  // Shorter texts carry too little evidence and are not scored.
  static constexpr std::size_t kMinTrigrams = 12;

  static LanguageProfile load(const std::string& path) {
    LanguageProfile p;
    for (const auto& f : detail::read_tsv(path))
      if (!f.empty() && utf8::length(f[0]) == 3) p.trigrams_.insert(f[0]);
    if (p.trigrams_.empty()) throw IoError("language profile is empty: " + path);
    return p;
  }

  // Coverage in [0,1], or a negative value when the text is too short to judge.
  double score(std::string_view lowered) const {
    std::size_t total = 0, hits = 0;
    std::string word;
    auto flush = [&] {
      if (word.empty()) return;
      const std::u32string padded = U" " + utf8::decode(word) + U" ";
      for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
        ++total;
        hits += trigrams_.count(utf8::encode(padded.substr(i, 3)));
      }
      word.clear();
    };
    for (std::size_t pos = 0; pos < lowered.size();) {
      const std::size_t start = pos;
      const char32_t c = utf8::next(lowered, pos);
      // Letters only; digits carry no language signal.
      if (utf8::is_word_char(c) && !(c >= '0' && c <= '9'))
        word.append(lowered.substr(start, pos - start));
      else
        flush();
    }
    flush();
    if (total < kMinTrigrams) return -1.0;
    return static_cast<double>(hits) / static_cast<double>(total);
  }

  std::size_t size() const { return trigrams_.size(); }

private:
  std::unordered_set<std::string> trigrams_;
};

struct Resources {
  std::unordered_set<std::string> stopwords;
  TagLexicon tags;
  LemmaTable lemmas;
  LanguageProfile english;

  static std::shared_ptr<const Resources> load(const std::string& dir = default_data_dir()) {
    auto r = std::make_shared<Resources>();
    r->stopwords = load_stopwords(dir + "/stopwords_en.txt");
    r->tags = TagLexicon::load(dir + "/tags_en.tsv");
    r->lemmas = LemmaTable::load(dir + "/lemmas_en.tsv");
    r->english = LanguageProfile::load(dir + "/trigrams_en.tsv");
    return r;
  }
};

struct CleanConfig {
  std::unordered_set<std::string> stopword_set;
  LemmatizerMode lemmatizer = LemmatizerMode::dictionary_pos;
  bool strip_emoji = true;
  bool require_english = false;
  bool remove_stopwords = true;
  double english_threshold = LanguageProfile::kDefaultThreshold;
  std::shared_ptr<const Resources> resources;

  // Shipped stopwords, dictionary lemmatization, emoji stripping on, no language filter.
  static CleanConfig defaults(std::shared_ptr<const Resources> res) {
    CleanConfig c;
    c.stopword_set = res->stopwords;
    c.resources = std::move(res);
    return c;
  }
  static CleanConfig defaults(const std::string& dir = default_data_dir()) {
    return defaults(Resources::load(dir));
  }

  void validate() const {
    if (remove_stopwords && stopword_set.empty())
      throw InvalidArgument("clean config: stopword removal enabled with an empty stopword set");
    if ((lemmatizer != LemmatizerMode::off || require_english) && !resources)
      throw InvalidArgument("clean config: lemmatizer or language filter needs loaded resources");
  }
};

// ---------------------------------------------------------------------------
// Unicode repair

namespace detail {

// Byte that Windows-1252 (falling back to Latin-1) would decode to cp, or -1.
inline int cp1252_byte(char32_t cp) {
  if (cp < 0x80) return static_cast<int>(cp);
  if (cp >= 0xA0 && cp <= 0xFF) return static_cast<int>(cp);
  if (cp >= 0x80 && cp <= 0x9F) return static_cast<int>(cp);  // C1 controls from Latin-1 decoding
  switch (cp) {
    case 0x20AC: return 0x80; case 0x201A: return 0x82; case 0x0192: return 0x83;
    case 0x201E: return 0x84; case 0x2026: return 0x85; case 0x2020: return 0x86;
    case 0x2021: return 0x87; case 0x02C6: return 0x88; case 0x2030: return 0x89;
    case 0x0160: return 0x8A; case 0x2039: return 0x8B; case 0x0152: return 0x8C;
    case 0x017D: return 0x8E; case 0x2018: return 0x91; case 0x2019: return 0x92;
    case 0x201C: return 0x93; case 0x201D: return 0x94; case 0x2022: return 0x95;
    case 0x2013: return 0x96; case 0x2014: return 0x97; case 0x02DC: return 0x98;
    case 0x2122: return 0x99; case 0x0161: return 0x9A; case 0x203A: return 0x9B;
    case 0x0153: return 0x9C; case 0x017E: return 0x9E; case 0x0178: return 0x9F;
    default: return -1;
  }
}

inline int utf8_sequence_length(int lead) {
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 0;
}

// One pass: every run "lead, continuation..." whose cp1252 bytes form a
// well-formed UTF-8 sequence is replaced by the code point it encodes.
inline bool repair_pass(std::u32string& cps) {
  bool changed = false;
  std::u32string out;
  out.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size();) {
    const int lead = detail::cp1252_byte(cps[i]);
    const int len = utf8_sequence_length(lead);
    if (len > 0 && i + len <= cps.size()) {
      std::string bytes(1, static_cast<char>(lead));
      bool ok = true;
      for (int k = 1; k < len && ok; ++k) {
        const int b = detail::cp1252_byte(cps[i + k]);
        ok = b >= 0x80 && b <= 0xBF;
        if (ok) bytes.push_back(static_cast<char>(b));
      }
      if (ok) {
        std::size_t pos = 0;
        const char32_t decoded = utf8::next(bytes, pos);
        if (decoded != utf8::kReplacement && pos == bytes.size()) {
          out.push_back(decoded);
          i += len;
          changed = true;
          continue;
        }
      }
    }
    out.push_back(cps[i]);
    ++i;
  }
  cps = std::move(out);
  return changed;
}

}  // namespace detail

// Undoes UTF-8 that was decoded as Windows-1252/Latin-1 (up to three layers
// deep). Bytes that are not valid UTF-8 become U+FFFD. Always returns valid UTF-8.
inline std::string repair_unicode(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  for (int layer = 0; layer < 3 && detail::repair_pass(cps); ++layer) {
  }
  return utf8::encode(cps);
}

inline std::string strip_emoji(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t start = pos;
    const char32_t c = utf8::next(text, pos);
    if (!utf8::is_emoji(c)) out.append(text.substr(start, pos - start));
  }
  return out;
}

// Splits on every code point that is not a letter or digit.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t start = pos;
    const char32_t c = utf8::next(text, pos);
    if (utf8::is_word_char(c)) {
      cur.append(text.substr(start, pos - start));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// ---------------------------------------------------------------------------
// Tagging and lemmatization

namespace detail {

inline bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

inline bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

inline bool has_vowel(std::string_view w) {
  for (char c : w)
    if (is_vowel(c) || c == 'y') return true;
  return false;
}

inline bool all_digits(std::string_view w) {
  for (char c : w)
    if (c < '0' || c > '9') return false;
  return !w.empty();
}

}  // namespace detail

// Suffix heuristic used after a lexicon miss.
inline PosTag suffix_tag(std::string_view w) {
  using detail::ends_with;
  if (detail::all_digits(w)) return PosTag::other;
  if (w.size() > 4 && (ends_with(w, "ing") || ends_with(w, "ed"))) return PosTag::verb;
  if (w.size() > 4 && ends_with(w, "ly")) return PosTag::adverb;
  if (w.size() > 4 && (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "less") ||
                       ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "ive")))
    return PosTag::adjective;
  return PosTag::noun;
}

inline PosTag tag_token(const std::string& token, const TagLexicon* lexicon) {
  if (lexicon)
    if (const PosTag* t = lexicon->find(token)) return *t;
  return suffix_tag(token);
}

inline std::vector<std::pair<std::string, PosTag>> pos_tag(const std::vector<std::string>& tokens,
                                                           const TagLexicon& lexicon) {
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.emplace_back(t, tag_token(t, &lexicon));
  return out;
}

namespace detail {

// "stopp" -> "stop", "runn" -> "run"; l, s and z doublings are kept.
inline std::string undouble(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) && stem[n - 1] != 'l' &&
      stem[n - 1] != 's' && stem[n - 1] != 'z')
    stem.pop_back();
  return stem;
}

// Restores a dropped final 'e' when the lexicon knows the longer word.
inline std::string restore_e(std::string stem, const TagLexicon* lexicon) {
  if (lexicon && !lexicon->contains(stem) && lexicon->contains(stem + 'e')) stem += 'e';
  return stem;
}

}  // namespace detail

// Suffix stripping by tag. Every rule shortens the word, so repeated
// application reaches a fixed point.
inline std::string suffix_lemma(const std::string& w, PosTag tag, const TagLexicon* lexicon = nullptr) {
  using detail::ends_with;
  if (!utf8::is_ascii(w) || w.size() <= 3) return w;
  switch (tag) {
    case PosTag::noun:
      if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + 'y';
      if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "zes") ||
          ends_with(w, "ches") || ends_with(w, "shes"))
        return w.substr(0, w.size() - 2);
      if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
        return w.substr(0, w.size() - 1);
      return w;
    case PosTag::verb: {
      std::string stem;
      if (ends_with(w, "ing")) stem = w.substr(0, w.size() - 3);
      else if (ends_with(w, "ied")) return w.substr(0, w.size() - 3) + 'y';
      else if (ends_with(w, "ed")) stem = w.substr(0, w.size() - 2);
      else if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + 'y';
      else if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
        return w.substr(0, w.size() - 1);
      else return w;
      if (stem.size() < 3 || !detail::has_vowel(stem)) return w;
      if (lexicon && lexicon->contains(stem)) return stem;
      return detail::restore_e(detail::undouble(stem), lexicon);
    }
    case PosTag::adjective:
    case PosTag::adverb:
    case PosTag::other:
      return w;
  }
  return w;
}

// Single lemmatization step for a token under the configured mode.
inline std::string lemmatize_once(const std::string& token, LemmatizerMode mode, const Resources* res) {
  if (mode == LemmatizerMode::off) return token;
  const TagLexicon* lexicon = res ? &res->tags : nullptr;
  const PosTag tag = tag_token(token, lexicon);
  if (mode == LemmatizerMode::dictionary_pos && res) {
    if (const std::string* lemma = res->lemmas.find(token, tag)) return *lemma;
    if (res->tags.contains(token)) return token;
  }
  return suffix_lemma(token, tag, lexicon);
}

// Lemmatizes to a fixed point so that lemmatize(lemmatize(w)) == lemmatize(w).
inline std::string lemmatize(const std::string& token, LemmatizerMode mode, const Resources* res) {
  std::string cur = token;
  for (int i = 0; i < 8; ++i) {
    std::string next = lemmatize_once(cur, mode, res);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------

// Full pipeline: repair, lowercase, emoji strip, tokenize, stopword removal,
// lemmatization. Throws NonEnglishText when the language filter rejects.
inline TokenList clean(std::string_view text, const CleanConfig& config) {
  config.validate();
  TokenList out;
  out.source_len = utf8::length(text);
  std::string work = utf8::to_lower(repair_unicode(text));
  if (config.strip_emoji) work = strip_emoji(work);
  if (config.require_english) {
    const double s = config.resources->english.score(work);
    if (s >= 0.0 && s < config.english_threshold) throw NonEnglishText(s);
  }
  const Resources* res = config.resources.get();
  for (auto& tok : tokenize(work)) {
    if (config.remove_stopwords && config.stopword_set.count(tok)) continue;
    std::string lemma = lemmatize(tok, config.lemmatizer, res);
    // A lemma can land on a stopword ("being" -> "be").
    if (lemma.empty() || (config.remove_stopwords && config.stopword_set.count(lemma))) continue;
    out.tokens.push_back(std::move(lemma));
  }
  return out;
}

inline std::string join(const TokenList& tokens) { return str::join(tokens.tokens, " "); }

}  // namespace pressmatch::textprep
