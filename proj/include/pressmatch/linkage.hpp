#pragma once

// Record linkage between journalist profiles and an email database, blocked
// on normalized first name.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pressmatch/corpus.hpp"
#include "pressmatch/csv.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/matching.hpp"

namespace pressmatch::linkage {

enum class Label { true_match, false_match, invalid, unlabeled };

inline std::string_view to_string(Label l) {
  switch (l) {
    case Label::true_match: return "true";
    case Label::false_match: return "false";
    case Label::invalid: return "invalid";
    case Label::unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

struct EmailMatch {
  std::string journalist;
  std::string email;
  double similarity = 0.0;
  Label label = Label::unlabeled;
};

// Lowercase, first whitespace token, letters and digits only.
inline std::string block_key(std::string_view first_name) {
  const auto words = str::split_whitespace(first_name);
  if (words.empty()) return {};
  return matching::normalize_name_part(words.front());
}

struct Block {
  std::string key;
  std::vector<std::size_t> left;   // indices into the left records
  std::vector<std::size_t> right;  // indices into the right records

  std::size_t pairs() const { return left.size() * right.size(); }
};

// One block per key present on both sides, sorted by key. Records with an
// empty key or a key seen on one side only produce no comparisons.
template <typename L, typename R, typename KeyL, typename KeyR>
std::vector<Block> block(std::span<const L> left, std::span<const R> right, KeyL key_left, KeyR key_right) {
  std::map<std::string, Block> by_key;
  std::map<std::string, std::vector<std::size_t>> right_by_key;
  for (std::size_t i = 0; i < right.size(); ++i) {
    std::string k = key_right(right[i]);
    if (!k.empty()) right_by_key[std::move(k)].push_back(i);
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::string k = key_left(left[i]);
    if (k.empty() || !right_by_key.count(k)) continue;
    auto& b = by_key[k];
    b.key = k;
    b.left.push_back(i);
  }
  std::vector<Block> out;
  for (auto& [k, b] : by_key) {
    b.right = right_by_key[k];
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<Block> block_records(std::span<const corpus::JournalistProfile> journalists,
                                        std::span<const corpus::EmailRecord> emails) {
  return block(journalists, emails, [](const corpus::JournalistProfile& j) { return block_key(j.first_name); },
               [](const corpus::EmailRecord& e) { return block_key(e.first_name); });
}

inline std::size_t candidate_pairs(const std::vector<Block>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.pairs();
  return n;
}

// outlet name -> email domain
using DomainMap = std::map<std::string, std::string>;

inline DomainMap parse_domain_map(std::string_view text) {
  const auto table = csv::Table::from_text(text);
  DomainMap out;
  if (table.empty()) return out;
  table.require({"outlet", "domain"});
  for (const auto& row : table.rows()) {
    auto outlet = str::trim(table.cell(row, "outlet"));
    auto domain = str::trim(table.cell(row, "domain"));
    if (!outlet.empty() && !domain.empty()) out[std::string(outlet)] = utf8::to_lower(domain);
  }
  return out;
}

inline DomainMap load_domain_map(const std::string& path) { return parse_domain_map(str::read_file(path)); }

// "firstname" + "lastname" + "@" + domain of the journalist's modal outlet.
// Throws InvalidArgument when there is no outlet or no domain for it.
inline std::string candidate_string(const corpus::JournalistProfile& j, const DomainMap& domains) {
  const auto outlet = j.modal_outlet();
  if (!outlet) throw InvalidArgument("no outlet for " + j.full_name);
  auto it = domains.find(*outlet);
  if (it == domains.end()) throw InvalidArgument("no domain mapping for outlet '" + *outlet + "'");
  const std::string local = matching::normalize_name_part(j.first_name) + matching::normalize_name_part(j.last_name);
  if (local.empty()) throw InvalidArgument("empty name for " + j.full_name);
  return local + "@" + it->second;
}

enum class Comparator { levenshtein, ngram };

struct LinkOptions {
  double threshold = 0.5;
  Comparator comparator = Comparator::levenshtein;
  std::size_t ngram_n = 3;
};

struct LinkageResult {
  std::vector<EmailMatch> matches;  // sorted by (journalist, email)
  std::size_t comparisons = 0;
  std::size_t candidate_pairs = 0;  // sum over blocks of |left| * |right|
  std::vector<std::pair<std::string, std::string>> skipped;  // journalist, reason
};

// 1 - d / max_len over code points; 1.0 for two empty strings.
inline double normalized_similarity(std::string_view a, std::string_view b) {
  const std::size_t la = utf8::length(a), lb = utf8::length(b);
  if (la == 0 && lb == 0) return 1.0;
  return 1.0 - static_cast<double>(matching::levenshtein(a, b)) / static_cast<double>(std::max(la, lb));
}

// Within each first-name block, compares every journalist's candidate string
// with every address; keeps each journalist's best address scoring at least
// the threshold (ties to the smaller address).
inline LinkageResult link_emails(std::span<const corpus::JournalistProfile> journalists,
                                 std::span<const corpus::EmailRecord> emails, const DomainMap& domains,
                                 const LinkOptions& opt = {}) {
  if (!(opt.threshold >= 0.0 && opt.threshold <= 1.0))
    throw InvalidArgument("link_emails: threshold must lie in [0,1]");
  LinkageResult result;

  std::vector<corpus::JournalistProfile> usable;
  std::vector<std::string> candidates;
  for (const auto& j : journalists) {
    try {
      candidates.push_back(candidate_string(j, domains));
      usable.push_back(j);
    } catch (const InvalidArgument& e) {
      result.skipped.emplace_back(j.full_name, e.what());
    }
  }
  const auto blocks = block_records(usable, emails);
  result.candidate_pairs = candidate_pairs(blocks);

  std::optional<matching::SitemapIndex> grams;
  std::unordered_map<std::string, std::size_t> address_slot;
  if (opt.comparator == Comparator::ngram && !emails.empty()) {
    std::vector<std::string> addrs;
    for (const auto& e : emails) addrs.push_back(utf8::to_lower(e.address));
    grams.emplace(std::move(addrs), opt.ngram_n);
    for (std::size_t i = 0; i < grams->entries().size(); ++i) address_slot.emplace(grams->entries()[i], i);
  }
  auto similarity = [&](const std::string& cand, const std::string& address) {
    ++result.comparisons;
    const std::string addr = utf8::to_lower(address);
    if (!grams) return normalized_similarity(cand, addr);
    if (cand == addr) return 1.0;
    return vectorspace::cosine_similarity(grams->vectorize(cand), grams->vector(address_slot.at(addr)));
  };

  for (const auto& b : blocks) {
    for (std::size_t li : b.left) {
      std::optional<EmailMatch> best;
      for (std::size_t ri : b.right) {
        const std::string& address = emails[ri].address;
        const double s = similarity(candidates[li], address);
        if (s < opt.threshold) continue;
        if (!best || s > best->similarity || (s == best->similarity && address < best->email))
          best = EmailMatch{usable[li].full_name, address, s, Label::unlabeled};
      }
      if (best) result.matches.push_back(std::move(*best));
    }
  }
  std::sort(result.matches.begin(), result.matches.end(), [](const EmailMatch& a, const EmailMatch& b) {
    return std::tie(a.journalist, a.email) < std::tie(b.journalist, b.email);
  });
  return result;
}

// journalist full name -> known address
using Oracle = std::map<std::string, std::string>;

inline Oracle parse_oracle(std::string_view text) {
  const auto table = csv::Table::from_text(text);
  Oracle out;
  if (table.empty()) return out;
  table.require({"journalist_full_name", "email"});
  for (const auto& row : table.rows())
    out[std::string(str::trim(table.cell(row, "journalist_full_name")))] =
        std::string(str::trim(table.cell(row, "email")));
  return out;
}

inline Oracle load_oracle(const std::string& path) { return parse_oracle(str::read_file(path)); }

struct LabelSummary {
  std::size_t count = 0;
  double mean_similarity = 0.0;
};

struct LabelReport {
  std::vector<EmailMatch> matches;
  std::array<LabelSummary, 3> summary{};  // true, false, invalid

  const LabelSummary& operator[](Label l) const { return summary.at(static_cast<std::size_t>(l)); }
  std::size_t total() const { return summary[0].count + summary[1].count + summary[2].count; }
};

// true: oracle has the same address; false: a different one; invalid: the
// journalist is not in the oracle.
inline LabelReport label_matches(std::vector<EmailMatch> matches, const Oracle& oracle) {
  LabelReport r;
  std::array<double, 3> sums{};
  for (auto& m : matches) {
    auto it = oracle.find(m.journalist);
    if (it == oracle.end()) m.label = Label::invalid;
    else if (utf8::to_lower(it->second) == utf8::to_lower(m.email)) m.label = Label::true_match;
    else m.label = Label::false_match;
    const auto slot = static_cast<std::size_t>(m.label);
    ++r.summary[slot].count;
    sums[slot] += m.similarity;
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (r.summary[i].count) r.summary[i].mean_similarity = sums[i] / static_cast<double>(r.summary[i].count);
  r.matches = std::move(matches);
  return r;
}

// CSV journalist,email,similarity,label
inline std::string matches_csv(const std::vector<EmailMatch>& matches) {
  std::string out = "journalist,email,similarity,label\n";
  char buf[32];
  for (const auto& m : matches) {
    std::snprintf(buf, sizeof buf, "%.6f", m.similarity);
    out += csv::format_row({m.journalist, m.email, buf, std::string(to_string(m.label))});
  }
  return out;
}

}  // namespace pressmatch::linkage
