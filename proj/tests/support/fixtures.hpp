#pragma once

// Seeded synthetic inputs shared by the unit tests and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "pressmatch/corpus.hpp"
#include "pressmatch/linkage.hpp"

#include "oracles.hpp"

namespace fixture {

inline std::string syllable_word(std::mt19937_64& rng) {
  static const char* onsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"};
  static const char* vowels[] = {"a", "e", "i", "o", "u"};
  std::string w;
  const std::size_t n = 2 + oracle::draw(rng, 2);
  for (std::size_t i = 0; i < n; ++i) {
    w += onsets[oracle::draw(rng, 14)];
    w += vowels[oracle::draw(rng, 5)];
  }
  return w + "x";  // no English word ends like this, so cleaning keeps it intact
}

// A small random corpus: each article draws words from a shared vocabulary
// and is credited to one of a handful of authors.
inline std::vector<pressmatch::corpus::Article> random_articles(std::uint64_t seed, std::size_t docs) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> vocab;
  const std::size_t vocab_size = 20 + oracle::draw(rng, 40);
  while (vocab.size() < vocab_size) {
    auto w = syllable_word(rng);
    if (std::find(vocab.begin(), vocab.end(), w) == vocab.end()) vocab.push_back(w);
  }
  static const char* authors[] = {"Ada Lane", "Ben Ortiz", "Cara Quinn", "Dev Patel", "Eli Stone", "Fay Moss"};
  std::vector<pressmatch::corpus::Article> out;
  for (std::size_t i = 0; i < docs; ++i) {
    pressmatch::corpus::Article a;
    char id[32];
    std::snprintf(id, sizeof id, "a%03zu", i);
    a.id = id;
    a.title = vocab[oracle::draw(rng, vocab.size())];
    const std::size_t len = 3 + oracle::draw(rng, 12);
    for (std::size_t t = 0; t < len; ++t) a.full_text += (t ? " " : "") + vocab[oracle::draw(rng, vocab.size())];
    a.authors = {authors[oracle::draw(rng, 6)]};
    a.outlet = oracle::draw(rng, 2) ? "Metro Tribune" : "The Daily Ledger";
    out.push_back(std::move(a));
  }
  return out;
}

// 100 journalists against 500 email records. Five journalists have a true
// address in the data (one exact, four with a small typo); five more records
// share those first names but point elsewhere and must not link.
struct LinkageFixture {
  std::vector<pressmatch::corpus::JournalistProfile> journalists;
  std::vector<pressmatch::corpus::EmailRecord> emails;
  pressmatch::linkage::DomainMap domains;
  std::vector<std::pair<std::string, std::string>> planted;  // journalist, address
  std::vector<std::string> decoys;                           // addresses
};

inline LinkageFixture linkage_fixture(std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  LinkageFixture f;
  static const char* firsts[] = {"anna", "boris", "chloe", "diego", "emma", "farid", "grace", "hiro",
                                 "ines", "jonas", "kira", "liam", "maya", "nils", "olga", "pavel"};
  static const char* outlets[] = {"The Daily Ledger", "Metro Tribune", "Tech Current", "Capital Review"};
  f.domains = {{"The Daily Ledger", "dailyledger.com"},
               {"Metro Tribune", "metrotribune.com"},
               {"Tech Current", "techcurrent.io"},
               {"Capital Review", "capitalreview.com"}};
  auto capital = [](std::string s) {
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
  };
  for (std::size_t i = 0; i < 100; ++i) {
    pressmatch::corpus::JournalistProfile j;
    j.first_name = capital(firsts[oracle::draw(rng, 16)]);
    j.last_name = capital(syllable_word(rng));
    j.full_name = j.first_name + " " + j.last_name;
    j.outlets = {{outlets[oracle::draw(rng, 4)], 3}};
    f.journalists.push_back(std::move(j));
  }
  // Filler: shared first names, unrelated mailbox hosts and local parts.
  for (std::size_t i = 0; i < 490; ++i) {
    pressmatch::corpus::EmailRecord e;
    e.first_name = capital(firsts[oracle::draw(rng, 16)]);
    e.last_name = capital(syllable_word(rng));
    e.address = "u" + std::to_string(100000 + i) + "q@inbox" + std::to_string(i % 7) + ".example.org";
    f.emails.push_back(std::move(e));
  }
  for (std::size_t p = 0; p < 5; ++p) {
    const auto& j = f.journalists[p * 17];
    std::string local = pressmatch::utf8::to_lower(j.first_name + j.last_name);
    if (p > 0) local.back() = local.back() == 'q' ? 'w' : 'q';  // one-letter typo
    const std::string address = local + "@" + f.domains.at(*j.modal_outlet());
    f.emails.push_back({j.first_name, j.last_name, address});
    f.planted.emplace_back(j.full_name, address);
    const std::string decoy = "x" + std::to_string(p) + "@unrelated-press.example";
    f.emails.push_back({j.first_name, "Other", decoy});
    f.decoys.push_back(decoy);
  }
  return f;
}

}  // namespace fixture
