#pragma once

// IAB-style 4-tier content taxonomy, two multilabel tier classifiers
// (one-vs-rest multinomial naive Bayes and k-nearest-neighbour voting), the
// multilabel metric suite and the beat-to-tier agreement check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
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
#include "pressmatch/vectorspace.hpp"

namespace pressmatch::taxonomy {

using json = nlohmann::json;

inline constexpr int kTiers = 4;

struct Node {
  std::string id;
  std::string name;
  int tier = 1;
  std::optional<std::string> parent;
};

class TaxonomyTree {
public:
  TaxonomyTree() = default;

  explicit TaxonomyTree(std::vector<Node> nodes) {
    if (nodes.empty()) throw InvalidArgument("taxonomy: no nodes");
    for (auto& n : nodes) {
      if (n.id.empty()) throw InvalidArgument("taxonomy: node with empty id");
      if (n.tier < 1 || n.tier > kTiers) throw InvalidArgument("taxonomy: node '" + n.id + "' has tier outside 1..4");
      if (!slot_.emplace(n.id, nodes_.size()).second) throw InvalidArgument("taxonomy: duplicate node id '" + n.id + "'");
      nodes_.push_back(std::move(n));
    }
    for (const auto& n : nodes_) {
      if (!n.parent) {
        if (n.tier != 1) throw InvalidArgument("taxonomy: node '" + n.id + "' has no parent but is not tier 1");
        continue;
      }
      const Node* p = find(*n.parent);
      if (!p) throw InvalidArgument("taxonomy: node '" + n.id + "' references missing parent '" + *n.parent + "'");
      if (n.tier != p->tier + 1)
        throw InvalidArgument("taxonomy: tier mismatch at node '" + n.id + "' (tier " + std::to_string(n.tier) +
                              ", parent tier " + std::to_string(p->tier) + ")");
    }
    // Walking up from any node must reach a root within kTiers steps.
    for (const auto& n : nodes_) {
      const Node* cur = &n;
      for (int steps = 0; cur->parent; ++steps) {
        if (steps >= kTiers) throw InvalidArgument("taxonomy: cycle through node '" + n.id + "'");
        cur = find(*cur->parent);
      }
    }
    for (const auto& n : nodes_) by_name_[n.name].push_back(n.id);
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  const Node* find(std::string_view id) const {
    auto it = slot_.find(std::string(id));
    return it == slot_.end() ? nullptr : &nodes_[it->second];
  }

  // Id of a node given either its id or a unique name.
  std::optional<std::string> resolve(std::string_view id_or_name) const {
    if (find(id_or_name)) return std::string(id_or_name);
    auto it = by_name_.find(std::string(id_or_name));
    if (it != by_name_.end() && it->second.size() == 1) return it->second.front();
    return std::nullopt;
  }

  // Root-first chain of ids ending at id.
  std::vector<std::string> path(std::string_view id) const {
    std::vector<std::string> out;
    for (const Node* cur = find(id); cur; cur = cur->parent ? find(*cur->parent) : nullptr) out.push_back(cur->id);
    std::reverse(out.begin(), out.end());
    return out;
  }

private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> slot_;
  std::unordered_map<std::string, std::vector<std::string>> by_name_;
};

// CSV id,name,tier,parent_id; parent_id empty for tier-1 roots.
inline TaxonomyTree parse_taxonomy(std::string_view text) {
  const auto table = csv::Table::from_text(text);
  if (table.empty()) throw InvalidArgument("taxonomy: empty file");
  table.require({"id", "name", "tier", "parent_id"});
  std::vector<Node> nodes;
  for (const auto& row : table.rows()) {
    Node n;
    n.id = std::string(str::trim(table.cell(row, "id")));
    n.name = std::string(str::trim(table.cell(row, "name")));
    if (!str::parse_int(str::trim(table.cell(row, "tier")), n.tier))
      throw InvalidArgument("taxonomy: bad tier for node '" + n.id + "'");
    const auto parent = str::trim(table.cell(row, "parent_id"));
    if (!parent.empty()) n.parent = std::string(parent);
    nodes.push_back(std::move(n));
  }
  return TaxonomyTree(std::move(nodes));
}

inline TaxonomyTree load_taxonomy(const std::string& path) { return parse_taxonomy(str::read_file(path)); }

// Sorted, duplicate-free node ids for each tier.
struct TierLabelSet {
  std::array<std::vector<std::string>, kTiers> tiers;

  std::vector<std::string>& tier(int t) { return tiers.at(static_cast<std::size_t>(t - 1)); }
  const std::vector<std::string>& tier(int t) const { return tiers.at(static_cast<std::size_t>(t - 1)); }

  void add(int t, std::string id) {
    auto& v = tier(t);
    auto it = std::lower_bound(v.begin(), v.end(), id);
    if (it == v.end() || *it != id) v.insert(it, std::move(id));
  }

  bool contains(std::string_view id) const {
    for (const auto& v : tiers)
      if (std::binary_search(v.begin(), v.end(), id)) return true;
    return false;
  }

  std::vector<std::string> all() const {
    std::vector<std::string> out;
    for (const auto& v : tiers) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  bool empty() const {
    return std::all_of(tiers.begin(), tiers.end(), [](const auto& v) { return v.empty(); });
  }

  friend bool operator==(const TierLabelSet&, const TierLabelSet&) = default;
};

// Throws unless every id exists and sits in the slot of its own tier.
inline void validate(const TierLabelSet& labels, const TaxonomyTree& tree) {
  for (int t = 1; t <= kTiers; ++t)
    for (const auto& id : labels.tier(t)) {
      const Node* n = tree.find(id);
      if (!n) throw InvalidArgument("label '" + id + "' is not in the taxonomy");
      if (n->tier != t)
        throw InvalidArgument("label '" + id + "' is tier " + std::to_string(n->tier) + " but listed under tier " +
                              std::to_string(t));
    }
}

// Places each id under its own tier.
inline TierLabelSet labels_from_ids(const std::vector<std::string>& ids, const TaxonomyTree& tree) {
  TierLabelSet out;
  for (const auto& id : ids) {
    const Node* n = tree.find(id);
    if (!n) throw InvalidArgument("label '" + id + "' is not in the taxonomy");
    out.add(n->tier, id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Labelled records (JSONL): {"id": ..., "text": ..., "tier1": [...], ..., "tier4": [...]}

struct LabeledDoc {
  std::string id;
  std::string text;
  TierLabelSet labels;
};

inline json to_json(const TierLabelSet& labels) {
  json j = json::object();
  for (int t = 1; t <= kTiers; ++t) j["tier" + std::to_string(t)] = labels.tier(t);
  return j;
}

inline TierLabelSet labels_from_json(const json& j) {
  TierLabelSet out;
  for (int t = 1; t <= kTiers; ++t) {
    const std::string key = "tier" + std::to_string(t);
    if (!j.contains(key)) continue;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw InvalidArgument("labels: '" + key + "' must be an array");
    for (const auto& v : arr) {
      if (!v.is_string()) throw InvalidArgument("labels: '" + key + "' entries must be strings");
      out.add(t, v.get<std::string>());
    }
  }
  return out;
}

inline std::vector<LabeledDoc> parse_labeled_docs(std::string_view text) {
  std::vector<LabeledDoc> out;
  std::size_t line_no = 0;
  for (auto line : str::lines(text)) {
    ++line_no;
    if (str::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw IoError("labels: malformed JSON at line " + std::to_string(line_no));
    LabeledDoc d;
    if (j.contains("id") && j["id"].is_string()) d.id = j["id"].get<std::string>();
    else d.id = std::to_string(line_no);
    if (j.contains("text") && j["text"].is_string()) d.text = j["text"].get<std::string>();
    d.labels = labels_from_json(j);
    out.push_back(std::move(d));
  }
  return out;
}

inline std::vector<LabeledDoc> load_labeled_docs(const std::string& path) {
  return parse_labeled_docs(str::read_file(path));
}

inline std::string labeled_docs_jsonl(const std::vector<LabeledDoc>& docs, bool with_text = false) {
  std::string out;
  for (const auto& d : docs) {
    json j = {{"id", d.id}};
    if (with_text) j["text"] = d.text;
    const json tiers = to_json(d.labels);
    for (const auto& [k, v] : tiers.items()) j[k] = v;
    out += j.dump() + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// One-vs-rest multinomial naive Bayes

// Two-class multinomial model for one label (index 0 = absent, 1 = present).
struct BinaryNb {
  std::string label;
  int tier = 1;
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> log_likelihood;  // per vocabulary term
  std::array<std::size_t, 2> documents{};
};

struct NbModel {
  std::vector<std::string> vocabulary;  // sorted
  std::unordered_map<std::string, std::size_t> term_index;
  std::vector<BinaryNb> labels;  // ordered by (tier, id)
  std::vector<std::string> dropped;  // requested labels without positive documents
  double alpha = 1.0;
};

namespace detail {

inline std::vector<std::pair<int, std::string>> collect_labels(const std::vector<TierLabelSet>& labels) {
  std::set<std::pair<int, std::string>> seen;
  for (const auto& l : labels)
    for (int t = 1; t <= kTiers; ++t)
      for (const auto& id : l.tier(t)) seen.emplace(t, id);
  return {seen.begin(), seen.end()};
}

inline double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace detail

// Trains one presence/absence model per label seen in `labels`. Extra labels
// in `requested` that no document carries are reported in `dropped`.
inline NbModel train_nb(const std::vector<textprep::TokenList>& docs, const std::vector<TierLabelSet>& labels,
                        double alpha = 1.0, const std::vector<std::pair<int, std::string>>& requested = {}) {
  if (docs.size() != labels.size()) throw InvalidArgument("train_nb: docs and labels differ in length");
  if (docs.empty()) throw InvalidArgument("train_nb: no training documents");
  if (!(alpha > 0.0)) throw InvalidArgument("train_nb: alpha must be positive");

  NbModel m;
  m.alpha = alpha;
  std::set<std::string> vocab;
  for (const auto& d : docs) vocab.insert(d.tokens.begin(), d.tokens.end());
  m.vocabulary.assign(vocab.begin(), vocab.end());
  for (std::size_t i = 0; i < m.vocabulary.size(); ++i) m.term_index.emplace(m.vocabulary[i], i);
  const std::size_t V = m.vocabulary.size();

  std::vector<std::vector<std::pair<std::size_t, double>>> counts(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    std::map<std::size_t, double> c;
    for (const auto& t : docs[d].tokens) c[m.term_index.at(t)] += 1.0;
    counts[d].assign(c.begin(), c.end());
  }

  const auto present = detail::collect_labels(labels);
  for (const auto& [tier, id] : requested)
    if (!std::binary_search(present.begin(), present.end(), std::make_pair(tier, id))) m.dropped.push_back(id);

  const auto n = static_cast<double>(docs.size());
  for (const auto& [tier, id] : present) {
    BinaryNb b;
    b.label = id;
    b.tier = tier;
    std::array<std::vector<double>, 2> term_counts{std::vector<double>(V, 0.0), std::vector<double>(V, 0.0)};
    std::array<double, 2> totals{};
    for (std::size_t d = 0; d < docs.size(); ++d) {
      const auto& tl = labels[d].tier(tier);
      const int cls = std::binary_search(tl.begin(), tl.end(), id) ? 1 : 0;
      ++b.documents[cls];
      for (const auto& [idx, c] : counts[d]) {
        term_counts[cls][idx] += c;
        totals[cls] += c;
      }
    }
    for (int cls = 0; cls < 2; ++cls) {
      b.log_prior[cls] = b.documents[cls] ? std::log(static_cast<double>(b.documents[cls]) / n)
                                          : -std::numeric_limits<double>::infinity();
      b.log_likelihood[cls].resize(V);
      const double denom = totals[cls] + alpha * static_cast<double>(V);
      for (std::size_t i = 0; i < V; ++i) b.log_likelihood[cls][i] = std::log((term_counts[cls][i] + alpha) / denom);
    }
    m.labels.push_back(std::move(b));
  }
  return m;
}

// P(label | doc) for every trained label, in model order. Out-of-vocabulary
// tokens carry no evidence; an empty document yields the priors.
inline std::vector<double> nb_posteriors(const NbModel& m, const textprep::TokenList& doc) {
  std::vector<std::size_t> idx;
  for (const auto& t : doc.tokens) {
    auto it = m.term_index.find(t);
    if (it != m.term_index.end()) idx.push_back(it->second);
  }
  std::vector<double> out;
  out.reserve(m.labels.size());
  for (const auto& b : m.labels) {
    std::array<double, 2> joint = b.log_prior;
    for (int cls = 0; cls < 2; ++cls)
      if (b.documents[cls])
        for (std::size_t i : idx) joint[cls] += b.log_likelihood[cls][i];
    const double evidence = detail::log_sum_exp(joint[0], joint[1]);
    out.push_back(std::exp(joint[1] - evidence));
  }
  return out;
}

// Labels with posterior >= tau; a tier where nothing clears tau gets its
// single most probable label (ties to the smaller id).
inline TierLabelSet predict_nb(const NbModel& m, const textprep::TokenList& doc, double tau = 0.5) {
  const auto post = nb_posteriors(m, doc);
  TierLabelSet out;
  std::array<std::optional<std::size_t>, kTiers> best{};
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    const auto& b = m.labels[i];
    if (post[i] >= tau) out.add(b.tier, b.label);
    auto& slot = best[static_cast<std::size_t>(b.tier - 1)];
    if (!slot || post[i] > post[*slot]) slot = i;
  }
  for (int t = 1; t <= kTiers; ++t) {
    const auto& slot = best[static_cast<std::size_t>(t - 1)];
    if (out.tier(t).empty() && slot) out.add(t, m.labels[*slot].label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-nearest-neighbour tier voting

struct KnnModel {
  vectorspace::TfIdfModel tfidf;
  std::vector<vectorspace::SparseVector> vectors;
  std::vector<TierLabelSet> labels;
};

inline KnnModel train_knn(const std::vector<textprep::TokenList>& docs, const std::vector<TierLabelSet>& labels) {
  if (docs.size() != labels.size()) throw InvalidArgument("train_knn: docs and labels differ in length");
  if (docs.empty()) throw InvalidArgument("train_knn: no training documents");
  KnnModel m;
  m.tfidf = vectorspace::fit(docs);
  m.vectors.reserve(docs.size());
  for (const auto& d : docs) m.vectors.push_back(m.tfidf.transform(d));
  m.labels = labels;
  return m;
}

struct KnnPrediction {
  TierLabelSet labels;
  std::vector<std::size_t> neighbors;  // training indices, nearest first
  std::size_t k_used = 0;              // k after clamping to the training size
};

// Keeps a label when more than half of the k neighbours carry it; a tier
// without any such label copies the nearest neighbour's labels.
inline KnnPrediction predict_knn_detailed(const KnnModel& m, const textprep::TokenList& doc, std::size_t k = 3) {
  if (k < 1) throw InvalidArgument("predict_knn: k must be at least 1");
  KnnPrediction p;
  p.k_used = std::min(k, m.vectors.size());
  const auto q = m.tfidf.transform(doc);
  std::vector<std::pair<double, std::size_t>> sims;
  sims.reserve(m.vectors.size());
  for (std::size_t i = 0; i < m.vectors.size(); ++i) sims.emplace_back(vectorspace::cosine_similarity(q, m.vectors[i]), i);
  std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(p.k_used), sims.end(),
                    [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  for (std::size_t i = 0; i < p.k_used; ++i) p.neighbors.push_back(sims[i].second);

  const std::size_t majority = p.k_used / 2 + 1;
  for (int t = 1; t <= kTiers; ++t) {
    std::map<std::string, std::size_t> votes;
    for (std::size_t nb : p.neighbors)
      for (const auto& id : m.labels[nb].tier(t)) ++votes[id];
    for (const auto& [id, v] : votes)
      if (v >= majority) p.labels.add(t, id);
    if (p.labels.tier(t).empty()) p.labels.tier(t) = m.labels[p.neighbors.front()].tier(t);
  }
  return p;
}

inline TierLabelSet predict_knn(const KnnModel& m, const textprep::TokenList& doc, std::size_t k = 3) {
  return predict_knn_detailed(m, doc, k).labels;
}

// ---------------------------------------------------------------------------
// Metrics

struct LabelCounts {
  std::size_t tp = 0, fp = 0, fn = 0;
  std::size_t support() const { return tp + fn; }
};

struct Prf {
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

// Zero denominators count as 0.
inline Prf prf(const LabelCounts& c) {
  Prf r;
  if (c.tp + c.fp) r.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn) r.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (r.precision + r.recall > 0.0) r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

struct MetricsReport {
  std::size_t samples = 0;
  double accuracy = 0.0;  // subset accuracy over all four tiers
  Prf macro, micro, weighted;
  std::map<std::string, LabelCounts> per_label;
  std::vector<std::string> zero_support;  // predicted-only labels left out of macro and weighted means

  std::array<double, 10> values() const {
    return {accuracy,        macro.precision, macro.recall, macro.f1,           micro.precision,
            micro.recall,    micro.f1,        weighted.precision, weighted.recall, weighted.f1};
  }
};

inline MetricsReport evaluate(const std::vector<TierLabelSet>& predictions, const std::vector<TierLabelSet>& truth) {
  if (predictions.size() != truth.size()) throw InvalidArgument("evaluate: predictions and truth differ in length");
  if (truth.empty()) throw InvalidArgument("evaluate: no samples");
  MetricsReport r;
  r.samples = truth.size();
  std::size_t exact = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predictions[i] == truth[i]) ++exact;
    const auto pred = predictions[i].all();
    const auto gold = truth[i].all();
    std::set<std::string> p(pred.begin(), pred.end()), g(gold.begin(), gold.end());
    for (const auto& id : p) (g.count(id) ? r.per_label[id].tp : r.per_label[id].fp) += 1;
    for (const auto& id : g)
      if (!p.count(id)) ++r.per_label[id].fn;
  }
  r.accuracy = static_cast<double>(exact) / static_cast<double>(truth.size());

  LabelCounts pooled;
  std::size_t counted = 0, total_support = 0;
  for (const auto& [id, c] : r.per_label) {
    pooled.tp += c.tp;
    pooled.fp += c.fp;
    pooled.fn += c.fn;
    if (c.support() == 0) {
      r.zero_support.push_back(id);
      continue;
    }
    const Prf s = prf(c);
    const auto w = static_cast<double>(c.support());
    ++counted;
    total_support += c.support();
    r.macro.precision += s.precision;
    r.macro.recall += s.recall;
    r.macro.f1 += s.f1;
    r.weighted.precision += w * s.precision;
    r.weighted.recall += w * s.recall;
    r.weighted.f1 += w * s.f1;
  }
  r.micro = prf(pooled);
  if (counted) {
    const auto n = static_cast<double>(counted), w = static_cast<double>(total_support);
    r.macro = {r.macro.precision / n, r.macro.recall / n, r.macro.f1 / n};
    r.weighted = {r.weighted.precision / w, r.weighted.recall / w, r.weighted.f1 / w};
  }
  return r;
}

inline json to_json(const MetricsReport& r) {
  auto prf_json = [](const Prf& p) { return json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}}; };
  json labels = json::object();
  for (const auto& [id, c] : r.per_label) {
    const Prf s = prf(c);
    labels[id] = {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"support", c.support()},
                  {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
  }
  return {{"samples", r.samples},       {"accuracy", r.accuracy},   {"macro", prf_json(r.macro)},
          {"micro", prf_json(r.micro)}, {"weighted", prf_json(r.weighted)}, {"per_label", labels},
          {"zero_support_labels", r.zero_support}};
}

inline std::string to_text(const MetricsReport& r) {
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof buf, "samples %zu  subset accuracy %.4f\n", r.samples, r.accuracy);
  out += buf;
  auto row = [&](const char* name, const Prf& p) {
    std::snprintf(buf, sizeof buf, "%-9s precision %.4f  recall %.4f  f1 %.4f\n", name, p.precision, p.recall, p.f1);
    out += buf;
  };
  row("macro", r.macro);
  row("micro", r.micro);
  row("weighted", r.weighted);
  if (!r.zero_support.empty())
    out += "note: " + std::to_string(r.zero_support.size()) + " predicted-only label(s) excluded from macro/weighted means\n";
  return out;
}

// ---------------------------------------------------------------------------
// Beat to tier-1 agreement

inline const std::vector<std::string>& default_excluded_beats() {
  static const std::vector<std::string> v{"Content Source Geo", "Content Language", "Content Source"};
  return v;
}

// beat name -> tier-1 labels
using BeatMapping = std::map<std::string, std::vector<std::string>>;

// CSV beat_name,tier1_label with one row per (beat, label) pair.
inline BeatMapping parse_beat_mapping(std::string_view text) {
  const auto table = csv::Table::from_text(text);
  BeatMapping out;
  if (table.empty()) return out;
  table.require({"beat_name", "tier1_label"});
  for (const auto& row : table.rows()) {
    const std::string beat(str::trim(table.cell(row, "beat_name")));
    const std::string label(str::trim(table.cell(row, "tier1_label")));
    if (beat.empty() || label.empty()) continue;
    auto& v = out[beat];
    if (std::find(v.begin(), v.end(), label) == v.end()) v.push_back(label);
  }
  return out;
}

inline BeatMapping load_beat_mapping(const std::string& path) { return parse_beat_mapping(str::read_file(path)); }

struct BeatTierReport {
  std::size_t correct = 0;
  std::size_t evaluated = 0;  // articles with at least one mappable beat
  std::vector<std::size_t> excluded;  // article positions without a mappable beat
  double accuracy() const { return evaluated ? static_cast<double>(correct) / static_cast<double>(evaluated) : 0.0; }
};

// An article counts as correct when any tier-1 label reached through its
// author's beats is among its predicted tier-1 labels.
inline BeatTierReport beat_tier_eval(const std::vector<std::vector<std::string>>& predicted_tier1,
                                     const std::vector<std::vector<std::string>>& author_beats,
                                     const BeatMapping& mapping,
                                     const std::vector<std::string>& excluded_beats = default_excluded_beats()) {
  if (predicted_tier1.size() != author_beats.size())
    throw InvalidArgument("beat_tier_eval: predictions and beats differ in length");
  const std::set<std::string> skip(excluded_beats.begin(), excluded_beats.end());
  BeatTierReport r;
  for (std::size_t i = 0; i < author_beats.size(); ++i) {
    std::set<std::string> candidates;
    for (const auto& beat : author_beats[i]) {
      if (skip.count(beat)) continue;
      auto it = mapping.find(beat);
      if (it == mapping.end()) continue;
      for (const auto& l : it->second)
        if (!skip.count(l)) candidates.insert(l);
    }
    if (candidates.empty()) {
      r.excluded.push_back(i);
      continue;
    }
    ++r.evaluated;
    if (std::any_of(predicted_tier1[i].begin(), predicted_tier1[i].end(),
                    [&](const std::string& p) { return candidates.count(p) > 0; }))
      ++r.correct;
  }
  return r;
}

}  // namespace pressmatch::taxonomy
