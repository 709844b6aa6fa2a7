#include "fos/weak_labeler.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "fos/csv.hpp"
#include "fos/error.hpp"
#include "fos/text.hpp"

namespace fos {

namespace {

// Whether keyword token `kw` matches text token `tok` under cfg, writing
// the edit distance actually used.
bool token_matches(const std::string& tok, const std::string& kw,
                   const MatcherConfig& cfg, int& distance_used) {
  const int d = levenshtein(tok, kw, cfg.fuzzy_max_distance);
  if (d <= cfg.fuzzy_max_distance) {
    distance_used = d;
    return true;
  }
  if (!cfg.token_boundary && tok.size() > kw.size() &&
      tok.find(kw) != std::string::npos) {
    distance_used = 0;  // containment counts as an exact inner match
    return true;
  }
  return false;
}

}  // namespace

MatchCount fuzzy_match_count(std::string_view text, std::string_view keyword,
                             const MatcherConfig& cfg) {
  MatchCount result;
  const std::vector<Token> kw_tokens = tokenize(keyword);
  if (kw_tokens.empty()) return result;
  const std::vector<Token> tokens = tokenize(text);
  const std::size_t m = kw_tokens.size();
  if (tokens.size() < m) return result;

  std::size_t i = 0;
  while (i + m <= tokens.size()) {
    int occurrence_distance = 0;
    bool ok = true;
    for (std::size_t k = 0; k < m; ++k) {
      int d = 0;
      if (!token_matches(tokens[i + k].text, kw_tokens[k].text, cfg, d)) {
        ok = false;
        break;
      }
      occurrence_distance = std::max(occurrence_distance, d);
    }
    if (ok) {
      result.count += 1;
      result.max_distance = std::max(result.max_distance, occurrence_distance);
      result.surfaces.emplace_back(
          text.substr(tokens[i].begin, tokens[i + m - 1].end - tokens[i].begin));
      i += m;  // non-overlapping
    } else {
      ++i;
    }
  }
  return result;
}

LabelingOutcome keyword_label(const PaperRecord& record,
                              const Taxonomy& taxonomy,
                              const MatcherConfig& cfg) {
  LabelingOutcome out;
  for (const FieldOfStudy& field : taxonomy.nodes()) {
    double weighted_total = 0.0;
    bool any_fuzzy = false;
    bool assigned_by_single_keyword = false;
    std::vector<MatchReport> field_reports;
    for (const std::string& kw : field.keywords) {
      const MatchCount in_title = fuzzy_match_count(record.title, kw, cfg);
      const MatchCount in_abstract = fuzzy_match_count(record.abstract, kw, cfg);
      if (in_title.count == 0 && in_abstract.count == 0) continue;
      const double weighted = cfg.title_weight * in_title.count +
                              cfg.abstract_weight * in_abstract.count;
      weighted_total += weighted;
      if (weighted >= cfg.occurrence_threshold) assigned_by_single_keyword = true;
      const int dist = std::max(in_title.max_distance, in_abstract.max_distance);
      if (dist > 0) any_fuzzy = true;
      MatchReport r;
      r.record_id = record.id;
      r.field_id = field.id;
      r.keyword = kw;
      r.surface = !in_title.surfaces.empty() ? in_title.surfaces.front()
                                             : in_abstract.surfaces.front();
      r.title_count = in_title.count;
      r.abstract_count = in_abstract.count;
      r.distance = dist;
      field_reports.push_back(std::move(r));
    }
    const bool assigned = cfg.per_keyword_threshold
                              ? assigned_by_single_keyword
                              : weighted_total >= cfg.occurrence_threshold;
    if (assigned) {
      out.labels.add(field.id, any_fuzzy ? Provenance::fuzzy_match
                                         : Provenance::keyword_match);
      out.reports.insert(out.reports.end(), field_reports.begin(),
                         field_reports.end());
    }
  }
  return out;
}

LabelSet propagate_ancestors(const LabelSet& labels, const Taxonomy& taxonomy) {
  LabelSet out = labels;
  for (const auto& [field_id, prov] : labels.entries()) {
    for (const std::string& a : taxonomy.ancestors(field_id)) {
      out.add(a, Provenance::ancestor_propagation);
    }
  }
  return out;
}

std::vector<PaperRecord> label_corpus(const std::vector<PaperRecord>& records,
                                      const Taxonomy& taxonomy,
                                      const MatcherConfig& cfg,
                                      bool propagate,
                                      std::vector<MatchReport>* reports) {
  std::vector<PaperRecord> out;
  out.reserve(records.size());
  for (const PaperRecord& r : records) {
    PaperRecord labeled = r;
    LabelSet keep;  // gold and imported labels survive relabeling
    for (const auto& [id, p] : r.labels.entries()) {
      if (p == Provenance::gold || p == Provenance::imported) keep.add(id, p);
    }
    LabelingOutcome heuristics = keyword_label(r, taxonomy, cfg);
    keep.merge(heuristics.labels);
    labeled.labels = propagate ? propagate_ancestors(keep, taxonomy) : keep;
    if (reports) {
      reports->insert(reports->end(), heuristics.reports.begin(),
                      heuristics.reports.end());
    }
    out.push_back(std::move(labeled));
  }
  return out;
}

ImportOutcome import_predictions(const std::vector<PaperRecord>& records,
                                 std::istream& in) {
  using json = nlohmann::json;
  std::map<std::string, std::set<std::string>> predictions;
  std::set<std::string> conflicts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad prediction line: ") + e.what(), lineno);
    }
    const std::string id = j.at("id").get<std::string>();
    std::set<std::string> fields;
    for (const auto& f : j.at("labels")) fields.insert(f.get<std::string>());
    auto [it, inserted] = predictions.emplace(id, fields);
    if (!inserted && it->second != fields) conflicts.insert(id);
  }
  if (!conflicts.empty()) {
    std::string msg = "conflicting duplicate predictions for ids:";
    for (const auto& id : conflicts) msg += " " + id;
    throw Error(msg);
  }

  ImportOutcome out;
  out.records = records;
  std::set<std::string> matched;
  for (PaperRecord& r : out.records) {
    auto it = predictions.find(r.id);
    if (it == predictions.end()) continue;
    matched.insert(r.id);
    for (const auto& f : it->second) r.labels.add(f, Provenance::imported);
  }
  for (const auto& [id, fields] : predictions) {
    if (!matched.count(id)) out.unmatched_ids.push_back(id);
  }
  return out;
}

void write_match_reports_csv(const std::vector<MatchReport>& reports,
                             std::ostream& out) {
  out << "record_id,field_id,keyword,surface,title_count,abstract_count,"
         "distance\n";
  for (const auto& r : reports) {
    out << csv_escape(r.record_id) << ',' << csv_escape(r.field_id) << ','
        << csv_escape(r.keyword) << ',' << csv_escape(r.surface) << ','
        << r.title_count << ',' << r.abstract_count << ',' << r.distance
        << '\n';
  }
}

}  // namespace fos
