#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fos/records.hpp"
#include "fos/taxonomy.hpp"

namespace fos {

/// Knobs for the keyword/fuzzy matching heuristic.
struct MatcherConfig {
  /// A field is assigned when its keyword occurrences total at least this.
  int occurrence_threshold = 2;
  /// Per-token Levenshtein cap for fuzzy matches; 0 means exact only.
  int fuzzy_max_distance = 1;
  /// On: keyword tokens must match whole text tokens. Off: a keyword token
  /// also matches when contained inside a longer text token.
  bool token_boundary = true;
  /// When true, the threshold applies per keyword instead of summed over
  /// all keywords of a field.
  bool per_keyword_threshold = false;
  /// Relative weights of title vs abstract occurrences in the threshold sum.
  double title_weight = 1.0;
  double abstract_weight = 1.0;
};

/// One keyword's contribution to a field assignment.
struct MatchReport {
  std::string record_id;
  std::string field_id;
  std::string keyword;
  std::string surface;  // first matched span, original spelling
  int title_count = 0;
  int abstract_count = 0;
  int distance = 0;  // max per-token distance over all occurrences
};

struct MatchCount {
  int count = 0;
  std::vector<std::string> surfaces;  // one per occurrence, original spelling
  int max_distance = 0;
};

/// Counts non-overlapping occurrences of `keyword` in `text`. Every keyword
/// token must match a consecutive text token (in order) within
/// cfg.fuzzy_max_distance edits, case- and accent-insensitively.
MatchCount fuzzy_match_count(std::string_view text, std::string_view keyword,
                             const MatcherConfig& cfg);

struct LabelingOutcome {
  LabelSet labels;
  std::vector<MatchReport> reports;
};

/// Applies the keyword heuristic to one record: per-field keyword counts
/// over title and abstract are summed and compared to the threshold.
/// Provenance is keyword-match when every contributing occurrence was
/// exact, fuzzy-match otherwise.
LabelingOutcome keyword_label(const PaperRecord& record,
                              const Taxonomy& taxonomy,
                              const MatcherConfig& cfg);

/// Extends labels with every ancestor of every labeled field. Idempotent.
/// Throws NotFoundError for label ids missing from the taxonomy.
LabelSet propagate_ancestors(const LabelSet& labels, const Taxonomy& taxonomy);

/// Labels every record: gold/imported labels are kept, heuristic labels
/// are recomputed, ancestors are added when `propagate` is set. Record
/// order is preserved.
std::vector<PaperRecord> label_corpus(const std::vector<PaperRecord>& records,
                                      const Taxonomy& taxonomy,
                                      const MatcherConfig& cfg,
                                      bool propagate,
                                      std::vector<MatchReport>* reports = nullptr);

struct ImportOutcome {
  std::vector<PaperRecord> records;
  std::vector<std::string> unmatched_ids;  // prediction ids with no record
};

/// Reads predictions (JSONL {"id": ..., "labels": [...]}) and extends the
/// matching records with (field, imported) entries. Duplicate prediction
/// lines for one id are an error when their label lists differ.
ImportOutcome import_predictions(const std::vector<PaperRecord>& records,
                                 std::istream& in);

/// CSV with columns record_id, field_id, keyword, surface, title_count,
/// abstract_count, distance.
void write_match_reports_csv(const std::vector<MatchReport>& reports,
                             std::ostream& out);

}  // namespace fos
