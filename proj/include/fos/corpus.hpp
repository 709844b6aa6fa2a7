#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fos/records.hpp"
#include "fos/taxonomy.hpp"

namespace fos {

enum class RecordFormat { jsonl, bibtex };

/// A recoverable per-entry problem; the surrounding entries still parse.
struct EntryError {
  std::size_t index = 0;  // 0-based entry index in input order
  std::size_t line = 0;   // 1-based line where the entry starts
  std::string message;
};

struct ParseOutcome {
  std::vector<PaperRecord> records;  // input order
  std::vector<EntryError> errors;
};

/// Parses bibliographic records. JSONL: one object per line with keys
/// id, title, abstract, year, venue, language, labels. BibTeX: entry key
/// becomes the id. Records without an id get one synthesized from the
/// entry position. Throws ParseError only for stream-level failures;
/// malformed entries are reported in `errors`.
ParseOutcome parse_records(std::istream& in, RecordFormat format);
ParseOutcome parse_records_file(const std::string& path, RecordFormat format);

/// Writes records in the canonical JSONL form (fixed key order: id, title,
/// abstract, year, venue, language, labels; labels sorted by field id).
/// Output is byte-stable for equal inputs.
void write_records_jsonl(const std::vector<PaperRecord>& records,
                         std::ostream& out);

/// Merges records whose normalized titles are equal: labels are unioned,
/// the earliest year wins, and the first non-empty abstract/venue/language
/// in (year, id) order is kept. Output is sorted by (year, normalized
/// title), so the result does not depend on input order.
std::vector<PaperRecord> deduplicate(const std::vector<PaperRecord>& records);

struct FilterConfig {
  /// A record is dropped when its normalized title starts with one of
  /// these (normalized) patterns.
  std::vector<std::string> non_research_title_patterns = {
      "preface",        "front matter",     "foreword",
      "editorial",      "proceedings of",   "author index",
      "subject index",  "table of contents", "book review",
      "obituary",       "list of participants",
  };
  bool drop_non_english = true;
  bool drop_all_leaf_labelings = true;
};

bool is_english_tag(const std::string& language);

/// Drops non-research records: title matches a non-research pattern, an
/// explicit language tag is present and not English, or the label set
/// equals the full leaf set of the taxonomy (the classifier predicted
/// every class possible). Idempotent; output preserves input order.
std::vector<PaperRecord> filter_research(const std::vector<PaperRecord>& records,
                                         const Taxonomy& taxonomy,
                                         const FilterConfig& config = {});

struct CorpusStats {
  std::size_t n_records = 0;
  std::optional<double> mean_labels_per_record;  // absent when n_records == 0
  std::map<std::string, std::int64_t> per_class_counts;
  std::optional<std::int64_t> min_class;
  std::optional<std::int64_t> max_class;
  std::optional<double> mean_class;
};

CorpusStats corpus_stats(const std::vector<PaperRecord>& records);

}  // namespace fos
