#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>

namespace fos {

/// record id -> assigned field ids
using LabelMap = std::map<std::string, std::set<std::string>>;

/// Precision/recall/F1 with the pooled counts they came from. Zero
/// denominators define the metric as 0.
struct PRF {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

PRF prf_from_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn);

/// Micro-averaged P/R/F1: tp/fp/fn pooled over all (record, field) pairs.
/// Gold and pred must cover the same record ids; a mismatch throws with
/// the symmetric difference listed.
PRF micro_prf(const LabelMap& gold, const LabelMap& pred);

/// Per-field P/R/F1 for every field appearing in gold or pred. Pooling the
/// per-class counts reproduces micro_prf exactly.
std::map<std::string, PRF> per_class_prf(const LabelMap& gold,
                                         const LabelMap& pred);

/// Reads the predictions wire format (JSONL {"id": ..., "labels": [...]}).
LabelMap read_label_map(std::istream& in);

/// Plain-text report: per-class table plus the micro row.
void write_metrics_report(const PRF& micro,
                          const std::map<std::string, PRF>& per_class,
                          std::ostream& out);

}  // namespace fos
