#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fos {

/// How a label got onto a record. Order encodes merge priority: when the
/// same field arrives twice, the smaller enumerator wins.
enum class Provenance {
  gold = 0,
  imported = 1,
  keyword_match = 2,
  fuzzy_match = 3,
  ancestor_propagation = 4,
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Set of (field id, provenance) entries with at most one entry per field.
class LabelSet {
 public:
  /// Inserts or upgrades; an existing entry keeps the higher-priority
  /// provenance.
  void add(const std::string& field_id, Provenance p);
  void merge(const LabelSet& other);

  bool contains(const std::string& field_id) const;
  std::optional<Provenance> provenance(const std::string& field_id) const;

  std::set<std::string> field_ids() const;
  const std::map<std::string, Provenance>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const LabelSet&) const = default;

 private:
  std::map<std::string, Provenance> entries_;
};

/// One bibliographic item.
struct PaperRecord {
  std::string id;
  std::string title;
  std::string abstract;  // empty when the source had none
  int year = 0;
  std::string venue;     // optional
  std::string language;  // optional BCP-47-ish tag, e.g. "en", "de"
  LabelSet labels;

  bool operator==(const PaperRecord&) const = default;
};

}  // namespace fos
