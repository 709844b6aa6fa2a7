#include "fos/records.hpp"

#include "fos/error.hpp"

namespace fos {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::gold:
      return "gold";
    case Provenance::imported:
      return "imported";
    case Provenance::keyword_match:
      return "keyword-match";
    case Provenance::fuzzy_match:
      return "fuzzy-match";
    case Provenance::ancestor_propagation:
      return "ancestor-propagation";
  }
  return "unknown";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "gold") return Provenance::gold;
  if (s == "imported") return Provenance::imported;
  if (s == "keyword-match") return Provenance::keyword_match;
  if (s == "fuzzy-match") return Provenance::fuzzy_match;
  if (s == "ancestor-propagation") return Provenance::ancestor_propagation;
  throw Error("unknown provenance: " + s);
}

void LabelSet::add(const std::string& field_id, Provenance p) {
  auto [it, inserted] = entries_.emplace(field_id, p);
  if (!inserted && static_cast<int>(p) < static_cast<int>(it->second)) {
    it->second = p;
  }
}

void LabelSet::merge(const LabelSet& other) {
  for (const auto& [id, p] : other.entries_) add(id, p);
}

bool LabelSet::contains(const std::string& field_id) const {
  return entries_.count(field_id) > 0;
}

std::optional<Provenance> LabelSet::provenance(
    const std::string& field_id) const {
  auto it = entries_.find(field_id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> LabelSet::field_ids() const {
  std::set<std::string> out;
  for (const auto& [id, p] : entries_) out.insert(id);
  return out;
}

}  // namespace fos
