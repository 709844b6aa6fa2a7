#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fos {

/// One field of study: a stable id, a human-readable name, and the search
/// keywords used by the weak labeler. Keywords are stored lowercase.
struct FieldOfStudy {
  std::string id;
  std::string display_name;
  std::vector<std::string> keywords;
  std::string description;  // optional, may be empty
};

/// A structural problem found by Taxonomy::validate. `subject` names the
/// node or edge at fault.
struct Violation {
  std::string code;     // e.g. "unknown-node", "cycle", "leaf-without-keywords"
  std::string subject;  // node id or "parent->child"
  std::string message;
};

/// Rooted multi-parent DAG of fields of study. Immutable after load; all
/// queries are const and safe for concurrent use.
class Taxonomy {
 public:
  Taxonomy() = default;
  Taxonomy(std::vector<FieldOfStudy> nodes,
           std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<FieldOfStudy>& nodes() const { return nodes_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  bool contains(const std::string& id) const;
  /// Throws NotFoundError for unknown ids.
  const FieldOfStudy& node(const std::string& id) const;

  /// Nodes with no parent.
  std::set<std::string> roots() const;
  /// Nodes with no children.
  std::set<std::string> leaves() const;
  /// Transitive closure over parent edges, excluding `id` itself.
  /// Throws NotFoundError for unknown ids.
  std::set<std::string> ancestors(const std::string& id) const;
  /// Direct parents of `id`. Throws NotFoundError for unknown ids.
  const std::set<std::string>& parents(const std::string& id) const;

  /// Empty iff all invariants hold: unique non-empty ids, edges reference
  /// existing nodes, acyclic, every node reachable from a root, every leaf
  /// carries at least one keyword.
  std::vector<Violation> validate() const;

 private:
  std::vector<FieldOfStudy> nodes_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::set<std::string>> parents_;
  std::map<std::string, std::set<std::string>> children_;
};

/// Parses the plain-text taxonomy format (see docs/FORMATS.md): `[node]`
/// blocks with `id`, `name`, `parents`, `keywords`, `description` keys.
/// Throws ParseError with the offending line; throws Error listing
/// violations if the parsed graph fails validate().
Taxonomy load_taxonomy(std::istream& in);
Taxonomy load_taxonomy_file(const std::string& path);

/// Writes the taxonomy back in its file format; load(save(t)) is
/// structurally identical to t.
void save_taxonomy(const Taxonomy& t, std::ostream& out);

}  // namespace fos
