#include "fos/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "fos/error.hpp"
#include "fos/text.hpp"

namespace fos {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::string item = trim(s.substr(start, i - start));
      if (!item.empty()) out.push_back(std::move(item));
      start = i + 1;
    }
  }
  return out;
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

}  // namespace

Taxonomy::Taxonomy(std::vector<FieldOfStudy> nodes,
                   std::vector<std::pair<std::string, std::string>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i].id, i);
    parents_[nodes_[i].id];
    children_[nodes_[i].id];
  }
  for (const auto& [parent, child] : edges_) {
    if (index_.count(parent) && index_.count(child)) {
      parents_[child].insert(parent);
      children_[parent].insert(child);
    }
  }
}

bool Taxonomy::contains(const std::string& id) const {
  return index_.count(id) > 0;
}

const FieldOfStudy& Taxonomy::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw NotFoundError("unknown field of study: " + id);
  return nodes_[it->second];
}

std::set<std::string> Taxonomy::roots() const {
  std::set<std::string> out;
  for (const auto& n : nodes_) {
    if (parents_.at(n.id).empty()) out.insert(n.id);
  }
  return out;
}

std::set<std::string> Taxonomy::leaves() const {
  std::set<std::string> out;
  for (const auto& n : nodes_) {
    if (children_.at(n.id).empty()) out.insert(n.id);
  }
  return out;
}

const std::set<std::string>& Taxonomy::parents(const std::string& id) const {
  auto it = parents_.find(id);
  if (it == parents_.end()) throw NotFoundError("unknown field of study: " + id);
  return it->second;
}

std::set<std::string> Taxonomy::ancestors(const std::string& id) const {
  if (!contains(id)) throw NotFoundError("unknown field of study: " + id);
  std::set<std::string> out;
  std::vector<std::string> stack{id};
  while (!stack.empty()) {
    const std::string cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& p : parents_.at(cur)) {
      if (out.insert(p).second) stack.push_back(p);
    }
  }
  out.erase(id);  // a cycle through id must not list id as its own ancestor
  return out;
}

std::vector<Violation> Taxonomy::validate() const {
  std::vector<Violation> v;

  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (n.id.empty()) {
      v.push_back({"empty-id", n.display_name, "node with empty id"});
      continue;
    }
    if (!seen.insert(n.id).second) {
      v.push_back({"duplicate-id", n.id, "duplicate node id " + n.id});
    }
    for (const auto& kw : n.keywords) {
      if (trim(kw).empty()) {
        v.push_back({"empty-keyword", n.id, "empty keyword on node " + n.id});
      }
    }
  }

  for (const auto& [parent, child] : edges_) {
    for (const auto& endpoint : {parent, child}) {
      if (!index_.count(endpoint)) {
        v.push_back({"unknown-node", parent + "->" + child,
                     "unknown node " + endpoint});
      }
    }
  }

  // Cycle detection: iterative DFS with colors over child edges.
  std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
  for (const auto& n : nodes_) color[n.id] = 0;
  std::function<bool(const std::string&, std::vector<std::string>&)> dfs =
      [&](const std::string& u, std::vector<std::string>& path) -> bool {
    color[u] = 1;
    path.push_back(u);
    for (const auto& c : children_.at(u)) {
      if (color[c] == 1) {
        auto at = std::find(path.begin(), path.end(), c);
        std::string names;
        for (auto it = at; it != path.end(); ++it) {
          if (!names.empty()) names += ",";
          names += *it;
        }
        v.push_back({"cycle", names, "cycle through " + names});
        path.pop_back();
        color[u] = 2;
        return true;
      }
      if (color[c] == 0 && dfs(c, path)) {
        path.pop_back();
        color[u] = 2;
        return true;  // report at most one cycle per DFS tree
      }
    }
    path.pop_back();
    color[u] = 2;
    return false;
  };
  bool has_cycle = false;
  for (const auto& n : nodes_) {
    if (color[n.id] == 0) {
      std::vector<std::string> path;
      has_cycle = dfs(n.id, path) || has_cycle;
    }
  }

  // Reachability from roots (only meaningful in an acyclic graph; a cycle
  // with no entry point is already reported above).
  if (!has_cycle) {
    std::set<std::string> reached = roots();
    std::vector<std::string> stack(reached.begin(), reached.end());
    while (!stack.empty()) {
      const std::string cur = std::move(stack.back());
      stack.pop_back();
      for (const auto& c : children_.at(cur)) {
        if (reached.insert(c).second) stack.push_back(c);
      }
    }
    for (const auto& n : nodes_) {
      if (!reached.count(n.id)) {
        v.push_back({"unreachable", n.id,
                     "node " + n.id + " not reachable from any root"});
      }
    }
  }

  for (const auto& id : leaves()) {
    if (node(id).keywords.empty()) {
      v.push_back({"leaf-without-keywords", id,
                   "leaf node " + id + " has no keywords"});
    }
  }

  return v;
}

Taxonomy load_taxonomy(std::istream& in) {
  std::vector<FieldOfStudy> nodes;
  std::vector<std::pair<std::string, std::string>> edges;

  FieldOfStudy cur;
  std::vector<std::string> cur_parents;
  bool in_block = false;
  std::size_t lineno = 0;

  auto flush = [&]() {
    if (!in_block) return;
    if (cur.id.empty()) {
      throw ParseError("node block without id", lineno);
    }
    for (const auto& p : cur_parents) edges.emplace_back(p, cur.id);
    nodes.push_back(std::move(cur));
    cur = FieldOfStudy{};
    cur_parents.clear();
    in_block = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[node]") {
      flush();
      in_block = true;
      continue;
    }
    if (t.front() == '[') {
      throw ParseError("unknown section '" + t + "'", lineno);
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value', got '" + t + "'", lineno);
    }
    if (!in_block) {
      throw ParseError("key outside of a [node] block", lineno);
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "id") {
      cur.id = value;
    } else if (key == "name") {
      cur.display_name = value;
    } else if (key == "parents") {
      cur_parents = split_csv_list(value);
    } else if (key == "keywords") {
      cur.keywords.clear();
      for (auto& kw : split_csv_list(value)) {
        cur.keywords.push_back(to_lower(std::move(kw)));
      }
    } else if (key == "description") {
      cur.description = value;
    } else {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  flush();

  Taxonomy t(std::move(nodes), std::move(edges));
  const auto violations = t.validate();
  if (!violations.empty()) {
    std::string msg = "taxonomy validation failed:";
    for (const auto& v : violations) msg += "\n  [" + v.code + "] " + v.message;
    throw Error(msg);
  }
  return t;
}

Taxonomy load_taxonomy_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open taxonomy file: " + path);
  return load_taxonomy(in);
}

void save_taxonomy(const Taxonomy& t, std::ostream& out) {
  std::map<std::string, std::vector<std::string>> parent_lists;
  for (const auto& [parent, child] : t.edges()) {
    parent_lists[child].push_back(parent);
  }
  for (const auto& n : t.nodes()) {
    out << "[node]\n";
    out << "id = " << n.id << "\n";
    out << "name = " << n.display_name << "\n";
    auto& ps = parent_lists[n.id];
    out << "parents = ";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) out << ", ";
      out << ps[i];
    }
    out << "\n";
    out << "keywords = ";
    for (std::size_t i = 0; i < n.keywords.size(); ++i) {
      if (i) out << ", ";
      out << n.keywords[i];
    }
    out << "\n";
    if (!n.description.empty()) out << "description = " << n.description << "\n";
    out << "\n";
  }
}

}  // namespace fos
