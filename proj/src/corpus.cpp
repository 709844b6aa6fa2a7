#include "fos/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <ctime>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fos/error.hpp"
#include "fos/text.hpp"

namespace fos {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int current_year() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  return tm.tm_year + 1900;
}

std::string synthesize_id(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "r%06zu", index + 1);
  return buf;
}

// Validates shared record invariants; returns an error message or empty.
std::string check_record(const PaperRecord& r) {
  if (normalize_title(r.title).empty()) {
    return "missing or empty title";
  }
  const int max_year = current_year() + 1;
  if (r.year < 1900 || r.year > max_year) {
    return "year " + std::to_string(r.year) + " outside [1900, " +
           std::to_string(max_year) + "]";
  }
  return {};
}

void parse_labels_field(const json& j, LabelSet& out) {
  for (const auto& item : j) {
    if (item.is_string()) {
      out.add(item.get<std::string>(), Provenance::gold);
    } else if (item.is_object()) {
      const std::string id = item.at("id").get<std::string>();
      const Provenance p =
          item.contains("provenance")
              ? provenance_from_string(item.at("provenance").get<std::string>())
              : Provenance::gold;
      out.add(id, p);
    } else {
      throw Error("label entries must be strings or {id, provenance} objects");
    }
  }
}

ParseOutcome parse_jsonl(std::istream& in) {
  ParseOutcome out;
  std::string line;
  std::size_t lineno = 0;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t entry_index = index++;
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw Error("record line is not an object");
      PaperRecord r;
      r.id = j.contains("id") ? j.at("id").get<std::string>()
                              : synthesize_id(entry_index);
      if (j.contains("title") && !j.at("title").is_null()) {
        r.title = j.at("title").get<std::string>();
      }
      if (j.contains("abstract") && !j.at("abstract").is_null()) {
        r.abstract = j.at("abstract").get<std::string>();
      }
      if (!j.contains("year") || j.at("year").is_null()) {
        throw Error("missing year");
      }
      r.year = j.at("year").get<int>();
      if (j.contains("venue") && !j.at("venue").is_null()) {
        r.venue = j.at("venue").get<std::string>();
      }
      if (j.contains("language") && !j.at("language").is_null()) {
        r.language = j.at("language").get<std::string>();
      }
      if (j.contains("labels") && !j.at("labels").is_null()) {
        parse_labels_field(j.at("labels"), r.labels);
      }
      if (std::string err = check_record(r); !err.empty()) throw Error(err);
      out.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.errors.push_back({entry_index, lineno, e.what()});
    }
  }
  if (in.bad()) throw ParseError("read failure", lineno);
  return out;
}

// --- BibTeX ---------------------------------------------------------------

struct BibCursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char get() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
};

// Reads a braced value with nested braces, a quoted value, or a bare word.
std::string read_bib_value(BibCursor& c) {
  c.skip_ws();
  if (c.eof()) throw ParseError("unexpected end of input in entry", c.line);
  std::string out;
  if (c.peek() == '{') {
    c.get();
    int depth = 1;
    while (!c.eof()) {
      char ch = c.get();
      if (ch == '{') {
        ++depth;
      } else if (ch == '}') {
        if (--depth == 0) return out;
      } else {
        out.push_back(ch);
      }
    }
    throw ParseError("unbalanced braces in value", c.line);
  }
  if (c.peek() == '"') {
    c.get();
    int depth = 0;
    while (!c.eof()) {
      char ch = c.get();
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (ch == '"' && depth == 0) return out;
      out.push_back(ch);
    }
    throw ParseError("unterminated quoted value", c.line);
  }
  while (!c.eof() && c.peek() != ',' && c.peek() != '}' &&
         !std::isspace(static_cast<unsigned char>(c.peek()))) {
    out.push_back(c.get());
  }
  return out;
}

// Strips case-protection braces and collapses runs of whitespace.
std::string clean_bib_value(const std::string& raw) {
  std::string out;
  bool space = false;
  for (char ch : raw) {
    if (ch == '{' || ch == '}') continue;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(ch);
  }
  return out;
}

ParseOutcome parse_bibtex(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("read failure");
  const std::string text = buf.str();

  ParseOutcome out;
  BibCursor c{text};
  std::size_t index = 0;
  while (true) {
    while (!c.eof() && c.peek() != '@') c.get();
    if (c.eof()) break;
    const std::size_t entry_line = c.line;
    const std::size_t entry_index = index;
    c.get();  // '@'
    try {
      std::string type;
      while (!c.eof() && (std::isalpha(static_cast<unsigned char>(c.peek())))) {
        type.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(c.get()))));
      }
      c.skip_ws();
      if (c.eof() || c.peek() != '{') {
        throw ParseError("expected '{' after @" + type, c.line);
      }
      c.get();
      if (type == "comment" || type == "preamble" || type == "string") {
        int depth = 1;  // skip non-record entries wholesale
        while (!c.eof() && depth > 0) {
          char ch = c.get();
          if (ch == '{') ++depth;
          if (ch == '}') --depth;
        }
        continue;
      }
      ++index;
      c.skip_ws();
      std::string key;
      while (!c.eof() && c.peek() != ',' && c.peek() != '}' &&
             !std::isspace(static_cast<unsigned char>(c.peek()))) {
        key.push_back(c.get());
      }
      std::map<std::string, std::string> fields;
      c.skip_ws();
      while (!c.eof() && c.peek() == ',') {
        c.get();
        c.skip_ws();
        if (c.eof() || c.peek() == '}') break;
        std::string name;
        while (!c.eof() && c.peek() != '=' &&
               !std::isspace(static_cast<unsigned char>(c.peek()))) {
          name.push_back(static_cast<char>(
              std::tolower(static_cast<unsigned char>(c.get()))));
        }
        c.skip_ws();
        if (c.eof() || c.peek() != '=') {
          throw ParseError("expected '=' after field name '" + name + "'",
                           c.line);
        }
        c.get();
        fields[name] = clean_bib_value(read_bib_value(c));
        c.skip_ws();
      }
      if (c.eof() || c.peek() != '}') {
        throw ParseError("unterminated entry '" + key + "'", c.line);
      }
      c.get();

      PaperRecord r;
      r.id = key.empty() ? synthesize_id(entry_index) : key;
      r.title = fields.count("title") ? fields["title"] : "";
      r.abstract = fields.count("abstract") ? fields["abstract"] : "";
      if (fields.count("year")) {
        try {
          r.year = std::stoi(fields["year"]);
        } catch (const std::exception&) {
          throw Error("unparsable year '" + fields["year"] + "'");
        }
      }
      if (fields.count("journal")) {
        r.venue = fields["journal"];
      } else if (fields.count("booktitle")) {
        r.venue = fields["booktitle"];
      }
      if (fields.count("language")) r.language = fields["language"];
      if (std::string err = check_record(r); !err.empty()) throw Error(err);
      out.records.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;  // structural damage: resynchronization is not reliable
    } catch (const std::exception& e) {
      out.errors.push_back({entry_index, entry_line, e.what()});
      // skip to the next '@' and try the following entry
    }
  }
  return out;
}

}  // namespace

ParseOutcome parse_records(std::istream& in, RecordFormat format) {
  switch (format) {
    case RecordFormat::jsonl:
      return parse_jsonl(in);
    case RecordFormat::bibtex:
      return parse_bibtex(in);
  }
  throw Error("unknown record format");
}

ParseOutcome parse_records_file(const std::string& path, RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open record file: " + path);
  return parse_records(in, format);
}

void write_records_jsonl(const std::vector<PaperRecord>& records,
                         std::ostream& out) {
  for (const auto& r : records) {
    ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["abstract"] = r.abstract;
    j["year"] = r.year;
    if (!r.venue.empty()) j["venue"] = r.venue;
    if (!r.language.empty()) j["language"] = r.language;
    ordered_json labels = ordered_json::array();
    for (const auto& [id, p] : r.labels.entries()) {
      labels.push_back({{"id", id}, {"provenance", to_string(p)}});
    }
    j["labels"] = std::move(labels);
    out << j.dump() << "\n";
  }
}

std::vector<PaperRecord> deduplicate(const std::vector<PaperRecord>& records) {
  // Group by normalized title; members sorted by (year, id, abstract) so the
  // merge result does not depend on input order.
  std::map<std::string, std::vector<const PaperRecord*>> groups;
  for (const auto& r : records) groups[normalize_title(r.title)].push_back(&r);

  std::vector<std::pair<std::tuple<int, std::string>, PaperRecord>> merged;
  merged.reserve(groups.size());
  for (auto& [norm_title, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const PaperRecord* a, const PaperRecord* b) {
                return std::tie(a->year, a->id, a->abstract, a->venue) <
                       std::tie(b->year, b->id, b->abstract, b->venue);
              });
    PaperRecord m = *members.front();
    for (const PaperRecord* r : members) {
      m.labels.merge(r->labels);
      if (m.abstract.empty() && !r->abstract.empty()) m.abstract = r->abstract;
      if (m.venue.empty() && !r->venue.empty()) m.venue = r->venue;
      if (m.language.empty() && !r->language.empty()) m.language = r->language;
    }
    merged.emplace_back(std::make_tuple(m.year, norm_title), std::move(m));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<PaperRecord> out;
  out.reserve(merged.size());
  for (auto& [key, r] : merged) out.push_back(std::move(r));
  return out;
}

bool is_english_tag(const std::string& language) {
  std::string primary;
  for (char c : language) {
    if (c == '-' || c == '_') break;
    primary.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return primary == "en" || primary == "eng" || primary == "english";
}

std::vector<PaperRecord> filter_research(const std::vector<PaperRecord>& records,
                                         const Taxonomy& taxonomy,
                                         const FilterConfig& config) {
  std::vector<std::string> patterns;
  patterns.reserve(config.non_research_title_patterns.size());
  for (const auto& p : config.non_research_title_patterns) {
    patterns.push_back(normalize_title(p));
  }
  const std::set<std::string> all_leaves = taxonomy.leaves();

  std::vector<PaperRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const std::string norm = normalize_title(r.title);
    bool drop = false;
    for (const auto& p : patterns) {
      if (!p.empty() && norm.rfind(p, 0) == 0) {
        drop = true;
        break;
      }
    }
    if (!drop && config.drop_non_english && !r.language.empty() &&
        !is_english_tag(r.language)) {
      drop = true;
    }
    if (!drop && config.drop_all_leaf_labelings && !all_leaves.empty() &&
        r.labels.field_ids() == all_leaves) {
      drop = true;
    }
    if (!drop) out.push_back(r);
  }
  return out;
}

CorpusStats corpus_stats(const std::vector<PaperRecord>& records) {
  CorpusStats s;
  s.n_records = records.size();
  std::int64_t total_labels = 0;
  for (const auto& r : records) {
    total_labels += static_cast<std::int64_t>(r.labels.size());
    for (const auto& [id, p] : r.labels.entries()) s.per_class_counts[id] += 1;
  }
  if (s.n_records > 0) {
    s.mean_labels_per_record =
        static_cast<double>(total_labels) / static_cast<double>(s.n_records);
  }
  if (!s.per_class_counts.empty()) {
    std::int64_t mn = std::numeric_limits<std::int64_t>::max();
    std::int64_t mx = 0;
    std::int64_t sum = 0;
    for (const auto& [id, c] : s.per_class_counts) {
      mn = std::min(mn, c);
      mx = std::max(mx, c);
      sum += c;
    }
    s.min_class = mn;
    s.max_class = mx;
    s.mean_class =
        static_cast<double>(sum) / static_cast<double>(s.per_class_counts.size());
  }
  return s;
}

}  // namespace fos
