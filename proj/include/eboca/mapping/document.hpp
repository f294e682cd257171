#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eboca/rdf/term.hpp"
#include "eboca/rdf/turtle.hpp"
#include "eboca/util/text.hpp"

namespace eboca::mapping {

enum class SourceFormat { Csv, Tsv, Json };

struct LogicalSource {
  std::string path;  // relative to the materialization base directory
  SourceFormat format = SourceFormat::Csv;
  std::optional<std::string> iterator;  // JSON only, e.g. "$.records[*]"

  friend bool operator==(const LogicalSource&, const LogicalSource&) = default;
};

// IRI template such as "https://w3id.org/eboca/resource/disease/{disease_id}".
// Slot values are percent-encoded on expansion.
class Template {
 public:
  // `text` is the already prefix-expanded template.
  static Template parse(std::string_view text);

  const std::vector<std::string>& slots() const noexcept { return slots_; }
  const std::string& text() const noexcept { return text_; }

  // Expands with `lookup(slot)`; returns nullopt as soon as one slot value is
  // missing or empty.
  template <typename Lookup>
  std::optional<std::string> expand(Lookup&& lookup) const;

 private:
  struct Piece {
    bool is_slot;
    std::string text;
  };
  std::string text_;
  std::vector<Piece> pieces_;
  std::vector<std::string> slots_;
};

struct ReferenceMap {
  std::string field;
  rdf::Iri datatype{std::string(rdf::kXsdString)};
  std::string language;  // non-empty => language-tagged literal
};

struct ConstantMap {
  rdf::Term value;
};

using TermMap = std::variant<Template, ReferenceMap, ConstantMap>;

struct PredicateObjectMap {
  rdf::Iri predicate;
  TermMap object;
};

// child.child_field == parent.parent_field  =>  (child subject, predicate, parent subject)
struct JoinCondition {
  rdf::Iri predicate;
  std::string parent_rule;
  std::string child_field;
  std::string parent_field;
};

struct TripleMapRule {
  std::string name;
  LogicalSource source;
  Template subject;
  std::optional<rdf::Iri> subject_class;
  std::vector<PredicateObjectMap> po_maps;
  std::vector<JoinCondition> joins;
  std::size_t line = 0;  // where the RULE keyword appeared

  // Every field the rule reads from its own source.
  std::vector<std::string> referenced_fields() const;
};

struct MappingDoc {
  rdf::PrefixMap prefixes;
  std::vector<TripleMapRule> rules;

  const TripleMapRule* find(std::string_view name) const;
};

// Parses the line-oriented mapping format (see docs/mapping-format.md).
// Checks syntax, prefixes, duplicate rule names, join parents and join
// cycles; throws MappingError naming the line and rule.
MappingDoc parse_mapping_doc(std::string_view text);

// As above, then verifies that every field named by a rule exists in the
// header of its CSV/TSV source under `base_dir`.
MappingDoc parse_mapping_doc(std::string_view text, const std::filesystem::path& base_dir);

// The header check on its own; throws MappingError naming rule and slot.
void check_source_headers(const MappingDoc& doc, const std::filesystem::path& base_dir);

template <typename Lookup>
std::optional<std::string> Template::expand(Lookup&& lookup) const {
  std::string out;
  out.reserve(text_.size() + 16);
  for (const auto& piece : pieces_) {
    if (!piece.is_slot) {
      out += piece.text;
      continue;
    }
    const std::string_view value = lookup(piece.text);
    if (value.empty()) return std::nullopt;
    out += util::percent_encode(value);
  }
  return out;
}

}  // namespace eboca::mapping
