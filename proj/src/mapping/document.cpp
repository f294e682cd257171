#include "eboca/mapping/document.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "eboca/error.hpp"
#include "eboca/mapping/sources.hpp"
#include "eboca/rdf/term_syntax.hpp"
#include "eboca/vocab/catalog.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::mapping {

Template Template::parse(std::string_view text) {
  Template t;
  t.text_ = std::string(text);
  std::string probe;  // the template with every slot filled, for IRI validation
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t open = text.find('{', i);
    const std::size_t close_stray = text.find('}', i);
    if (close_stray < open) throw InvalidArgument("unbalanced '}' in template '" + t.text_ + "'");
    if (open == std::string_view::npos) {
      t.pieces_.push_back({false, std::string(text.substr(i))});
      probe += text.substr(i);
      break;
    }
    if (open > i) {
      t.pieces_.push_back({false, std::string(text.substr(i, open - i))});
      probe += text.substr(i, open - i);
    }
    const std::size_t close = text.find('}', open);
    if (close == std::string_view::npos) throw InvalidArgument("unterminated slot in template '" + t.text_ + "'");
    const std::string slot(text.substr(open + 1, close - open - 1));
    if (slot.empty() || slot.find('{') != std::string::npos) {
      throw InvalidArgument("empty or nested slot in template '" + t.text_ + "'");
    }
    t.pieces_.push_back({true, slot});
    if (std::find(t.slots_.begin(), t.slots_.end(), slot) == t.slots_.end()) t.slots_.push_back(slot);
    probe += "x";
    i = close + 1;
  }
  if (!rdf::Iri::is_valid(probe)) throw InvalidArgument("template '" + t.text_ + "' does not produce an absolute IRI");
  return t;
}

std::vector<std::string> TripleMapRule::referenced_fields() const {
  std::vector<std::string> out = subject.slots();
  for (const auto& po : po_maps) {
    if (const auto* tmpl = std::get_if<Template>(&po.object)) {
      out.insert(out.end(), tmpl->slots().begin(), tmpl->slots().end());
    } else if (const auto* ref = std::get_if<ReferenceMap>(&po.object)) {
      out.push_back(ref->field);
    }
  }
  for (const auto& join : joins) out.push_back(join.child_field);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const TripleMapRule* MappingDoc::find(std::string_view name) const {
  for (const auto& rule : rules) {
    if (rule.name == name) return &rule;
  }
  return nullptr;
}

namespace {

bool is_rule_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

class DocParser {
 public:
  explicit DocParser(std::string_view text) : text_(text) { doc_.prefixes = vocab::standard_prefixes(); }

  MappingDoc run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      parse_line(text_.substr(start, end - start));
      start = end + 1;
    }
    close_rule();
    check_joins();
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::string where = "line " + std::to_string(line_no_) + ": ";
    if (current_) where += "rule '" + current_->name + "': ";
    throw MappingError(where + message);
  }

  void parse_line(std::string_view line) {
    std::vector<std::string> tokens;
    try {
      tokens = rdf::tokenize(line);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    if (tokens.empty()) return;
    const std::string& keyword = tokens[0];
    try {
      if (keyword == "PREFIX") {
        parse_prefix(tokens);
      } else if (keyword == "RULE") {
        parse_rule(tokens);
      } else {
        if (!current_) fail(keyword + " outside of a RULE");
        if (keyword == "SOURCE") {
          parse_source(tokens);
        } else if (keyword == "SUBJECT") {
          parse_subject(tokens);
        } else if (keyword == "PO") {
          parse_po(tokens);
        } else if (keyword == "JOIN") {
          parse_join(tokens);
        } else {
          fail("unknown directive '" + keyword + "'");
        }
      }
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }

  void expect_count(const std::vector<std::string>& tokens, std::size_t n, const char* usage) const {
    if (tokens.size() != n) fail(std::string("expected: ") + usage);
  }

  void parse_prefix(const std::vector<std::string>& tokens) {
    expect_count(tokens, 3, "PREFIX name: <namespace>");
    const std::string& name = tokens[1];
    if (name.empty() || name.back() != ':') fail("prefix name must end with ':'");
    const std::string ns = rdf::expand_iri_text(tokens[2], {});
    if (tokens[2].front() != '<' || !rdf::Iri::is_valid(ns)) fail("prefix namespace must be an absolute <IRI>");
    doc_.prefixes[name.substr(0, name.size() - 1)] = ns;
  }

  void parse_rule(const std::vector<std::string>& tokens) {
    close_rule();
    expect_count(tokens, 2, "RULE name");
    if (!is_rule_name(tokens[1])) fail("rule names use letters, digits, '_' and '-'");
    if (!names_.insert(tokens[1]).second) fail("duplicate rule name '" + tokens[1] + "'");
    doc_.rules.emplace_back();
    current_ = &doc_.rules.back();
    current_->name = tokens[1];
    current_->line = line_no_;
    has_source_ = has_subject_ = false;
  }

  void parse_source(const std::vector<std::string>& tokens) {
    if (has_source_) fail("SOURCE given twice");
    if (tokens.size() < 3) fail("expected: SOURCE csv|tsv|json path [ITERATOR expr]");
    LogicalSource& src = current_->source;
    const std::string& format = tokens[1];
    if (format == "csv") src.format = SourceFormat::Csv;
    else if (format == "tsv") src.format = SourceFormat::Tsv;
    else if (format == "json") src.format = SourceFormat::Json;
    else fail("unknown source format '" + format + "'");
    src.path = tokens[2];
    if (src.path.size() >= 2 && src.path.front() == '"') {
      src.path = std::get<rdf::Literal>(rdf::parse_term_token(src.path, {})).lexical();
    }
    if (src.format == SourceFormat::Json) {
      if (tokens.size() != 5 || tokens[3] != "ITERATOR") fail("JSON sources need ITERATOR");
      src.iterator = tokens[4];
    } else if (tokens.size() != 3) {
      fail("ITERATOR is only allowed for JSON sources");
    }
    has_source_ = true;
  }

  Template parse_template(const std::string& token) {
    return Template::parse(rdf::expand_iri_text(token, doc_.prefixes));
  }

  rdf::Iri parse_predicate(const std::string& token) {
    if (token == "a") return vocab::terms::rdf_type;
    return rdf::parse_iri_token(token, doc_.prefixes);
  }

  void parse_subject(const std::vector<std::string>& tokens) {
    if (has_subject_) fail("SUBJECT given twice");
    if (tokens.size() != 2 && !(tokens.size() == 4 && tokens[2] == "CLASS")) {
      fail("expected: SUBJECT template [CLASS iri]");
    }
    current_->subject = parse_template(tokens[1]);
    if (tokens.size() == 4) current_->subject_class = rdf::parse_iri_token(tokens[3], doc_.prefixes);
    has_subject_ = true;
  }

  void parse_po(const std::vector<std::string>& tokens) {
    if (tokens.size() < 4) fail("expected: PO predicate TEMPLATE t | REF field [datatype|@lang] | CONST term");
    rdf::Iri predicate = parse_predicate(tokens[1]);
    const std::string& kind = tokens[2];
    if (kind == "TEMPLATE") {
      expect_count(tokens, 4, "PO predicate TEMPLATE template");
      current_->po_maps.push_back({std::move(predicate), parse_template(tokens[3])});
    } else if (kind == "REF") {
      if (tokens.size() > 5) fail("expected: PO predicate REF field [datatype|@lang]");
      ReferenceMap ref;
      ref.field = tokens[3];
      if (tokens.size() == 5) {
        const std::string& qualifier = tokens[4];
        if (qualifier.front() == '@') {
          ref.language = qualifier.substr(1);
          if (!rdf::is_valid_language_tag(ref.language)) fail("invalid language tag '" + qualifier + "'");
        } else {
          ref.datatype = rdf::parse_iri_token(qualifier, doc_.prefixes);
          if (ref.datatype.str() == rdf::kRdfLangString) fail("use @lang instead of rdf:langString");
        }
      }
      current_->po_maps.push_back({std::move(predicate), std::move(ref)});
    } else if (kind == "CONST") {
      expect_count(tokens, 4, "PO predicate CONST term");
      current_->po_maps.push_back({std::move(predicate), ConstantMap{rdf::parse_term_token(tokens[3], doc_.prefixes)}});
    } else {
      fail("expected TEMPLATE, REF or CONST after the predicate");
    }
  }

  void parse_join(const std::vector<std::string>& tokens) {
    if (tokens.size() != 6 || tokens[4] != "=") fail("expected: JOIN predicate parent_rule child_field = parent_field");
    current_->joins.push_back({parse_predicate(tokens[1]), tokens[2], tokens[3], tokens[5]});
  }

  void close_rule() {
    if (!current_) return;
    if (!has_source_) fail("missing SOURCE");
    if (!has_subject_) fail("missing SUBJECT");
    current_ = nullptr;
  }

  void check_joins() const {
    std::map<std::string, std::vector<std::string>> edges;
    for (const auto& rule : doc_.rules) {
      for (const auto& join : rule.joins) {
        if (!doc_.find(join.parent_rule)) {
          throw MappingError("rule '" + rule.name + "': JOIN references unknown parent rule '" + join.parent_rule + "'");
        }
        edges[rule.name].push_back(join.parent_rule);
      }
    }
    // Depth-first search with three colours.
    std::map<std::string, int> colour;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
      colour[name] = 1;
      for (const auto& parent : edges[name]) {
        if (colour[parent] == 1) {
          throw MappingError("rule '" + name + "': cyclic JOIN through rule '" + parent + "'");
        }
        if (colour[parent] == 0) visit(parent);
      }
      colour[name] = 2;
    };
    for (const auto& rule : doc_.rules) {
      if (colour[rule.name] == 0) visit(rule.name);
    }
  }

  std::string_view text_;
  MappingDoc doc_;
  TripleMapRule* current_ = nullptr;
  bool has_source_ = false;
  bool has_subject_ = false;
  std::set<std::string> names_;
  std::size_t line_no_ = 0;
};

}  // namespace

void check_source_headers(const MappingDoc& doc, const std::filesystem::path& base_dir) {
  std::map<std::string, std::vector<std::string>> headers;
  auto header_of = [&](const TripleMapRule& rule) -> const std::vector<std::string>* {
    if (rule.source.format == SourceFormat::Json) return nullptr;
    auto it = headers.find(rule.name);
    if (it == headers.end()) it = headers.emplace(rule.name, read_header(rule.source, base_dir)).first;
    return &it->second;
  };
  auto require = [](const TripleMapRule& rule, const std::vector<std::string>& header, const std::string& field) {
    if (std::find(header.begin(), header.end(), field) == header.end()) {
      throw MappingError("rule '" + rule.name + "': slot '" + field + "' is not a column of " + rule.source.path);
    }
  };
  for (const auto& rule : doc.rules) {
    if (const auto* header = header_of(rule)) {
      for (const auto& field : rule.referenced_fields()) require(rule, *header, field);
    }
    for (const auto& join : rule.joins) {
      const TripleMapRule& parent = *doc.find(join.parent_rule);
      if (const auto* header = header_of(parent)) require(parent, *header, join.parent_field);
    }
  }
}

MappingDoc parse_mapping_doc(std::string_view text) { return DocParser(text).run(); }

MappingDoc parse_mapping_doc(std::string_view text, const std::filesystem::path& base_dir) {
  MappingDoc doc = parse_mapping_doc(text);
  check_source_headers(doc, base_dir);
  return doc;
}

}  // namespace eboca::mapping
