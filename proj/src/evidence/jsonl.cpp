#include <json.hpp>

#include "eboca/error.hpp"
#include "eboca/evidence/annotator.hpp"

namespace eboca::evidence {

namespace {

using json = nlohmann::json;

class RecordReader {
 public:
  explicit RecordReader(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(line_, field, message);
  }

  const json& member(const json& obj, const char* field) const {
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) fail(field, "missing required field");
    return *it;
  }

  std::string string(const json& obj, const char* field) const {
    const json& v = member(obj, field);
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> optional_string(const json& obj, const char* field) const {
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) fail(field, "expected a string");
    return it->get<std::string>();
  }

  std::optional<double> optional_number(const json& obj, const char* field) const {
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) fail(field, "expected a number");
    return it->get<double>();
  }

  const json& object(const json& obj, const char* field) const {
    const json& v = member(obj, field);
    if (!v.is_object()) fail(field, "expected an object");
    return v;
  }

  ParagraphExtraction read(const json& root) const {
    if (!root.is_object()) fail("", "each line must be a JSON object");
    ParagraphExtraction p;
    p.paragraph_id = string(root, "paragraph_id");
    if (p.paragraph_id.empty()) fail("paragraph_id", "must not be empty");
    p.text = optional_string(root, "text").value_or("");
    p.section = optional_string(root, "section");

    const json& e = object(root, "expression");
    p.expression.expression_id = string(e, "expression_id");
    if (p.expression.expression_id.empty()) fail("expression_id", "must not be empty");
    p.expression.title = optional_string(e, "title");
    p.expression.abstract = optional_string(e, "abstract");
    if (auto url = optional_string(e, "url")) {
      p.expression.url = rdf::Iri::try_make(*url);
      if (!p.expression.url) fail("url", "not an absolute IRI");
    }

    const json& x = object(root, "extractor");
    p.extractor.name = string(x, "name");
    if (p.extractor.name.empty()) fail("name", "extractor name must not be empty");
    p.extractor.version = optional_string(x, "version").value_or("");
    p.extractor.agent = optional_string(x, "agent");

    if (auto created = optional_string(root, "created_on")) {
      p.created_on = util::Date::try_parse(*created);
      if (!p.created_on) fail(*created, "created_on is not a YYYY-MM-DD date");
    }

    auto it = root.find("entities");
    if (it != root.end() && !it->is_null()) {
      if (!it->is_array()) fail("entities", "expected an array");
      for (const json& m : *it) {
        if (!m.is_object()) fail("entities", "each entity must be an object");
        EntityMention mention;
        mention.surface = optional_string(m, "surface").value_or("");
        mention.normalized_id = optional_string(m, "normalized_id").value_or("");
        const std::string kind = string(m, "kind");
        auto parsed = vocab::parse_concept_kind(kind);
        if (!parsed || (*parsed != vocab::ConceptKind::Disease && *parsed != vocab::ConceptKind::Drug &&
                        *parsed != vocab::ConceptKind::Gene)) {
          fail(kind, "entity kind must be Disease, Drug or Gene");
        }
        mention.kind = *parsed;
        mention.confidence = optional_number(m, "confidence");
        if (mention.confidence && !(*mention.confidence >= 0.0 && *mention.confidence <= 1.0)) {
          fail("confidence", "must lie in [0, 1]");
        }
        p.entities.push_back(std::move(mention));
      }
    }
    return p;
  }

 private:
  std::size_t line_;
};

}  // namespace

std::vector<ParagraphExtraction> parse_jsonl(std::string_view text) {
  std::vector<ParagraphExtraction> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json root;
    try {
      root = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string(line.substr(0, 40)), "malformed JSON at byte " + std::to_string(e.byte));
    }
    out.push_back(RecordReader(line_no).read(root));
  }
  return out;
}

}  // namespace eboca::evidence
