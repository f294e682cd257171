#include <algorithm>
#include <array>
#include <map>
#include <regex>
#include <set>

#include "eboca/validate/validate.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::validate {

namespace t = vocab::terms;
using rdf::Graph;
using rdf::Iri;

namespace {

enum class Category { Class, ObjectProperty, DatatypeProperty };

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Class: return "classes";
    case Category::ObjectProperty: return "object properties";
    case Category::DatatypeProperty: return "datatype properties";
  }
  return "";
}

bool in_eboca_namespace(const std::string& iri) { return iri.rfind(vocab::ns::eboca, 0) == 0; }

std::string local_name(const std::string& iri) {
  const std::size_t cut = iri.find_last_of("#/:");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

// P22 style buckets; the code style is tested first so SIO_000897 or C7057
// are not read as snake_case or camelCase.
enum class Style { Code, Camel, Separated, None };

Style style_of(const std::string& name) {
  static const std::regex code(R"(^[A-Za-z]*_?[0-9]+$)");
  static const std::regex camel(R"(^[A-Za-z][A-Za-z0-9]*$)");
  static const std::regex separated(R"(^[A-Za-z0-9]+([_-][A-Za-z0-9]+)+$)");
  if (std::regex_match(name, code)) return Style::Code;
  if (std::regex_match(name, camel) &&
      std::any_of(name.begin(), name.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    return Style::Camel;
  }
  if (std::regex_match(name, separated)) return Style::Separated;
  return Style::None;
}

std::string_view style_name(Style s) {
  switch (s) {
    case Style::Code: return "code";
    case Style::Camel: return "camelCase";
    case Style::Separated: return "snake/hyphen";
    case Style::None: return "other";
  }
  return "";
}

bool is_annotation(const Iri& p) { return p == t::rdfs_label || p == t::rdfs_comment; }

bool is_declaration(const rdf::Triple& triple) {
  return triple.predicate() == t::rdf_type &&
         (triple.object() == rdf::Term(t::owl_class) || triple.object() == rdf::Term(t::owl_object_property) ||
          triple.object() == rdf::Term(t::owl_datatype_property));
}

}  // namespace

std::vector<Finding> scan_pitfalls(const Graph& g, const ScanOptions& options) {
  std::map<std::string, std::set<Category>> declared;  // IRI -> categories
  const std::array<std::pair<const Iri*, Category>, 3> decls{{{&t::owl_class, Category::Class},
                                                              {&t::owl_object_property, Category::ObjectProperty},
                                                              {&t::owl_datatype_property, Category::DatatypeProperty}}};
  for (const auto& [cls, category] : decls) {
    for (const auto& triple : g.match({std::nullopt, t::rdf_type, *cls})) {
      const auto* iri = std::get_if<Iri>(&triple.subject());
      if (!iri || (!options.include_reused && !in_eboca_namespace(iri->str()))) continue;
      declared[iri->str()].insert(category);
    }
  }

  std::vector<Finding> out;
  auto add = [&](const char* code, Severity sev, const std::string& iri, std::string message) {
    out.push_back(Finding{code, sev, Iri(iri), std::move(message)});
  };

  for (const auto& [iri_text, categories] : declared) {
    const Iri iri(iri_text);
    const rdf::Term term = iri;

    bool connected = false;
    for (const auto& triple : g.match({term, std::nullopt, std::nullopt})) {
      if (is_declaration(triple)) continue;
      if (is_annotation(triple.predicate()) && rdf::is_literal(triple.object())) continue;
      connected = true;
      break;
    }
    connected = connected || !g.match({std::nullopt, std::nullopt, term}).empty() ||
                !g.match({std::nullopt, iri, std::nullopt}).empty();
    if (!connected) add("P04", Severity::Error, iri_text, "declared but not used in any axiom");

    if (g.match({term, t::rdfs_label, std::nullopt}).empty() && g.match({term, t::rdfs_comment, std::nullopt}).empty()) {
      add("P08", Severity::Error, iri_text, "has neither rdfs:label nor rdfs:comment");
    }

    const bool is_property = categories.count(Category::ObjectProperty) || categories.count(Category::DatatypeProperty);
    if (is_property) {
      const bool domain = !g.match({term, t::rdfs_domain, std::nullopt}).empty();
      const bool range = !g.match({term, t::rdfs_range, std::nullopt}).empty();
      if (!domain || !range) {
        add("P11", Severity::Error, iri_text,
            !domain && !range ? "property has neither domain nor range"
                              : (!domain ? "property has no rdfs:domain" : "property has no rdfs:range"));
      }
    }

    if (categories.count(Category::ObjectProperty) && g.match({term, t::owl_inverse_of, std::nullopt}).empty() &&
        g.match({std::nullopt, t::owl_inverse_of, term}).empty()) {
      add("P13", Severity::Warning, iri_text, "object property has no owl:inverseOf in either direction");
    }
  }

  for (const Category category : {Category::Class, Category::ObjectProperty, Category::DatatypeProperty}) {
    std::map<Style, std::vector<std::string>> buckets;
    for (const auto& [iri_text, categories] : declared) {
      if (!categories.count(category)) continue;
      const Style s = style_of(local_name(iri_text));
      if (s != Style::None) buckets[s].push_back(iri_text);  // declared is sorted, so buckets are too
    }
    if (buckets.size() < 2) continue;
    const auto smallest = std::min_element(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) {
      return a.second.size() < b.second.size();
    });
    std::string message = std::string(category_name(category)) + " mix naming styles:";
    for (const auto& [style, members] : buckets) {
      message += " " + std::string(style_name(style)) + "=" + std::to_string(members.size());
    }
    add("P22", Severity::Warning, smallest->second.front(), message);
  }

  sort_findings(out);
  return out;
}

}  // namespace eboca::validate
