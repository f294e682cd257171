#include <algorithm>
#include <map>
#include <set>

#include "eboca/util/date.hpp"
#include "eboca/util/text.hpp"
#include "eboca/validate/validate.hpp"
#include "eboca/vocab/model.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::validate {

namespace t = vocab::terms;
using rdf::Graph;
using rdf::Term;
using vocab::AssociationKind;
using vocab::ConceptKind;

namespace {

Finding error(std::string code, const Term& subject, std::string message) {
  return Finding{std::move(code), Severity::Error, subject, std::move(message)};
}

std::string show(const Term& t) { return rdf::to_ntriples(t); }

std::vector<Term> objects(const Graph& g, const Term& s, const rdf::Iri& p) {
  std::vector<Term> out;
  for (const auto& triple : g.match({s, p, std::nullopt})) out.push_back(triple.object());
  return out;
}

std::set<ConceptKind> concept_kinds(const Graph& g, const Term& node) {
  std::set<ConceptKind> out;
  for (const auto& type : objects(g, node, t::rdf_type)) {
    if (const auto* iri = std::get_if<rdf::Iri>(&type)) {
      if (auto k = vocab::concept_kind_of_class(iri->str())) out.insert(*k);
    }
  }
  return out;
}

void check_associations(const Graph& g, std::vector<Finding>& out) {
  // node -> association kinds it is typed with
  std::map<std::string, std::pair<Term, std::set<AssociationKind>>> nodes;
  for (const auto kind : vocab::all_association_kinds()) {
    for (const auto& typing : g.match({std::nullopt, t::rdf_type, vocab::class_of(kind)})) {
      auto& entry = nodes.try_emplace(show(typing.subject()), typing.subject(), std::set<AssociationKind>{}).first->second;
      entry.second.insert(kind);
    }
  }
  for (const auto& [key, entry] : nodes) {
    const auto& [node, kinds] = entry;
    std::set<std::string> seen;
    std::vector<Term> endpoints;
    for (const auto& triple : g.match({node, std::nullopt, std::nullopt})) {
      if (!vocab::is_endpoint_predicate(triple.predicate().str())) continue;
      if (seen.insert(show(triple.object())).second) endpoints.push_back(triple.object());
    }
    if (endpoints.size() != 2) {
      out.push_back(error("E1", node, "association has " + std::to_string(endpoints.size()) +
                                          " distinct endpoint links, expected 2"));
      continue;
    }
    const auto a = concept_kinds(g, endpoints[0]);
    const auto b = concept_kinds(g, endpoints[1]);
    if (a.empty() || b.empty()) {
      out.push_back(error("E1", node, "endpoint " + show(a.empty() ? endpoints[0] : endpoints[1]) +
                                          " is not typed with a concept class"));
      continue;
    }
    bool compatible = false;
    for (const auto kind : kinds) {
      for (const auto ka : a) {
        for (const auto kb : b) compatible = compatible || vocab::endpoints_compatible(kind, ka, kb);
      }
    }
    if (!compatible) {
      const auto [x, y] = vocab::endpoint_kinds(*kinds.begin());
      out.push_back(error("E1", node, std::string(vocab::name(*kinds.begin())) + " expects " +
                                          std::string(vocab::name(x)) + " and " + std::string(vocab::name(y)) +
                                          " endpoints, found " + std::string(vocab::name(*a.begin())) + " and " +
                                          std::string(vocab::name(*b.begin()))));
    }
  }
}

bool numeric_datatype(const rdf::Iri& dt) {
  return dt == t::xsd_double || dt == t::xsd_decimal || dt == t::xsd_float || dt == t::xsd_integer;
}

void check_unit_value(const Term& subject, const Term& value, const char* what, std::vector<Finding>& out) {
  const auto* lit = std::get_if<rdf::Literal>(&value);
  double v = 0;
  if (!lit || lit->has_language() || !numeric_datatype(lit->datatype()) || !util::parse_double(lit->lexical(), v)) {
    out.push_back(error("E2", subject, std::string(what) + " " + show(value) + " is not a numeric literal"));
  } else if (v < 0.0 || v > 1.0) {
    out.push_back(error("E2", subject, std::string(what) + " " + lit->lexical() + " is outside [0, 1]"));
  }
}

void check_values(const Graph& g, std::vector<Finding>& out) {
  for (const auto& typing : g.match({std::nullopt, t::rdf_type, t::score})) {
    for (const auto& value : objects(g, typing.subject(), t::has_value)) {
      check_unit_value(typing.subject(), value, "score", out);
    }
  }
  for (const auto& triple : g.match({std::nullopt, t::confidence, std::nullopt})) {
    check_unit_value(triple.subject(), triple.object(), "confidence", out);
  }
}

void check_evidence(const Graph& g, std::vector<Finding>& out) {
  std::map<std::string, Term> nodes;
  for (const auto* cls : {&t::evidence, &t::computational_inference, &t::documented_statement}) {
    for (const auto& typing : g.match({std::nullopt, t::rdf_type, *cls})) {
      nodes.emplace(show(typing.subject()), typing.subject());
    }
  }
  for (const auto& [key, node] : nodes) {
    const bool inferred = g.contains(rdf::Triple(node, t::rdf_type, t::computational_inference));
    const bool documented = g.contains(rdf::Triple(node, t::rdf_type, t::documented_statement));
    if (inferred == documented) {
      out.push_back(error("E3", node, inferred ? "evidence has both ECO kinds" : "evidence has no ECO kind"));
    } else if (documented && g.match({node, t::derived_from, std::nullopt}).empty()) {
      out.push_back(error("E3", node, "documented statement evidence without pav:derivedFrom"));
    }
  }
}

bool valid_date_literal(const rdf::Literal& lit) {
  static const rdf::Iri xsd_date_time("http://www.w3.org/2001/XMLSchema#dateTime");
  if (lit.datatype() == xsd_date_time) {
    const auto& s = lit.lexical();
    return s.size() > 10 && s[10] == 'T' && util::Date::try_parse(std::string_view(s).substr(0, 10)).has_value();
  }
  return util::Date::try_parse(lit.lexical()).has_value();
}

void check_dates(const Graph& g, std::vector<Finding>& out) {
  std::set<std::string> reported;  // one finding per triple
  auto report = [&](const rdf::Triple& triple, const std::string& why) {
    if (reported.insert(triple.to_ntriples()).second) {
      out.push_back(error("E4", triple.subject(), show(triple.predicate()) + " " + show(triple.object()) + " " + why));
    }
  };
  for (const auto* p : {&t::created_on, &t::last_updated_on}) {
    for (const auto& triple : g.match({std::nullopt, *p, std::nullopt})) {
      const auto* lit = std::get_if<rdf::Literal>(&triple.object());
      if (!lit) report(triple, "is not a literal");
      else if (!valid_date_literal(*lit)) report(triple, "is not a valid date");
    }
  }
  g.for_each([&](const rdf::Triple& triple) {
    const auto* lit = std::get_if<rdf::Literal>(&triple.object());
    if (lit && lit->datatype() == t::xsd_date && !util::Date::try_parse(lit->lexical())) {
      report(triple, "is not a valid date");
    }
  });
}

void check_paragraphs(const Graph& g, std::vector<Finding>& out) {
  for (const auto& typing : g.match({std::nullopt, t::rdf_type, t::paragraph})) {
    const auto parents = objects(g, typing.subject(), t::part_of);
    const bool ok = std::any_of(parents.begin(), parents.end(), [&](const Term& e) {
      return g.contains(rdf::Triple(e, t::rdf_type, t::expression));
    });
    if (!ok) out.push_back(error("E5", typing.subject(), "paragraph is not frbr:partOf any fabio:Expression"));
  }
}

}  // namespace

std::vector<Finding> validate_instances(const Graph& graph) {
  std::vector<Finding> out;
  check_associations(graph, out);
  check_values(graph, out);
  check_evidence(graph, out);
  check_dates(graph, out);
  check_paragraphs(graph, out);
  sort_findings(out);
  return out;
}

}  // namespace eboca::validate
