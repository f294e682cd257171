#include "eboca/validate/findings.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <json.hpp>

namespace eboca::validate {

namespace {

constexpr std::array<RuleInfo, 10> kRules{{
    {"E1", Severity::Error, "association must link exactly two distinct concept-typed endpoints of compatible kinds"},
    {"E2", Severity::Error, "score and confidence values must be numeric and within [0, 1]"},
    {"E3", Severity::Error, "evidence must have exactly one ECO kind; documented statements need pav:derivedFrom"},
    {"E4", Severity::Error, "date literals must be valid ISO-8601 calendar dates"},
    {"E5", Severity::Error, "paragraph must be part of a fabio:Expression"},
    {"P04", Severity::Error, "creating unconnected ontology elements"},
    {"P08", Severity::Error, "missing annotations"},
    {"P11", Severity::Error, "missing domain or range in properties"},
    {"P13", Severity::Warning, "inverse relationships not explicitly declared"},
    {"P22", Severity::Warning, "using different naming conventions in the ontology"},
}};

std::string subject_text(const rdf::Term& t) {
  if (const auto* iri = std::get_if<rdf::Iri>(&t)) return iri->str();
  return rdf::to_ntriples(t);
}

}  // namespace

std::string_view to_string(Severity severity) { return severity == Severity::Error ? "error" : "warning"; }

std::span<const RuleInfo> rule_registry() { return kRules; }

const RuleInfo* find_rule(std::string_view code) {
  for (const auto& r : kRules) {
    if (r.code == code) return &r;
  }
  return nullptr;
}

void sort_findings(std::vector<Finding>& findings) {
  std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    if (a.code != b.code) return a.code < b.code;
    const std::string sa = rdf::to_ntriples(a.subject), sb = rdf::to_ntriples(b.subject);
    if (sa != sb) return sa < sb;
    return a.message < b.message;
  });
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::Error; });
}

std::string findings_to_json(const std::vector<Finding>& findings) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& f : findings) {
    out.push_back({{"code", f.code},
                   {"severity", to_string(f.severity)},
                   {"subject", subject_text(f.subject)},
                   {"message", f.message}});
  }
  return out.dump(2) + "\n";
}

std::string findings_summary(const std::vector<Finding>& findings) {
  std::string out;
  std::map<std::string, std::size_t> per_code;
  std::size_t errors = 0;
  for (const auto& f : findings) {
    out += f.code + " " + std::string(to_string(f.severity)) + " " + subject_text(f.subject) + ": " + f.message + "\n";
    ++per_code[f.code];
    errors += f.severity == Severity::Error;
  }
  out += std::to_string(errors) + " error(s), " + std::to_string(findings.size() - errors) + " warning(s)";
  for (const auto& [code, n] : per_code) out += "; " + code + "=" + std::to_string(n);
  return out + "\n";
}

}  // namespace eboca::validate
