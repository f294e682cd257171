#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eboca/rdf/term.hpp"

namespace eboca::validate {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Finding {
  std::string code;  // E1..E5, P04, P08, P11, P13, P22
  Severity severity;
  rdf::Term subject;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct RuleInfo {
  std::string_view code;
  Severity severity;
  std::string_view summary;
};

// Every code a Finding may carry.
std::span<const RuleInfo> rule_registry();
const RuleInfo* find_rule(std::string_view code);

// Orders by (code, subject in N-Triples form, message).
void sort_findings(std::vector<Finding>& findings);

bool has_errors(const std::vector<Finding>& findings);

// JSON array of {"code", "severity", "subject", "message"} objects.
std::string findings_to_json(const std::vector<Finding>& findings);

// One line per finding, then a count line.
std::string findings_summary(const std::vector<Finding>& findings);

}  // namespace eboca::validate
