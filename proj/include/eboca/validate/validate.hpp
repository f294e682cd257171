#pragma once

#include <vector>

#include "eboca/rdf/graph.hpp"
#include "eboca/validate/findings.hpp"

namespace eboca::validate {

// Instance rules, all Error severity:
//   E1 association nodes link exactly two distinct concept-typed endpoints of
//      kinds compatible with the association class
//   E2 score values (sio:SIO_000300 on ncit:C25338 nodes) and evidence
//      confidences are numeric literals in [0, 1]
//   E3 evidence nodes carry exactly one ECO kind; documented statements have
//      pav:derivedFrom
//   E4 xsd:date literals and pav creation/update dates are valid dates
//   E5 every doco:Paragraph is frbr:partOf some fabio:Expression
// Findings come back sorted.
std::vector<Finding> validate_instances(const rdf::Graph& graph);

struct ScanOptions {
  // Also report terms outside the EBOCA namespaces.
  bool include_reused = false;
};

// Ontology pitfalls over terms declared as owl:Class, owl:ObjectProperty or
// owl:DatatypeProperty:
//   P04 unconnected term, P08 neither label nor comment, P11 property without
//   domain or range (Errors); P13 object property without an inverse, P22
//   mixed naming styles within a term category (Warnings).
std::vector<Finding> scan_pitfalls(const rdf::Graph& ontology, const ScanOptions& options = {});

}  // namespace eboca::validate
