#pragma once

#include <map>
#include <string>

#include "eboca/rdf/graph.hpp"

namespace eboca::rdf {

// prefix name -> namespace IRI
using PrefixMap = std::map<std::string, std::string>;

// Renders the graph as Turtle. Every declared prefix gets an @prefix line;
// IRIs under a declared namespace are written in compact form when the local
// part is a legal prefixed-name local part, otherwise in angle brackets.
// Statements are grouped by subject; subjects, predicates and objects appear
// in the same bytewise order as canonical N-Triples. Throws InvalidArgument
// for malformed prefix names or namespaces.
std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes);

}  // namespace eboca::rdf
