#pragma once

#include <string>
#include <string_view>

#include "eboca/rdf/graph.hpp"

namespace eboca::rdf {

// Canonical N-Triples: one statement per line, lines sorted bytewise, every
// line terminated by '\n'. Equal graphs always give identical bytes.
std::string serialize_ntriples(const Graph& graph);

// Parses an N-Triples document. Comments and blank lines are skipped,
// repeated statements collapse. Throws ParseError with the 1-based line
// number and the offending token.
Graph parse_ntriples(std::string_view document);
void parse_ntriples_into(std::string_view document, Graph& graph);

}  // namespace eboca::rdf
