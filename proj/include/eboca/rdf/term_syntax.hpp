#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eboca/rdf/term.hpp"
#include "eboca/rdf/turtle.hpp"

namespace eboca::rdf {

// Shared term syntax for the mapping and query languages:
//   <http://...>          absolute IRI
//   prefix:local          prefixed name, expanded with a PrefixMap
//   "text"                xsd:string literal (\t \n \r \" \\ \uXXXX escapes)
//   "text"@en             language-tagged literal
//   "1.5"^^xsd:double     typed literal (datatype as <...> or prefixed name)
//   _:label               blank node

// Splits a line into whitespace-separated tokens. A quoted literal, including
// any ^^ or @ suffix, and a bracketed IRI are single tokens even when they
// contain spaces; a '<' followed by whitespace is an ordinary word. A token
// starting with '#' ends the line. Throws InvalidArgument for an unterminated
// quote or bracket.
std::vector<std::string> tokenize(std::string_view line);

// Throws InvalidArgument describing what is wrong with the token.
Iri parse_iri_token(std::string_view token, const PrefixMap& prefixes);
Term parse_term_token(std::string_view token, const PrefixMap& prefixes);

// "<...>" or "prefix:local" expanded to a string without validating it as an
// IRI, for templates that still contain {slots}.
std::string expand_iri_text(std::string_view token, const PrefixMap& prefixes);

}  // namespace eboca::rdf
