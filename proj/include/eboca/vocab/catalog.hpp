#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eboca/rdf/term.hpp"
#include "eboca/rdf/turtle.hpp"

namespace eboca::vocab {

struct VocabTerm {
  std::string prefix;
  std::string local;
  rdf::Iri iri;
  std::string label;  // human label for reused terms, empty when unknown
};

// The fixed vocabulary, unique by IRI, sorted by prefixed name.
const std::vector<VocabTerm>& catalog();
const VocabTerm* find_term(std::string_view iri);
inline bool in_catalog(std::string_view iri) { return find_term(iri) != nullptr; }

// Two columns, tab separated: prefixed name and full IRI. One line per term.
std::string catalog_table();

// Every known prefix including the ECO alias of the OBO namespace and the
// instance namespace "res". Used to expand prefixed names.
rdf::PrefixMap standard_prefixes();

// Same as standard_prefixes() minus aliases, so each namespace compacts to a
// single prefix in Turtle output.
rdf::PrefixMap turtle_prefixes();

}  // namespace eboca::vocab
