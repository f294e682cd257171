#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eboca/rdf/graph.hpp"
#include "eboca/rdf/turtle.hpp"

namespace eboca::query {

struct Variable {
  std::string name;  // [A-Za-z0-9_]+, without the leading '?'

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using Slot = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  Slot subject;
  Slot predicate;
  Slot object;
};

enum class FilterOp { Eq, Ne, Lt, Gt, Regex };

struct Filter {
  std::string variable;
  FilterOp op;
  rdf::Term constant;  // for Regex, a plain literal holding an ECMAScript pattern
};

struct Query {
  std::vector<std::string> select;
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
};

// Rows are aligned with `variables`.
struct BindingSet {
  std::vector<std::string> variables;
  std::vector<std::vector<rdf::Term>> rows;

  bool empty() const noexcept { return rows.empty(); }
  friend bool operator==(const BindingSet&, const BindingSet&) = default;
};

// Throws InvalidArgument: no patterns, a bad variable name, a selected or
// filtered variable that no pattern mentions, a literal or blank predicate,
// a regex filter whose constant is not a plain literal or does not compile.
void validate(const Query& q);

// Filter semantics. `=` and `!=` compare numerically when both sides are
// numeric literals and by term identity otherwise. `<` and `>` are defined for
// two numeric literals, two xsd:date literals, or two plain strings; any
// other pair is incomparable and the filter fails. `regex` searches the
// lexical form of a literal or the text of an IRI; blank nodes never match.
bool filter_holds(const Filter& filter, const rdf::Term& value);

// All assignments of the pattern variables under which every pattern matches
// a triple of g and every filter holds, projected on q.select, deduplicated,
// and sorted by the tab-joined N-Triples form of each row.
BindingSet solve(const rdf::Graph& g, const Query& q);

// Line-oriented text:
//   PREFIX p: <iri>
//   SELECT ?a ?b | SELECT *
//   <subject> <predicate> <object> [.]     one pattern per line, `a` = rdf:type
//   FILTER ?v (= | != | < | > | regex) constant
// Terms use the shared term syntax; a bare number in a FILTER is an
// xsd:integer or xsd:decimal literal. The standard prefixes are predeclared.
// SELECT * selects every variable in order of first appearance. Throws
// ParseError with the line number.
Query parse_query(std::string_view text);
Query parse_query(std::string_view text, const rdf::PrefixMap& prefixes);

// Header line of ?names, then one line per row of N-Triples terms, all
// tab-separated.
std::string to_tsv(const BindingSet& result);
// {"variables": [...], "rows": [{"name": "N-Triples term", ...}, ...]}
std::string to_json(const BindingSet& result);

}  // namespace eboca::query
