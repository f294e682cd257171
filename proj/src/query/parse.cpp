#include <algorithm>
#include <regex>

#include <json.hpp>

#include "eboca/error.hpp"
#include "eboca/query/query.hpp"
#include "eboca/rdf/term_syntax.hpp"
#include "eboca/util/text.hpp"
#include "eboca/vocab/catalog.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::query {

namespace t = vocab::terms;

namespace {

Slot parse_slot(const std::string& tok, const rdf::PrefixMap& prefixes, bool predicate) {
  if (tok.starts_with("?")) return Variable{tok.substr(1)};
  if (predicate && tok == "a") return rdf::Term(t::rdf_type);
  return rdf::parse_term_token(tok, prefixes);
}

rdf::Term parse_constant(const std::string& tok, const rdf::PrefixMap& prefixes) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex decimal(R"([+-]?([0-9]+\.[0-9]*|\.[0-9]+))");
  static const std::regex dbl(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)[eE][+-]?[0-9]+)");
  if (std::regex_match(tok, integer)) return rdf::Literal(tok, t::xsd_integer);
  if (std::regex_match(tok, decimal)) return rdf::Literal(tok, t::xsd_decimal);
  if (std::regex_match(tok, dbl)) return rdf::Literal(tok, t::xsd_double);
  if (tok.starts_with("?")) throw InvalidArgument("FILTER compares against a constant, not a variable");
  return rdf::parse_term_token(tok, prefixes);
}

FilterOp parse_op(const std::string& tok) {
  if (tok == "=") return FilterOp::Eq;
  if (tok == "!=") return FilterOp::Ne;
  if (tok == "<") return FilterOp::Lt;
  if (tok == ">") return FilterOp::Gt;
  if (tok == "regex") return FilterOp::Regex;
  throw InvalidArgument("unknown FILTER operator");
}

}  // namespace

Query parse_query(std::string_view text) { return parse_query(text, vocab::standard_prefixes()); }

Query parse_query(std::string_view text, const rdf::PrefixMap& predeclared) {
  rdf::PrefixMap prefixes = predeclared;
  Query q;
  bool have_select = false;
  bool select_all = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::vector<std::string> toks;
    try {
      toks = rdf::tokenize(line);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, "", e.what());
    }
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    try {
      if (head == "PREFIX") {
        if (toks.size() != 3 || !toks[1].ends_with(':') || !toks[2].starts_with("<")) {
          throw ParseError(line_no, head, "expected PREFIX name: <iri>");
        }
        prefixes[toks[1].substr(0, toks[1].size() - 1)] = rdf::parse_iri_token(toks[2], prefixes).str();
      } else if (head == "SELECT") {
        if (have_select) throw ParseError(line_no, head, "second SELECT");
        have_select = true;
        if (toks.size() == 2 && toks[1] == "*") {
          select_all = true;
          continue;
        }
        if (toks.size() < 2) throw ParseError(line_no, head, "SELECT needs variables or *");
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (!toks[i].starts_with("?")) throw ParseError(line_no, toks[i], "SELECT lists ?variables");
          q.select.push_back(toks[i].substr(1));
        }
      } else if (head == "FILTER") {
        if (toks.size() != 4 || !toks[1].starts_with("?")) {
          throw ParseError(line_no, head, "expected FILTER ?var op constant");
        }
        q.filters.push_back({toks[1].substr(1), parse_op(toks[2]), parse_constant(toks[3], prefixes)});
      } else {
        if (toks.size() == 4 && toks[3] == ".") toks.pop_back();
        if (toks.size() != 3) throw ParseError(line_no, head, "a pattern has three terms");
        TriplePattern p{parse_slot(toks[0], prefixes, false), parse_slot(toks[1], prefixes, true),
                        parse_slot(toks[2], prefixes, false)};
        if (const auto* term = std::get_if<rdf::Term>(&p.predicate); term && !rdf::is_iri(*term)) {
          throw ParseError(line_no, toks[1], "predicate must be an IRI or a variable");
        }
        q.patterns.push_back(std::move(p));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, head, e.what());
    }
  }
  if (!have_select) throw ParseError(line_no, "", "query has no SELECT");
  if (select_all) {
    for (const auto& p : q.patterns) {
      for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
        const auto* v = std::get_if<Variable>(s);
        if (v && std::find(q.select.begin(), q.select.end(), v->name) == q.select.end()) q.select.push_back(v->name);
      }
    }
  }
  try {
    validate(q);
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, "", e.what());
  }
  return q;
}

std::string to_tsv(const BindingSet& result) {
  std::string out;
  for (std::size_t i = 0; i < result.variables.size(); ++i) {
    if (i) out += '\t';
    out += "?" + result.variables[i];
  }
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      rdf::append_ntriples(out, row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const BindingSet& result) {
  nlohmann::ordered_json doc;
  doc["variables"] = result.variables;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[result.variables[i]] = rdf::to_ntriples(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace eboca::query
