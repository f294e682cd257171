#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <regex>
#include <set>

#include "eboca/error.hpp"
#include "eboca/query/query.hpp"
#include "eboca/util/date.hpp"
#include "eboca/util/text.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::query {

namespace t = vocab::terms;
using rdf::Term;

namespace {

bool valid_variable_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::optional<double> numeric_value(const Term& term) {
  const auto* lit = std::get_if<rdf::Literal>(&term);
  if (!lit) return std::nullopt;
  const auto& dt = lit->datatype();
  if (dt != t::xsd_double && dt != t::xsd_decimal && dt != t::xsd_float && dt != t::xsd_integer) return std::nullopt;
  double v = 0;
  if (!util::parse_double(lit->lexical(), v)) return std::nullopt;
  return v;
}

std::optional<util::Date> date_value(const Term& term) {
  const auto* lit = std::get_if<rdf::Literal>(&term);
  if (!lit || lit->datatype() != t::xsd_date) return std::nullopt;
  return util::Date::try_parse(lit->lexical());
}

const std::string* plain_string(const Term& term) {
  const auto* lit = std::get_if<rdf::Literal>(&term);
  if (!lit || lit->has_language() || lit->datatype() != t::xsd_string) return nullptr;
  return &lit->lexical();
}

// -1, 0, 1, or nullopt when the pair is incomparable.
std::optional<int> order(const Term& a, const Term& b) {
  const auto cmp = [](const auto& x, const auto& y) { return x < y ? -1 : (y < x ? 1 : 0); };
  if (auto x = numeric_value(a), y = numeric_value(b); x && y) return cmp(*x, *y);
  if (auto x = date_value(a), y = date_value(b); x && y) return cmp(*x, *y);
  if (const auto *x = plain_string(a), *y = plain_string(b); x && y) return cmp(*x, *y);
  return std::nullopt;
}

std::regex compile_regex(const Filter& f) {
  const auto* lit = std::get_if<rdf::Literal>(&f.constant);
  if (!lit || lit->has_language() || lit->datatype() != t::xsd_string) {
    throw InvalidArgument("regex filter on ?" + f.variable + " needs a plain string pattern");
  }
  try {
    return std::regex(lit->lexical(), std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw InvalidArgument("regex filter on ?" + f.variable + ": " + e.what());
  }
}

bool holds(const Filter& f, const std::regex* re, const Term& value) {
  switch (f.op) {
    case FilterOp::Eq:
    case FilterOp::Ne: {
      const auto x = numeric_value(value), y = numeric_value(f.constant);
      const bool equal = (x && y) ? *x == *y : value == f.constant;
      return (f.op == FilterOp::Eq) == equal;
    }
    case FilterOp::Lt:
    case FilterOp::Gt: {
      const auto o = order(value, f.constant);
      return o && (f.op == FilterOp::Lt ? *o < 0 : *o > 0);
    }
    case FilterOp::Regex: {
      if (const auto* lit = std::get_if<rdf::Literal>(&value)) return std::regex_search(lit->lexical(), *re);
      if (const auto* iri = std::get_if<rdf::Iri>(&value)) return std::regex_search(iri->str(), *re);
      return false;
    }
  }
  return false;
}

std::vector<std::string> pattern_variables(const Query& q) {
  std::vector<std::string> out;
  for (const auto& p : q.patterns) {
    for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(s); v && std::find(out.begin(), out.end(), v->name) == out.end()) {
        out.push_back(v->name);
      }
    }
  }
  return out;
}

// A pattern position: a constant term or an index into the binding array.
struct Position {
  std::optional<Term> constant;
  std::size_t var = 0;
};

class Solver {
 public:
  Solver(const rdf::Graph& g, const Query& q) : g_(g) {
    const auto vars = pattern_variables(q);
    const auto index_of = [&](const std::string& name) {
      return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
    };
    for (const auto& p : q.patterns) {
      std::array<Position, 3> compiled;
      const Slot* slots[] = {&p.subject, &p.predicate, &p.object};
      for (int i = 0; i < 3; ++i) {
        if (const auto* v = std::get_if<Variable>(slots[i])) compiled[i].var = index_of(v->name);
        else compiled[i].constant = std::get<Term>(*slots[i]);
      }
      patterns_.push_back(compiled);
    }
    filters_.resize(vars.size());
    for (const auto& f : q.filters) {
      auto re = f.op == FilterOp::Regex ? std::optional<std::regex>(compile_regex(f)) : std::nullopt;
      filters_[index_of(f.variable)].emplace_back(f, std::move(re));
    }
    for (const auto& name : q.select) projection_.push_back(index_of(name));
    bindings_.resize(vars.size());
    used_.assign(patterns_.size(), false);
  }

  std::vector<std::vector<Term>> run() {
    search(0);
    std::vector<std::vector<Term>> out;
    out.reserve(rows_.size());
    for (auto& [key, row] : rows_) out.push_back(std::move(row));
    return out;
  }

 private:
  std::optional<Term> resolve(const Position& pos) const {
    return pos.constant ? pos.constant : bindings_[pos.var];
  }

  // nullopt when a bound predicate is not an IRI: nothing can match.
  std::optional<rdf::Pattern> bound_pattern(const std::array<Position, 3>& p) const {
    rdf::Pattern out;
    out.subject = resolve(p[0]);
    if (auto pred = resolve(p[1])) {
      const auto* iri = std::get_if<rdf::Iri>(&*pred);
      if (!iri) return std::nullopt;
      out.predicate = *iri;
    }
    out.object = resolve(p[2]);
    return out;
  }

  bool bind(std::size_t var, const Term& value, std::vector<std::size_t>& fresh) {
    if (bindings_[var]) return *bindings_[var] == value;
    for (const auto& [f, re] : filters_[var]) {
      if (!holds(f, re ? &*re : nullptr, value)) return false;
    }
    bindings_[var] = value;
    fresh.push_back(var);
    return true;
  }

  void search(std::size_t depth) {
    if (depth == patterns_.size()) {
      std::vector<Term> row;
      std::string key;
      for (const std::size_t v : projection_) {
        row.push_back(*bindings_[v]);
        key += rdf::to_ntriples(row.back());
        key += '\t';
      }
      rows_.emplace(std::move(key), std::move(row));
      return;
    }
    // Greedy: the unused pattern with the smallest candidate bucket under the
    // current bindings goes next.
    std::size_t best = patterns_.size();
    std::size_t best_estimate = 0;
    std::optional<rdf::Pattern> best_pattern;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (used_[i]) continue;
      const auto bp = bound_pattern(patterns_[i]);
      if (!bp) return;
      const std::size_t est = g_.estimate(*bp);
      if (est == 0) return;
      if (best == patterns_.size() || est < best_estimate) {
        best = i;
        best_estimate = est;
        best_pattern = bp;
      }
    }
    used_[best] = true;
    const auto& p = patterns_[best];
    for (const auto& triple : g_.match(*best_pattern)) {
      std::vector<std::size_t> fresh;
      const Term pred = triple.predicate();
      const bool ok = (p[0].constant || bind(p[0].var, triple.subject(), fresh)) &&
                      (p[1].constant || bind(p[1].var, pred, fresh)) &&
                      (p[2].constant || bind(p[2].var, triple.object(), fresh));
      if (ok) search(depth + 1);
      for (const std::size_t v : fresh) bindings_[v].reset();
    }
    used_[best] = false;
  }

  const rdf::Graph& g_;
  std::vector<std::array<Position, 3>> patterns_;
  std::vector<std::vector<std::pair<Filter, std::optional<std::regex>>>> filters_;
  std::vector<std::size_t> projection_;
  std::vector<std::optional<Term>> bindings_;
  std::vector<bool> used_;
  std::map<std::string, std::vector<Term>> rows_;
};

}  // namespace

void validate(const Query& q) {
  if (q.patterns.empty()) throw InvalidArgument("query has no patterns");
  for (const auto& p : q.patterns) {
    for (const Slot* s : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(s); v && !valid_variable_name(v->name)) {
        throw InvalidArgument("bad variable name '?" + v->name + "'");
      }
    }
    if (const auto* term = std::get_if<Term>(&p.predicate); term && !rdf::is_iri(*term)) {
      throw InvalidArgument("predicate " + rdf::to_ntriples(*term) + " is not an IRI");
    }
    if (const auto* term = std::get_if<Term>(&p.subject); term && rdf::is_literal(*term)) {
      throw InvalidArgument("subject " + rdf::to_ntriples(*term) + " is a literal");
    }
  }
  const auto vars = pattern_variables(q);
  const auto known = [&](const std::string& name) { return std::find(vars.begin(), vars.end(), name) != vars.end(); };
  for (const auto& name : q.select) {
    if (!known(name)) throw InvalidArgument("selected variable ?" + name + " appears in no pattern");
  }
  for (const auto& f : q.filters) {
    if (!known(f.variable)) throw InvalidArgument("filtered variable ?" + f.variable + " appears in no pattern");
    if (f.op == FilterOp::Regex) compile_regex(f);
  }
}

bool filter_holds(const Filter& filter, const Term& value) {
  if (filter.op != FilterOp::Regex) return holds(filter, nullptr, value);
  const auto re = compile_regex(filter);
  return holds(filter, &re, value);
}

BindingSet solve(const rdf::Graph& g, const Query& q) {
  validate(q);
  return BindingSet{q.select, Solver(g, q).run()};
}

}  // namespace eboca::query
