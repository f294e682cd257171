#include "eboca/rdf/turtle.hpp"

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "eboca/error.hpp"

namespace eboca::rdf {

namespace {

constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
}
bool is_hex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool valid_prefix_name(std::string_view name) {
  if (name.empty()) return true;  // the default ':' prefix
  if (!is_name_start(name.front()) || name.back() == '.') return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return is_name_char(c) || c == '.'; });
}

// Conservative subset of PN_LOCAL: [A-Za-z0-9_] start, then name chars or '.'
// (never last), with %XX escapes accepted anywhere.
bool valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (local.back() == '.') return false;
  for (std::size_t i = 0; i < local.size(); ++i) {
    const char c = local[i];
    if (c == '%') {
      if (i + 2 >= local.size() || !is_hex(local[i + 1]) || !is_hex(local[i + 2])) return false;
      i += 2;
      continue;
    }
    if (i == 0 ? !(is_name_char(c) && c != '-') : !(is_name_char(c) || c == '.')) return false;
  }
  return true;
}

class Compactor {
 public:
  explicit Compactor(const PrefixMap& prefixes) {
    for (const auto& [name, ns] : prefixes) {
      if (!valid_prefix_name(name)) throw InvalidArgument("invalid prefix name: '" + name + "'");
      if (!Iri::is_valid(ns)) throw InvalidArgument("invalid namespace IRI for prefix '" + name + "'");
      entries_.push_back({name, ns});
    }
    // Longest namespace first; ties resolved by prefix name.
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      if (a.ns.size() != b.ns.size()) return a.ns.size() > b.ns.size();
      return a.name < b.name;
    });
  }

  std::string iri(const Iri& iri) const {
    const std::string& v = iri.str();
    for (const auto& e : entries_) {
      if (v.size() >= e.ns.size() && v.compare(0, e.ns.size(), e.ns) == 0) {
        const std::string_view local = std::string_view(v).substr(e.ns.size());
        if (valid_local_name(local)) return e.name + ":" + std::string(local);
      }
    }
    return "<" + v + ">";
  }

  std::string term(const Term& t) const {
    if (const auto* i = std::get_if<Iri>(&t)) return iri(*i);
    if (const auto* lit = std::get_if<Literal>(&t)) {
      std::string out = "\"";
      append_escaped_string(out, lit->lexical());
      out.push_back('"');
      if (lit->has_language()) {
        out += "@" + lit->language();
      } else if (lit->datatype().str() != kXsdString) {
        out += "^^" + iri(lit->datatype());
      }
      return out;
    }
    return to_ntriples(t);
  }

 private:
  struct Entry {
    std::string name;
    std::string ns;
  };
  std::vector<Entry> entries_;
};

struct Row {
  std::string s_key, p_key, o_key;
  const Triple* triple;
};

}  // namespace

std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes) {
  const Compactor compact(prefixes);

  std::string out;
  for (const auto& [name, ns] : prefixes) out += "@prefix " + name + ": <" + ns + "> .\n";

  const std::vector<Triple> triples = graph.triples();
  std::vector<Row> rows;
  rows.reserve(triples.size());
  for (const auto& t : triples) {
    rows.push_back({to_ntriples(t.subject()), to_ntriples(t.predicate()), to_ntriples(t.object()), &t});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.s_key != b.s_key) return a.s_key < b.s_key;
    if (a.p_key != b.p_key) return a.p_key < b.p_key;
    return a.o_key < b.o_key;
  });

  std::size_t i = 0;
  while (i < rows.size()) {
    out.push_back('\n');
    out += compact.term(rows[i].triple->subject());
    const std::string& subject = rows[i].s_key;
    bool first_predicate = true;
    while (i < rows.size() && rows[i].s_key == subject) {
      out += first_predicate ? "\n    " : " ;\n    ";
      first_predicate = false;
      const Iri& p = rows[i].triple->predicate();
      out += p.str() == kRdfType ? std::string("a") : compact.iri(p);
      const std::string& predicate = rows[i].p_key;
      bool first_object = true;
      while (i < rows.size() && rows[i].s_key == subject && rows[i].p_key == predicate) {
        out += first_object ? " " : ", ";
        first_object = false;
        out += compact.term(rows[i].triple->object());
        ++i;
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace eboca::rdf
