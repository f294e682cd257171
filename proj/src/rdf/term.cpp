#include "eboca/rdf/term.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "eboca/error.hpp"

namespace eboca::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool forbidden_in_iri(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool Iri::is_valid(std::string_view value) noexcept {
  const auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!is_alpha(value[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    const char c = value[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return std::none_of(value.begin(), value.end(),
                      [](char c) { return forbidden_in_iri(static_cast<unsigned char>(c)); });
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw InvalidArgument("invalid IRI: '" + value_ + "'");
}

std::optional<Iri> Iri::try_make(std::string value) {
  if (!is_valid(value)) return std::nullopt;
  return Iri(Trusted{}, std::move(value));
}

bool BlankNode::is_valid_label(std::string_view label) noexcept {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return is_alpha(c) || is_digit(c) || c == '_';
  });
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) throw InvalidArgument("invalid blank node label: '" + label_ + "'");
}

bool is_valid_language_tag(std::string_view tag) noexcept {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::size_t i = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    const std::size_t start = ++i;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

Literal::Literal(std::string lexical)
    : lexical_(std::move(lexical)), datatype_(std::string(kXsdString)) {}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_.str() == kRdfLangString) {
    throw InvalidArgument("rdf:langString literal requires a language tag");
  }
}

Literal Literal::with_language(std::string lexical, std::string language) {
  if (!is_valid_language_tag(language)) {
    throw InvalidArgument("invalid language tag: '" + language + "'");
  }
  std::transform(language.begin(), language.end(), language.begin(),
                 [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; });
  Literal lit(std::move(lexical));
  lit.datatype_ = Iri(std::string(kRdfLangString));
  lit.language_ = std::move(language);
  return lit;
}

void append_escaped_string(std::string& out, std::string_view text) {
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '\b': out += "\\b"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\f': out += "\\f"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out.push_back(ch);
        }
    }
  }
}

void append_ntriples(std::string& out, const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) {
    out.push_back('<');
    out += iri->str();
    out.push_back('>');
  } else if (const auto* bn = std::get_if<BlankNode>(&term)) {
    out += "_:";
    out += bn->label();
  } else {
    const auto& lit = std::get<Literal>(term);
    out.push_back('"');
    append_escaped_string(out, lit.lexical());
    out.push_back('"');
    if (lit.has_language()) {
      out.push_back('@');
      out += lit.language();
    } else if (lit.datatype().str() != kXsdString) {
      out += "^^<";
      out += lit.datatype().str();
      out.push_back('>');
    }
  }
}

std::string to_ntriples(const Term& term) {
  std::string out;
  append_ntriples(out, term);
  return out;
}

std::size_t TermHash::operator()(const Term& term) const noexcept {
  const std::hash<std::string> h;
  std::size_t seed = term.index();
  if (const auto* iri = std::get_if<Iri>(&term)) return mix(seed, h(iri->str()));
  if (const auto* bn = std::get_if<BlankNode>(&term)) return mix(seed, h(bn->label()));
  const auto& lit = std::get<Literal>(term);
  seed = mix(seed, h(lit.lexical()));
  seed = mix(seed, h(lit.datatype().str()));
  return mix(seed, h(lit.language()));
}

Triple::Triple(Term subject, Iri predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (is_literal(subject_)) {
    throw InvalidArgument("literal in subject position: " + rdf::to_ntriples(subject_));
  }
}

std::string Triple::to_ntriples() const {
  std::string out;
  append_ntriples(out, subject_);
  out.push_back(' ');
  append_ntriples(out, predicate_);
  out.push_back(' ');
  append_ntriples(out, object_);
  out += " .";
  return out;
}

}  // namespace eboca::rdf
