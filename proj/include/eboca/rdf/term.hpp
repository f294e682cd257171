#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace eboca::rdf {

inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

// Absolute IRI. Validation is intentionally light: a scheme (alpha followed
// by alnum/+/-/.) terminated by ':', and no whitespace, control characters,
// or characters that N-Triples forbids inside IRIREF (<>"{}|^`\).
class Iri {
 public:
  explicit Iri(std::string value);

  static std::optional<Iri> try_make(std::string value);
  static bool is_valid(std::string_view value) noexcept;

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  struct Trusted {};
  Iri(Trusted, std::string value) : value_(std::move(value)) {}

  std::string value_;
};

class BlankNode {
 public:
  // Label must match [A-Za-z0-9_]+.
  explicit BlankNode(std::string label);

  static bool is_valid_label(std::string_view label) noexcept;

  const std::string& label() const noexcept { return label_; }

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

// A literal is either typed (datatype defaults to xsd:string) or
// language-tagged, in which case the datatype is always rdf:langString.
class Literal {
 public:
  explicit Literal(std::string lexical);
  Literal(std::string lexical, Iri datatype);

  // Language tags are stored lower-cased.
  static Literal with_language(std::string lexical, std::string language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }
  bool has_language() const noexcept { return !language_.empty(); }

  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  Iri datatype_;
  std::string language_;
};

bool is_valid_language_tag(std::string_view tag) noexcept;

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) noexcept { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) noexcept { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) noexcept { return std::holds_alternative<Literal>(t); }

// N-Triples rendering of a single term (canonical escaping).
std::string to_ntriples(const Term& term);
void append_ntriples(std::string& out, const Term& term);
void append_escaped_string(std::string& out, std::string_view text);

struct TermHash {
  std::size_t operator()(const Term& term) const noexcept;
};

class Triple {
 public:
  // Throws InvalidArgument when the subject is a literal.
  Triple(Term subject, Iri predicate, Term object);

  const Term& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  // One N-Triples statement line without the trailing newline.
  std::string to_ntriples() const;

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Iri predicate_;
  Term object_;
};

}  // namespace eboca::rdf
