#include "eboca/rdf/ntriples.hpp"

#include <algorithm>
#include <cstdint>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"

namespace eboca::rdf {

std::string serialize_ntriples(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  std::size_t total = 0;
  graph.for_each([&](const Triple& t) {
    lines.push_back(t.to_ntriples());
    total += lines.back().size() + 1;
  });
  std::sort(lines.begin(), lines.end());
  std::string out;
  out.reserve(total);
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  // False for blank and comment-only lines.
  bool parse(Graph& graph) {
    skip_ws();
    if (at_end() || peek() == '#') return false;
    Term subject = parse_subject();
    skip_ws();
    Iri predicate = parse_iri();
    skip_ws();
    Term object = parse_object();
    skip_ws();
    if (at_end() || peek() != '.') fail("expected '.' to terminate statement");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("unexpected content after '.'");
    graph.insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
    return true;
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t end = at;
    while (end < line_.size() && line_[end] != ' ' && line_[end] != '\t' && end - at < 40) ++end;
    std::string token(line_.substr(std::min(at, line_.size()), end - std::min(at, line_.size())));
    if (token.empty()) token = "<end of line>";
    throw ParseError(line_no_, std::move(token), what);
  }

  std::uint32_t parse_hex(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = line_[pos_ + i];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    pos_ += digits;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("unicode escape is not a scalar value");
    return cp;
  }

  void parse_uchar(std::string& out) {
    // positioned on 'u' or 'U'
    const char kind = peek();
    ++pos_;
    util::append_utf8(out, parse_hex(kind == 'u' ? 4 : 8));
  }

  Iri parse_iri() {
    const std::size_t start = pos_;
    if (at_end() || peek() != '<') fail("expected IRI");
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) fail_at(start, "unterminated IRI");
      const char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (at_end() || (peek() != 'u' && peek() != 'U')) fail_at(start, "bad escape in IRI");
        parse_uchar(value);
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    auto iri = Iri::try_make(std::move(value));
    if (!iri) fail_at(start, "invalid or relative IRI");
    return std::move(*iri);
  }

  BlankNode parse_blank() {
    const std::size_t start = pos_;
    pos_ += 2;  // "_:"
    const std::size_t label_start = pos_;
    // '.' may directly follow the label as the statement terminator.
    while (!at_end() && peek() != ' ' && peek() != '\t' && peek() != '.') ++pos_;
    std::string label(line_.substr(label_start, pos_ - label_start));
    if (!BlankNode::is_valid_label(label)) fail_at(start, "invalid blank node label");
    return BlankNode(std::move(label));
  }

  Term parse_subject() {
    if (!at_end() && peek() == '<') return parse_iri();
    if (line_.substr(pos_, 2) == "_:") return parse_blank();
    fail("expected IRI or blank node as subject");
  }

  Term parse_object() {
    if (at_end()) fail("expected object");
    if (peek() == '<') return parse_iri();
    if (line_.substr(pos_, 2) == "_:") return parse_blank();
    if (peek() == '"') return parse_literal();
    fail("expected IRI, blank node or literal as object");
  }

  Literal parse_literal() {
    const std::size_t start = pos_;
    ++pos_;
    std::string lexical;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string literal");
      const char c = peek();
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\n' || c == '\r') fail_at(start, "raw line break in literal");
      if (c != '\\') {
        lexical.push_back(c);
        ++pos_;
        continue;
      }
      ++pos_;
      if (at_end()) fail_at(start, "dangling escape in literal");
      switch (peek()) {
        case 't': lexical.push_back('\t'); ++pos_; break;
        case 'b': lexical.push_back('\b'); ++pos_; break;
        case 'n': lexical.push_back('\n'); ++pos_; break;
        case 'r': lexical.push_back('\r'); ++pos_; break;
        case 'f': lexical.push_back('\f'); ++pos_; break;
        case '"': lexical.push_back('"'); ++pos_; break;
        case '\'': lexical.push_back('\''); ++pos_; break;
        case '\\': lexical.push_back('\\'); ++pos_; break;
        case 'u':
        case 'U': parse_uchar(lexical); break;
        default: fail("unknown escape sequence in literal");
      }
    }
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      Iri datatype = parse_iri();
      if (datatype.str() == kRdfLangString) fail_at(start, "rdf:langString literal without language tag");
      return Literal(std::move(lexical), std::move(datatype));
    }
    if (!at_end() && peek() == '@') {
      ++pos_;
      const std::size_t tag_start = pos_;
      while (!at_end() && peek() != ' ' && peek() != '\t' && peek() != '.') ++pos_;
      std::string tag(line_.substr(tag_start, pos_ - tag_start));
      if (!is_valid_language_tag(tag)) fail_at(tag_start - 1, "invalid language tag");
      return Literal::with_language(std::move(lexical), std::move(tag));
    }
    return Literal(std::move(lexical));
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

void parse_ntriples_into(std::string_view document, Graph& graph) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < document.size()) {
    std::size_t end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    std::string_view line = document.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    LineParser(line, line_no).parse(graph);
    start = end + 1;
  }
}

Graph parse_ntriples(std::string_view document) {
  Graph g;
  parse_ntriples_into(document, g);
  return g;
}

}  // namespace eboca::rdf
