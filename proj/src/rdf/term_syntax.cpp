#include "eboca/rdf/term_syntax.hpp"

#include <cctype>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"

namespace eboca::rdf {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Position just past the closing quote of the string starting at `open`.
std::size_t end_of_quoted(std::string_view s, std::size_t open) {
  for (std::size_t i = open + 1; i < s.size(); ++i) {
    if (s[i] == '\\') {
      ++i;
    } else if (s[i] == '"') {
      return i + 1;
    }
  }
  throw InvalidArgument("unterminated string literal");
}

std::string unescape(std::string_view body) {
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\') {
      out.push_back(body[i]);
      continue;
    }
    if (++i == body.size()) throw InvalidArgument("dangling escape in string literal");
    switch (body[i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case 'u':
      case 'U': {
        const std::size_t digits = body[i] == 'u' ? 4 : 8;
        if (i + digits >= body.size()) {
          throw InvalidArgument("short unicode escape in string literal");
        }
        char32_t cp = 0;
        for (std::size_t k = 1; k <= digits; ++k) {
          const int v = hex_value(body[i + k]);
          if (v < 0) throw InvalidArgument("bad hex digit in unicode escape");
          cp = cp * 16 + static_cast<char32_t>(v);
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
          throw InvalidArgument("unicode escape is not a scalar value");
        }
        util::append_utf8(out, cp);
        i += digits;
        break;
      }
      default:
        throw InvalidArgument(std::string("unknown escape \\") + body[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    if (line[i] == '"') {
      i = end_of_quoted(line, i);
    } else if (line[i] == '<' && i + 1 < line.size() && !is_space(line[i + 1])) {
      const std::size_t close = line.find('>', i);
      if (close == std::string_view::npos) throw InvalidArgument("unterminated IRI");
      i = close + 1;
    } else if (line[i] == '<') {
      ++i;  // a lone comparison operator
    }
    // Suffixes such as ^^xsd:double or @en, or the rest of a bare word.
    while (i < line.size() && !is_space(line[i])) {
      if (line[i] == '<') {
        const std::size_t close = line.find('>', i);
        if (close == std::string_view::npos) throw InvalidArgument("unterminated IRI");
        i = close + 1;
      } else {
        ++i;
      }
    }
    tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string expand_iri_text(std::string_view token, const PrefixMap& prefixes) {
  if (token.empty()) throw InvalidArgument("expected an IRI");
  if (token.front() == '<') {
    if (token.size() < 2 || token.back() != '>') throw InvalidArgument("unterminated IRI '" + std::string(token) + "'");
    return std::string(token.substr(1, token.size() - 2));
  }
  const std::size_t colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("expected <iri> or prefix:local, got '" + std::string(token) + "'");
  }
  const std::string prefix(token.substr(0, colon));
  const auto it = prefixes.find(prefix);
  if (it == prefixes.end()) throw InvalidArgument("unknown prefix '" + prefix + ":'");
  return it->second + std::string(token.substr(colon + 1));
}

Iri parse_iri_token(std::string_view token, const PrefixMap& prefixes) {
  std::string text = expand_iri_text(token, prefixes);
  auto iri = Iri::try_make(text);
  if (!iri) throw InvalidArgument("invalid IRI '" + text + "'");
  return std::move(*iri);
}

Term parse_term_token(std::string_view token, const PrefixMap& prefixes) {
  if (token.empty()) throw InvalidArgument("expected a term");
  if (token.substr(0, 2) == "_:") return BlankNode(std::string(token.substr(2)));
  if (token.front() != '"') return parse_iri_token(token, prefixes);

  const std::size_t close = end_of_quoted(token, 0);
  std::string lexical = unescape(token.substr(1, close - 2));
  const std::string_view suffix = token.substr(close);
  if (suffix.empty()) return Literal(std::move(lexical));
  if (suffix.front() == '@') return Literal::with_language(std::move(lexical), std::string(suffix.substr(1)));
  if (suffix.substr(0, 2) == "^^") return Literal(std::move(lexical), parse_iri_token(suffix.substr(2), prefixes));
  throw InvalidArgument("unexpected text after string literal: '" + std::string(suffix) + "'");
}

}  // namespace eboca::rdf
