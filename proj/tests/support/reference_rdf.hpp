#pragma once

// Test-only reference readers. They share no code with the library parser
// or serializer and only build string tuples, so they can act as oracles.

#include <cctype>
#include <cstdint>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace eboca::testing {

// (subject, predicate, object) with IRIs as "<...>", blank nodes as "_:x" and
// literals as "\"lexical\"" + ("@lang" | "^^<dt>" | "").
using StringTriple = std::tuple<std::string, std::string, std::string>;
using StringGraph = std::set<StringTriple>;

inline void put_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the body of a quoted string (without the quotes).
inline std::string unescape(const std::string& body) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\') {
      out += body[i];
      continue;
    }
    const char e = body.at(++i);
    switch (e) {
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U': {
        const std::size_t n = e == 'u' ? 4 : 8;
        put_utf8(out, static_cast<std::uint32_t>(std::stoul(body.substr(i + 1, n), nullptr, 16)));
        i += n;
        break;
      }
      default: throw std::runtime_error("reference: bad escape");
    }
  }
  return out;
}

// Literal as a raw lexical value plus suffix; the lexical value is kept
// unescaped so that comparisons are on content, not on escaping style.
inline std::string literal_key(const std::string& lexical, const std::string& suffix) {
  return "\"" + lexical + "\"" + suffix;
}

inline StringGraph reference_parse_ntriples(const std::string& doc) {
  static const std::regex line_re(
      R"re(^\s*(<[^>]*>|_:[A-Za-z0-9_]+)\s+(<[^>]*>)\s+(<[^>]*>|_:[A-Za-z0-9_]+|"((?:[^"\\]|\\.)*)"(\^\^<[^>]*>|@[A-Za-z]+(?:-[A-Za-z0-9]+)*)?)\s*\.\s*$)re");
  StringGraph g;
  std::size_t start = 0;
  while (start < doc.size()) {
    std::size_t end = doc.find('\n', start);
    if (end == std::string::npos) end = doc.size();
    const std::string line = doc.substr(start, end - start);
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) throw std::runtime_error("reference: bad line: " + line);
    std::string object = m[3];
    if (!object.empty() && object[0] == '"') {
      std::string suffix = m[5];
      if (suffix == "^^<http://www.w3.org/2001/XMLSchema#string>") suffix.clear();
      object = literal_key(unescape(m[4]), suffix);
    }
    g.emplace(m[1], m[2], object);
  }
  return g;
}

// Turtle subset reader: @prefix directives, prefixed names, 'a', ';' and ','
// lists, literals with @lang or ^^datatype. No nesting, no collections.
class ReferenceTurtleReader {
 public:
  explicit ReferenceTurtleReader(std::string text) : text_(std::move(text)) {}

  StringGraph read() {
    StringGraph g;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      if (text_.compare(pos_, 7, "@prefix") == 0) {
        pos_ += 7;
        skip();
        const std::size_t colon = text_.find(':', pos_);
        const std::string name = text_.substr(pos_, colon - pos_);
        pos_ = colon + 1;
        skip();
        const std::string iri = read_iri_ref();
        prefixes_[name] = iri.substr(1, iri.size() - 2);
        skip();
        expect('.');
        continue;
      }
      const std::string subject = read_term();
      while (true) {
        skip();
        std::string predicate = read_term();
        if (predicate == "a") predicate = "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>";
        while (true) {
          skip();
          g.emplace(subject, predicate, read_term());
          skip();
          if (peek() == ',') { ++pos_; continue; }
          break;
        }
        if (peek() == ';') { ++pos_; continue; }
        break;
      }
      expect('.');
    }
    return g;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) throw std::runtime_error(std::string("reference turtle: expected ") + c + " at " + std::to_string(pos_));
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  std::string read_iri_ref() {
    const std::size_t end = text_.find('>', pos_);
    std::string out = text_.substr(pos_, end - pos_ + 1);
    pos_ = end + 1;
    return out;
  }
  std::string read_pname() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool local_char = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                              c == ':' || c == '%' || c == '.';
      if (!local_char) break;
      // a '.' followed by whitespace or end terminates the statement
      if (c == '.' && (pos_ + 1 >= text_.size() || std::isspace(static_cast<unsigned char>(text_[pos_ + 1])))) break;
      ++pos_;
    }
    const std::string token = text_.substr(start, pos_ - start);
    if (token == "a") return token;
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos) throw std::runtime_error("reference turtle: bad token " + token);
    const auto it = prefixes_.find(token.substr(0, colon));
    if (it == prefixes_.end()) throw std::runtime_error("reference turtle: unknown prefix in " + token);
    return "<" + it->second + token.substr(colon + 1) + ">";
  }
  std::string read_term() {
    skip();
    const char c = peek();
    if (c == '<') return read_iri_ref();
    if (c == '_' && text_.compare(pos_, 2, "_:") == 0) {
      const std::size_t start = pos_;
      pos_ += 2;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      return text_.substr(start, pos_ - start);
    }
    if (c == '"') {
      ++pos_;
      std::string body;
      while (peek() != '"') {
        if (peek() == '\\') body += text_[pos_++];
        body += text_[pos_++];
      }
      ++pos_;
      std::string suffix;
      if (peek() == '@') {
        const std::size_t start = pos_++;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') ++pos_;
        suffix = text_.substr(start, pos_ - start);
      } else if (text_.compare(pos_, 2, "^^") == 0) {
        pos_ += 2;
        suffix = "^^" + (peek() == '<' ? read_iri_ref() : read_pname());
        if (suffix == "^^<http://www.w3.org/2001/XMLSchema#string>") suffix.clear();
      }
      return literal_key(unescape(body), suffix);
    }
    return read_pname();
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
};

inline StringGraph reference_parse_turtle(const std::string& text) {
  return ReferenceTurtleReader(text).read();
}

}  // namespace eboca::testing
