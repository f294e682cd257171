#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "eboca/rdf/graph.hpp"
#include "reference_rdf.hpp"

#ifndef EBOCA_DATA_DIR
#define EBOCA_DATA_DIR "data"
#endif

namespace eboca::testing {

inline std::filesystem::path data_dir() { return EBOCA_DATA_DIR; }

// Library term -> reference key, built from term accessors only.
inline std::string key_of(const rdf::Term& t) {
  if (const auto* i = std::get_if<rdf::Iri>(&t)) return "<" + i->str() + ">";
  if (const auto* b = std::get_if<rdf::BlankNode>(&t)) return "_:" + b->label();
  const auto& l = std::get<rdf::Literal>(t);
  std::string suffix;
  if (l.has_language()) suffix = "@" + l.language();
  else if (l.datatype().str() != rdf::kXsdString) suffix = "^^<" + l.datatype().str() + ">";
  return literal_key(l.lexical(), suffix);
}

// Library graph -> reference string graph.
inline StringGraph keys_of(const rdf::Graph& g) {
  const auto key = [](const rdf::Term& t) { return key_of(t); };
  StringGraph out;
  g.for_each([&](const rdf::Triple& t) { out.emplace(key(t.subject()), key(t.predicate()), key(t.object())); });
  return out;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("eboca-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path write(const std::string& name, const std::string& contents) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

 private:
  std::filesystem::path path_;
};

// Random graphs for round-trip properties: small vocabularies so that
// collisions and shared terms are common, and literals full of characters
// that need escaping.
class GraphGenerator {
 public:
  explicit GraphGenerator(std::uint32_t seed) : rng_(seed) {}

  rdf::Iri iri() {
    static const char* kBases[] = {"http://example.org/", "https://w3id.org/eboca/resource/disease/",
                                   "urn:x:", "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#"};
    std::string v = kBases[pick(4)];
    v += "n" + std::to_string(pick(40));
    if (pick(4) == 0) v += "%20%C3%A9";
    if (pick(5) == 0) v += "/\xC3\xA9t\xC3\xA9";
    return rdf::Iri(v);
  }

  std::string text() {
    static const char* kPieces[] = {"a", "Diabetes", " ", "\"", "\\", "\n", "\r", "\t", "\b", "\f",
                                    "\x01", "\x7f", "\xC3\xA9", "\xE2\x82\xAC", "\xF0\x9F\x98\x80",
                                    "'", "<>", "#", ".", "_:x", "^^", "@en"};
    std::string s;
    const std::size_t n = pick(8);
    for (std::size_t i = 0; i < n; ++i) s += kPieces[pick(sizeof kPieces / sizeof *kPieces)];
    return s;
  }

  rdf::Term object() {
    switch (pick(6)) {
      case 0: return rdf::BlankNode("b" + std::to_string(pick(10)));
      case 1: return rdf::Literal(text());
      case 2: return rdf::Literal::with_language(text(), pick(2) ? "en" : "es-ES");
      case 3: return rdf::Literal(text(), pick(2) ? rdf::Iri("http://www.w3.org/2001/XMLSchema#double") : iri());
      default: return iri();
    }
  }

  rdf::Triple triple() {
    rdf::Term s = pick(5) == 0 ? rdf::Term(rdf::BlankNode("b" + std::to_string(pick(10)))) : rdf::Term(iri());
    return rdf::Triple(std::move(s), iri(), object());
  }

  rdf::Graph graph(std::size_t max_triples) {
    rdf::Graph g;
    const std::size_t n = pick(max_triples + 1);
    for (std::size_t i = 0; i < n; ++i) g.insert(triple());
    return g;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace eboca::testing
