#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eboca/rdf/term.hpp"

namespace eboca::rdf {

// A triple pattern for Graph::match. Unset positions are wildcards.
struct Pattern {
  std::optional<Term> subject;
  std::optional<Iri> predicate;
  std::optional<Term> object;
};

// In-memory set of triples with one index per position.
//
// Terms are interned into a dictionary and triples stored as id triples, so
// the three indexes only hold 12-byte keys. Mutation is single-writer; const
// member functions never touch shared state and a graph that is no longer
// being modified can be matched from any number of threads.
class Graph {
 public:
  Graph() = default;

  // Returns true when the triple was not present before.
  bool insert(const Triple& triple);
  void insert_all(const Graph& other);
  template <typename Range>
  void insert_range(const Range& triples) {
    for (const auto& t : triples) insert(t);
  }

  bool contains(const Triple& triple) const;
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  // Every triple matching the bound positions of the pattern. The scan runs
  // over the smallest index bucket among the bound positions.
  std::vector<Triple> match(const Pattern& pattern) const;

  // Upper bound on match(pattern).size(): the smallest bucket among the
  // bound positions, or size() when nothing is bound.
  std::size_t estimate(const Pattern& pattern) const;

  // All triples, in no particular order.
  std::vector<Triple> triples() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const Key& k : triples_) fn(decode(k));
  }

  std::size_t distinct_subjects() const noexcept { return by_subject_.size(); }
  std::size_t distinct_predicates() const noexcept { return by_predicate_.size(); }
  std::size_t distinct_objects() const noexcept { return by_object_.size(); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  using Id = std::uint32_t;

  struct Key {
    Id s, p, o;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Id intern(const Term& term);
  std::optional<Id> lookup(const Term& term) const;
  Triple decode(const Key& k) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, Id, TermHash> ids_;
  std::unordered_set<Key, KeyHash> triples_;
  std::unordered_map<Id, std::vector<Key>> by_subject_;
  std::unordered_map<Id, std::vector<Key>> by_predicate_;
  std::unordered_map<Id, std::vector<Key>> by_object_;
};

}  // namespace eboca::rdf
