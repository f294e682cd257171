#include "eboca/rdf/graph.hpp"

#include <limits>

#include "eboca/error.hpp"

namespace eboca::rdf {

std::size_t Graph::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = k.s;
  h = h * 0x9E3779B97F4A7C15ULL + k.p;
  h = h * 0x9E3779B97F4A7C15ULL + k.o;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Graph::Id Graph::intern(const Term& term) {
  if (auto it = ids_.find(term); it != ids_.end()) return it->second;
  if (terms_.size() >= std::numeric_limits<Id>::max()) throw Error("term dictionary full");
  const Id id = static_cast<Id>(terms_.size());
  terms_.push_back(term);
  ids_.emplace(term, id);
  return id;
}

std::optional<Graph::Id> Graph::lookup(const Term& term) const {
  if (auto it = ids_.find(term); it != ids_.end()) return it->second;
  return std::nullopt;
}

Triple Graph::decode(const Key& k) const {
  return Triple(terms_[k.s], std::get<Iri>(terms_[k.p]), terms_[k.o]);
}

bool Graph::insert(const Triple& triple) {
  const Key key{intern(triple.subject()), intern(triple.predicate()), intern(triple.object())};
  if (!triples_.insert(key).second) return false;
  by_subject_[key.s].push_back(key);
  by_predicate_[key.p].push_back(key);
  by_object_[key.o].push_back(key);
  return true;
}

void Graph::insert_all(const Graph& other) {
  other.for_each([this](const Triple& t) { insert(t); });
}

bool Graph::contains(const Triple& triple) const {
  const auto s = lookup(triple.subject());
  const auto p = lookup(triple.predicate());
  const auto o = lookup(triple.object());
  if (!s || !p || !o) return false;
  return triples_.count(Key{*s, *p, *o}) != 0;
}

std::vector<Triple> Graph::match(const Pattern& pattern) const {
  std::optional<Id> s, p, o;
  if (pattern.subject && !(s = lookup(*pattern.subject))) return {};
  if (pattern.predicate && !(p = lookup(*pattern.predicate))) return {};
  if (pattern.object && !(o = lookup(*pattern.object))) return {};

  std::vector<Triple> out;
  if (s && p && o) {
    if (triples_.count(Key{*s, *p, *o})) out.push_back(decode(Key{*s, *p, *o}));
    return out;
  }

  const std::vector<Key>* bucket = nullptr;
  auto consider = [&bucket](const std::unordered_map<Id, std::vector<Key>>& index, std::optional<Id> id) {
    if (!id) return;
    const auto it = index.find(*id);
    // Every interned term used in a bound position of an existing triple has a
    // bucket; a term only seen in another position yields an empty match.
    static const std::vector<Key> kEmpty;
    const std::vector<Key>* b = it == index.end() ? &kEmpty : &it->second;
    if (!bucket || b->size() < bucket->size()) bucket = b;
  };
  consider(by_subject_, s);
  consider(by_predicate_, p);
  consider(by_object_, o);

  if (!bucket) {
    out.reserve(triples_.size());
    for (const Key& k : triples_) out.push_back(decode(k));
    return out;
  }
  for (const Key& k : *bucket) {
    if ((s && k.s != *s) || (p && k.p != *p) || (o && k.o != *o)) continue;
    out.push_back(decode(k));
  }
  return out;
}

std::size_t Graph::estimate(const Pattern& pattern) const {
  std::size_t best = triples_.size();
  auto consider = [&](const std::unordered_map<Id, std::vector<Key>>& index, const Term& term) {
    const auto id = lookup(term);
    if (!id) {
      best = 0;
      return;
    }
    const auto it = index.find(*id);
    best = std::min(best, it == index.end() ? std::size_t{0} : it->second.size());
  };
  if (pattern.subject) consider(by_subject_, *pattern.subject);
  if (pattern.predicate) consider(by_predicate_, Term(*pattern.predicate));
  if (pattern.object) consider(by_object_, *pattern.object);
  return best;
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const Key& k : triples_) out.push_back(decode(k));
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  bool same = true;
  a.for_each([&](const Triple& t) {
    if (same && !b.contains(t)) same = false;
  });
  return same;
}

}  // namespace eboca::rdf
