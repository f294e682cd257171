#include "eboca/evidence/annotator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"

namespace eboca::evidence {

using vocab::AssociationKind;
using vocab::ConceptKind;
using vocab::ConceptRef;

namespace {

bool in_unit_interval(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

// Association kind and (source, target) order for a pair, or nullopt for
// pairs that produce nothing.
std::optional<std::tuple<AssociationKind, ConceptRef, ConceptRef>> classify(const ConceptRef& a, const ConceptRef& b) {
  auto has = [&](ConceptKind x, ConceptKind y) { return a.kind == x && b.kind == y; };
  if (has(ConceptKind::Drug, ConceptKind::Disease)) return std::tuple{AssociationKind::DrugDiseaseInferred, a, b};
  if (has(ConceptKind::Disease, ConceptKind::Drug)) return std::tuple{AssociationKind::DrugDiseaseInferred, b, a};
  if (has(ConceptKind::Disease, ConceptKind::Gene)) return std::tuple{AssociationKind::DiseaseGene, a, b};
  if (has(ConceptKind::Gene, ConceptKind::Disease)) return std::tuple{AssociationKind::DiseaseGene, b, a};
  if (has(ConceptKind::Drug, ConceptKind::Drug)) {
    return a.local_id < b.local_id ? std::tuple{AssociationKind::DrugDrugInteraction, a, b}
                                   : std::tuple{AssociationKind::DrugDrugInteraction, b, a};
  }
  return std::nullopt;
}

std::string content_id(const ParagraphExtraction& p, const ConceptRef& source, const ConceptRef& target) {
  std::string key = p.paragraph_id;
  key += '\x1f';
  key += vocab::name(source.kind);
  key += ':';
  key += source.local_id;
  key += '\x1f';
  key += vocab::name(target.kind);
  key += ':';
  key += target.local_id;
  key += '\x1f';
  key += p.extractor.version;
  return util::hex64(util::fnv1a64(key));
}

}  // namespace

Extraction extract_associations(const ParagraphExtraction& paragraph, std::optional<util::Date> default_date) {
  const std::optional<util::Date> date = paragraph.created_on ? paragraph.created_on : default_date;
  if (!date) {
    throw InvalidArgument("paragraph '" + paragraph.paragraph_id + "': no created_on and no default date");
  }
  Extraction out;

  std::map<std::pair<ConceptKind, std::string>, std::optional<double>> entities;
  for (const auto& mention : paragraph.entities) {
    if (mention.kind != ConceptKind::Disease && mention.kind != ConceptKind::Drug && mention.kind != ConceptKind::Gene) {
      throw InvalidArgument("paragraph '" + paragraph.paragraph_id + "': entity kind " +
                            std::string(vocab::name(mention.kind)) + " is not Disease, Drug or Gene");
    }
    if (mention.confidence && !in_unit_interval(*mention.confidence)) {
      throw InvalidArgument("paragraph '" + paragraph.paragraph_id + "': confidence of '" + mention.surface +
                            "' outside [0, 1]");
    }
    if (mention.normalized_id.empty()) {
      out.warnings.push_back({paragraph.paragraph_id, "entity '" + mention.surface + "' has no normalized id; skipped"});
      continue;
    }
    auto [it, added] = entities.emplace(std::pair{mention.kind, mention.normalized_id}, mention.confidence);
    if (!added && mention.confidence) it->second = std::max(it->second.value_or(0.0), *mention.confidence);
  }

  std::vector<std::pair<ConceptRef, std::optional<double>>> list;
  for (const auto& [key, confidence] : entities) {
    list.push_back({ConceptRef{key.first, key.second}, confidence});
    out.entities.push_back(ConceptRef{key.first, key.second});
  }

  const rdf::Iri derived_from = paragraph_iri(paragraph);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const auto pair = classify(list[i].first, list[j].first);
      if (!pair) continue;
      const auto& [kind, source, target] = *pair;
      const std::string id = content_id(paragraph, source, target);

      vocab::AssociationRecord association{kind, source, target, std::nullopt, id};
      vocab::validate(association);

      std::optional<double> confidence;
      if (list[i].second && list[j].second) confidence = std::min(*list[i].second, *list[j].second);
      EvidenceRecord evidence{
          .evidence_id = id,
          .kind = EvidenceKind::ComputationalInference,
          .created_on = *date,
          .updated_on = std::nullopt,
          .version = paragraph.extractor.version.empty() ? std::nullopt
                                                         : std::optional<std::string>(paragraph.extractor.version),
          .software = paragraph.extractor,
          .creator = paragraph.extractor.agent,
          .derived_from = derived_from,
          .confidence = confidence,
      };
      out.associations.emplace_back(std::move(association), std::move(evidence));
    }
  }
  return out;
}

namespace {

struct ChunkResult {
  std::vector<rdf::Triple> triples;
  std::vector<Warning> warnings;
  std::size_t associations = 0;
};

ChunkResult annotate_range(const std::vector<ParagraphExtraction>& batch, std::size_t begin, std::size_t end,
                           const std::unordered_map<std::string, const ExpressionMeta*>& expressions,
                           const std::optional<util::Date>& default_date) {
  ChunkResult out;
  auto append = [&](std::vector<rdf::Triple>&& ts) {
    for (auto& t : ts) out.triples.push_back(std::move(t));
  };
  for (std::size_t i = begin; i < end; ++i) {
    const ParagraphExtraction& p = batch[i];
    ParagraphExtraction canonical = p;
    canonical.expression = *expressions.at(p.expression.expression_id);
    append(paragraph_to_triples(canonical));

    Extraction ex = extract_associations(p, default_date);
    for (const auto& ref : ex.entities) append(vocab::concept_to_triples(vocab::ConceptEntity{ref.kind, ref.local_id, {}, {}, {}}));
    for (const auto& [association, evidence] : ex.associations) {
      append(vocab::association_to_triples(association));
      append(evidence_to_triples(evidence, vocab::mint_iri(association.kind, association.local_id)));
    }
    out.associations += ex.associations.size();
    for (auto& w : ex.warnings) out.warnings.push_back(std::move(w));
  }
  return out;
}

}  // namespace

AnnotateResult annotate(const std::vector<ParagraphExtraction>& batch, const AnnotateOptions& options) {
  std::set<std::string_view> ids;
  std::unordered_map<std::string, const ExpressionMeta*> expressions;
  for (const auto& p : batch) {
    if (!ids.insert(p.paragraph_id).second) {
      throw InvalidArgument("duplicate paragraph id '" + p.paragraph_id + "' in batch");
    }
    expressions.emplace(p.expression.expression_id, &p.expression);  // first one wins
  }

  std::size_t chunks = 1;
  if (options.parallel) {
    chunks = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    chunks = std::min(chunks, std::max<std::size_t>(1, batch.size() / 64));
  }
  std::vector<std::future<ChunkResult>> futures;
  const std::size_t per_chunk = (batch.size() + chunks - 1) / std::max<std::size_t>(chunks, 1);
  for (std::size_t begin = 0; begin < batch.size(); begin += per_chunk) {
    const std::size_t end = std::min(batch.size(), begin + per_chunk);
    futures.push_back(std::async(chunks > 1 ? std::launch::async : std::launch::deferred,
                                 [&, begin, end] { return annotate_range(batch, begin, end, expressions, options.default_date); }));
  }

  // Merging happens on this thread in chunk order.
  AnnotateResult result;
  for (auto& f : futures) {
    ChunkResult chunk = f.get();
    for (const auto& t : chunk.triples) result.graph.insert(t);
    for (auto& w : chunk.warnings) result.warnings.push_back(std::move(w));
    result.associations += chunk.associations;
  }
  return result;
}

}  // namespace eboca::evidence
