#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eboca/rdf/term.hpp"
#include "eboca/util/date.hpp"
#include "eboca/vocab/model.hpp"

namespace eboca::evidence {

struct EntityMention {
  std::string surface;
  std::string normalized_id;
  vocab::ConceptKind kind;  // Disease, Drug or Gene
  std::optional<double> confidence;
};

struct ExpressionMeta {
  std::string expression_id;
  std::optional<std::string> title;
  std::optional<std::string> abstract;
  std::optional<rdf::Iri> url;
};

struct SoftwareMeta {
  std::string name;
  std::string version;
  std::optional<std::string> agent;  // person or organisation running it
};

struct ParagraphExtraction {
  std::string paragraph_id;
  std::string text;
  std::optional<std::string> section;
  ExpressionMeta expression;
  std::vector<EntityMention> entities;
  SoftwareMeta extractor;
  std::optional<util::Date> created_on;
};

enum class EvidenceKind { ComputationalInference, DocumentedStatement };

const rdf::Iri& eco_class(EvidenceKind kind);

struct EvidenceRecord {
  std::string evidence_id;
  EvidenceKind kind = EvidenceKind::ComputationalInference;
  util::Date created_on;
  std::optional<util::Date> updated_on;
  std::optional<std::string> version;
  std::optional<SoftwareMeta> software;
  std::optional<std::string> creator;
  std::optional<rdf::Iri> derived_from;
  std::optional<double> confidence;
};

// Throws ValidationError: documented statements need derived_from and
// confidence must lie in [0, 1].
void validate(const EvidenceRecord& record);

// Typing (eboca-ev:Evidence and the ECO class), association -> evidence
// link, provenance and optional confidence.
std::vector<rdf::Triple> evidence_to_triples(const EvidenceRecord& record, const rdf::Iri& association);

// Paragraph node with content, section and identifier, and the expression it
// is part of with title, abstract and URL.
std::vector<rdf::Triple> paragraph_to_triples(const ParagraphExtraction& paragraph);

rdf::Iri paragraph_iri(const ParagraphExtraction& paragraph);
rdf::Iri expression_iri(const ExpressionMeta& expression);
rdf::Iri software_iri(const SoftwareMeta& software);
rdf::Iri agent_iri(std::string_view name);

// Evidence for an association taken from a curated resource, e.g. a CTD
// record. `source` becomes the pav:derivedFrom target.
EvidenceRecord documented_statement(std::string evidence_id, rdf::Iri source, util::Date created_on,
                                    std::optional<std::string> version = std::nullopt);

}  // namespace eboca::evidence
