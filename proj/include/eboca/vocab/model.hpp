#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eboca/rdf/graph.hpp"
#include "eboca/rdf/term.hpp"

namespace eboca::vocab {

enum class ConceptKind {
  Disease,
  Gene,
  Protein,
  ProteinClass,
  Variant,
  Pathway,
  Drug,
  Phenotype,
  Target,
  Organism,
  NcRNA,
};

enum class AssociationKind {
  DiseaseGene,
  DiseaseVariant,
  DiseasePhenotype,
  DrugDiseaseMarker,
  DrugDiseaseTherapeutic,
  DrugDiseaseInferred,
  DrugTargetMechanism,
  DrugIndication,
  SideEffect,
  DrugDrugInteraction,
  GeneVariant,
  GenePathway,
  ProteinProteinInteraction,
  DiseaseNcRNA,
};

// Non-concept nodes that still need stable identifiers.
enum class ResourceKind { Evidence, Paragraph, Expression, Score, Software, Agent };

std::span<const ConceptKind> all_concept_kinds();
std::span<const AssociationKind> all_association_kinds();

std::string_view name(ConceptKind kind);
std::string_view name(AssociationKind kind);
std::optional<ConceptKind> parse_concept_kind(std::string_view name);
std::optional<AssociationKind> parse_association_kind(std::string_view name);

// URL path segment used when minting instance IRIs.
std::string_view slug(ConceptKind kind);
std::string_view slug(AssociationKind kind);
std::string_view slug(ResourceKind kind);

const rdf::Iri& class_of(ConceptKind kind);
const rdf::Iri& class_of(AssociationKind kind);
std::optional<ConceptKind> concept_kind_of_class(std::string_view class_iri);
std::optional<AssociationKind> association_kind_of_class(std::string_view class_iri);

// The two concept kinds an association links. Order is the conventional
// (source, target) order but compatibility is checked unordered.
std::pair<ConceptKind, ConceptKind> endpoint_kinds(AssociationKind kind);
bool endpoints_compatible(AssociationKind kind, ConceptKind a, ConceptKind b);

// Predicate from an association node to an endpoint of the given kind:
// sio:SIO_000628 unless the association kind has a specialised subproperty.
const rdf::Iri& endpoint_predicate(AssociationKind kind, ConceptKind endpoint);
// All predicates endpoint_predicate can return.
bool is_endpoint_predicate(std::string_view predicate_iri);

// Instance namespace. Defaults to https://w3id.org/eboca/resource/ and can be
// overridden once per process with the EBOCA_BASE_IRI environment variable.
const std::string& resource_base();

// {base}{kind-slug}/{percent-encoded local_id}. Throws InvalidArgument for an
// empty local_id.
rdf::Iri mint_iri(ConceptKind kind, std::string_view local_id);
rdf::Iri mint_iri(AssociationKind kind, std::string_view local_id);
rdf::Iri mint_iri(ResourceKind kind, std::string_view local_id);

struct ConceptRef {
  ConceptKind kind;
  std::string local_id;

  rdf::Iri iri() const { return mint_iri(kind, local_id); }
  friend bool operator==(const ConceptRef&, const ConceptRef&) = default;
};

struct Attribute {
  rdf::Iri property;  // must be a catalog term
  rdf::Literal value;
};

struct ConceptEntity {
  ConceptKind kind;
  std::string local_id;
  std::optional<std::string> name;
  std::vector<rdf::Iri> linkouts;
  std::vector<Attribute> attributes;

  ConceptRef ref() const { return {kind, local_id}; }
};

struct AssociationRecord {
  AssociationKind kind;
  ConceptRef source;
  ConceptRef target;
  std::optional<double> score;
  std::string local_id;
};

// Throws ValidationError on incompatible endpoint kinds, identical
// endpoints, or a score outside [0, 1]; InvalidArgument on empty ids.
void validate(const AssociationRecord& record);

rdf::Iri score_iri(AssociationKind kind, std::string_view association_local_id);

// rdf:type to the kind's class, rdfs:label when named, one triple per
// attribute, one rdfs:seeAlso per linkout.
std::vector<rdf::Triple> concept_to_triples(const ConceptEntity& entity);

// rdf:type to the most specific class, one link per endpoint, and when a
// score is present a ncit:C25338 node carrying it as xsd:double.
std::vector<rdf::Triple> association_to_triples(const AssociationRecord& record);

// Class and property hierarchy, annotations, domains and ranges for every
// created term, plus declarations of the reused terms they hang from.
rdf::Graph emit_ontology_axioms();

}  // namespace eboca::vocab
