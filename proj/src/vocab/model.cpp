#include "eboca/vocab/model.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"
#include "eboca/vocab/catalog.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::vocab {

namespace {

struct ConceptInfo {
  ConceptKind kind;
  std::string_view name;
  std::string_view slug;
  const rdf::Iri* klass;
};

struct AssociationInfo {
  AssociationKind kind;
  std::string_view name;
  std::string_view slug;
  const rdf::Iri* klass;
  ConceptKind source;
  ConceptKind target;
};

const std::array<ConceptInfo, 11>& concept_table() {
  static const std::array<ConceptInfo, 11> table{{
      {ConceptKind::Disease, "Disease", "disease", &terms::disease},
      {ConceptKind::Gene, "Gene", "gene", &terms::gene},
      {ConceptKind::Protein, "Protein", "protein", &terms::protein},
      {ConceptKind::ProteinClass, "ProteinClass", "protein-class", &terms::protein_class},
      {ConceptKind::Variant, "Variant", "variant", &terms::variant},
      {ConceptKind::Pathway, "Pathway", "pathway", &terms::pathway},
      {ConceptKind::Drug, "Drug", "drug", &terms::drug},
      {ConceptKind::Phenotype, "Phenotype", "phenotype", &terms::phenotype},
      {ConceptKind::Target, "Target", "target", &terms::target},
      {ConceptKind::Organism, "Organism", "organism", &terms::organism},
      {ConceptKind::NcRNA, "NcRNA", "ncrna", &terms::ncrna},
  }};
  return table;
}

// Endpoint pairs follow the edges of the SEM-DISNET conceptual model.
const std::array<AssociationInfo, 14>& association_table() {
  using C = ConceptKind;
  using A = AssociationKind;
  static const std::array<AssociationInfo, 14> table{{
      {A::DiseaseGene, "DiseaseGene", "disease-gene-association", &terms::disease_gene_association, C::Disease, C::Gene},
      {A::DiseaseVariant, "DiseaseVariant", "disease-variant-association", &terms::disease_variant_association, C::Disease, C::Variant},
      {A::DiseasePhenotype, "DiseasePhenotype", "disease-phenotype-association", &terms::disease_phenotype_association, C::Disease, C::Phenotype},
      {A::DrugDiseaseMarker, "DrugDiseaseMarker", "drug-disease-marker", &terms::drug_disease_marker, C::Drug, C::Disease},
      {A::DrugDiseaseTherapeutic, "DrugDiseaseTherapeutic", "drug-disease-therapeutic", &terms::drug_disease_therapeutic, C::Drug, C::Disease},
      {A::DrugDiseaseInferred, "DrugDiseaseInferred", "drug-disease-inferred", &terms::drug_disease_inferred, C::Drug, C::Disease},
      {A::DrugTargetMechanism, "DrugTargetMechanism", "drug-target-mechanism", &terms::drug_target_association, C::Drug, C::Target},
      {A::DrugIndication, "DrugIndication", "drug-indication", &terms::drug_indication, C::Drug, C::Phenotype},
      {A::SideEffect, "SideEffect", "side-effect", &terms::side_effect, C::Drug, C::Phenotype},
      {A::DrugDrugInteraction, "DrugDrugInteraction", "drug-drug-interaction", &terms::drug_drug_interaction, C::Drug, C::Drug},
      {A::GeneVariant, "GeneVariant", "gene-variant-association", &terms::gene_variant_association, C::Gene, C::Variant},
      {A::GenePathway, "GenePathway", "gene-pathway-association", &terms::gene_pathway_association, C::Gene, C::Pathway},
      {A::ProteinProteinInteraction, "ProteinProteinInteraction", "protein-protein-interaction", &terms::protein_protein_interaction, C::Protein, C::Protein},
      {A::DiseaseNcRNA, "DiseaseNcRNA", "disease-ncrna-association", &terms::disease_ncrna_association, C::Disease, C::NcRNA},
  }};
  return table;
}

constexpr std::array<ConceptKind, 11> kConceptKinds{
    ConceptKind::Disease, ConceptKind::Gene,      ConceptKind::Protein, ConceptKind::ProteinClass,
    ConceptKind::Variant, ConceptKind::Pathway,   ConceptKind::Drug,    ConceptKind::Phenotype,
    ConceptKind::Target,  ConceptKind::Organism,  ConceptKind::NcRNA,
};

constexpr std::array<AssociationKind, 14> kAssociationKinds{
    AssociationKind::DiseaseGene,         AssociationKind::DiseaseVariant,
    AssociationKind::DiseasePhenotype,    AssociationKind::DrugDiseaseMarker,
    AssociationKind::DrugDiseaseTherapeutic, AssociationKind::DrugDiseaseInferred,
    AssociationKind::DrugTargetMechanism, AssociationKind::DrugIndication,
    AssociationKind::SideEffect,          AssociationKind::DrugDrugInteraction,
    AssociationKind::GeneVariant,         AssociationKind::GenePathway,
    AssociationKind::ProteinProteinInteraction, AssociationKind::DiseaseNcRNA,
};

const ConceptInfo& info(ConceptKind k) { return concept_table()[static_cast<std::size_t>(k)]; }
const AssociationInfo& info(AssociationKind k) { return association_table()[static_cast<std::size_t>(k)]; }

rdf::Iri mint(std::string_view slug, std::string_view local_id) {
  if (local_id.empty()) throw InvalidArgument("cannot mint an IRI from an empty local id");
  std::string value = resource_base();
  value += slug;
  value.push_back('/');
  value += util::percent_encode(local_id);
  return rdf::Iri(std::move(value));
}

rdf::Triple type_triple(const rdf::Iri& subject, const rdf::Iri& klass) {
  return rdf::Triple(subject, terms::rdf_type, klass);
}

}  // namespace

std::span<const ConceptKind> all_concept_kinds() { return kConceptKinds; }
std::span<const AssociationKind> all_association_kinds() { return kAssociationKinds; }

std::string_view name(ConceptKind kind) { return info(kind).name; }
std::string_view name(AssociationKind kind) { return info(kind).name; }

std::optional<ConceptKind> parse_concept_kind(std::string_view n) {
  for (const auto& i : concept_table())
    if (i.name == n) return i.kind;
  return std::nullopt;
}

std::optional<AssociationKind> parse_association_kind(std::string_view n) {
  for (const auto& i : association_table())
    if (i.name == n) return i.kind;
  return std::nullopt;
}

std::string_view slug(ConceptKind kind) { return info(kind).slug; }
std::string_view slug(AssociationKind kind) { return info(kind).slug; }

std::string_view slug(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Evidence: return "evidence";
    case ResourceKind::Paragraph: return "paragraph";
    case ResourceKind::Expression: return "expression";
    case ResourceKind::Score: return "score";
    case ResourceKind::Software: return "software";
    case ResourceKind::Agent: return "agent";
  }
  return "resource";
}

const rdf::Iri& class_of(ConceptKind kind) { return *info(kind).klass; }
const rdf::Iri& class_of(AssociationKind kind) { return *info(kind).klass; }

std::optional<ConceptKind> concept_kind_of_class(std::string_view class_iri) {
  for (const auto& i : concept_table())
    if (i.klass->str() == class_iri) return i.kind;
  return std::nullopt;
}

std::optional<AssociationKind> association_kind_of_class(std::string_view class_iri) {
  for (const auto& i : association_table())
    if (i.klass->str() == class_iri) return i.kind;
  return std::nullopt;
}

std::pair<ConceptKind, ConceptKind> endpoint_kinds(AssociationKind kind) {
  return {info(kind).source, info(kind).target};
}

bool endpoints_compatible(AssociationKind kind, ConceptKind a, ConceptKind b) {
  const auto [s, t] = endpoint_kinds(kind);
  return (a == s && b == t) || (a == t && b == s);
}

const rdf::Iri& endpoint_predicate(AssociationKind kind, ConceptKind endpoint) {
  if (kind == AssociationKind::DrugTargetMechanism) {
    if (endpoint == ConceptKind::Drug) return terms::mechanism_of_drug;
    if (endpoint == ConceptKind::Target) return terms::mechanism_target;
  }
  return terms::refers_to;
}

bool is_endpoint_predicate(std::string_view p) {
  return p == terms::refers_to.str() || p == terms::mechanism_of_drug.str() ||
         p == terms::mechanism_target.str();
}

const std::string& resource_base() {
  static const std::string base = [] {
    const char* env = std::getenv("EBOCA_BASE_IRI");
    if (env == nullptr || *env == '\0') return std::string(ns::default_resource_base);
    std::string value(env);
    if (!rdf::Iri::is_valid(value) || (value.back() != '/' && value.back() != '#')) {
      throw InvalidArgument("EBOCA_BASE_IRI must be an absolute IRI ending in '/' or '#'");
    }
    return value;
  }();
  return base;
}

rdf::Iri mint_iri(ConceptKind kind, std::string_view local_id) { return mint(slug(kind), local_id); }
rdf::Iri mint_iri(AssociationKind kind, std::string_view local_id) { return mint(slug(kind), local_id); }
rdf::Iri mint_iri(ResourceKind kind, std::string_view local_id) { return mint(slug(kind), local_id); }

rdf::Iri score_iri(AssociationKind kind, std::string_view association_local_id) {
  if (association_local_id.empty()) throw InvalidArgument("cannot mint a score IRI from an empty association id");
  // Association slugs never extend one another with '-', so this stays injective.
  return mint_iri(ResourceKind::Score, std::string(slug(kind)) + "-" + std::string(association_local_id));
}

void validate(const AssociationRecord& r) {
  if (r.local_id.empty()) throw InvalidArgument("association local id is empty");
  if (r.source.local_id.empty() || r.target.local_id.empty()) {
    throw InvalidArgument("association '" + r.local_id + "' has an endpoint with an empty id");
  }
  if (!endpoints_compatible(r.kind, r.source.kind, r.target.kind)) {
    const auto [s, t] = endpoint_kinds(r.kind);
    throw ValidationError("association '" + r.local_id + "' of kind " + std::string(name(r.kind)) +
                          " expects endpoints " + std::string(name(s)) + " and " + std::string(name(t)) +
                          ", got " + std::string(name(r.source.kind)) + " and " +
                          std::string(name(r.target.kind)));
  }
  if (r.source == r.target) {
    throw ValidationError("association '" + r.local_id + "' links a concept to itself");
  }
  if (r.score && !(std::isfinite(*r.score) && *r.score >= 0.0 && *r.score <= 1.0)) {
    throw ValidationError("association '" + r.local_id + "' has score outside [0,1]");
  }
}

std::vector<rdf::Triple> concept_to_triples(const ConceptEntity& c) {
  const rdf::Iri subject = mint_iri(c.kind, c.local_id);
  std::vector<rdf::Triple> out;
  out.reserve(2 + c.attributes.size() + c.linkouts.size());
  out.push_back(type_triple(subject, class_of(c.kind)));
  if (c.name) out.emplace_back(subject, terms::rdfs_label, rdf::Literal(*c.name));
  for (const auto& a : c.attributes) {
    if (!in_catalog(a.property.str())) {
      throw InvalidArgument("attribute property <" + a.property.str() + "> is not a vocabulary term");
    }
    out.emplace_back(subject, a.property, a.value);
  }
  for (const auto& link : c.linkouts) out.emplace_back(subject, terms::rdfs_see_also, link);
  return out;
}

std::vector<rdf::Triple> association_to_triples(const AssociationRecord& r) {
  validate(r);
  const rdf::Iri node = mint_iri(r.kind, r.local_id);
  std::vector<rdf::Triple> out;
  out.push_back(type_triple(node, class_of(r.kind)));
  out.emplace_back(node, endpoint_predicate(r.kind, r.source.kind), r.source.iri());
  out.emplace_back(node, endpoint_predicate(r.kind, r.target.kind), r.target.iri());
  if (r.score) {
    const rdf::Iri s = score_iri(r.kind, r.local_id);
    out.emplace_back(node, terms::has_measurement_value, s);
    out.push_back(type_triple(s, terms::score));
    out.emplace_back(s, terms::has_value, rdf::Literal(util::shortest_double(*r.score + 0.0), terms::xsd_double));
  }
  return out;
}

}  // namespace eboca::vocab
