#include <initializer_list>
#include <string>

#include "eboca/vocab/catalog.hpp"
#include "eboca/vocab/model.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::vocab {

namespace {

class AxiomWriter {
 public:
  explicit AxiomWriter(rdf::Graph& g) : g_(g) {}

  void add(const rdf::Iri& s, const rdf::Iri& p, const rdf::Term& o) { g_.insert(rdf::Triple(s, p, o)); }

  // Reused term: declaration plus the label the catalog knows for it.
  void reuse(const rdf::Iri& term, const rdf::Iri& type) {
    add(term, terms::rdf_type, type);
    if (const auto* t = find_term(term.str()); t && !t->label.empty()) {
      add(term, terms::rdfs_label, rdf::Literal::with_language(t->label, "en"));
    }
  }

  void created(const rdf::Iri& term, const rdf::Iri& type, std::string_view comment) {
    reuse(term, type);
    add(term, terms::rdfs_comment, rdf::Literal::with_language(std::string(comment), "en"));
  }

  void created_class(const rdf::Iri& term, std::initializer_list<const rdf::Iri*> parents,
                     std::string_view comment) {
    created(term, terms::owl_class, comment);
    for (const auto* p : parents) add(term, terms::rdfs_sub_class_of, *p);
  }

  void created_property(const rdf::Iri& term, const rdf::Iri& type, const rdf::Iri& domain,
                        const rdf::Iri& range, std::initializer_list<const rdf::Iri*> parents,
                        std::string_view comment) {
    created(term, type, comment);
    add(term, terms::rdfs_domain, domain);
    add(term, terms::rdfs_range, range);
    for (const auto* p : parents) add(term, terms::rdfs_sub_property_of, *p);
  }

 private:
  rdf::Graph& g_;
};

}  // namespace

rdf::Graph emit_ontology_axioms() {
  rdf::Graph g;
  AxiomWriter w(g);
  using namespace terms;

  for (const auto kind : all_concept_kinds()) {
    if (kind != ConceptKind::Phenotype) w.reuse(class_of(kind), owl_class);
  }
  for (const auto* reused : {&association, &disease_gene_association, &drug_drug_interaction,
                             &chemical_disease_association, &mechanism, &drug_indication, &side_effect,
                             &protein_protein_interaction, &orphanet_association, &phenotype_sio,
                             &score, &disease_class, &disease_marker, &semantic_type}) {
    w.reuse(*reused, owl_class);
  }
  for (const auto* reused : {&refers_to, &is_referred_to_by, &has_mechanism, &has_target}) {
    w.reuse(*reused, owl_object_property);
  }
  w.add(refers_to, owl_inverse_of, is_referred_to_by);

  // Association hierarchy. Every association class reaches sio:SIO_000897.
  for (const auto* reused : {&disease_gene_association, &drug_drug_interaction, &chemical_disease_association,
                             &drug_indication, &side_effect, &protein_protein_interaction,
                             &orphanet_association}) {
    w.add(*reused, rdfs_sub_class_of, association);
  }

  w.created_class(phenotype, {&phenotype_sio},
                  "Observable characteristic of a patient gathered from text-mined disease descriptions.");
  w.created_class(disease_phenotype_association, {&association},
                  "Association between a disease and one of its phenotypes.");
  w.created_class(disease_variant_association, {&association},
                  "Scored association between a disease and a genetic variant.");
  w.created_class(disease_ncrna_association, {&association},
                  "Association between a disease and a non-coding RNA.");
  w.created_class(gene_variant_association, {&association},
                  "Association between a gene and one of its variants.");
  w.created_class(gene_pathway_association, {&association},
                  "Participation of a gene in a biological pathway.");
  w.created_class(drug_disease_marker, {&chemical_disease_association},
                  "Drug-disease association where the chemical correlates with the disease.");
  w.created_class(drug_disease_therapeutic, {&chemical_disease_association},
                  "Drug-disease association where the drug is used to treat the disease.");
  w.created_class(drug_disease_inferred, {&chemical_disease_association},
                  "Drug-disease association that has been inferred rather than curated.");
  w.created_class(drug_target_association, {&mechanism, &association},
                  "Mechanism of action of a drug when it addresses a target.");

  w.created_property(drug_for_mechanism, owl_object_property, drug, drug_target_association,
                     {&has_mechanism, &is_referred_to_by}, "Links a drug to the mechanism association it takes part in.");
  w.created_property(mechanism_of_drug, owl_object_property, drug_target_association, drug, {&refers_to},
                     "Links a drug-target association to its drug.");
  w.created_property(mechanism_target, owl_object_property, drug_target_association, target,
                     {&has_target, &refers_to}, "Links a drug-target association to its target.");
  w.created_property(target_of_mechanism, owl_object_property, target, drug_target_association,
                     {&is_referred_to_by}, "Links a target to the drug-target associations addressing it.");
  w.add(drug_for_mechanism, owl_inverse_of, mechanism_of_drug);
  w.add(mechanism_target, owl_inverse_of, target_of_mechanism);

  w.created_class(evidence, {}, "Support for an association, with its provenance and metadata.");
  w.created_property(confidence, owl_datatype_property, evidence, xsd_double, {},
                     "Confidence in [0,1] reported by the method that produced the evidence.");
  w.created_property(section, owl_datatype_property, paragraph, xsd_string, {},
                     "Title of the document section a paragraph belongs to.");
  return g;
}

}  // namespace eboca::vocab
