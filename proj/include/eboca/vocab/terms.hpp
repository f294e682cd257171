#pragma once

#include <string>
#include <string_view>

#include "eboca/rdf/term.hpp"

// Namespaces and the fixed IRIs referenced by emitters, validators and the
// query catalog. Every IRI here is also listed in the vocabulary catalog.
namespace eboca::vocab {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sio = "http://semanticscience.org/resource/";
inline constexpr std::string_view ncit = "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#";
inline constexpr std::string_view obo = "http://purl.obolibrary.org/obo/";
inline constexpr std::string_view ordo = "http://www.orpha.net/ORDO/";
inline constexpr std::string_view wp = "http://vocabularies.wikipathways.org/wp#";
inline constexpr std::string_view cco = "http://rdf.ebi.ac.uk/terms/chembl#";
inline constexpr std::string_view ctd = "http://bio2rdf.org/ctd_vocabulary:";
inline constexpr std::string_view sct = "http://snomed.info/id/";
inline constexpr std::string_view pav = "http://purl.org/pav/";
inline constexpr std::string_view dct = "http://purl.org/dc/terms/";
inline constexpr std::string_view foaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view prov = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view doco = "http://purl.org/spar/doco/";
inline constexpr std::string_view fabio = "http://purl.org/spar/fabio/";
inline constexpr std::string_view frbr = "http://purl.org/vocab/frbr/core#";
inline constexpr std::string_view c4o = "http://purl.org/spar/c4o/";
inline constexpr std::string_view eboca_sd = "https://w3id.org/eboca/sem-disnet#";
inline constexpr std::string_view eboca_ev = "https://w3id.org/eboca/evidences#";
inline constexpr std::string_view eboca = "https://w3id.org/eboca/";
inline constexpr std::string_view default_resource_base = "https://w3id.org/eboca/resource/";
}  // namespace ns

namespace detail {
inline rdf::Iri make(std::string_view ns, std::string_view local) {
  return rdf::Iri(std::string(ns) + std::string(local));
}
}  // namespace detail

namespace terms {
using detail::make;

inline const rdf::Iri rdf_type = make(ns::rdf, "type");
inline const rdf::Iri rdf_lang_string = make(ns::rdf, "langString");
inline const rdf::Iri rdfs_label = make(ns::rdfs, "label");
inline const rdf::Iri rdfs_comment = make(ns::rdfs, "comment");
inline const rdf::Iri rdfs_sub_class_of = make(ns::rdfs, "subClassOf");
inline const rdf::Iri rdfs_sub_property_of = make(ns::rdfs, "subPropertyOf");
inline const rdf::Iri rdfs_domain = make(ns::rdfs, "domain");
inline const rdf::Iri rdfs_range = make(ns::rdfs, "range");
inline const rdf::Iri rdfs_see_also = make(ns::rdfs, "seeAlso");
inline const rdf::Iri owl_class = make(ns::owl, "Class");
inline const rdf::Iri owl_object_property = make(ns::owl, "ObjectProperty");
inline const rdf::Iri owl_datatype_property = make(ns::owl, "DatatypeProperty");
inline const rdf::Iri owl_inverse_of = make(ns::owl, "inverseOf");
inline const rdf::Iri xsd_string = make(ns::xsd, "string");
inline const rdf::Iri xsd_double = make(ns::xsd, "double");
inline const rdf::Iri xsd_decimal = make(ns::xsd, "decimal");
inline const rdf::Iri xsd_integer = make(ns::xsd, "integer");
inline const rdf::Iri xsd_float = make(ns::xsd, "float");
inline const rdf::Iri xsd_date = make(ns::xsd, "date");
inline const rdf::Iri xsd_any_uri = make(ns::xsd, "anyURI");

// SEM-DISNET: association hub and links
inline const rdf::Iri association = make(ns::sio, "SIO_000897");
inline const rdf::Iri semantic_type = make(ns::sio, "SIO_000326");
inline const rdf::Iri disease_gene_association = make(ns::sio, "SIO_000983");
inline const rdf::Iri drug_drug_interaction = make(ns::sio, "SIO_001006");
inline const rdf::Iri phenotype_sio = make(ns::sio, "SIO_010056");
inline const rdf::Iri refers_to = make(ns::sio, "SIO_000628");
inline const rdf::Iri is_referred_to_by = make(ns::sio, "SIO_000212");
inline const rdf::Iri has_measurement_value = make(ns::sio, "SIO_000216");
inline const rdf::Iri has_value = make(ns::sio, "SIO_000300");
inline const rdf::Iri has_evidence = make(ns::sio, "SIO_000772");

// concept classes
inline const rdf::Iri disease = make(ns::ncit, "C7057");
inline const rdf::Iri disease_class = make(ns::obo, "HP_0000118");
inline const rdf::Iri disease_marker = make(ns::ncit, "C18329");
inline const rdf::Iri ncrna = make(ns::ncit, "C26549");
inline const rdf::Iri orphanet_association = make(ns::ordo, "Orphanet_557492");
inline const rdf::Iri score = make(ns::ncit, "C25338");
inline const rdf::Iri gene = make(ns::ncit, "C16612");
inline const rdf::Iri pathway = make(ns::wp, "Pathway");
inline const rdf::Iri variant = make(ns::obo, "SO_0001060");
inline const rdf::Iri protein = make(ns::ncit, "C17021");
inline const rdf::Iri protein_class = make(ns::obo, "PR_000000001");
inline const rdf::Iri protein_protein_interaction = make(ns::ncit, "C18469");
inline const rdf::Iri organism = make(ns::ncit, "C14250");
inline const rdf::Iri target = make(ns::cco, "Target");
inline const rdf::Iri drug = make(ns::cco, "Drug");
inline const rdf::Iri mechanism = make(ns::cco, "Mechanism");
inline const rdf::Iri drug_indication = make(ns::cco, "DrugIndication");
inline const rdf::Iri has_mechanism = make(ns::cco, "hasMechanism");
inline const rdf::Iri has_target = make(ns::cco, "hasTarget");
inline const rdf::Iri chemical_disease_association = make(ns::ctd, "Chemical-Disease-Association");
inline const rdf::Iri side_effect = make(ns::sct, "662014003");

// created SEM-DISNET terms
inline const rdf::Iri phenotype = make(ns::eboca_sd, "Phenotype");
inline const rdf::Iri disease_phenotype_association = make(ns::eboca_sd, "DiseasePhenotypeAssociation");
inline const rdf::Iri disease_variant_association = make(ns::eboca_sd, "DiseaseVariantAssociation");
inline const rdf::Iri disease_ncrna_association = make(ns::eboca_sd, "DiseaseNcRNAAssociation");
inline const rdf::Iri gene_variant_association = make(ns::eboca_sd, "GeneVariantAssociation");
inline const rdf::Iri gene_pathway_association = make(ns::eboca_sd, "GenePathwayAssociation");
inline const rdf::Iri drug_disease_marker = make(ns::eboca_sd, "DrugDiseaseMarker");
inline const rdf::Iri drug_disease_therapeutic = make(ns::eboca_sd, "DrugDiseaseTherapeutic");
inline const rdf::Iri drug_disease_inferred = make(ns::eboca_sd, "DrugDiseaseInferred");
inline const rdf::Iri drug_target_association = make(ns::eboca_sd, "DrugTargetAssociation");
inline const rdf::Iri drug_for_mechanism = make(ns::eboca_sd, "drugForMechanism");
inline const rdf::Iri mechanism_of_drug = make(ns::eboca_sd, "mechanismOfDrug");
inline const rdf::Iri mechanism_target = make(ns::eboca_sd, "mechanismTarget");
inline const rdf::Iri target_of_mechanism = make(ns::eboca_sd, "targetOfMechanism");

// Evidences
inline const rdf::Iri evidence = make(ns::eboca_ev, "Evidence");
inline const rdf::Iri confidence = make(ns::eboca_ev, "confidence");
inline const rdf::Iri section = make(ns::eboca_ev, "section");
inline const rdf::Iri computational_inference = make(ns::obo, "ECO_0007672");
inline const rdf::Iri documented_statement = make(ns::obo, "ECO_0006151");
inline const rdf::Iri derived_from = make(ns::pav, "derivedFrom");
inline const rdf::Iri created_on = make(ns::pav, "createdOn");
inline const rdf::Iri last_updated_on = make(ns::pav, "lastUpdateOn");
inline const rdf::Iri version = make(ns::pav, "version");
inline const rdf::Iri created_by = make(ns::pav, "createdBy");
inline const rdf::Iri created_with = make(ns::pav, "createdWith");
inline const rdf::Iri identifier = make(ns::dct, "identifier");
inline const rdf::Iri title = make(ns::dct, "title");
inline const rdf::Iri abstract = make(ns::dct, "abstract");
inline const rdf::Iri foaf_agent = make(ns::foaf, "Agent");
inline const rdf::Iri foaf_name = make(ns::foaf, "name");
inline const rdf::Iri software_agent = make(ns::prov, "SoftwareAgent");
inline const rdf::Iri paragraph = make(ns::doco, "Paragraph");
inline const rdf::Iri expression = make(ns::fabio, "Expression");
inline const rdf::Iri has_url = make(ns::fabio, "hasURL");
inline const rdf::Iri part_of = make(ns::frbr, "partOf");
inline const rdf::Iri has_content = make(ns::c4o, "hasContent");

}  // namespace terms
}  // namespace eboca::vocab
