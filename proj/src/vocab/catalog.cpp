#include "eboca/vocab/catalog.hpp"

#include <algorithm>
#include <unordered_map>

#include "eboca/vocab/model.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::vocab {

namespace {

struct Row {
  std::string_view prefix;
  std::string_view ns;
  std::string_view local;
  std::string_view label;
};

constexpr Row kRows[] = {
    {"rdf", ns::rdf, "type", "type"},
    {"rdf", ns::rdf, "langString", "langString"},
    {"rdfs", ns::rdfs, "label", "label"},
    {"rdfs", ns::rdfs, "comment", "comment"},
    {"rdfs", ns::rdfs, "subClassOf", "subClassOf"},
    {"rdfs", ns::rdfs, "subPropertyOf", "subPropertyOf"},
    {"rdfs", ns::rdfs, "domain", "domain"},
    {"rdfs", ns::rdfs, "range", "range"},
    {"rdfs", ns::rdfs, "seeAlso", "seeAlso"},
    {"owl", ns::owl, "Class", "Class"},
    {"owl", ns::owl, "ObjectProperty", "ObjectProperty"},
    {"owl", ns::owl, "DatatypeProperty", "DatatypeProperty"},
    {"owl", ns::owl, "inverseOf", "inverseOf"},
    {"xsd", ns::xsd, "string", "string"},
    {"xsd", ns::xsd, "double", "double"},
    {"xsd", ns::xsd, "decimal", "decimal"},
    {"xsd", ns::xsd, "integer", "integer"},
    {"xsd", ns::xsd, "float", "float"},
    {"xsd", ns::xsd, "date", "date"},
    {"xsd", ns::xsd, "anyURI", "anyURI"},

    {"sio", ns::sio, "SIO_000897", "association"},
    {"sio", ns::sio, "SIO_000326", "semantic type"},
    {"sio", ns::sio, "SIO_000983", "gene-disease association"},
    {"sio", ns::sio, "SIO_001006", "drug-drug interaction"},
    {"sio", ns::sio, "SIO_010056", "phenotype"},
    {"sio", ns::sio, "SIO_000628", "refers to"},
    {"sio", ns::sio, "SIO_000212", "is referred to by"},
    {"sio", ns::sio, "SIO_000216", "has measurement value"},
    {"sio", ns::sio, "SIO_000300", "has value"},
    {"sio", ns::sio, "SIO_000772", "has evidence"},

    {"ncit", ns::ncit, "C7057", "Disease"},
    {"ncit", ns::ncit, "C18329", "Disease Marker"},
    {"ncit", ns::ncit, "C26549", "Non-Coding RNA"},
    {"ncit", ns::ncit, "C25338", "Score"},
    {"ncit", ns::ncit, "C16612", "Gene"},
    {"ncit", ns::ncit, "C17021", "Protein"},
    {"ncit", ns::ncit, "C18469", "Protein-Protein Interaction"},
    {"ncit", ns::ncit, "C14250", "Organism"},
    {"obo", ns::obo, "HP_0000118", "disease class"},
    {"obo", ns::obo, "SO_0001060", "Variant"},
    {"obo", ns::obo, "PR_000000001", "Protein class"},
    {"ordo", ns::ordo, "Orphanet_557492", "Orphanet classification association"},
    {"wp", ns::wp, "Pathway", "Pathway"},
    {"cco", ns::cco, "Target", "Target"},
    {"cco", ns::cco, "Drug", "Drug"},
    {"cco", ns::cco, "Mechanism", "Mechanism"},
    {"cco", ns::cco, "DrugIndication", "Drug indication"},
    {"cco", ns::cco, "hasMechanism", "has mechanism"},
    {"cco", ns::cco, "hasTarget", "has target"},
    {"ctd", ns::ctd, "Chemical-Disease-Association", "Chemical-disease association"},
    {"sct", ns::sct, "662014003", "Side effect"},

    {"eboca-sd", ns::eboca_sd, "Phenotype", "Phenotype"},
    {"eboca-sd", ns::eboca_sd, "DiseasePhenotypeAssociation", "Disease-phenotype association"},
    {"eboca-sd", ns::eboca_sd, "DiseaseVariantAssociation", "Disease-variant association"},
    {"eboca-sd", ns::eboca_sd, "DiseaseNcRNAAssociation", "Disease-ncRNA association"},
    {"eboca-sd", ns::eboca_sd, "GeneVariantAssociation", "Gene-variant association"},
    {"eboca-sd", ns::eboca_sd, "GenePathwayAssociation", "Gene-pathway association"},
    {"eboca-sd", ns::eboca_sd, "DrugDiseaseMarker", "Drug-disease marker association"},
    {"eboca-sd", ns::eboca_sd, "DrugDiseaseTherapeutic", "Drug-disease therapeutic association"},
    {"eboca-sd", ns::eboca_sd, "DrugDiseaseInferred", "Drug-disease inferred association"},
    {"eboca-sd", ns::eboca_sd, "DrugTargetAssociation", "Drug-target association"},
    {"eboca-sd", ns::eboca_sd, "drugForMechanism", "drug for mechanism"},
    {"eboca-sd", ns::eboca_sd, "mechanismOfDrug", "mechanism of drug"},
    {"eboca-sd", ns::eboca_sd, "mechanismTarget", "mechanism target"},
    {"eboca-sd", ns::eboca_sd, "targetOfMechanism", "target of mechanism"},

    {"eboca-ev", ns::eboca_ev, "Evidence", "Evidence"},
    {"eboca-ev", ns::eboca_ev, "confidence", "confidence"},
    {"eboca-ev", ns::eboca_ev, "section", "section"},
    {"eco", ns::obo, "ECO_0007672", "computational inference"},
    {"eco", ns::obo, "ECO_0006151", "documented statement evidence"},
    {"pav", ns::pav, "derivedFrom", "derived from"},
    {"pav", ns::pav, "createdOn", "created on"},
    {"pav", ns::pav, "lastUpdateOn", "last updated on"},
    {"pav", ns::pav, "version", "version"},
    {"pav", ns::pav, "createdBy", "created by"},
    {"pav", ns::pav, "createdWith", "created with"},
    {"dct", ns::dct, "identifier", "identifier"},
    {"dct", ns::dct, "title", "title"},
    {"dct", ns::dct, "abstract", "abstract"},
    {"foaf", ns::foaf, "Agent", "Agent"},
    {"foaf", ns::foaf, "name", "name"},
    {"prov", ns::prov, "SoftwareAgent", "software agent"},
    {"doco", ns::doco, "Paragraph", "Paragraph"},
    {"fabio", ns::fabio, "Expression", "Expression"},
    {"fabio", ns::fabio, "hasURL", "has URL"},
    {"frbr", ns::frbr, "partOf", "part of"},
    {"c4o", ns::c4o, "hasContent", "has content"},
};

struct Index {
  std::vector<VocabTerm> terms;
  std::unordered_map<std::string, std::size_t> by_iri;
};

const Index& index() {
  static const Index idx = [] {
    Index out;
    for (const Row& r : kRows) {
      rdf::Iri iri(std::string(r.ns) + std::string(r.local));
      if (out.by_iri.count(iri.str())) continue;
      out.by_iri.emplace(iri.str(), 0);
      out.terms.push_back({std::string(r.prefix), std::string(r.local), std::move(iri), std::string(r.label)});
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const VocabTerm& a, const VocabTerm& b) {
      if (a.prefix != b.prefix) return a.prefix < b.prefix;
      return a.local < b.local;
    });
    for (std::size_t i = 0; i < out.terms.size(); ++i) out.by_iri[out.terms[i].iri.str()] = i;
    return out;
  }();
  return idx;
}

}  // namespace

const std::vector<VocabTerm>& catalog() { return index().terms; }

const VocabTerm* find_term(std::string_view iri) {
  const auto& idx = index();
  const auto it = idx.by_iri.find(std::string(iri));
  return it == idx.by_iri.end() ? nullptr : &idx.terms[it->second];
}

std::string catalog_table() {
  std::string out;
  for (const auto& t : catalog()) out += t.prefix + ":" + t.local + "\t" + t.iri.str() + "\n";
  return out;
}

rdf::PrefixMap turtle_prefixes() {
  rdf::PrefixMap m{
      {"rdf", std::string(ns::rdf)},         {"rdfs", std::string(ns::rdfs)},
      {"owl", std::string(ns::owl)},         {"xsd", std::string(ns::xsd)},
      {"sio", std::string(ns::sio)},         {"ncit", std::string(ns::ncit)},
      {"obo", std::string(ns::obo)},         {"ordo", std::string(ns::ordo)},
      {"wp", std::string(ns::wp)},           {"cco", std::string(ns::cco)},
      {"ctd", std::string(ns::ctd)},         {"sct", std::string(ns::sct)},
      {"pav", std::string(ns::pav)},         {"dct", std::string(ns::dct)},
      {"foaf", std::string(ns::foaf)},       {"prov", std::string(ns::prov)},
      {"doco", std::string(ns::doco)},       {"fabio", std::string(ns::fabio)},
      {"frbr", std::string(ns::frbr)},       {"c4o", std::string(ns::c4o)},
      {"eboca-sd", std::string(ns::eboca_sd)}, {"eboca-ev", std::string(ns::eboca_ev)},
  };
  m.emplace("res", resource_base());
  return m;
}

rdf::PrefixMap standard_prefixes() {
  auto m = turtle_prefixes();
  m.emplace("eco", std::string(ns::obo));
  return m;
}

}  // namespace eboca::vocab
