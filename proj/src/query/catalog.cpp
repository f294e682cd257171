#include "eboca/query/catalog.hpp"

#include "eboca/error.hpp"

namespace eboca::query {

const std::vector<CompetencyQuestion>& cq_catalog() {
  static const std::vector<CompetencyQuestion> catalog{
      {"cq01", "sem-disnet", "Which diseases does the graph describe, and by what name?",
       "SELECT ?disease ?name\n"
       "?disease a ncit:C7057 .\n"
       "?disease rdfs:label ?name .\n"},
      {"cq02", "sem-disnet", "Which genes are associated with each disease?",
       "SELECT ?disease ?gene\n"
       "?assoc a sio:SIO_000983 .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"
       "?assoc sio:SIO_000628 ?gene .\n"
       "?gene a ncit:C16612 .\n"},
      {"cq03", "sem-disnet", "How strongly is each disease-gene association scored?",
       "SELECT ?assoc ?score\n"
       "?assoc a sio:SIO_000983 .\n"
       "?assoc sio:SIO_000216 ?s .\n"
       "?s a ncit:C25338 .\n"
       "?s sio:SIO_000300 ?score .\n"},
      {"cq04", "sem-disnet", "Which variants are associated with each disease?",
       "SELECT ?disease ?variant\n"
       "?assoc a eboca-sd:DiseaseVariantAssociation .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"
       "?assoc sio:SIO_000628 ?variant .\n"
       "?variant a obo:SO_0001060 .\n"},
      {"cq05", "sem-disnet", "How strongly is each disease-variant association scored?",
       "SELECT ?assoc ?score\n"
       "?assoc a eboca-sd:DiseaseVariantAssociation .\n"
       "?assoc sio:SIO_000216 ?s .\n"
       "?s a ncit:C25338 .\n"
       "?s sio:SIO_000300 ?score .\n"},
      {"cq06", "sem-disnet", "Which drugs are used to treat which diseases?",
       "SELECT ?drug ?disease\n"
       "?assoc a eboca-sd:DrugDiseaseTherapeutic .\n"
       "?assoc sio:SIO_000628 ?drug .\n"
       "?drug a cco:Drug .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"},
      {"cq07", "sem-disnet", "Which drugs act as markers of which diseases?",
       "SELECT ?drug ?disease\n"
       "?assoc a eboca-sd:DrugDiseaseMarker .\n"
       "?assoc sio:SIO_000628 ?drug .\n"
       "?drug a cco:Drug .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"},
      {"cq08", "sem-disnet", "Which drug-disease associations are inferred rather than curated?",
       "SELECT ?assoc ?drug ?disease\n"
       "?assoc a eboca-sd:DrugDiseaseInferred .\n"
       "?assoc sio:SIO_000628 ?drug .\n"
       "?drug a cco:Drug .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"},
      {"cq09", "sem-disnet", "Which variants are associated with each gene?",
       "SELECT ?gene ?variant\n"
       "?assoc a eboca-sd:GeneVariantAssociation .\n"
       "?assoc sio:SIO_000628 ?gene .\n"
       "?gene a ncit:C16612 .\n"
       "?assoc sio:SIO_000628 ?variant .\n"
       "?variant a obo:SO_0001060 .\n"},
      {"cq10", "sem-disnet", "In which named pathways does each gene take part?",
       "SELECT ?gene ?pathway ?name\n"
       "?assoc a eboca-sd:GenePathwayAssociation .\n"
       "?assoc sio:SIO_000628 ?gene .\n"
       "?gene a ncit:C16612 .\n"
       "?assoc sio:SIO_000628 ?pathway .\n"
       "?pathway a wp:Pathway .\n"
       "?pathway rdfs:label ?name .\n"},
      {"cq11", "sem-disnet", "Which phenotypes does each disease present?",
       "SELECT ?disease ?phenotype ?name\n"
       "?assoc a eboca-sd:DiseasePhenotypeAssociation .\n"
       "?assoc sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"
       "?assoc sio:SIO_000628 ?phenotype .\n"
       "?phenotype a eboca-sd:Phenotype .\n"
       "?phenotype rdfs:label ?name .\n"},
      {"cq12", "sem-disnet", "Which drugs take part in each drug-drug interaction?",
       "SELECT ?interaction ?drug\n"
       "?interaction a sio:SIO_001006 .\n"
       "?interaction sio:SIO_000628 ?drug .\n"
       "?drug a cco:Drug .\n"},
      {"cq13", "sem-disnet", "Which drugs does the graph describe, and by what name?",
       "SELECT ?drug ?name\n"
       "?drug a cco:Drug .\n"
       "?drug rdfs:label ?name .\n"},
      {"cq14", "sem-disnet", "Which pathways are reached from a disease through its associated genes?",
       "SELECT ?disease ?gene ?pathway\n"
       "?dg a sio:SIO_000983 .\n"
       "?dg sio:SIO_000628 ?disease .\n"
       "?disease a ncit:C7057 .\n"
       "?dg sio:SIO_000628 ?gene .\n"
       "?gene a ncit:C16612 .\n"
       "?gp a eboca-sd:GenePathwayAssociation .\n"
       "?gp sio:SIO_000628 ?gene .\n"
       "?gp sio:SIO_000628 ?pathway .\n"
       "?pathway a wp:Pathway .\n"},
      {"cq15", "sem-disnet", "Where in the original sources is each disease described?",
       "SELECT ?disease ?page\n"
       "?disease a ncit:C7057 .\n"
       "?disease rdfs:seeAlso ?page .\n"},

      {"eboca-ev1", "evidences", "What kind of evidence supports each association?",
       "SELECT ?assoc ?evidence ?kind\n"
       "?assoc sio:SIO_000772 ?evidence .\n"
       "?evidence a eboca-ev:Evidence .\n"
       "?evidence a ?kind .\n"
       "FILTER ?kind regex \"ECO_[0-9]+$\"\n"},
      {"eboca-ev2", "evidences", "From which paragraph was each evidence derived, and what does it say?",
       "SELECT ?evidence ?paragraph ?text\n"
       "?evidence a eboca-ev:Evidence .\n"
       "?evidence pav:derivedFrom ?paragraph .\n"
       "?paragraph a doco:Paragraph .\n"
       "?paragraph c4o:hasContent ?text .\n"},
      {"eboca-ev3", "evidences", "Which paper contains the paragraph an evidence comes from?",
       "SELECT ?evidence ?expression ?title\n"
       "?evidence pav:derivedFrom ?paragraph .\n"
       "?paragraph frbr:partOf ?expression .\n"
       "?expression a fabio:Expression .\n"
       "?expression dct:title ?title .\n"},
      {"eboca-ev4", "evidences", "Which software, in which version, produced each evidence?",
       "SELECT ?evidence ?name ?version\n"
       "?evidence pav:createdWith ?software .\n"
       "?software a prov:SoftwareAgent .\n"
       "?software rdfs:label ?name .\n"
       "?software pav:version ?version .\n"},
      {"eboca-ev5", "evidences", "Which agent is responsible for each evidence?",
       "SELECT ?evidence ?name\n"
       "?evidence pav:createdBy ?agent .\n"
       "?agent a foaf:Agent .\n"
       "?agent foaf:name ?name .\n"},
      {"eboca-ev6", "evidences", "When was each evidence created?",
       "SELECT ?evidence ?date\n"
       "?evidence a eboca-ev:Evidence .\n"
       "?evidence pav:createdOn ?date .\n"},
      {"eboca-ev7", "evidences", "How confident is each evidence?",
       "SELECT ?evidence ?confidence\n"
       "?evidence a eboca-ev:Evidence .\n"
       "?evidence eboca-ev:confidence ?confidence .\n"},
  };
  return catalog;
}

const CompetencyQuestion* find_cq(std::string_view id) {
  for (const auto& cq : cq_catalog()) {
    if (cq.id == id) return &cq;
  }
  return nullptr;
}

Query cq_query(std::string_view id) {
  const auto* cq = find_cq(id);
  if (!cq) throw InvalidArgument("unknown competency question '" + std::string(id) + "'");
  return parse_query(cq->text);
}

BindingSet run_cq(const rdf::Graph& g, std::string_view id) { return solve(g, cq_query(id)); }

}  // namespace eboca::query
