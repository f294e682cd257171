#include "eboca/mapping/synthetic.hpp"

#include <string>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"

namespace eboca::mapping {

namespace {

constexpr const char* kMapping = R"(# Synthetic DISNET-shaped data for scale runs.
PREFIX dis: <https://uts.nlm.nih.gov/uts/umls/concept/>

RULE disease
SOURCE csv diseases.csv
SUBJECT res:disease/{disease_id} CLASS ncit:C7057
PO rdfs:label REF name
PO dct:identifier REF disease_id
PO rdfs:seeAlso TEMPLATE dis:{disease_id}

RULE gene
SOURCE csv genes.csv
SUBJECT res:gene/{gene_id} CLASS ncit:C16612
PO rdfs:label REF symbol
PO dct:identifier REF gene_id
PO rdfs:seeAlso TEMPLATE <https://www.ncbi.nlm.nih.gov/gene/{gene_id}>

RULE drug
SOURCE csv drugs.csv
SUBJECT res:drug/{drug_id} CLASS cco:Drug
PO rdfs:label REF name
PO dct:identifier REF drug_id
PO rdfs:seeAlso TEMPLATE <https://www.ebi.ac.uk/chembl/compound_report_card/{drug_id}/>

RULE pathway
SOURCE csv pathways.csv
SUBJECT res:pathway/{pathway_id} CLASS wp:Pathway
PO rdfs:label REF name
PO dct:identifier REF pathway_id
PO rdfs:seeAlso TEMPLATE <https://www.wikipathways.org/pathways/{pathway_id}>

RULE disease_gene_score
SOURCE csv disease_gene_score.csv
SUBJECT res:score/disease-gene-association-{assoc_id} CLASS ncit:C25338
PO sio:SIO_000300 REF score xsd:double

RULE disease_gene
SOURCE csv disease_gene.csv
SUBJECT res:disease-gene-association/{assoc_id} CLASS sio:SIO_000983
JOIN sio:SIO_000628 disease disease_id = disease_id
JOIN sio:SIO_000628 gene gene_id = gene_id
JOIN sio:SIO_000216 disease_gene_score assoc_id = assoc_id

RULE gene_pathway
SOURCE tsv gene_pathway.tsv
SUBJECT res:gene-pathway-association/{assoc_id} CLASS eboca-sd:GenePathwayAssociation
JOIN sio:SIO_000628 gene gene_id = gene_id
JOIN sio:SIO_000628 pathway pathway_id = pathway_id

RULE drug_drug
SOURCE csv drug_drug.csv
SUBJECT res:drug-drug-interaction/{assoc_id} CLASS sio:SIO_001006
PO rdfs:comment REF effect @en
JOIN sio:SIO_000628 drug drug_a = drug_id
JOIN sio:SIO_000628 drug drug_b = drug_id
)";

std::string id(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace

SyntheticShape synthetic_shape(std::size_t n) {
  if (n < 2) throw InvalidArgument("synthetic scale must be at least 2");
  const std::size_t pathways = n / 10 ? n / 10 : 1;
  return {n, n, n, pathways, 2 * n, n, n, n, (n + 2) / 3};
}

std::size_t synthetic_triple_count(std::size_t scale) {
  const auto s = synthetic_shape(scale);
  const std::size_t entities = s.diseases + s.genes + s.drugs + s.pathways;
  const std::size_t associations = s.disease_gene + s.gene_pathway + s.drug_drug;
  return 4 * entities + 3 * associations + 3 * s.scored + s.commented;
}

std::filesystem::path write_synthetic_fixture(const std::filesystem::path& dir, std::size_t scale) {
  const auto s = synthetic_shape(scale);
  std::filesystem::create_directories(dir);
  const auto write = [&](const char* name, const std::string& body) { util::write_file((dir / name).string(), body); };

  std::string out = "disease_id,name\n";
  for (std::size_t i = 0; i < s.diseases; ++i) out += id("C", i) + ",Disease " + std::to_string(i) + "\n";
  write("diseases.csv", out);

  out = "gene_id,symbol\n";
  for (std::size_t i = 0; i < s.genes; ++i) out += std::to_string(i + 1) + ",GENE" + std::to_string(i) + "\n";
  write("genes.csv", out);

  out = "drug_id,name\n";
  for (std::size_t i = 0; i < s.drugs; ++i) out += id("CHEMBL", i) + ",Drug " + std::to_string(i) + "\n";
  write("drugs.csv", out);

  out = "pathway_id,name\n";
  for (std::size_t i = 0; i < s.pathways; ++i) out += id("WP", i) + ",Pathway " + std::to_string(i) + "\n";
  write("pathways.csv", out);

  out = "assoc_id,disease_id,gene_id\n";
  std::string scores = "assoc_id,score\n";
  for (std::size_t i = 0; i < s.disease_gene; ++i) {
    out += id("DGA", i) + "," + id("C", i % s.diseases) + "," + std::to_string((i * 7 + 3) % s.genes + 1) + "\n";
    if (i % 2 == 0) scores += id("DGA", i) + "," + util::shortest_double(static_cast<double>(i % 100) / 100) + "\n";
  }
  write("disease_gene.csv", out);
  write("disease_gene_score.csv", scores);

  out = "assoc_id\tgene_id\tpathway_id\n";
  for (std::size_t i = 0; i < s.gene_pathway; ++i) {
    out += id("GPA", i) + "\t" + std::to_string(i + 1) + "\t" + id("WP", i % s.pathways) + "\n";
  }
  write("gene_pathway.tsv", out);

  out = "assoc_id,drug_a,drug_b,effect\n";
  for (std::size_t i = 0; i < s.drug_drug; ++i) {
    out += id("DDI", i) + "," + id("CHEMBL", i) + "," + id("CHEMBL", (i + 1) % s.drugs) + ",";
    if (i % 3 == 0) out += "effect " + std::to_string(i);
    out += "\n";
  }
  write("drug_drug.csv", out);

  const auto mapping = dir / "synthetic.map";
  util::write_file(mapping.string(), kMapping);
  return mapping;
}

}  // namespace eboca::mapping
