#pragma once

#include <cstddef>
#include <filesystem>

namespace eboca::mapping {

// A DISNET-shaped fixture of any size, for scale runs. For scale n (n >= 2):
// n diseases, genes and drugs, max(1, n/10) pathways, 2n disease-gene
// associations of which the n even-numbered ones carry a score, one
// gene-pathway association per gene, and n drug-drug interactions of which
// every third has an effect comment.
struct SyntheticShape {
  std::size_t diseases, genes, drugs, pathways;
  std::size_t disease_gene, scored, gene_pathway, drug_drug, commented;
};

SyntheticShape synthetic_shape(std::size_t scale);

// Closed form of the materialized size: 4 triples per entity (type, label,
// identifier, linkout), 3 per association (type, two endpoints), plus a score
// link and a 2-triple score node per scored association, plus one comment
// per commented interaction.
std::size_t synthetic_triple_count(std::size_t scale);

// Writes the sources and `synthetic.map` into dir (created if needed) and
// returns the mapping path. Throws InvalidArgument for scale < 2.
std::filesystem::path write_synthetic_fixture(const std::filesystem::path& dir, std::size_t scale);

}  // namespace eboca::mapping
