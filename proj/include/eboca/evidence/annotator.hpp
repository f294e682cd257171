#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eboca/evidence/records.hpp"
#include "eboca/rdf/graph.hpp"

namespace eboca::evidence {

// Something in the input that was skipped rather than rejected.
struct Warning {
  std::string paragraph_id;
  std::string message;
};

struct Extraction {
  std::vector<std::pair<vocab::AssociationRecord, EvidenceRecord>> associations;
  std::vector<vocab::ConceptRef> entities;  // distinct, sorted by (kind, id)
  std::vector<Warning> warnings;
};

// Co-occurrence pairing within one paragraph:
//   Drug-Disease -> DrugDiseaseInferred (drug is the source)
//   Disease-Gene -> DiseaseGene (disease is the source)
//   Drug-Drug    -> DrugDrugInteraction (smaller id is the source)
// Entities are distinct by (kind, normalized id); repeated mentions keep the
// highest confidence. Every association gets one computational-inference
// evidence derived from the paragraph. `default_date` is used when the
// paragraph has no created_on; with neither, throws InvalidArgument.
Extraction extract_associations(const ParagraphExtraction& paragraph,
                                std::optional<util::Date> default_date = std::nullopt);

struct AnnotateOptions {
  std::optional<util::Date> default_date;
  bool parallel = true;
};

struct AnnotateResult {
  rdf::Graph graph;
  std::vector<Warning> warnings;
  std::size_t associations = 0;
};

// Whole batch: paragraph and expression nodes, entity typing, associations
// and evidence. Paragraph ids must be unique (InvalidArgument otherwise).
// Expression attributes come from the first paragraph naming the expression.
AnnotateResult annotate(const std::vector<ParagraphExtraction>& batch, const AnnotateOptions& options = {});

// One JSON object per line; see docs/annotator-input.md. Blank lines are
// skipped. Throws ParseError with the 1-based line number.
std::vector<ParagraphExtraction> parse_jsonl(std::string_view text);

}  // namespace eboca::evidence
