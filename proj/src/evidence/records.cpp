#include "eboca/evidence/records.hpp"

#include <cmath>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::evidence {

namespace t = vocab::terms;
using rdf::Literal;
using rdf::Triple;
using vocab::ResourceKind;

const rdf::Iri& eco_class(EvidenceKind kind) {
  return kind == EvidenceKind::DocumentedStatement ? t::documented_statement : t::computational_inference;
}

void validate(const EvidenceRecord& record) {
  if (record.evidence_id.empty()) throw InvalidArgument("evidence id is empty");
  if (record.kind == EvidenceKind::DocumentedStatement && !record.derived_from) {
    throw ValidationError("evidence '" + record.evidence_id + "': documented statement without pav:derivedFrom");
  }
  if (record.confidence && !(std::isfinite(*record.confidence) && *record.confidence >= 0.0 &&
                             *record.confidence <= 1.0)) {
    throw ValidationError("evidence '" + record.evidence_id + "': confidence outside [0, 1]");
  }
  if (record.updated_on && *record.updated_on < record.created_on) {
    throw ValidationError("evidence '" + record.evidence_id + "': updated before it was created");
  }
}

rdf::Iri paragraph_iri(const ParagraphExtraction& paragraph) {
  return vocab::mint_iri(ResourceKind::Paragraph, paragraph.paragraph_id);
}

rdf::Iri expression_iri(const ExpressionMeta& expression) {
  return vocab::mint_iri(ResourceKind::Expression, expression.expression_id);
}

rdf::Iri software_iri(const SoftwareMeta& software) {
  // Encoding each part first keeps the separator unambiguous.
  return vocab::mint_iri(ResourceKind::Software,
                         util::percent_encode(software.name) + "/" + util::percent_encode(software.version));
}

rdf::Iri agent_iri(std::string_view name) { return vocab::mint_iri(ResourceKind::Agent, name); }

std::vector<Triple> evidence_to_triples(const EvidenceRecord& record, const rdf::Iri& association) {
  validate(record);
  const rdf::Iri ev = vocab::mint_iri(ResourceKind::Evidence, record.evidence_id);
  const rdf::Iri xsd_date = t::xsd_date;
  std::vector<Triple> out;
  out.emplace_back(ev, t::rdf_type, t::evidence);
  out.emplace_back(ev, t::rdf_type, eco_class(record.kind));
  out.emplace_back(association, t::has_evidence, ev);
  if (record.derived_from) out.emplace_back(ev, t::derived_from, *record.derived_from);
  out.emplace_back(ev, t::created_on, Literal(record.created_on.to_string(), xsd_date));
  if (record.updated_on) out.emplace_back(ev, t::last_updated_on, Literal(record.updated_on->to_string(), xsd_date));
  if (record.version) out.emplace_back(ev, t::version, Literal(*record.version));
  if (record.software) {
    const rdf::Iri sw = software_iri(*record.software);
    out.emplace_back(ev, t::created_with, sw);
    out.emplace_back(sw, t::rdf_type, t::software_agent);
    out.emplace_back(sw, t::rdfs_label, Literal(record.software->name));
    if (!record.software->version.empty()) out.emplace_back(sw, t::version, Literal(record.software->version));
  }
  if (record.creator) {
    const rdf::Iri agent = agent_iri(*record.creator);
    out.emplace_back(ev, t::created_by, agent);
    out.emplace_back(agent, t::rdf_type, t::foaf_agent);
    out.emplace_back(agent, t::foaf_name, Literal(*record.creator));
  }
  if (record.confidence) {
    out.emplace_back(ev, t::confidence, Literal(util::shortest_double(*record.confidence + 0.0), t::xsd_double));
  }
  return out;
}

std::vector<Triple> paragraph_to_triples(const ParagraphExtraction& paragraph) {
  if (paragraph.paragraph_id.empty()) throw InvalidArgument("paragraph id is empty");
  if (paragraph.expression.expression_id.empty()) {
    throw InvalidArgument("paragraph '" + paragraph.paragraph_id + "': expression id is empty");
  }
  const rdf::Iri para = paragraph_iri(paragraph);
  const rdf::Iri expr = expression_iri(paragraph.expression);
  std::vector<Triple> out;
  out.emplace_back(para, t::rdf_type, t::paragraph);
  out.emplace_back(para, t::identifier, Literal(paragraph.paragraph_id));
  if (!paragraph.text.empty()) out.emplace_back(para, t::has_content, Literal(paragraph.text));
  if (paragraph.section && !paragraph.section->empty()) out.emplace_back(para, t::section, Literal(*paragraph.section));
  out.emplace_back(para, t::part_of, expr);

  const ExpressionMeta& e = paragraph.expression;
  out.emplace_back(expr, t::rdf_type, t::expression);
  out.emplace_back(expr, t::identifier, Literal(e.expression_id));
  if (e.title && !e.title->empty()) out.emplace_back(expr, t::title, Literal(*e.title));
  if (e.abstract && !e.abstract->empty()) out.emplace_back(expr, t::abstract, Literal(*e.abstract));
  if (e.url) out.emplace_back(expr, t::has_url, Literal(e.url->str(), t::xsd_any_uri));
  return out;
}

EvidenceRecord documented_statement(std::string evidence_id, rdf::Iri source, util::Date created_on,
                                    std::optional<std::string> version) {
  return EvidenceRecord{
      .evidence_id = std::move(evidence_id),
      .kind = EvidenceKind::DocumentedStatement,
      .created_on = created_on,
      .updated_on = std::nullopt,
      .version = std::move(version),
      .software = std::nullopt,
      .creator = std::nullopt,
      .derived_from = std::move(source),
      .confidence = std::nullopt,
  };
}

}  // namespace eboca::evidence
