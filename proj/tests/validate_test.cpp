#include <doctest.h>

#include <json.hpp>
#include <random>

#include "eboca/evidence/records.hpp"
#include "eboca/rdf/ntriples.hpp"
#include "eboca/validate/validate.hpp"
#include "eboca/vocab/terms.hpp"
#include "support/kg_fixture.hpp"

using namespace eboca;
using namespace eboca::validate;
using eboca::testing::without;
namespace t = eboca::vocab::terms;
using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

std::map<std::string, std::size_t> count_codes(const std::vector<Finding>& fs) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : fs) ++out[f.code];
  return out;
}

std::string show(const std::map<std::string, std::size_t>& counts) {
  std::string out;
  for (const auto& [code, n] : counts) {
    if (n) out += code + "=" + std::to_string(n) + " ";
  }
  return out;
}

std::vector<rdf::Term> subjects_typed(const rdf::Graph& g, const Iri& cls) {
  std::vector<rdf::Term> out;
  for (const auto& tr : g.match({std::nullopt, t::rdf_type, cls})) out.push_back(tr.subject());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return rdf::to_ntriples(a) < rdf::to_ntriples(b); });
  return out;
}

template <typename T>
std::vector<T> sample(std::vector<T> v, std::size_t k, std::mt19937& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(std::min(k, v.size())), v.end());
  return v;
}

const Iri kSdClassBase("https://w3id.org/eboca/sem-disnet#Probe");

Iri sd(const std::string& local) { return Iri(std::string(vocab::ns::eboca_sd) + local); }

}  // namespace

TEST_CASE("instances: the fixture KG is clean") {
  const auto findings = validate_instances(testing::combined_kg());
  CHECK(findings.empty());
  if (!findings.empty()) MESSAGE(findings_summary(findings));
  CHECK(findings_to_json(findings) == "[]\n");
}

TEST_CASE("instances: emitter output is clean") {
  rdf::Graph g;
  const vocab::ConceptEntity d{vocab::ConceptKind::Disease, "C1", "Asthma", {}, {}};
  const vocab::ConceptEntity gene{vocab::ConceptKind::Gene, "3569", std::nullopt, {}, {}};
  const vocab::ConceptEntity drug{vocab::ConceptKind::Drug, "D1", std::nullopt, {}, {}};
  const vocab::ConceptEntity target{vocab::ConceptKind::Target, "T1", std::nullopt, {}, {}};
  for (const auto& c : {d, gene, drug, target}) g.insert_range(vocab::concept_to_triples(c));
  g.insert_range(vocab::association_to_triples({vocab::AssociationKind::DiseaseGene, d.ref(), gene.ref(), 0.0, "a1"}));
  g.insert_range(vocab::association_to_triples({vocab::AssociationKind::DrugTargetMechanism, drug.ref(), target.ref(), 1.0, "a2"}));
  g.insert_range(vocab::association_to_triples({vocab::AssociationKind::DrugDiseaseMarker, drug.ref(), d.ref(), std::nullopt, "a3"}));
  const auto ev = evidence::documented_statement("e1", Iri("http://ctdbase.org/x"), util::Date::parse("2020-02-29"));
  g.insert_range(evidence::evidence_to_triples(ev, vocab::mint_iri(vocab::AssociationKind::DrugDiseaseMarker, "a3")));
  CHECK(validate_instances(g).empty());
}

TEST_CASE("instances: single seeded violations") {
  const rdf::Graph& kg = testing::combined_kg();

  SUBCASE("score literal 1.5 gives one E2") {
    const auto score = subjects_typed(kg, t::score).front();
    const auto old = kg.match({score, t::has_value, std::nullopt});
    rdf::Graph g = without(kg, old);
    g.insert(Triple(score, t::has_value, Literal("1.5", t::xsd_double)));
    const auto fs = validate_instances(g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].code == "E2");
    CHECK(fs[0].severity == Severity::Error);
    CHECK(fs[0].subject == score);
  }
  SUBCASE("non-numeric score and confidence") {
    rdf::Graph g = kg;
    const auto ev = subjects_typed(kg, t::evidence).front();
    g.insert(Triple(ev, t::confidence, Literal("high")));
    const auto score = subjects_typed(kg, t::score).front();
    g.insert(Triple(score, t::has_value, Literal("-0.1", t::xsd_decimal)));
    CHECK(show(count_codes(validate_instances(g))) == show(std::map<std::string, std::size_t>{{"E2", 2}}));
  }
  SUBCASE("evidence with both ECO kinds gives one E3") {
    const auto ev = subjects_typed(kg, t::computational_inference).front();
    rdf::Graph g = kg;
    g.insert(Triple(ev, t::rdf_type, t::documented_statement));
    const auto fs = validate_instances(g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].code == "E3");
    CHECK(fs[0].subject == ev);
  }
  SUBCASE("documented statement without derivedFrom") {
    const auto ev = subjects_typed(kg, t::documented_statement).front();
    const auto fs = validate_instances(without(kg, kg.match({ev, t::derived_from, std::nullopt})));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].code == "E3");
  }
  SUBCASE("association endpoint problems give E1") {
    const auto assoc = subjects_typed(kg, t::disease_gene_association).front();
    const auto links = kg.match({assoc, t::refers_to, std::nullopt});
    REQUIRE(links.size() == 2);
    auto fs = validate_instances(without(kg, {links[0]}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].code == "E1");
    CHECK(fs[0].message.find("1 distinct endpoint") != std::string::npos);

    // Swap the gene for a drug: kinds no longer fit a disease-gene association.
    rdf::Graph g = without(kg, {links[1]});
    const auto drug = subjects_typed(kg, t::drug).front();
    const bool first_is_disease = kg.contains(Triple(links[0].object(), t::rdf_type, t::disease));
    g = without(g, {links[first_is_disease ? 1 : 0]});
    g.insert(Triple(assoc, t::refers_to, first_is_disease ? links[0].object() : links[1].object()));
    g.insert(Triple(assoc, t::refers_to, drug));
    fs = validate_instances(g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].message.find("expects Disease and Gene") != std::string::npos);

    g = kg;
    g.insert(Triple(assoc, t::refers_to, Iri("http://example.org/untyped")));
    fs = validate_instances(g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].message.find("3 distinct endpoint") != std::string::npos);
  }
  SUBCASE("invalid dates give E4, once per triple") {
    const auto ev = subjects_typed(kg, t::evidence).front();
    rdf::Graph g = without(kg, kg.match({ev, t::created_on, std::nullopt}));
    g.insert(Triple(ev, t::created_on, Literal("2022-02-30", t::xsd_date)));
    g.insert(Triple(Iri("http://example.org/x"), Iri("http://example.org/when"), Literal("2021-13-01", t::xsd_date)));
    g.insert(Triple(ev, t::last_updated_on, Literal("yesterday")));
    g.insert(Triple(ev, t::last_updated_on, Literal("2022-05-02T10:00:00Z", Iri("http://www.w3.org/2001/XMLSchema#dateTime"))));
    CHECK(show(count_codes(validate_instances(g))) == show(std::map<std::string, std::size_t>{{"E4", 3}}));
  }
  SUBCASE("orphan paragraph gives E5") {
    const auto para = subjects_typed(kg, t::paragraph).front();
    const auto fs = validate_instances(without(kg, kg.match({para, t::part_of, std::nullopt})));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].code == "E5");
    CHECK(fs[0].subject == para);
  }
}

TEST_CASE("property: k seeded instance violations per rule give exactly k findings per rule") {
  const rdf::Graph& kg = testing::combined_kg();
  const auto associations = subjects_typed(kg, t::disease_gene_association);
  const auto scores = subjects_typed(kg, t::score);
  const auto evidences = subjects_typed(kg, t::evidence);
  const auto paragraphs = subjects_typed(kg, t::paragraph);
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    std::map<std::string, std::size_t> k;
    for (const char* code : {"E1", "E2", "E3", "E4", "E5"}) k[code] = rng() % 5;
    std::vector<Triple> removed;
    std::vector<Triple> added;
    for (const auto& a : sample(associations, k["E1"], rng)) removed.push_back(kg.match({a, t::refers_to, std::nullopt}).front());
    for (const auto& s : sample(scores, k["E2"], rng)) {
      for (const auto& tr : kg.match({s, t::has_value, std::nullopt})) removed.push_back(tr);
      added.emplace_back(s, t::has_value, Literal("1.5", t::xsd_double));
    }
    const auto ev_sample = sample(evidences, k["E3"] + k["E4"], rng);
    for (std::size_t i = 0; i < ev_sample.size(); ++i) {
      if (i < k["E3"]) {
        added.emplace_back(ev_sample[i], t::rdf_type, t::computational_inference);
        added.emplace_back(ev_sample[i], t::rdf_type, t::documented_statement);
      } else {
        for (const auto& tr : kg.match({ev_sample[i], t::created_on, std::nullopt})) removed.push_back(tr);
        added.emplace_back(ev_sample[i], t::created_on, Literal("2021-02-29", t::xsd_date));
      }
    }
    for (const auto& p : sample(paragraphs, k["E5"], rng)) {
      for (const auto& tr : kg.match({p, t::part_of, std::nullopt})) removed.push_back(tr);
    }
    rdf::Graph g = without(kg, removed);
    g.insert_range(added);

    auto expected = k;
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    CHECK(show(count_codes(validate_instances(g))) == show(expected));
  }
}

TEST_CASE("pitfalls: the created axioms are clean") {
  const rdf::Graph axioms = vocab::emit_ontology_axioms();
  const auto fs = scan_pitfalls(axioms);
  CHECK(count_codes(fs)["P08"] == 0);
  CHECK(count_codes(fs)["P11"] == 0);
  CHECK(fs.empty());
  if (!fs.empty()) MESSAGE(findings_summary(fs));
}

TEST_CASE("pitfalls: one property lacking a range gives one P11") {
  rdf::Graph g = vocab::emit_ontology_axioms();
  const Iri p = sd("hasSeverity");
  g.insert(Triple(p, t::rdf_type, t::owl_datatype_property));
  g.insert(Triple(p, t::rdfs_label, Literal::with_language("has severity", "en")));
  g.insert(Triple(p, t::rdfs_domain, t::disease));
  const auto fs = scan_pitfalls(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].code == "P11");
  CHECK(fs[0].subject == rdf::Term(p));
  CHECK(fs[0].message == "property has no rdfs:range");
}

TEST_CASE("pitfalls: an unconnected class gives one P04") {
  rdf::Graph g = vocab::emit_ontology_axioms();
  const Iri c = sd("Orphan");
  g.insert(Triple(c, t::rdf_type, t::owl_class));
  g.insert(Triple(c, t::rdfs_label, Literal::with_language("Orphan", "en")));
  g.insert(Triple(c, t::rdfs_comment, Literal("declared but never used")));
  const auto fs = scan_pitfalls(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].code == "P04");
  CHECK(fs[0].subject == rdf::Term(c));
}

TEST_CASE("pitfalls: P08, P13 and P22") {
  rdf::Graph g = vocab::emit_ontology_axioms();
  const Iri bare = sd("BareClass");
  g.insert(Triple(bare, t::rdf_type, t::owl_class));
  g.insert(Triple(bare, t::rdfs_sub_class_of, t::association));
  const Iri oneway = sd("relatesTo");
  g.insert(Triple(oneway, t::rdf_type, t::owl_object_property));
  g.insert(Triple(oneway, t::rdfs_comment, Literal("no inverse")));
  g.insert(Triple(oneway, t::rdfs_domain, t::disease));
  g.insert(Triple(oneway, t::rdfs_range, t::gene));
  const Iri snake = sd("gene_expression_association");
  g.insert(Triple(snake, t::rdf_type, t::owl_class));
  g.insert(Triple(snake, t::rdfs_label, Literal("gene expression association")));
  g.insert(Triple(snake, t::rdfs_sub_class_of, t::association));

  // every created class but the snake_case one is camelCase
  const auto classes = subjects_typed(g, t::owl_class);
  const auto fs = scan_pitfalls(g);
  CHECK(show(count_codes(fs)) == show(std::map<std::string, std::size_t>{{"P08", 1}, {"P13", 1}, {"P22", 1}}));
  for (const auto& f : fs) {
    if (f.code == "P08") CHECK(f.subject == rdf::Term(bare));
    if (f.code == "P13") {
      CHECK(f.subject == rdf::Term(oneway));
      CHECK(f.severity == Severity::Warning);
    }
    if (f.code == "P22") {
      CHECK(f.subject == rdf::Term(snake));  // the minority style
      CHECK(f.severity == Severity::Warning);
      const auto created = std::count_if(classes.begin(), classes.end(), [](const rdf::Term& c) {
        return rdf::to_ntriples(c).starts_with("<https://w3id.org/eboca/");
      });
      CHECK(f.message == "classes mix naming styles: camelCase=" + std::to_string(created - 1) + " snake/hyphen=1");
    }
  }
  CHECK(has_errors(fs));
}

TEST_CASE("pitfalls: reused terms are excluded unless asked for") {
  rdf::Graph g = vocab::emit_ontology_axioms();
  const Iri reused("http://example.org/onto#unlabelled");
  g.insert(Triple(reused, t::rdf_type, t::owl_class));
  CHECK(scan_pitfalls(g).empty());
  const auto all = scan_pitfalls(g, {.include_reused = true});
  CHECK(std::any_of(all.begin(), all.end(), [&](const Finding& f) {
    return f.code == "P04" && f.subject == rdf::Term(reused);
  }));
}

TEST_CASE("property: k seeded pitfalls per kind give exactly k findings per kind") {
  const rdf::Graph base = vocab::emit_ontology_axioms();
  std::mt19937 rng(3);
  for (int round = 0; round < 40; ++round) {
    std::map<std::string, std::size_t> k;
    for (const char* code : {"P04", "P08", "P11", "P13"}) k[code] = rng() % 4;
    k["P22"] = rng() % 4;  // one per category, three categories
    rdf::Graph g = base;
    const auto label = [](const std::string& s) { return Literal::with_language(s, "en"); };
    for (std::size_t i = 0; i < k["P04"]; ++i) {
      const Iri c = sd("Unused" + std::string(1, static_cast<char>('A' + i)));
      g.insert(Triple(c, t::rdf_type, t::owl_class));
      g.insert(Triple(c, t::rdfs_label, label("unused")));
    }
    for (std::size_t i = 0; i < k["P08"]; ++i) {
      const Iri c = sd("Unlabelled" + std::string(1, static_cast<char>('A' + i)));
      g.insert(Triple(c, t::rdf_type, t::owl_class));
      g.insert(Triple(c, t::rdfs_sub_class_of, t::association));
    }
    for (std::size_t i = 0; i < k["P11"]; ++i) {
      const Iri p = sd("noRange" + std::string(1, static_cast<char>('A' + i)));
      g.insert(Triple(p, t::rdf_type, t::owl_datatype_property));
      g.insert(Triple(p, t::rdfs_comment, Literal("no range")));
      g.insert(Triple(p, t::rdfs_domain, t::evidence));
    }
    for (std::size_t i = 0; i < k["P13"]; ++i) {
      const Iri p = sd("oneWay" + std::string(1, static_cast<char>('A' + i)));
      g.insert(Triple(p, t::rdf_type, t::owl_object_property));
      g.insert(Triple(p, t::rdfs_label, label("one way")));
      g.insert(Triple(p, t::rdfs_domain, t::drug));
      g.insert(Triple(p, t::rdfs_range, t::target));
    }
    if (k["P22"] >= 1) {
      const Iri c = sd("snake_case_class");
      g.insert(Triple(c, t::rdf_type, t::owl_class));
      g.insert(Triple(c, t::rdfs_label, label("snake")));
      g.insert(Triple(c, t::rdfs_sub_class_of, t::association));
    }
    if (k["P22"] >= 2) {
      const Iri p = sd("has_part"), q = sd("part_of");
      for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
        g.insert(Triple(a, t::rdf_type, t::owl_object_property));
        g.insert(Triple(a, t::rdfs_label, label("part")));
        g.insert(Triple(a, t::rdfs_domain, t::gene));
        g.insert(Triple(a, t::rdfs_range, t::gene));
      }
      g.insert(Triple(p, t::owl_inverse_of, q));
    }
    if (k["P22"] >= 3) {
      const Iri p = sd("p_value");
      g.insert(Triple(p, t::rdf_type, t::owl_datatype_property));
      g.insert(Triple(p, t::rdfs_label, label("p-value")));
      g.insert(Triple(p, t::rdfs_domain, t::evidence));
      g.insert(Triple(p, t::rdfs_range, t::xsd_double));
    }
    auto expected = k;
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    const auto fs = scan_pitfalls(g);
    CHECK(show(count_codes(fs)) == show(expected));
    CHECK(scan_pitfalls(g) == fs);  // pure and deterministic
    CHECK(std::is_sorted(fs.begin(), fs.end(), [](const Finding& a, const Finding& b) {
      return std::tuple(a.code, rdf::to_ntriples(a.subject), a.message) <
             std::tuple(b.code, rdf::to_ntriples(b.subject), b.message);
    }));
  }
}

TEST_CASE("reports: JSON schema and summary") {
  std::vector<Finding> fs{
      {"P13", Severity::Warning, Iri("https://w3id.org/eboca/sem-disnet#b"), "w"},
      {"E2", Severity::Error, rdf::BlankNode("s1"), "bad \"score\""},
      {"E2", Severity::Error, Iri("https://w3id.org/eboca/resource/score/x"), "bad"},
  };
  sort_findings(fs);
  CHECK(fs[0].subject == rdf::Term(Iri("https://w3id.org/eboca/resource/score/x")));
  CHECK(fs[1].subject == rdf::Term(rdf::BlankNode("s1")));
  const auto json = nlohmann::json::parse(findings_to_json(fs));
  REQUIRE(json.is_array());
  REQUIRE(json.size() == 3);
  CHECK(json[0]["code"] == "E2");
  CHECK(json[0]["severity"] == "error");
  CHECK(json[0]["subject"] == "https://w3id.org/eboca/resource/score/x");
  CHECK(json[1]["subject"] == "_:s1");
  CHECK(json[1]["message"] == "bad \"score\"");
  CHECK(json[2]["severity"] == "warning");
  CHECK(findings_summary(fs).find("2 error(s), 1 warning(s); E2=2; P13=1") != std::string::npos);
  CHECK(has_errors(fs));
  CHECK_FALSE(has_errors({fs[2]}));
  for (const auto& f : fs) CHECK(find_rule(f.code) != nullptr);
  CHECK(rule_registry().size() == 10);
}
