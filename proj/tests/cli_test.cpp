#include <doctest.h>

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "eboca/mapping/synthetic.hpp"
#include "eboca/util/text.hpp"
#include "support/pipeline.hpp"
#include "support/test_support.hpp"

using namespace eboca;
using eboca::testing::eboca_cli;
using eboca::testing::TempDir;

namespace {

std::string disnet_map() { return (eboca::testing::data_dir() / "fixtures/disnet/disnet.map").string(); }
std::string ner_jsonl() { return (eboca::testing::data_dir() / "fixtures/ner/cord19_sample.jsonl").string(); }

std::set<std::string> nonblank_lines(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.insert(line);
  return out;
}

std::size_t stat(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + "\t", 0) == 0) return std::stoul(line.substr(key.size() + 1));
  }
  FAIL("no " << key << " line in stats");
  return 0;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("stats after merge counts the distinct lines of both inputs") {
  TempDir tmp;
  const auto kg = (tmp.path() / "kg.nt").string(), ev = (tmp.path() / "ev.nt").string();
  const auto all = (tmp.path() / "all.nt").string();
  REQUIRE(eboca_cli({"-q", "materialize", "--mapping", disnet_map(), "--out", kg}).status == 0);
  REQUIRE(eboca_cli({"-q", "annotate", "--input", ner_jsonl(), "--out", ev}).status == 0);
  REQUIRE(eboca_cli({"-q", "merge", kg, ev, "--out", all}).status == 0);

  auto lines = nonblank_lines(util::read_file(kg));
  const auto ev_lines = nonblank_lines(util::read_file(ev));
  lines.insert(ev_lines.begin(), ev_lines.end());

  const auto r = eboca_cli({"stats", "--graph", all});
  REQUIRE(r.status == 0);
  CHECK(stat(r.out, "triples") == lines.size());
  CHECK(stat(r.out, "triples") == 693);
}

TEST_CASE("clean validate exits 0 with an empty report") {
  TempDir tmp;
  const auto kg = (tmp.path() / "kg.nt").string();
  REQUIRE(eboca_cli({"-q", "materialize", "--mapping", disnet_map(), "--out", kg}).status == 0);
  const auto r = eboca_cli({"validate", "--graph", kg});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "[]\n");
}

TEST_CASE("a seeded violation makes validate exit 1") {
  TempDir tmp;
  const auto kg = (tmp.path() / "kg.nt").string();
  REQUIRE(eboca_cli({"-q", "materialize", "--mapping", disnet_map(), "--out", kg}).status == 0);
  const std::string text = util::read_file(kg);
  const std::regex score_line(R"re((<[^>]+> <http://semanticscience.org/resource/SIO_000300> )"[^"]*")re");
  std::smatch m;
  REQUIRE(std::regex_search(text, m, score_line));
  const std::string seeded = m.prefix().str() + m[1].str() + "\"1.5\"" + m.suffix().str();
  const auto bad = tmp.write("bad.nt", seeded).string();
  const auto report = (tmp.path() / "report.json").string();

  const auto r = eboca_cli({"validate", "--graph", bad, "--report", report});
  CHECK(r.status == cli::kFindings);
  CHECK(r.out.empty());
  const std::string json = util::read_file(report);
  CHECK(json.find("\"E2\"") != std::string::npos);
  CHECK(r.err.find("1 error(s)") != std::string::npos);
}

TEST_CASE("query for eboca-ev7 on the NER fixture is header-only") {
  TempDir tmp;
  const auto ev = (tmp.path() / "ev.nt").string();
  REQUIRE(eboca_cli({"-q", "annotate", "--input", ner_jsonl(), "--out", ev}).status == 0);
  const auto r = eboca_cli({"query", "--graph", ev, "--cq", "eboca-ev7"});
  CHECK(r.status == 0);
  CHECK(line_count(r.out) == 1);
  CHECK(r.out.rfind("?", 0) == 0);

  const auto json = eboca_cli({"query", "--graph", ev, "--cq", "eboca-ev7", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"rows\": []") != std::string::npos);
}

TEST_CASE("query file with a filter") {
  TempDir tmp;
  const auto kg = (tmp.path() / "kg.nt").string();
  REQUIRE(eboca_cli({"-q", "materialize", "--mapping", disnet_map(), "--out", kg}).status == 0);
  const auto q = tmp.write("q.rq",
                           "PREFIX sio: <http://semanticscience.org/resource/>\n"
                           "SELECT ?s ?v\n"
                           "?s sio:SIO_000300 ?v .\n"
                           "FILTER ?v > 0.5\n")
                     .string();
  const auto r = eboca_cli({"query", "--graph", kg, "--query", q});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "?s\t?v");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const auto value = line.substr(tab + 1);
    const auto close = value.find('"', 1);
    CHECK(std::stod(value.substr(1, close - 1)) > 0.5);
  }
  CHECK(rows > 0);

  const auto bad = tmp.write("bad.rq", "SELECT ?s\n?s \"lit\" ?o\n").string();
  const auto e = eboca_cli({"query", "--graph", kg, "--query", bad});
  CHECK(e.status == cli::kFailure);
  CHECK(e.err.find("bad.rq") != std::string::npos);
  CHECK(e.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(eboca_cli({}).status == cli::kUsage);
  CHECK(eboca_cli({"frobnicate"}).status == cli::kUsage);
  CHECK(eboca_cli({"materialize"}).status == cli::kUsage);
  CHECK(eboca_cli({"materialize", "--mapping", "/nonexistent/x.map"}).status == cli::kUsage);
  CHECK(eboca_cli({"query", "--graph", disnet_map(), "--format", "xml", "--cq", "cq01"}).status == cli::kUsage);
  CHECK(eboca_cli({"annotate", "--input", ner_jsonl(), "--date", "2021-02-30"}).status == cli::kUsage);
  CHECK(eboca_cli({"generate", "--scale", "1", "--out-dir", "/tmp"}).status == cli::kUsage);

  TempDir tmp;
  const auto g = tmp.write("g.nt", "").string();
  CHECK(eboca_cli({"query", "--graph", g}).status == cli::kUsage);
  CHECK(eboca_cli({"query", "--graph", g, "--cq", "cq99"}).status == cli::kUsage);
  CHECK(eboca_cli({"--help"}).status == cli::kOk);
}

TEST_CASE("I/O and parse failures exit 3 and name the path") {
  TempDir tmp;
  const auto malformed = tmp.write("broken.nt", "<http://a> <http://b> .\n").string();
  auto r = eboca_cli({"validate", "--graph", malformed});
  CHECK(r.status == cli::kFailure);
  CHECK(r.err.find("broken.nt") != std::string::npos);

  const std::string unwritable = (tmp.path() / "no-such-dir" / "out.nt").string();
  r = eboca_cli({"materialize", "--mapping", disnet_map(), "--out", unwritable});
  CHECK(r.status == cli::kFailure);
  CHECK(r.err.find(unwritable) != std::string::npos);

  const auto ttl = tmp.write("onto.ttl", "@prefix x: <http://x/> .\n").string();
  r = eboca_cli({"scan", "--ontology", ttl});
  CHECK(r.status == cli::kFailure);
  CHECK(r.err.find("onto.ttl") != std::string::npos);

  const auto bad_jsonl = tmp.write("bad.jsonl", "{not json\n").string();
  r = eboca_cli({"annotate", "--input", bad_jsonl});
  CHECK(r.status == cli::kFailure);
  CHECK(r.err.find("bad.jsonl") != std::string::npos);
}

TEST_CASE("pipeline is deterministic and thread-count independent") {
  TempDir a, b;
  const auto first = eboca::testing::run_fixture_pipeline(a.path());
  const auto second = eboca::testing::run_fixture_pipeline(b.path());
  CHECK(first == second);

  const auto seq = (a.path() / "kg-seq.nt").string();
  REQUIRE(eboca_cli({"-q", "materialize", "--mapping", disnet_map(), "--sequential", "--out", seq}).status == 0);
  CHECK(util::read_file(seq) == first.at("kg.nt"));
  const auto ev_seq = (a.path() / "ev-seq.nt").string();
  REQUIRE(eboca_cli({"-q", "annotate", "--input", ner_jsonl(), "--sequential", "--out", ev_seq}).status == 0);
  CHECK(util::read_file(ev_seq) == first.at("evidence.nt"));
}

TEST_CASE("exported axioms scan clean") {
  TempDir tmp;
  const auto nt = (tmp.path() / "eboca.nt").string();
  REQUIRE(eboca_cli({"-q", "export-axioms", "--out", nt}).status == 0);
  const auto r = eboca_cli({"scan", "--ontology", nt});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "[]\n");

  const auto turtle = eboca_cli({"export-axioms"});
  CHECK(turtle.status == 0);
  CHECK(turtle.out.rfind("@prefix", 0) == 0);
}

TEST_CASE("generated fixtures materialize to the closed-form count") {
  for (std::size_t n : {2u, 3u, 10u, 31u, 250u}) {
    CAPTURE(n);
    TempDir tmp;
    const auto g = eboca_cli({"generate", "--scale", std::to_string(n), "--out-dir", tmp.path().string()});
    REQUIRE(g.status == 0);
    const auto kg = (tmp.path() / "kg.nt").string();
    REQUIRE(eboca_cli({"-q", "materialize", "--mapping", (tmp.path() / "synthetic.map").string(), "--out", kg})
                .status == 0);
    const auto s = eboca_cli({"stats", "--graph", kg});
    REQUIRE(s.status == 0);
    // 4 triples per entity, 3 per association plus 3 per score node; a
    // comment on every third interaction.
    const std::size_t pathways = std::max<std::size_t>(1, n / 10);
    const std::size_t expected = 27 * n + 4 * pathways + (n + 2) / 3;
    CHECK(stat(s.out, "triples") == expected);
    CHECK(mapping::synthetic_triple_count(n) == expected);
    CHECK(g.out == (tmp.path() / "synthetic.map").string() + "\t" + std::to_string(expected) + "\n");
  }
}

TEST_CASE("cqs and export-catalog list their tables") {
  const auto r = eboca_cli({"cqs"});
  CHECK(r.status == 0);
  CHECK(line_count(r.out) == 22);
  CHECK(r.out.find("cq01\t") == 0);
  CHECK(r.out.find("eboca-ev7\t") != std::string::npos);

  const auto c = eboca_cli({"export-catalog"});
  CHECK(c.status == 0);
  CHECK(c.out.find("eboca-ev:") != std::string::npos);
}

TEST_CASE("outputs match the golden files") {
  TempDir tmp;
  const auto outputs = eboca::testing::run_fixture_pipeline(tmp.path());
  for (const auto& [rel, bytes] : outputs) {
    CAPTURE(rel);
    const auto golden = eboca::testing::golden_dir() / rel;
    REQUIRE(std::filesystem::exists(golden));
    CHECK(util::read_file(golden.string()) == bytes);
  }
}
