#include "eboca/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <map>

#include "eboca/error.hpp"
#include "eboca/evidence/annotator.hpp"
#include "eboca/mapping/materialize.hpp"
#include "eboca/mapping/synthetic.hpp"
#include "eboca/query/catalog.hpp"
#include "eboca/rdf/ntriples.hpp"
#include "eboca/util/date.hpp"
#include "eboca/util/text.hpp"
#include "eboca/validate/validate.hpp"
#include "eboca/vocab/catalog.hpp"
#include "eboca/vocab/model.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::cli {

namespace fs = std::filesystem;

namespace {

class Log {
 public:
  Log(std::ostream& err, int level) : err_(err), level_(level) {}

  void info(const std::string& msg) const {
    if (level_ >= 1) err_ << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ >= 2) err_ << msg << "\n";
  }
  void always(const std::string& msg) const { err_ << msg << "\n"; }

 private:
  std::ostream& err_;
  int level_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

rdf::Graph load_graph(const std::string& path) {
  if (fs::path(path).extension() == ".ttl") {
    throw InvalidArgument(path + ": Turtle input is not supported, give the graph as N-Triples (.nt)");
  }
  const std::string text = util::read_file(path);
  try {
    return rdf::parse_ntriples(text);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

// Writes to the named file, or to `out` when no path was given.
void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty()) {
    out << body;
  } else {
    util::write_file(path, body);
  }
}

std::string stats_report(const rdf::Graph& g) {
  std::map<std::string, std::size_t> per_class;
  for (const auto& t : g.match({std::nullopt, vocab::terms::rdf_type, std::nullopt})) {
    ++per_class[rdf::to_ntriples(t.object())];
  }
  std::string out;
  out += "triples\t" + std::to_string(g.size()) + "\n";
  out += "subjects\t" + std::to_string(g.distinct_subjects()) + "\n";
  out += "predicates\t" + std::to_string(g.distinct_predicates()) + "\n";
  out += "objects\t" + std::to_string(g.distinct_objects()) + "\n";
  for (const auto& [cls, n] : per_class) out += "class\t" + cls + "\t" + std::to_string(n) + "\n";
  return out;
}

int report_findings(const std::vector<validate::Finding>& findings, const std::string& report_path,
                    std::ostream& out, const Log& log) {
  emit(report_path, validate::findings_to_json(findings), out);
  std::string summary = validate::findings_summary(findings);
  if (summary.ends_with('\n')) summary.pop_back();
  log.info(summary);
  return validate::has_errors(findings) ? kFindings : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"EBOCA knowledge-graph toolkit: build, annotate, validate and query biomedical association graphs",
               "eboca"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  bool quiet = false;
  bool verbose = false;
  app.add_flag("-q,--quiet", quiet, "Only log errors");
  app.add_flag("-v,--verbose", verbose, "Log timings and counts");

  std::string out_path;
  bool sequential = false;

  auto* materialize = app.add_subcommand("materialize", "Run a mapping document over its sources");
  std::string mapping_path, base_dir;
  materialize->add_option("--mapping", mapping_path, "Mapping document")->required()->check(CLI::ExistingFile);
  materialize->add_option("--base-dir", base_dir, "Directory that source paths are relative to "
                                                   "(default: the mapping's directory)");
  materialize->add_option("--out", out_path, "Output N-Triples file (default: stdout)");
  materialize->add_flag("--sequential", sequential, "Run rules one after another");

  auto* annotate = app.add_subcommand("annotate", "Turn NER extraction batches into evidence triples");
  std::string input_path, date_text;
  annotate->add_option("--input", input_path, "JSON Lines batch")->required()->check(CLI::ExistingFile);
  annotate->add_option("--out", out_path, "Output N-Triples file (default: stdout)");
  annotate->add_option("--date", date_text, "Creation date for paragraphs without created_on (YYYY-MM-DD)");
  annotate->add_flag("--sequential", sequential, "Process paragraphs on one thread");

  auto* merge = app.add_subcommand("merge", "Set union of N-Triples files");
  std::vector<std::string> merge_inputs;
  merge->add_option("inputs", merge_inputs, "N-Triples files")->required()->check(CLI::ExistingFile);
  merge->add_option("--out", out_path, "Output N-Triples file (default: stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Check instance data against the EBOCA rules E1-E5");
  std::string graph_path, report_path;
  validate_cmd->add_option("--graph", graph_path, "N-Triples graph")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--report", report_path, "JSON report file (default: stdout)");

  auto* scan = app.add_subcommand("scan", "Scan an ontology for modelling pitfalls");
  std::string ontology_path;
  bool include_reused = false;
  scan->add_option("--ontology", ontology_path, "Ontology as N-Triples")->required()->check(CLI::ExistingFile);
  scan->add_option("--report", report_path, "JSON report file (default: stdout)");
  scan->add_flag("--include-reused", include_reused, "Also report terms outside the EBOCA namespaces");

  auto* query_cmd = app.add_subcommand("query", "Evaluate a competency question or a query file");
  std::string cq_id, query_path, format = "tsv";
  query_cmd->add_option("--graph", graph_path, "N-Triples graph")->required()->check(CLI::ExistingFile);
  auto* cq_opt = query_cmd->add_option("--cq", cq_id, "Competency question id, e.g. cq03 or eboca-ev7");
  query_cmd->add_option("--query", query_path, "Query file")->check(CLI::ExistingFile)->excludes(cq_opt);
  query_cmd->add_option("--format", format, "Result format")->check(CLI::IsMember({"tsv", "json"}));
  query_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* cqs = app.add_subcommand("cqs", "List the competency-question catalog");

  auto* stats = app.add_subcommand("stats", "Triple, node and per-class instance counts");
  stats->add_option("--graph", graph_path, "N-Triples graph")->required()->check(CLI::ExistingFile);
  stats->add_option("--out", out_path, "Output file (default: stdout)");

  auto* export_axioms = app.add_subcommand("export-axioms", "Write the ontology axioms (.nt or Turtle)");
  export_axioms->add_option("--out", out_path, "Output file; N-Triples when it ends in .nt (default: Turtle on stdout)");

  auto* export_catalog = app.add_subcommand("export-catalog", "Write the vocabulary as prefixed name and IRI");
  export_catalog->add_option("--out", out_path, "Output file (default: stdout)");

  auto* generate = app.add_subcommand("generate", "Write a synthetic DISNET-shaped fixture for scale runs");
  std::size_t scale = 0;
  std::string out_dir;
  generate->add_option("--scale", scale, "Number of diseases, genes and drugs")->required()->check(CLI::Range(2, 100000000));
  generate->add_option("--out-dir", out_dir, "Directory for the sources and synthetic.map")->required();

  std::vector<const char*> argv{"eboca"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Log log(err, quiet ? 0 : (verbose ? 2 : 1));
  const Stopwatch clock;
  try {
    if (materialize->parsed()) {
      const fs::path dir = base_dir.empty() ? fs::path(mapping_path).parent_path() : fs::path(base_dir);
      const auto doc = mapping::parse_mapping_doc(util::read_file(mapping_path), dir);
      const auto g = mapping::materialize(doc, dir, {.parallel = !sequential});
      emit(out_path, rdf::serialize_ntriples(g), out);
      log.info("materialized " + std::to_string(g.size()) + " triples from " + std::to_string(doc.rules.size()) +
               " rules");
    } else if (annotate->parsed()) {
      evidence::AnnotateOptions options;
      options.parallel = !sequential;
      if (!date_text.empty()) {
        const auto d = util::Date::try_parse(date_text);
        if (!d) {
          log.always("error: --date '" + date_text + "' is not a YYYY-MM-DD calendar date");
          return kUsage;
        }
        options.default_date = *d;
      }
      std::vector<evidence::ParagraphExtraction> batch;
      try {
        batch = evidence::parse_jsonl(util::read_file(input_path));
      } catch (const ParseError& e) {
        throw Error(input_path + ": " + e.what());
      }
      const auto result = evidence::annotate(batch, options);
      for (const auto& w : result.warnings) log.always("warning: " + w.paragraph_id + ": " + w.message);
      emit(out_path, rdf::serialize_ntriples(result.graph), out);
      log.info("annotated " + std::to_string(batch.size()) + " paragraphs: " +
               std::to_string(result.associations) + " associations, " + std::to_string(result.graph.size()) +
               " triples");
    } else if (merge->parsed()) {
      rdf::Graph g;
      for (const auto& path : merge_inputs) g.insert_all(load_graph(path));
      emit(out_path, rdf::serialize_ntriples(g), out);
      log.info("merged " + std::to_string(merge_inputs.size()) + " files into " + std::to_string(g.size()) +
               " triples");
    } else if (validate_cmd->parsed()) {
      return report_findings(validate::validate_instances(load_graph(graph_path)), report_path, out, log);
    } else if (scan->parsed()) {
      validate::ScanOptions options;
      options.include_reused = include_reused;
      return report_findings(validate::scan_pitfalls(load_graph(ontology_path), options), report_path, out, log);
    } else if (query_cmd->parsed()) {
      if (cq_id.empty() == query_path.empty()) {
        log.always("error: query needs exactly one of --cq or --query\n" + query_cmd->help());
        return kUsage;
      }
      query::Query q;
      if (!cq_id.empty()) {
        if (!query::find_cq(cq_id)) {
          log.always("error: unknown competency question '" + cq_id + "' (see 'eboca cqs')");
          return kUsage;
        }
        q = query::cq_query(cq_id);
      } else {
        try {
          q = query::parse_query(util::read_file(query_path));
        } catch (const ParseError& e) {
          throw Error(query_path + ": " + e.what());
        }
      }
      const auto g = load_graph(graph_path);
      const auto result = query::solve(g, q);
      emit(out_path, format == "json" ? query::to_json(result) : query::to_tsv(result), out);
      log.info(std::to_string(result.rows.size()) + " rows");
    } else if (cqs->parsed()) {
      for (const auto& cq : query::cq_catalog()) out << cq.id << "\t" << cq.module << "\t" << cq.question << "\n";
    } else if (stats->parsed()) {
      emit(out_path, stats_report(load_graph(graph_path)), out);
    } else if (export_axioms->parsed()) {
      const auto g = vocab::emit_ontology_axioms();
      const bool nt = fs::path(out_path).extension() == ".nt";
      emit(out_path, nt ? rdf::serialize_ntriples(g) : rdf::serialize_turtle(g, vocab::turtle_prefixes()), out);
      log.info("wrote " + std::to_string(g.size()) + " axiom triples");
    } else if (export_catalog->parsed()) {
      emit(out_path, vocab::catalog_table(), out);
    } else if (generate->parsed()) {
      const auto mapping = mapping::write_synthetic_fixture(out_dir, scale);
      out << mapping.string() << "\t" << mapping::synthetic_triple_count(scale) << "\n";
    }
  } catch (const std::exception& e) {
    log.always(std::string("error: ") + e.what());
    return kFailure;
  }
  log.debug("done in " + std::to_string(static_cast<long>(clock.seconds() * 1000)) + " ms");
  return kOk;
}

}  // namespace eboca::cli
