#pragma once

// The fixture pipeline driven through the command-line entry point, as a user
// would run it. tools/update-golden.sh runs the same steps with the binary.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eboca/cli/cli.hpp"
#include "eboca/query/catalog.hpp"
#include "eboca/util/text.hpp"
#include "test_support.hpp"

namespace eboca::testing {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

inline CliResult eboca_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

// Relative output path -> bytes. Throws std::runtime_error naming the step
// when a command fails unexpectedly.
inline std::map<std::string, std::string> run_fixture_pipeline(const std::filesystem::path& dir) {
  const auto disnet = data_dir() / "fixtures" / "disnet" / "disnet.map";
  const auto ner = data_dir() / "fixtures" / "ner" / "cord19_sample.jsonl";
  std::filesystem::create_directories(dir / "cq");
  const auto p = [&](const std::string& rel) { return (dir / rel).string(); };
  const auto step = [](const std::vector<std::string>& args) {
    const auto r = eboca_cli(args);
    if (r.status != 0) throw std::runtime_error(args[0] + " exited " + std::to_string(r.status) + ": " + r.err);
  };
  step({"-q", "materialize", "--mapping", disnet.string(), "--out", p("kg.nt")});
  step({"-q", "annotate", "--input", ner.string(), "--out", p("evidence.nt")});
  step({"-q", "merge", p("kg.nt"), p("evidence.nt"), "--out", p("all.nt")});
  step({"-q", "validate", "--graph", p("all.nt"), "--report", p("report.json")});
  std::vector<std::string> files{"kg.nt", "evidence.nt", "all.nt", "report.json"};
  for (const auto& cq : query::cq_catalog()) {
    const std::string rel = "cq/" + cq.id + ".tsv";
    step({"-q", "query", "--graph", p("all.nt"), "--cq", cq.id, "--out", p(rel)});
    files.push_back(rel);
  }
  std::map<std::string, std::string> out;
  for (const auto& rel : files) out[rel] = util::read_file(p(rel));
  return out;
}

inline std::filesystem::path golden_dir() { return std::filesystem::path(EBOCA_GOLDEN_DIR); }

}  // namespace eboca::testing
