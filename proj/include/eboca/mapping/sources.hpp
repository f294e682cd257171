#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eboca/mapping/document.hpp"

namespace eboca::mapping {

// A logical source loaded into memory. JSON records are flattened into
// dotted column names ("a.b.c"); an absent value is stored as "".
struct Table {
  std::string name;  // source path, used in error messages
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view field) const;
};

// RFC 4180 CSV (quoted fields, "" escapes, CRLF or LF). The first record is
// the header. Blank lines are skipped. Errors name the file and the 1-based
// data record number (the header is record 0).
Table read_csv(std::string_view text, const std::string& name);

// Tab-separated values: no quoting, a field may not contain tab or newline.
Table read_tsv(std::string_view text, const std::string& name);

// Selects records with `iterator`, a JSONPath subset of `$`, `.key` and
// `[*]`. Each selected node must be an object.
Table read_json(std::string_view text, std::string_view iterator, const std::string& name);

// Only reads the header row of a CSV/TSV file.
std::vector<std::string> read_header(const LogicalSource& source, const std::filesystem::path& base_dir);

Table load_source(const LogicalSource& source, const std::filesystem::path& base_dir);

}  // namespace eboca::mapping
