#include "eboca/mapping/sources.hpp"

#include <fstream>
#include <limits>
#include <unordered_map>

#include <json.hpp>

#include "eboca/error.hpp"
#include "eboca/util/text.hpp"

namespace eboca::mapping {

std::optional<std::size_t> Table::column(std::string_view field) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == field) return i;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t record, const std::string& message) {
  throw MappingError(name + ": record " + std::to_string(record) + ": " + message);
}

// RFC 4180 reader. Stops after `max_records` records (header included).
std::vector<std::vector<std::string>> parse_csv_records(std::string_view text, const std::string& name,
                                                        std::size_t max_records) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto finish_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    // A physically empty line is a single empty field; skip it.
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
  };

  while (i < n && records.size() < max_records) {
    const std::size_t record_no = records.size();
    if (text[i] == '"') {
      ++i;
      while (true) {
        if (i >= n) fail(name, record_no, "unterminated quoted field");
        if (text[i] == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.push_back(text[i++]);
      }
      if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        fail(name, record_no, "unexpected character after closing quote");
      }
    } else {
      while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        if (text[i] == '"') fail(name, record_no, "quote inside unquoted field");
        field.push_back(text[i++]);
      }
    }
    if (i >= n) {
      finish_record();
      break;
    }
    if (text[i] == ',') {
      record.push_back(std::move(field));
      field.clear();
      ++i;
      if (i == n) finish_record();  // trailing comma: last field is empty
      continue;
    }
    if (text[i] == '\r') {
      ++i;
      if (i < n && text[i] != '\n') fail(name, record_no, "bare carriage return");
    }
    ++i;  // '\n'
    finish_record();
  }
  return records;
}

std::vector<std::vector<std::string>> parse_tsv_records(std::string_view text, std::size_t max_records) {
  std::vector<std::vector<std::string>> records;
  std::size_t start = 0;
  while (start < text.size() && records.size() < max_records) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t f = 0;
    while (true) {
      const std::size_t tab = line.find('\t', f);
      fields.emplace_back(line.substr(f, tab == std::string_view::npos ? std::string_view::npos : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    records.push_back(std::move(fields));
  }
  return records;
}

Table to_table(std::vector<std::vector<std::string>> records, const std::string& name) {
  if (records.empty()) throw MappingError(name + ": missing header row");
  Table table;
  table.name = name;
  table.columns = std::move(records[0]);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    for (std::size_t d = 0; d < c; ++d) {
      if (table.columns[c] == table.columns[d]) fail(name, 0, "duplicate column '" + table.columns[c] + "'");
    }
  }
  table.rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.columns.size()) {
      fail(name, r,
           "expected " + std::to_string(table.columns.size()) + " fields, found " + std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

using json = nlohmann::json;

std::vector<const json*> select(const json& root, std::string_view iterator, const std::string& name) {
  if (iterator.empty() || iterator.front() != '$') {
    throw MappingError(name + ": iterator must start with '$': " + std::string(iterator));
  }
  std::vector<const json*> nodes{&root};
  std::size_t i = 1;
  while (i < iterator.size()) {
    std::vector<const json*> next;
    if (iterator.substr(i, 3) == "[*]") {
      for (const json* node : nodes) {
        if (!node->is_array()) continue;
        for (const auto& child : *node) next.push_back(&child);
      }
      i += 3;
    } else if (iterator[i] == '.') {
      std::size_t end = i + 1;
      while (end < iterator.size() && iterator[end] != '.' && iterator[end] != '[') ++end;
      const std::string key(iterator.substr(i + 1, end - i - 1));
      if (key.empty()) throw MappingError(name + ": empty key in iterator " + std::string(iterator));
      for (const json* node : nodes) {
        if (node->is_object()) {
          auto it = node->find(key);
          if (it != node->end()) next.push_back(&*it);
        }
      }
      i = end;
    } else {
      throw MappingError(name + ": unsupported iterator syntax at '" + std::string(iterator.substr(i)) + "'");
    }
    nodes = std::move(next);
  }
  return nodes;
}

void flatten(const json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : node.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    switch (value.type()) {
      case json::value_t::object: flatten(value, path, out); break;
      case json::value_t::array: break;  // nested lists have no column form
      case json::value_t::null: out.emplace_back(path, ""); break;
      case json::value_t::string: out.emplace_back(path, value.get<std::string>()); break;
      case json::value_t::number_float: out.emplace_back(path, util::shortest_double(value.get<double>())); break;
      default: out.emplace_back(path, value.dump()); break;
    }
  }
}

}  // namespace

Table read_csv(std::string_view text, const std::string& name) {
  return to_table(parse_csv_records(text, name, std::numeric_limits<std::size_t>::max()), name);
}

Table read_tsv(std::string_view text, const std::string& name) {
  return to_table(parse_tsv_records(text, std::numeric_limits<std::size_t>::max()), name);
}

Table read_json(std::string_view text, std::string_view iterator, const std::string& name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MappingError(name + ": malformed JSON at byte " + std::to_string(e.byte));
  }
  Table table;
  table.name = name;
  std::unordered_map<std::string, std::size_t> index;
  const auto nodes = select(root, iterator, name);
  std::vector<std::pair<std::string, std::string>> cells;
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    if (!nodes[r]->is_object()) fail(name, r + 1, "iterator selected a non-object value");
    cells.clear();
    flatten(*nodes[r], "", cells);
    std::vector<std::string> row(table.columns.size());
    for (auto& [column, value] : cells) {
      auto [it, added] = index.emplace(column, table.columns.size());
      if (added) {
        table.columns.push_back(column);
        row.emplace_back();
      }
      row[it->second] = std::move(value);
    }
    table.rows.push_back(std::move(row));
  }
  for (auto& row : table.rows) row.resize(table.columns.size());
  return table;
}

std::vector<std::string> read_header(const LogicalSource& source, const std::filesystem::path& base_dir) {
  const std::filesystem::path path = base_dir / source.path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MappingError(source.path + ": cannot open " + path.string());
  std::string head;
  std::string line;
  // Enough lines to close any quoted newline in a CSV header.
  for (int k = 0; k < 64 && std::getline(in, line); ++k) {
    head += line;
    head += '\n';
    auto records = source.format == SourceFormat::Tsv ? parse_tsv_records(head, 1) : std::vector<std::vector<std::string>>{};
    if (source.format == SourceFormat::Csv) {
      try {
        records = parse_csv_records(head, source.path, 1);
      } catch (const MappingError&) {
        continue;  // header not complete yet
      }
    }
    if (!records.empty()) return records[0];
  }
  throw MappingError(source.path + ": record 0: missing or unreadable header row");
}

Table load_source(const LogicalSource& source, const std::filesystem::path& base_dir) {
  const std::filesystem::path path = base_dir / source.path;
  std::string text;
  try {
    text = util::read_file(path.string());
  } catch (const IoError& e) {
    throw MappingError(source.path + ": " + e.what());
  }
  switch (source.format) {
    case SourceFormat::Csv: return read_csv(text, source.path);
    case SourceFormat::Tsv: return read_tsv(text, source.path);
    case SourceFormat::Json: return read_json(text, source.iterator.value_or("$"), source.path);
  }
  throw MappingError(source.path + ": unknown source format");
}

}  // namespace eboca::mapping
