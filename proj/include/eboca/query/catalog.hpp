#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eboca/query/query.hpp"

namespace eboca::query {

struct CompetencyQuestion {
  std::string id;      // cq01..cq15, eboca-ev1..eboca-ev7
  std::string module;  // "sem-disnet" or "evidences"
  std::string question;
  std::string text;    // query text for parse_query
};

const std::vector<CompetencyQuestion>& cq_catalog();
// nullptr for an unknown id.
const CompetencyQuestion* find_cq(std::string_view id);

// Throws InvalidArgument for an unknown id.
Query cq_query(std::string_view id);
BindingSet run_cq(const rdf::Graph& g, std::string_view id);

}  // namespace eboca::query
