#pragma once

#include <filesystem>

#include "eboca/mapping/document.hpp"
#include "eboca/rdf/graph.hpp"

namespace eboca::mapping {

struct MaterializeOptions {
  // Rules run concurrently when true; the result is identical either way.
  bool parallel = true;
};

// Runs every rule over its source and returns the union of the produced
// triples. Throws MappingError for unreadable or ill-formed sources and for
// fields missing from a CSV/TSV header.
rdf::Graph materialize(const MappingDoc& doc, const std::filesystem::path& base_dir,
                       const MaterializeOptions& options = {});

}  // namespace eboca::mapping
