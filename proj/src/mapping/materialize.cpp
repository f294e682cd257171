#include "eboca/mapping/materialize.hpp"

#include <future>
#include <map>
#include <memory>
#include <unordered_map>

#include "eboca/error.hpp"
#include "eboca/mapping/sources.hpp"
#include "eboca/vocab/terms.hpp"

namespace eboca::mapping {

namespace {

// Column lookup by field name for one table; unknown fields read as "".
class RowView {
 public:
  explicit RowView(const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) index_.emplace(table.columns[i], i);
  }

  void bind(const std::vector<std::string>& row) { row_ = &row; }

  std::string_view operator()(const std::string& field) const {
    auto it = index_.find(field);
    return it == index_.end() ? std::string_view() : std::string_view((*row_)[it->second]);
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  const std::vector<std::string>* row_ = nullptr;
};

// parent field value -> subject IRIs of the parent rows carrying it
using JoinIndex = std::unordered_map<std::string, std::vector<std::string>>;

std::string source_key(const LogicalSource& s) {
  return std::to_string(static_cast<int>(s.format)) + '\n' + s.path + '\n' + s.iterator.value_or("");
}

struct Context {
  std::map<std::string, std::shared_ptr<const Table>> tables;  // by source_key
  std::map<std::pair<std::string, std::string>, JoinIndex> joins;  // (parent rule, parent field)

  const Table& table_of(const TripleMapRule& rule) const { return *tables.at(source_key(rule.source)); }
};

JoinIndex build_join_index(const TripleMapRule& parent, const Table& table, const std::string& field) {
  JoinIndex index;
  RowView view(table);
  for (const auto& row : table.rows) {
    view.bind(row);
    const std::string_view key = view(field);
    if (key.empty()) continue;
    if (auto subject = parent.subject.expand(view)) index[std::string(key)].push_back(std::move(*subject));
  }
  return index;
}

template <typename Sink>
void run_rule(const TripleMapRule& rule, const Context& ctx, Sink&& emit) {
  const Table& table = ctx.table_of(rule);
  RowView view(table);
  std::vector<const JoinIndex*> join_indexes;
  for (const auto& join : rule.joins) join_indexes.push_back(&ctx.joins.at({join.parent_rule, join.parent_field}));

  for (const auto& row : table.rows) {
    view.bind(row);
    auto subject_text = rule.subject.expand(view);
    if (!subject_text) continue;
    const rdf::Iri subject(std::move(*subject_text));
    if (rule.subject_class) emit(rdf::Triple(subject, vocab::terms::rdf_type, *rule.subject_class));

    for (const auto& po : rule.po_maps) {
      if (const auto* tmpl = std::get_if<Template>(&po.object)) {
        if (auto object = tmpl->expand(view)) emit(rdf::Triple(subject, po.predicate, rdf::Iri(std::move(*object))));
      } else if (const auto* ref = std::get_if<ReferenceMap>(&po.object)) {
        const std::string_view value = view(ref->field);
        if (value.empty()) continue;
        rdf::Literal literal = ref->language.empty() ? rdf::Literal(std::string(value), ref->datatype)
                                                     : rdf::Literal::with_language(std::string(value), ref->language);
        emit(rdf::Triple(subject, po.predicate, std::move(literal)));
      } else {
        emit(rdf::Triple(subject, po.predicate, std::get<ConstantMap>(po.object).value));
      }
    }

    for (std::size_t j = 0; j < rule.joins.size(); ++j) {
      const std::string_view value = view(rule.joins[j].child_field);
      if (value.empty()) continue;
      auto it = join_indexes[j]->find(std::string(value));
      if (it == join_indexes[j]->end()) continue;
      for (const auto& parent_subject : it->second) {
        emit(rdf::Triple(subject, rule.joins[j].predicate, rdf::Iri(parent_subject)));
      }
    }
  }
}

}  // namespace

rdf::Graph materialize(const MappingDoc& doc, const std::filesystem::path& base_dir,
                       const MaterializeOptions& options) {
  check_source_headers(doc, base_dir);
  const auto launch = options.parallel ? std::launch::async : std::launch::deferred;

  Context ctx;
  {
    std::map<std::string, std::future<Table>> loading;
    for (const auto& rule : doc.rules) {
      const std::string key = source_key(rule.source);
      if (loading.count(key)) continue;
      loading.emplace(key, std::async(launch, [&rule, &base_dir] { return load_source(rule.source, base_dir); }));
    }
    for (auto& [key, future] : loading) ctx.tables.emplace(key, std::make_shared<const Table>(future.get()));
  }

  for (const auto& rule : doc.rules) {
    for (const auto& join : rule.joins) {
      const auto id = std::make_pair(join.parent_rule, join.parent_field);
      if (ctx.joins.count(id)) continue;
      const TripleMapRule& parent = *doc.find(join.parent_rule);
      ctx.joins.emplace(id, build_join_index(parent, ctx.table_of(parent), join.parent_field));
    }
  }

  rdf::Graph graph;
  if (!options.parallel) {
    for (const auto& rule : doc.rules) run_rule(rule, ctx, [&](rdf::Triple&& t) { graph.insert(t); });
    return graph;
  }

  // Each rule fills its own buffer; buffers are merged in rule order, so the
  // single writer to `graph` is this thread.
  std::vector<std::future<std::vector<rdf::Triple>>> results;
  results.reserve(doc.rules.size());
  for (const auto& rule : doc.rules) {
    results.push_back(std::async(std::launch::async, [&rule, &ctx] {
      std::vector<rdf::Triple> out;
      run_rule(rule, ctx, [&](rdf::Triple&& t) { out.push_back(std::move(t)); });
      return out;
    }));
  }
  for (auto& result : results) {
    for (const auto& t : result.get()) graph.insert(t);
  }
  return graph;
}

}  // namespace eboca::mapping
