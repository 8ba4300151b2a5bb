#include "rdfgen/shacl/shape_map.hpp"

#include <algorithm>
#include <set>

#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::shacl {

using rdf::Graph;
using rdf::Term;

namespace {

bool is_logical_keyword(std::string_view local) {
  return local == "xone" || local == "or" || local == "and";
}

bool is_pair_keyword(std::string_view local) {
  return local == "equals" || local == "lessThan" || local == "lessThanOrEquals" ||
         local == "disjoint";
}

// A list item counts as a shape description when it appears as a subject.
bool has_subject_triples(const Graph& graph, const Term& node) {
  return !graph.match(node, std::nullopt, std::nullopt).empty();
}

}  // namespace

const EntryValue* ShapeMap::find_entry(std::string_view shacl_keyword) const {
  for (auto& [key, value] : entries) {
    auto local = vocab::shacl_local(key);
    if (local && *local == shacl_keyword) return &value;
  }
  return nullptr;
}

const Term* ShapeMap::entry_term(std::string_view shacl_keyword) const {
  const EntryValue* value = find_entry(shacl_keyword);
  if (!value) return nullptr;
  return std::get_if<Term>(value);
}

const ShapeMap* ShapeMap::find_property(std::string_view path_iri) const {
  for (auto& [path, child] : properties) {
    if (path == path_iri) return &child;
  }
  return nullptr;
}

const ShapeMap* RootShapeMap::find(std::string_view shape_iri) const {
  for (auto& shape : shapes) {
    if (shape.shape_id.is_iri() && shape.shape_id.iri_value() == shape_iri) return &shape;
  }
  return nullptr;
}

std::vector<Term> find_node_shapes(const rdf::Graph& graph) {
  const Term rdf_type = Term::iri(std::string(vocab::rdf_type));
  std::vector<Term> shapes;
  for (auto& t : graph.triples()) {
    if (t.predicate != rdf_type || !t.object.is_iri()) continue;
    if (!vocab::is_shacl(t.object.iri_value(), "NodeShape")) continue;
    if (std::find(shapes.begin(), shapes.end(), t.subject) == shapes.end()) {
      shapes.push_back(t.subject);
    }
  }
  return shapes;
}

ShapeMap map_shape(const Term& shape, const Graph& graph, WarningLog* log) {
  ShapeMap sm;
  sm.shape_id = shape;

  for (auto& triple : graph.triples()) {
    if (triple.subject != shape) continue;
    const std::string& pred = triple.predicate.iri_value();
    auto local = vocab::shacl_local(pred);

    if (local && *local == "property") {
      ShapeMap child = map_shape(triple.object, graph, log);
      const Term* path = child.entry_term("path");
      if (!path || !path->is_iri()) {
        throw Error(ErrorKind::MissingPath,
                    "property shape " + triple.object.to_string() + " of shape " +
                        shape.to_string() + " has no sh:path IRI");
      }
      std::string key = path->iri_value();
      auto existing = std::find_if(sm.properties.begin(), sm.properties.end(),
                                   [&](auto& kv) { return kv.first == key; });
      if (existing != sm.properties.end()) {
        warn(log, "DuplicatePath",
             "shape " + shape.to_string() + " declares sh:path <" + key +
                 "> more than once; keeping the last declaration");
        existing->second = std::move(child);
      } else {
        sm.properties.emplace_back(std::move(key), std::move(child));
      }
      continue;
    }

    if (local && *local == "in") {
      sm.entries[pred] = rdf::read_list(graph, triple.object).items;
      continue;
    }

    if (local && is_logical_keyword(*local)) {
      std::vector<ShapeMap> branches;
      for (auto& item : rdf::read_list(graph, triple.object).items) {
        if (has_subject_triples(graph, item)) {
          branches.push_back(map_shape(item, graph, log));
        } else {
          ShapeMap leaf;
          leaf.shape_id = item;
          branches.push_back(std::move(leaf));
        }
      }
      sm.entries[pred] = std::move(branches);
      continue;
    }

    sm.entries[pred] = triple.object;
  }
  return sm;
}

void synthesize_pair_targets(ShapeMap& sm, WarningLog*) {
  std::vector<std::string> missing;
  for (auto& [path, child] : sm.properties) {
    for (auto& [key, value] : child.entries) {
      auto local = vocab::shacl_local(key);
      if (!local || !is_pair_keyword(*local)) continue;
      const Term* target = std::get_if<Term>(&value);
      if (!target || !target->is_iri()) continue;
      const std::string& target_iri = target->iri_value();
      if (sm.find_property(target_iri)) continue;
      if (std::find(missing.begin(), missing.end(), target_iri) == missing.end()) {
        missing.push_back(target_iri);
      }
    }
  }
  for (auto& target_iri : missing) {
    ShapeMap stub;
    stub.shape_id = Term::iri(target_iri);
    stub.synthesized = true;
    stub.entries[std::string(vocab::shacl_ns) + "path"] = Term::iri(target_iri);
    sm.properties.emplace_back(target_iri, std::move(stub));
  }
}

namespace {

void collect_node_refs(const ShapeMap& sm, std::set<std::string>& pointed, bool is_root) {
  if (!is_root) {
    if (const Term* node = sm.entry_term("node"); node && node->is_iri()) {
      pointed.insert(node->iri_value());
    }
  }
  for (auto& [path, child] : sm.properties) collect_node_refs(child, pointed, false);
  for (auto& [key, value] : sm.entries) {
    if (auto* branches = std::get_if<std::vector<ShapeMap>>(&value)) {
      for (auto& branch : *branches) collect_node_refs(branch, pointed, false);
    }
  }
}

}  // namespace

std::vector<std::string> find_root_shapes(const RootShapeMap& root, WarningLog* log) {
  std::set<std::string> pointed;
  for (auto& shape : root.shapes) collect_node_refs(shape, pointed, true);

  std::vector<std::string> roots;
  for (auto& shape : root.shapes) {
    if (!shape.shape_id.is_iri()) continue;
    if (!pointed.count(shape.shape_id.iri_value())) roots.push_back(shape.shape_id.iri_value());
  }
  if (roots.empty() && !root.shapes.empty()) {
    warn(log, "CycleWarning", "every node shape is pointed to by another; treating all as roots");
    for (auto& shape : root.shapes) {
      if (shape.shape_id.is_iri()) roots.push_back(shape.shape_id.iri_value());
    }
  }
  return roots;
}

RootShapeMap extract_shape_maps(const Graph& graph, WarningLog* log) {
  RootShapeMap root;
  root.shacl_ns = std::string(vocab::shacl_ns);

  auto shapes = find_node_shapes(graph);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i == 0 && shapes[i].is_iri()) {
      // Remember which namespace spelling the document used.
      const Term rdf_type = Term::iri(std::string(vocab::rdf_type));
      for (auto& t : graph.triples()) {
        if (t.predicate == rdf_type && t.object.is_iri() &&
            vocab::is_shacl(t.object.iri_value(), "NodeShape")) {
          const std::string& iri = t.object.iri_value();
          root.shacl_ns = iri.substr(0, iri.size() - std::string_view("NodeShape").size());
          break;
        }
      }
    }
    ShapeMap sm = map_shape(shapes[i], graph, log);
    sm.source_order = static_cast<int>(i);
    synthesize_pair_targets(sm, log);
    root.shapes.push_back(std::move(sm));
  }
  return root;
}

}  // namespace rdfgen::shacl
