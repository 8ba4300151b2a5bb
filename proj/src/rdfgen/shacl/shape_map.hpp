#ifndef RDFGEN_SHACL_SHAPE_MAP_HPP
#define RDFGEN_SHACL_SHAPE_MAP_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rdfgen/error.hpp"
#include "rdfgen/rdf/graph.hpp"

namespace rdfgen::shacl {

struct ShapeMap;

/// One constraint entry: a plain term, an expanded SHACL list of terms
/// (sh:in), or an ordered list of nested shape maps (sh:xone/or/and).
using EntryValue = std::variant<rdf::Term, std::vector<rdf::Term>, std::vector<ShapeMap>>;

/// Nested key/value representation of one SHACL shape. Property shapes are
/// lifted out of `entries` into `properties`, keyed by their sh:path IRI.
struct ShapeMap {
  rdf::Term shape_id;
  std::map<std::string, EntryValue> entries;
  std::vector<std::pair<std::string, ShapeMap>> properties;  // declaration order
  int source_order = -1;
  bool synthesized = false;  // created for a pair-constraint target only

  const EntryValue* find_entry(std::string_view shacl_keyword) const;
  const rdf::Term* entry_term(std::string_view shacl_keyword) const;
  const ShapeMap* find_property(std::string_view path_iri) const;
};

/// One entry per node shape found in the source graph, in document order.
struct RootShapeMap {
  std::vector<ShapeMap> shapes;
  std::string shacl_ns;  // namespace spelling used by the source graph

  const ShapeMap* find(std::string_view shape_iri) const;
  const ShapeMap& first_shape() const { return shapes.front(); }
};

/// Subjects of (?, rdf:type, sh:NodeShape) in document order.
std::vector<rdf::Term> find_node_shapes(const rdf::Graph& graph);

/// Transforms one shape into a ShapeMap, recursing through sh:property and
/// expanding SHACL lists. Throws MissingPath when a property shape has no
/// sh:path; duplicate sibling paths keep the last declaration and warn.
ShapeMap map_shape(const rdf::Term& shape, const rdf::Graph& graph, WarningLog* log = nullptr);

/// Inserts a minimal {sh:path} property map for every pair-constraint target
/// that has no property shape of its own. Idempotent.
void synthesize_pair_targets(ShapeMap& sm, WarningLog* log = nullptr);

/// Node shapes no other shape points to via sh:node, in document order.
/// When every shape is pointed to, all shapes are returned and a
/// CycleWarning is logged.
std::vector<std::string> find_root_shapes(const RootShapeMap& root, WarningLog* log = nullptr);

/// Full extraction: find node shapes, map each, synthesize pair targets.
RootShapeMap extract_shape_maps(const rdf::Graph& graph, WarningLog* log = nullptr);

}  // namespace rdfgen::shacl

#endif
