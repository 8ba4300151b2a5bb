#ifndef RDFGEN_CHECK_VALIDATOR_HPP
#define RDFGEN_CHECK_VALIDATOR_HPP

#include <string>
#include <vector>

#include "rdfgen/rdf/graph.hpp"
#include "rdfgen/shacl/shape_map.hpp"

namespace rdfgen::check {

struct Violation {
  rdf::Term node;
  std::string path;        // empty for node-level constraints
  std::string constraint;  // minCount, datatype, pattern, xone, ...
  std::string detail;
};

struct Report {
  bool conforms = true;
  std::vector<Violation> violations;

  /// Human-readable summary followed by one violation per line.
  std::string to_text() const;
  /// Machine-readable: node TAB path TAB constraint TAB detail, one per line.
  std::string to_tsv() const;
};

/// Checks `data` against the shapes. Focus nodes are selected by
/// sh:targetClass membership plus sh:description back-links, so shapes
/// without a target class are still covered. Violations are data, not
/// errors.
Report validate(const rdf::Graph& data, const shacl::RootShapeMap& root);

/// Validates only the given (focus node, shape IRI) pairs.
Report validate_nodes(const rdf::Graph& data, const shacl::RootShapeMap& root,
                      const std::vector<std::pair<rdf::Term, std::string>>& focus);

}  // namespace rdfgen::check

#endif
