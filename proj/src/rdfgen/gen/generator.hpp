#ifndef RDFGEN_GEN_GENERATOR_HPP
#define RDFGEN_GEN_GENERATOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdfgen/gen/context.hpp"
#include "rdfgen/rdf/graph.hpp"
#include "rdfgen/shacl/shape_map.hpp"

namespace rdfgen::gen {

enum class LogicalKind { Xone, Or, And };

/// Branch selection: xone and or pick exactly one branch uniformly, and
/// returns every branch. Throws EmptyLogicalList.
std::vector<const shacl::ConstraintSet*> choose_branch(
    LogicalKind kind, const std::vector<shacl::ConstraintSet>& branches, GenContext& ctx);

/// Generates one entity for the shape: mints the next Node<N> IRI, emits its
/// rdf:type (when the shape has a target class) and the sh:description link
/// back to the shape, resolves logical branches, orders properties by their
/// pair-constraint plan, and recurses through sh:node references.
rdf::Term generate_entity(const shacl::ShapeMap& sm, GenContext& ctx, rdf::Graph& out);

/// entity_count entities for every root shape (shapes nobody points to), in
/// document order; pointed-to shapes are generated per reference.
rdf::Graph generate_graph(const shacl::RootShapeMap& root, GenContext& ctx);

struct PipelineOptions {
  std::string base_iri = "http://example.org/ns#";
  std::uint64_t start_index = 100;
  std::string dict_dir;  // empty = built-in dictionaries only
};

/// Full run: parse the shapes, extract shape maps, generate. The returned
/// graph carries the input's prefix table.
rdf::Graph run_pipeline(std::string_view shapes_source, std::uint64_t entity_count,
                        std::optional<std::uint64_t> seed, const PipelineOptions& options = {},
                        WarningLog* log = nullptr);

}  // namespace rdfgen::gen

#endif
