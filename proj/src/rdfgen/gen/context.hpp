#ifndef RDFGEN_GEN_CONTEXT_HPP
#define RDFGEN_GEN_CONTEXT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "rdfgen/gen/dictionary.hpp"
#include "rdfgen/gen/random.hpp"
#include "rdfgen/rdf/term.hpp"
#include "rdfgen/shacl/constraints.hpp"
#include "rdfgen/shacl/shape_map.hpp"

namespace rdfgen::gen {

/// State for one generation run: the seeded RNG, the node counter behind the
/// Node<N> IRIs, and the shape/dictionary registries. One run owns its
/// context exclusively; a given seed and input always produce the same graph.
struct GenContext {
  Rng rng;
  std::uint64_t node_counter = 100;
  std::string base_iri = "http://example.org/ns#";
  const shacl::RootShapeMap* shape_registry = nullptr;
  const DictionaryRegistry* dictionaries = nullptr;
  std::uint64_t entity_count = 1;
  long long today_days = 0;
  int depth = 0;
  // When set, value generation skips dictionaries and name heuristics and
  // draws from the constraints alone; used to escape collision loops when a
  // value set is too small for the required distinct-value count.
  bool constraints_only = false;

  // Normalized models cached per shape IRI.
  std::map<std::string, shacl::ConstraintSet> models;

  explicit GenContext(std::uint64_t seed);

  rdf::Term fresh_node() {
    return rdf::Term::iri(base_iri + "Node" + std::to_string(node_counter++));
  }

  std::string description_predicate() const;
};

}  // namespace rdfgen::gen

#endif
