#ifndef RDFGEN_RDF_TURTLE_HPP
#define RDFGEN_RDF_TURTLE_HPP

#include <string>
#include <string_view>

#include "rdfgen/rdf/graph.hpp"

namespace rdfgen::rdf {

/// Parses a Turtle document into a Graph. Supports the subset used by SHACL
/// shapes graphs: prefix/base directives, IRIs, prefixed names, blank-node
/// property lists, labelled blank nodes, collections, string literals
/// (single/double quoted, lang tags, ^^ datatypes), numeric and boolean
/// shorthand, the `a` keyword, and `;`/`,` abbreviations.
///
/// Throws SyntaxError (with line/column) on malformed input and
/// Error(UnresolvedPrefix) when a prefixed name uses an undeclared prefix.
Graph parse_turtle(std::string_view source);

/// Reads `path` as UTF-8 Turtle. Throws Error(Io) when unreadable.
Graph parse_turtle_file(const std::string& path);

/// Serializes deterministically: prefix declarations sorted by prefix, one
/// block per subject (subjects sorted, IRIs before blanks), rdf:type emitted
/// first as `a`, remaining predicates sorted by IRI, objects sorted. Plain
/// xsd:string literals are unquoted of their datatype; integer, decimal and
/// boolean literals use bare shorthand when their lexical form allows it.
std::string serialize_turtle(const Graph& graph);

}  // namespace rdfgen::rdf

#endif
