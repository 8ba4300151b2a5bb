#ifndef RDFGEN_RDF_GRAPH_HPP
#define RDFGEN_RDF_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdfgen/rdf/term.hpp"

namespace rdfgen::rdf {

/// A set of triples with a prefix table. Insertion order is preserved for
/// document-order queries; `match` returns (s, p, o)-sorted results.
class Graph {
 public:
  /// Returns false when the triple was already present.
  bool insert(Triple t);
  bool contains(const Triple& t) const { return index_.count(t) != 0; }

  /// Triples in insertion (document) order.
  const std::vector<Triple>& triples() const { return order_; }
  std::size_t size() const { return order_.size(); }

  /// All triples matching the non-absent components, sorted by (s, p, o).
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Objects of (s, p, ?), sorted.
  std::vector<Term> objects(const Term& s, const Term& p) const;

  void add_prefix(std::string prefix, std::string iri);
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  /// Fresh blank-node identifier, unique within this graph.
  std::string fresh_blank_id() { return "b" + std::to_string(++blank_counter_); }

  /// Triple-set equality; prefixes are not compared.
  friend bool operator==(const Graph& a, const Graph& b) { return a.index_ == b.index_; }

  const std::set<Triple>& sorted() const { return index_; }

 private:
  std::vector<Triple> order_;
  std::set<Triple> index_;
  std::map<std::string, std::string> prefixes_;
  std::uint64_t blank_counter_ = 0;
};

/// An rdf:first/rdf:rest chain read into an ordered sequence.
struct RdfList {
  std::vector<Term> items;
};

/// Walks the collection starting at `head`. Throws MalformedList when a chain
/// node lacks rdf:first or rdf:rest.
RdfList read_list(const Graph& graph, const Term& head);

/// Builds an rdf:first/rdf:rest chain for `items` inside `graph` and returns
/// its head (rdf:nil for an empty sequence).
Term write_list(Graph& graph, const std::vector<Term>& items);

}  // namespace rdfgen::rdf

#endif
