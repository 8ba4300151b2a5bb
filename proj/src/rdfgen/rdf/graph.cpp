#include "rdfgen/rdf/graph.hpp"

#include "rdfgen/error.hpp"
#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::rdf {

bool Graph::insert(Triple t) {
  auto [it, added] = index_.insert(t);
  if (added) order_.push_back(std::move(t));
  return added;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto begin = index_.begin();
  auto end = index_.end();
  if (s) {
    // The index is ordered by subject first; narrow to that subject's range.
    begin = index_.lower_bound(Triple{*s, Term{}, Term{}});
    for (auto it = begin; it != end; ++it) {
      if (it->subject != *s) break;
      if (p && it->predicate != *p) continue;
      if (o && it->object != *o) continue;
      out.push_back(*it);
    }
    return out;
  }
  for (auto it = begin; it != end; ++it) {
    if (p && it->predicate != *p) continue;
    if (o && it->object != *o) continue;
    out.push_back(*it);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (auto& t : match(s, p, std::nullopt)) out.push_back(t.object);
  return out;
}

void Graph::add_prefix(std::string prefix, std::string iri) {
  prefixes_[std::move(prefix)] = std::move(iri);
}

RdfList read_list(const Graph& graph, const Term& head) {
  const Term nil = Term::iri(std::string(vocab::rdf_nil));
  const Term first = Term::iri(std::string(vocab::rdf_first));
  const Term rest = Term::iri(std::string(vocab::rdf_rest));

  RdfList list;
  Term node = head;
  while (node != nil) {
    auto firsts = graph.objects(node, first);
    auto rests = graph.objects(node, rest);
    if (firsts.size() != 1 || rests.size() != 1) {
      throw Error(ErrorKind::MalformedList,
                  "collection node " + node.to_string() +
                      " must have exactly one rdf:first and one rdf:rest");
    }
    list.items.push_back(firsts.front());
    node = rests.front();
  }
  return list;
}

Term write_list(Graph& graph, const std::vector<Term>& items) {
  const Term nil = Term::iri(std::string(vocab::rdf_nil));
  const Term first = Term::iri(std::string(vocab::rdf_first));
  const Term rest = Term::iri(std::string(vocab::rdf_rest));

  Term tail = nil;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    Term node = Term::blank(graph.fresh_blank_id());
    graph.insert({node, first, *it});
    graph.insert({node, rest, tail});
    tail = node;
  }
  return tail;
}

}  // namespace rdfgen::rdf
