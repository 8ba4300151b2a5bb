#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::vocab {

std::optional<std::string_view> shacl_local(std::string_view iri) {
  if (iri.substr(0, shacl_ns.size()) == shacl_ns) return iri.substr(shacl_ns.size());
  if (iri.substr(0, shacl_ns_upper.size()) == shacl_ns_upper)
    return iri.substr(shacl_ns_upper.size());
  return std::nullopt;
}

std::string_view local_name(std::string_view iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos) return iri;
  return iri.substr(pos + 1);
}

}  // namespace rdfgen::vocab
