#ifndef RDFGEN_RDF_VOCAB_HPP
#define RDFGEN_RDF_VOCAB_HPP

#include <optional>
#include <string>
#include <string_view>

namespace rdfgen::vocab {

inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view rdf_rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view rdf_nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view xsd_date = "http://www.w3.org/2001/XMLSchema#date";

// The canonical SHACL namespace plus the capitalized variant that appears in
// some published shapes graphs. Keyword matching accepts both.
inline constexpr std::string_view shacl_ns = "http://www.w3.org/ns/shacl#";
inline constexpr std::string_view shacl_ns_upper = "http://www.w3.org/ns/SHACL#";

// Local part of a SHACL-namespace IRI, or nullopt if the IRI lies elsewhere.
std::optional<std::string_view> shacl_local(std::string_view iri);

inline bool is_shacl(std::string_view iri, std::string_view local) {
  auto l = shacl_local(iri);
  return l && *l == local;
}

// Local name of any IRI: the part after the last '#' or '/'.
std::string_view local_name(std::string_view iri);

}  // namespace rdfgen::vocab

#endif
