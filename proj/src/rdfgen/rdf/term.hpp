#ifndef RDFGEN_RDF_TERM_HPP
#define RDFGEN_RDF_TERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rdfgen::rdf {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// An RDF node: IRI, blank node, or literal. Literals carry a lexical form,
/// a datatype IRI (xsd:string when unspecified) and an optional language tag
/// (which forces rdf:langString).
class Term {
 public:
  Term() : kind_(TermKind::Iri) {}

  static Term iri(std::string value);
  static Term blank(std::string id);
  static Term literal(std::string lexical, std::string datatype = "", std::string lang = "");

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  // Iri kind
  const std::string& iri_value() const { return value_; }
  // Blank kind
  const std::string& blank_id() const { return value_; }
  // Literal kind
  const std::string& lexical() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& lang() const { return lang_; }

  /// Local name of an IRI term (text after the last '#' or '/').
  std::string_view local_name() const;

  /// Debug/report rendering: <iri>, _:id, or "lexical"^^<datatype>.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
    if (auto c = a.datatype_ <=> b.datatype_; c != 0) return c;
    return a.lang_ <=> b.lang_;
  }
  friend bool operator==(const Term& a, const Term& b) = default;

 private:
  TermKind kind_;
  std::string value_;     // iri, blank id, or lexical form
  std::string datatype_;  // literal only
  std::string lang_;      // literal only
};

struct Triple {
  Term subject;    // IRI or blank
  Term predicate;  // IRI
  Term object;

  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

}  // namespace rdfgen::rdf

#endif
