#include "rdfgen/rdf/term.hpp"

#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::rdf {

Term Term::iri(std::string value) {
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  return t;
}

Term Term::blank(std::string id) {
  Term t;
  t.kind_ = TermKind::Blank;
  t.value_ = std::move(id);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  t.lang_ = std::move(lang);
  if (!t.lang_.empty()) {
    t.datatype_ = std::string(vocab::rdf_lang_string);
  } else if (datatype.empty()) {
    t.datatype_ = std::string(vocab::xsd_string);
  } else {
    t.datatype_ = std::move(datatype);
  }
  return t;
}

std::string_view Term::local_name() const {
  if (!is_iri()) return {};
  return vocab::local_name(value_);
}

std::string Term::to_string() const {
  switch (kind_) {
    case TermKind::Iri: return "<" + value_ + ">";
    case TermKind::Blank: return "_:" + value_;
    case TermKind::Literal:
      if (!lang_.empty()) return "\"" + value_ + "\"@" + lang_;
      if (datatype_ == vocab::xsd_string) return "\"" + value_ + "\"";
      return "\"" + value_ + "\"^^<" + datatype_ + ">";
  }
  return {};
}

}  // namespace rdfgen::rdf
