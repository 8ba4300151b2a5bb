#ifndef RDFGEN_GEN_VALUE_GEN_HPP
#define RDFGEN_GEN_VALUE_GEN_HPP

#include <optional>
#include <string>

#include "rdfgen/gen/context.hpp"
#include "rdfgen/gen/regex_gen.hpp"
#include "rdfgen/rdf/term.hpp"
#include "rdfgen/shacl/constraints.hpp"

namespace rdfgen::gen {

/// Names chosen for one entity; email synthesis reuses them. A given
/// entity either gets a given+family pair or a single full name, depending
/// on which logical branch was drawn.
struct PersonaState {
  std::optional<std::string> given_name;
  std::optional<std::string> family_name;
  std::optional<std::string> full_name;

  bool empty() const { return !given_name && !family_name && !full_name; }
};

/// Produces a leaf value for one property. Priority: sh:in membership,
/// dictionary hit on (class, property) or (*, property), predicate-name
/// heuristics (names/date/phone/email/street), sh:pattern synthesis,
/// datatype- and range-driven random values, then a plain random string of
/// length within [minLength or 8, maxLength or 12].
rdf::Term generate_object(const shacl::ConstraintSet& cs,
                          const std::optional<std::string>& class_iri, PersonaState& persona,
                          GenContext& ctx);

std::string synthesize_from_regex(const RegexProgram& prog, GenContext& ctx);

/// Uniform xsd:date within the declared bounds; [1900-01-01, today] when
/// unbounded. Exclusive bounds shrink the interval by one day.
rdf::Term generate_date(const shacl::ConstraintSet& cs, GenContext& ctx);

/// Uniform integer/decimal within the declared bounds. Integers default to
/// [0, 100], min-only ranges to [min, min+100].
rdf::Term generate_numeric(const shacl::ConstraintSet& cs, GenContext& ctx);

/// Predicate-name rules: date-named paths become dates, telephone/phone gets
/// a fixed 3-3-4 digit pattern when no sh:pattern is declared, email builds
/// on the persona names, person name properties draw from the name
/// dictionaries, street-named paths get "no. <n> <street>". Returns nullopt
/// when no rule fires.
std::optional<rdf::Term> heuristic_value(const shacl::ConstraintSet& cs,
                                         const std::optional<std::string>& class_iri,
                                         PersonaState& persona, GenContext& ctx);

/// Value for a pair-constrained property given the already-generated peer:
/// equals copies, lessThan/lessThanOrEquals draw below the peer within the
/// property's bounds, disjoint regenerates until distinct (bounded retries).
rdf::Term resolve_pair_value(const shacl::ConstraintSet& cs, shacl::PairRelation relation,
                             const rdf::Term& peer_value, GenContext& ctx);

/// Inclusive integer generation bounds with defaults and any pair lift
/// already applied by the caller. Throws UnsatisfiableConstraint when empty.
struct ResolvedBounds {
  long long lo;
  long long hi;
};
ResolvedBounds resolved_integer_bounds(const shacl::ConstraintSet& cs);
ResolvedBounds resolved_date_bounds(const shacl::ConstraintSet& cs, long long today_days);

}  // namespace rdfgen::gen

#endif
