#ifndef RDFGEN_SHACL_CONSTRAINTS_HPP
#define RDFGEN_SHACL_CONSTRAINTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdfgen/error.hpp"
#include "rdfgen/shacl/shape_map.hpp"

namespace rdfgen::shacl {

/// Typed view of one shape map. A node-level set has an empty `path` and its
/// property shapes in `properties`; a logical branch may carry `path` and
/// value constraints directly, or multi-property members in `properties`.
struct ConstraintSet {
  std::string path;
  std::optional<std::string> datatype;
  std::optional<long long> min_count, max_count;
  std::optional<rdf::Term> min_inclusive, max_inclusive, min_exclusive, max_exclusive;
  std::optional<long long> min_length, max_length;
  std::optional<std::string> pattern;
  std::optional<std::vector<rdf::Term>> in_values;
  std::optional<std::string> node_ref;
  std::vector<ConstraintSet> xone, or_, and_;  // empty = absent
  std::optional<std::string> equals, less_than, less_than_or_equals, disjoint;
  std::optional<std::string> name, description;
  std::optional<std::string> target_class;
  std::optional<bool> closed;
  bool synthesized_only = false;
  std::vector<std::pair<std::string, rdf::Term>> extras;
  std::vector<ConstraintSet> properties;  // declaration order

  bool has_pair_constraint() const {
    return equals || less_than || less_than_or_equals || disjoint;
  }
};

struct EffectiveCount {
  long long low = 1;
  long long high = 1;
  bool optional_if_pair_target = false;
};

enum class PairRelation { Equals, LessThan, LessThanOrEquals, Disjoint };

const char* to_string(PairRelation relation);

struct PairEdge {
  std::string source;  // property carrying the constraint
  PairRelation relation;
  std::string target;  // property it refers to
};

/// Generation order for one node shape's properties: every lessThan /
/// lessThanOrEquals / equals target precedes its source; declaration order
/// otherwise. Disjoint edges are recorded but do not constrain the order.
struct PairPlan {
  std::vector<std::string> order;
  std::vector<PairEdge> edges;
};

/// Maps raw shape-map entries into typed fields. Unrecognized entries land in
/// `extras` with a warning. Throws TypeMismatch on unparseable values.
ConstraintSet normalize(const ShapeMap& sm, WarningLog* log = nullptr);

/// Cardinality policy: no counts = exactly 1, minCount-only = exactly
/// minCount, maxCount-only = 1..maxCount; synthesized pair targets are a
/// 0-or-1 coin flip. Throws ContradictoryCardinality when min > max.
EffectiveCount effective_count(const ConstraintSet& cs, bool synthesized_only);
inline EffectiveCount effective_count(const ConstraintSet& cs) {
  return effective_count(cs, cs.synthesized_only);
}

/// Throws PairCycle when equals/lessThan dependencies form a cycle.
PairPlan plan_pairs(const std::vector<ConstraintSet>& node_properties);

/// Declared datatype, else xsd:date for date-named paths, else the datatype
/// of any range bound, else the peer's inferred datatype, else nullopt.
std::optional<std::string> infer_datatype(const ConstraintSet& cs,
                                          const ConstraintSet* peer = nullptr);

// ---- literal value spaces (shared by generation and validation) ----

enum class ValueSpace { Integer, Real, Date, Boolean, String, Other };

ValueSpace value_space(const rdf::Term& literal);
std::optional<long long> parse_integer(const rdf::Term& literal);
std::optional<double> parse_real(const rdf::Term& literal);
/// Days since 1970-01-01 for an xsd:date-shaped lexical form.
std::optional<long long> parse_date_days(const rdf::Term& literal);
std::string format_date(long long days_since_epoch);

}  // namespace rdfgen::shacl

#endif
