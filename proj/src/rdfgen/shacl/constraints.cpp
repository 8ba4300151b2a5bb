#include "rdfgen/shacl/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::shacl {

using rdf::Term;

namespace {

long long require_integer(const Term& value, std::string_view keyword) {
  if (!value.is_literal()) {
    throw Error(ErrorKind::TypeMismatch,
                "sh:" + std::string(keyword) + " expects an integer, got " + value.to_string());
  }
  const std::string& lex = value.lexical();
  long long result = 0;
  auto [ptr, ec] = std::from_chars(lex.data(), lex.data() + lex.size(), result);
  if (ec != std::errc{} || ptr != lex.data() + lex.size()) {
    throw Error(ErrorKind::TypeMismatch,
                "sh:" + std::string(keyword) + " value \"" + lex + "\" is not an integer");
  }
  return result;
}

std::string require_string(const Term& value, std::string_view keyword) {
  if (!value.is_literal()) {
    throw Error(ErrorKind::TypeMismatch,
                "sh:" + std::string(keyword) + " expects a literal, got " + value.to_string());
  }
  return value.lexical();
}

std::string require_iri(const Term& value, std::string_view keyword) {
  if (!value.is_iri()) {
    if (keyword == "node") {
      throw Error(ErrorKind::UnsupportedNodeRef,
                  "sh:node must reference a named shape, got " + value.to_string());
    }
    throw Error(ErrorKind::TypeMismatch,
                "sh:" + std::string(keyword) + " expects an IRI, got " + value.to_string());
  }
  return value.iri_value();
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (std::tolower(static_cast<unsigned char>(haystack[i + j])) !=
          std::tolower(static_cast<unsigned char>(needle[j]))) {
        hit = false;
        break;
      }
    }
    if (hit) return true;
  }
  return false;
}

// Numeric and date bounds must agree on a value space.
void check_bound_consistency(const ConstraintSet& cs) {
  std::vector<const std::optional<Term>*> bounds = {&cs.min_inclusive, &cs.max_inclusive,
                                                    &cs.min_exclusive, &cs.max_exclusive};
  bool numeric = false;
  bool date = false;
  for (auto* bound : bounds) {
    if (!*bound) continue;
    switch (value_space(**bound)) {
      case ValueSpace::Integer:
      case ValueSpace::Real: numeric = true; break;
      case ValueSpace::Date: date = true; break;
      default:
        throw Error(ErrorKind::TypeMismatch,
                    "range bound " + (*bound)->to_string() + " on <" + cs.path +
                        "> is neither numeric nor a date");
    }
  }
  if (numeric && date) {
    throw Error(ErrorKind::TypeMismatch,
                "range bounds on <" + cs.path + "> mix numeric and date values");
  }
}

}  // namespace

const char* to_string(PairRelation relation) {
  switch (relation) {
    case PairRelation::Equals: return "equals";
    case PairRelation::LessThan: return "lessThan";
    case PairRelation::LessThanOrEquals: return "lessThanOrEquals";
    case PairRelation::Disjoint: return "disjoint";
  }
  return "?";
}

ConstraintSet normalize(const ShapeMap& sm, WarningLog* log) {
  ConstraintSet cs;
  cs.synthesized_only = sm.synthesized;

  for (auto& [key, value] : sm.entries) {
    auto local = vocab::shacl_local(key);
    if (!local) {
      if (key == vocab::rdf_type) continue;  // structural, not a constraint
      if (auto* term = std::get_if<Term>(&value)) {
        cs.extras.emplace_back(key, *term);
        warn(log, "UnknownEntry", "ignoring non-SHACL entry <" + key + ">");
      }
      continue;
    }

    const Term* term = std::get_if<Term>(&value);
    bool is_logical = *local == "xone" || *local == "or" || *local == "and";
    if (!term && !is_logical && *local != "in") {
      throw Error(ErrorKind::TypeMismatch,
                  "sh:" + std::string(*local) + " does not accept a list value");
    }
    if (*local == "path") {
      cs.path = require_iri(*term, *local);
    } else if (*local == "datatype") {
      cs.datatype = require_iri(*term, *local);
    } else if (*local == "minCount") {
      cs.min_count = require_integer(*term, *local);
    } else if (*local == "maxCount") {
      cs.max_count = require_integer(*term, *local);
    } else if (*local == "minInclusive") {
      cs.min_inclusive = *term;
    } else if (*local == "maxInclusive") {
      cs.max_inclusive = *term;
    } else if (*local == "minExclusive") {
      cs.min_exclusive = *term;
    } else if (*local == "maxExclusive") {
      cs.max_exclusive = *term;
    } else if (*local == "minLength") {
      cs.min_length = require_integer(*term, *local);
    } else if (*local == "maxLength") {
      cs.max_length = require_integer(*term, *local);
    } else if (*local == "pattern") {
      cs.pattern = require_string(*term, *local);
    } else if (*local == "in") {
      if (auto* items = std::get_if<std::vector<Term>>(&value)) cs.in_values = *items;
    } else if (*local == "node") {
      cs.node_ref = require_iri(*term, *local);
    } else if (*local == "equals") {
      cs.equals = require_iri(*term, *local);
    } else if (*local == "lessThan") {
      cs.less_than = require_iri(*term, *local);
    } else if (*local == "lessThanOrEquals") {
      cs.less_than_or_equals = require_iri(*term, *local);
    } else if (*local == "disjoint") {
      cs.disjoint = require_iri(*term, *local);
    } else if (*local == "xone" || *local == "or" || *local == "and") {
      auto* branches = std::get_if<std::vector<ShapeMap>>(&value);
      std::vector<ConstraintSet> normalized;
      if (branches) {
        for (auto& branch : *branches) normalized.push_back(normalize(branch, log));
      }
      if (*local == "xone") {
        cs.xone = std::move(normalized);
      } else if (*local == "or") {
        cs.or_ = std::move(normalized);
      } else {
        cs.and_ = std::move(normalized);
      }
    } else if (*local == "name") {
      cs.name = require_string(*term, *local);
    } else if (*local == "description") {
      cs.description = require_string(*term, *local);
    } else if (*local == "targetClass") {
      cs.target_class = require_iri(*term, *local);
    } else if (*local == "closed") {
      cs.closed = term && term->lexical() == "true";
    } else {
      if (term) cs.extras.emplace_back(key, *term);
      warn(log, "UnknownKeyword", "ignoring unsupported SHACL keyword sh:" + std::string(*local));
    }
  }

  check_bound_consistency(cs);

  for (auto& [path, child] : sm.properties) {
    ConstraintSet child_cs = normalize(child, log);
    if (child_cs.path.empty()) child_cs.path = path;
    cs.properties.push_back(std::move(child_cs));
  }
  return cs;
}

EffectiveCount effective_count(const ConstraintSet& cs, bool synthesized_only) {
  if (synthesized_only) return {0, 1, true};
  if (cs.min_count && cs.max_count && *cs.min_count > *cs.max_count) {
    throw Error(ErrorKind::ContradictoryCardinality,
                "<" + cs.path + "> has sh:minCount " + std::to_string(*cs.min_count) +
                    " > sh:maxCount " + std::to_string(*cs.max_count));
  }
  EffectiveCount count;
  count.low = cs.min_count ? *cs.min_count
                           : std::min<long long>(1, cs.max_count ? *cs.max_count : 1);
  count.high = cs.max_count ? *cs.max_count : std::max<long long>(count.low, 1);
  return count;
}

PairPlan plan_pairs(const std::vector<ConstraintSet>& node_properties) {
  PairPlan plan;
  std::set<std::string> known;
  for (auto& cs : node_properties) known.insert(cs.path);

  for (auto& cs : node_properties) {
    auto add_edge = [&](const std::optional<std::string>& target, PairRelation relation) {
      if (target && known.count(*target)) plan.edges.push_back({cs.path, relation, *target});
    };
    add_edge(cs.equals, PairRelation::Equals);
    add_edge(cs.less_than, PairRelation::LessThan);
    add_edge(cs.less_than_or_equals, PairRelation::LessThanOrEquals);
    add_edge(cs.disjoint, PairRelation::Disjoint);
  }

  // Kahn's algorithm; ties broken by declaration order. Targets must come
  // before their sources, so ordering edges run target -> source.
  std::map<std::string, std::size_t> decl_index;
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> successors;
  for (std::size_t i = 0; i < node_properties.size(); ++i) {
    decl_index[node_properties[i].path] = i;
    indegree[node_properties[i].path] = 0;
  }
  for (auto& edge : plan.edges) {
    if (edge.relation == PairRelation::Disjoint) continue;
    successors[edge.target].push_back(edge.source);
    ++indegree[edge.source];
  }

  auto order_cmp = [&](const std::string& a, const std::string& b) {
    return decl_index[a] > decl_index[b];
  };
  std::vector<std::string> ready;
  for (auto& cs : node_properties) {
    if (indegree[cs.path] == 0) ready.push_back(cs.path);
  }
  std::make_heap(ready.begin(), ready.end(), order_cmp);

  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), order_cmp);
    std::string next = std::move(ready.back());
    ready.pop_back();
    plan.order.push_back(next);
    for (auto& succ : successors[next]) {
      if (--indegree[succ] == 0) {
        ready.push_back(succ);
        std::push_heap(ready.begin(), ready.end(), order_cmp);
      }
    }
  }

  if (plan.order.size() != node_properties.size()) {
    std::string stuck;
    for (auto& [path, deg] : indegree) {
      if (deg > 0) stuck += (stuck.empty() ? "" : ", ") + ("<" + path + ">");
    }
    throw Error(ErrorKind::PairCycle, "pair constraints form a cycle among " + stuck);
  }
  return plan;
}

std::optional<std::string> infer_datatype(const ConstraintSet& cs, const ConstraintSet* peer) {
  if (cs.datatype) return cs.datatype;
  if (contains_ci(vocab::local_name(cs.path), "date")) return std::string(vocab::xsd_date);

  for (auto* bound : {&cs.min_inclusive, &cs.max_inclusive, &cs.min_exclusive,
                      &cs.max_exclusive}) {
    if (!*bound) continue;
    switch (value_space(**bound)) {
      case ValueSpace::Integer: return std::string(vocab::xsd_integer);
      case ValueSpace::Real: return std::string(vocab::xsd_decimal);
      case ValueSpace::Date: return std::string(vocab::xsd_date);
      default: break;
    }
  }
  if (peer) return infer_datatype(*peer, nullptr);
  return std::nullopt;
}

ValueSpace value_space(const Term& literal) {
  if (!literal.is_literal()) return ValueSpace::Other;
  const std::string& dt = literal.datatype();
  if (!dt.starts_with(vocab::xsd_ns)) return ValueSpace::Other;
  std::string_view local = vocab::local_name(dt);
  if (local == "integer" || local == "int" || local == "long" || local == "short" ||
      local == "byte" || local == "nonNegativeInteger" || local == "positiveInteger" ||
      local == "unsignedInt" || local == "unsignedLong") {
    return ValueSpace::Integer;
  }
  if (local == "decimal" || local == "double" || local == "float") return ValueSpace::Real;
  if (local == "date") return ValueSpace::Date;
  if (local == "boolean") return ValueSpace::Boolean;
  if (local == "string") return ValueSpace::String;
  return ValueSpace::Other;
}

std::optional<long long> parse_integer(const Term& literal) {
  if (!literal.is_literal()) return std::nullopt;
  const std::string& lex = literal.lexical();
  long long result = 0;
  auto [ptr, ec] = std::from_chars(lex.data(), lex.data() + lex.size(), result);
  if (ec != std::errc{} || ptr != lex.data() + lex.size()) return std::nullopt;
  return result;
}

std::optional<double> parse_real(const Term& literal) {
  if (!literal.is_literal()) return std::nullopt;
  const std::string& lex = literal.lexical();
  try {
    std::size_t consumed = 0;
    double value = std::stod(lex, &consumed);
    if (consumed != lex.size()) return std::nullopt;
    return value;
  } catch (...) {
    return std::nullopt;
  }
}

std::optional<long long> parse_date_days(const Term& literal) {
  if (!literal.is_literal()) return std::nullopt;
  const std::string& lex = literal.lexical();
  int y = 0, m = 0, d = 0;
  if (std::sscanf(lex.c_str(), "%d-%d-%d", &y, &m, &d) != 3) return std::nullopt;
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd}.time_since_epoch().count();
}

std::string format_date(long long days_since_epoch) {
  using namespace std::chrono;
  year_month_day ymd{sys_days{days{days_since_epoch}}};
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buffer;
}

}  // namespace rdfgen::shacl
