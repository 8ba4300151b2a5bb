#include "rdfgen/gen/value_gen.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::gen {

using rdf::Term;
using shacl::ConstraintSet;
using shacl::PairRelation;
using shacl::ValueSpace;

namespace {

constexpr int kRetryBudget = 100;
constexpr std::string_view kPersonClass = "http://schema.org/Person";
constexpr std::string_view kPhonePattern = "[0-9]{3}-[0-9]{3}-[0-9]{4}";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool contains(std::string_view haystack_lower, std::string_view needle) {
  return haystack_lower.find(needle) != std::string_view::npos;
}

const std::string& pick(const Dictionary& dict, GenContext& ctx) {
  return dict.values[ctx.rng.next(dict.values.size())];
}

bool looks_like_iri(const std::string& value) {
  auto colon = value.find("://");
  return colon != std::string::npos && colon > 0 && value.find(' ') == std::string::npos;
}

std::string random_string(GenContext& ctx, long long length) {
  static constexpr char kAlphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::string out;
  out.reserve(static_cast<std::size_t>(length));
  for (long long i = 0; i < length; ++i) {
    out.push_back(kAlphabet[ctx.rng.next(sizeof(kAlphabet) - 1)]);
  }
  return out;
}

std::string random_string_in_length_bounds(const ConstraintSet& cs, GenContext& ctx) {
  long long lo = cs.min_length.value_or(8);
  long long hi = cs.max_length.value_or(std::max<long long>(lo, 12));
  if (hi < lo) {
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "<" + cs.path + "> has sh:minLength > sh:maxLength");
  }
  return random_string(ctx, ctx.rng.range(lo, hi));
}

bool within_length_bounds(const ConstraintSet& cs, const std::string& value) {
  if (cs.min_length && static_cast<long long>(value.size()) < *cs.min_length) return false;
  if (cs.max_length && static_cast<long long>(value.size()) > *cs.max_length) return false;
  return true;
}

Term dictionary_value(const Dictionary& dict, const ConstraintSet& cs, GenContext& ctx) {
  // Respect declared length bounds; fall back to any entry if none fit.
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const std::string& value = pick(dict, ctx);
    if (!within_length_bounds(cs, value)) continue;
    if (looks_like_iri(value)) return Term::iri(value);
    return Term::literal(value);
  }
  return Term::literal(pick(dict, ctx));
}

enum class NameRole { Given, Family, Full, None };

NameRole name_role(const ConstraintSet& cs) {
  std::string local = lower(vocab::local_name(cs.path));
  if (contains(local, "givenname") || contains(local, "firstname")) return NameRole::Given;
  if (contains(local, "familyname") || contains(local, "lastname") || contains(local, "surname")) {
    return NameRole::Family;
  }
  if (local == "name" || local == "fullname") return NameRole::Full;
  if (cs.name) {
    std::string hint = lower(*cs.name);
    if (contains(hint, "given") || contains(hint, "first")) return NameRole::Given;
    if (contains(hint, "family") || contains(hint, "last") || contains(hint, "sur")) {
      return NameRole::Family;
    }
    if (contains(hint, "full")) return NameRole::Full;
  }
  return NameRole::None;
}

std::string pick_name(GenContext& ctx, const char* dictionary, const char* fallback) {
  if (ctx.dictionaries) {
    if (const Dictionary* dict = ctx.dictionaries->find(dictionary)) return pick(*dict, ctx);
  }
  return fallback;
}

std::optional<Term> persona_name(const ConstraintSet& cs,
                                 const std::optional<std::string>& class_iri,
                                 PersonaState& persona, GenContext& ctx) {
  if (!class_iri || *class_iri != kPersonClass) return std::nullopt;
  switch (name_role(cs)) {
    case NameRole::Given:
      if (!persona.given_name) persona.given_name = pick_name(ctx, "first_names", "Alex");
      return Term::literal(*persona.given_name);
    case NameRole::Family:
      if (!persona.family_name) persona.family_name = pick_name(ctx, "last_names", "Smith");
      return Term::literal(*persona.family_name);
    case NameRole::Full:
      if (!persona.full_name) {
        persona.full_name = pick_name(ctx, "first_names", "Alex") + " " +
                            pick_name(ctx, "last_names", "Smith");
      }
      return Term::literal(*persona.full_name);
    case NameRole::None: return std::nullopt;
  }
  return std::nullopt;
}

Term email_value(PersonaState& persona, GenContext& ctx) {
  std::vector<std::string> parts;
  if (persona.full_name) {
    std::string word;
    for (char c : *persona.full_name) {
      if (c == ' ') {
        if (!word.empty()) parts.push_back(lower(word));
        word.clear();
      } else {
        word.push_back(c);
      }
    }
    if (!word.empty()) parts.push_back(lower(word));
  } else {
    if (persona.given_name) parts.push_back(lower(*persona.given_name));
    if (persona.family_name) parts.push_back(lower(*persona.family_name));
  }
  if (parts.empty()) {
    parts.push_back(lower(pick_name(ctx, "first_names", "Alex")));
    parts.push_back(lower(pick_name(ctx, "last_names", "Smith")));
  }

  static constexpr const char* kDelimiters[] = {"", "_", "."};
  const char* delimiter = kDelimiters[ctx.rng.next(3)];
  std::string local;
  if (parts.size() == 1) {
    local = parts[0] + delimiter + std::to_string(ctx.rng.range(100, 999));
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) local += delimiter;
      local += parts[i];
    }
  }
  return Term::literal(local + "@gmail.com");
}

Term street_value(GenContext& ctx) {
  std::string street = pick_name(ctx, "street_names", "Main st");
  return Term::literal("no. " + std::to_string(ctx.rng.range(1, 99)) + " " + street);
}

Term typed_random_value(const ConstraintSet& cs, GenContext& ctx) {
  std::optional<std::string> datatype = shacl::infer_datatype(cs);
  if (!datatype) return Term::literal(random_string_in_length_bounds(cs, ctx));

  std::string_view local = vocab::local_name(*datatype);
  if (*datatype == vocab::xsd_date) return generate_date(cs, ctx);
  if (datatype->starts_with(vocab::xsd_ns) &&
      (local == "integer" || local == "int" || local == "long" || local == "short" ||
       local == "byte" || local == "nonNegativeInteger" || local == "positiveInteger" ||
       local == "decimal" || local == "double" || local == "float")) {
    return generate_numeric(cs, ctx);
  }
  if (*datatype == vocab::xsd_boolean) {
    return Term::literal(ctx.rng.coin() ? "true" : "false", std::string(vocab::xsd_boolean));
  }
  if (*datatype == vocab::xsd_string) {
    return Term::literal(random_string_in_length_bounds(cs, ctx));
  }
  // Unfamiliar datatype: random lexical form tagged with it.
  return Term::literal(random_string_in_length_bounds(cs, ctx), *datatype);
}

}  // namespace

ResolvedBounds resolved_integer_bounds(const ConstraintSet& cs) {
  std::optional<long long> lo;
  std::optional<long long> hi;
  if (cs.min_inclusive) lo = shacl::parse_integer(*cs.min_inclusive);
  if (!lo && cs.min_exclusive) {
    if (auto v = shacl::parse_integer(*cs.min_exclusive)) lo = *v + 1;
  }
  if (cs.max_inclusive) hi = shacl::parse_integer(*cs.max_inclusive);
  if (!hi && cs.max_exclusive) {
    if (auto v = shacl::parse_integer(*cs.max_exclusive)) hi = *v - 1;
  }
  long long low = lo ? *lo : std::min<long long>(0, hi.value_or(100));
  long long high = hi ? *hi : low + 100;
  if (low > high) {
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "<" + cs.path + "> has an empty numeric range [" + std::to_string(low) + ", " +
                    std::to_string(high) + "]");
  }
  return {low, high};
}

ResolvedBounds resolved_date_bounds(const ConstraintSet& cs, long long today_days) {
  // 1900-01-01 in days since the 1970 epoch.
  constexpr long long kDefaultLow = -25567;
  std::optional<long long> lo;
  std::optional<long long> hi;
  if (cs.min_inclusive) lo = shacl::parse_date_days(*cs.min_inclusive);
  if (!lo && cs.min_exclusive) {
    if (auto v = shacl::parse_date_days(*cs.min_exclusive)) lo = *v + 1;
  }
  if (cs.max_inclusive) hi = shacl::parse_date_days(*cs.max_inclusive);
  if (!hi && cs.max_exclusive) {
    if (auto v = shacl::parse_date_days(*cs.max_exclusive)) hi = *v - 1;
  }
  long long low = lo.value_or(kDefaultLow);
  long long high = hi.value_or(today_days);
  if (low > high) {
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "<" + cs.path + "> has an empty date range");
  }
  return {low, high};
}

std::string synthesize_from_regex(const RegexProgram& prog, GenContext& ctx) {
  return prog.sample(ctx.rng);
}

Term generate_date(const ConstraintSet& cs, GenContext& ctx) {
  ResolvedBounds bounds = resolved_date_bounds(cs, ctx.today_days);
  long long days = ctx.rng.range(bounds.lo, bounds.hi);
  return Term::literal(shacl::format_date(days), std::string(vocab::xsd_date));
}

Term generate_numeric(const ConstraintSet& cs, GenContext& ctx) {
  std::string_view local =
      cs.datatype ? vocab::local_name(*cs.datatype) : std::string_view("integer");
  bool real = local == "decimal" || local == "double" || local == "float";
  if (!real) {
    ResolvedBounds bounds = resolved_integer_bounds(cs);
    return Term::literal(std::to_string(ctx.rng.range(bounds.lo, bounds.hi)),
                         std::string(vocab::xsd_integer));
  }

  auto bound_as_real = [](const std::optional<Term>& term) -> std::optional<double> {
    if (!term) return std::nullopt;
    return shacl::parse_real(*term);
  };
  double lo = 0.0;
  double hi = 0.0;
  if (auto v = bound_as_real(cs.min_inclusive)) {
    lo = *v;
  } else if (auto v = bound_as_real(cs.min_exclusive)) {
    lo = *v + 1e-6;
  }
  if (auto v = bound_as_real(cs.max_inclusive)) {
    hi = *v;
  } else if (auto v = bound_as_real(cs.max_exclusive)) {
    hi = *v - 1e-6;
  } else {
    hi = lo + 100.0;
  }
  if (lo > hi) {
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "<" + cs.path + "> has an empty numeric range");
  }
  double value = lo + ctx.rng.real() * (hi - lo);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return Term::literal(buffer, *cs.datatype);
}

std::optional<Term> heuristic_value(const ConstraintSet& cs,
                                    const std::optional<std::string>& class_iri,
                                    PersonaState& persona, GenContext& ctx) {
  if (auto name = persona_name(cs, class_iri, persona, ctx)) return name;

  std::string local = lower(vocab::local_name(cs.path));
  std::string hint = cs.name ? lower(*cs.name) : "";

  if (contains(local, "date") || contains(hint, "date")) return generate_date(cs, ctx);
  if ((contains(local, "telephone") || contains(local, "phone")) && !cs.pattern) {
    static const RegexProgram phone = RegexProgram::parse(kPhonePattern);
    return Term::literal(phone.sample(ctx.rng));
  }
  if (contains(local, "email")) return email_value(persona, ctx);
  if (contains(local, "street")) return street_value(ctx);
  return std::nullopt;
}

Term generate_object(const ConstraintSet& cs, const std::optional<std::string>& class_iri,
                     PersonaState& persona, GenContext& ctx) {
  // 1. Enumerated values dominate everything else.
  if (cs.in_values && !cs.in_values->empty()) {
    return (*cs.in_values)[ctx.rng.next(cs.in_values->size())];
  }

  // 2. Dictionary bound to (class, property) or (*, property).
  if (ctx.dictionaries && !ctx.constraints_only) {
    const Dictionary* dict =
        ctx.dictionaries->lookup(class_iri ? *class_iri : "", vocab::local_name(cs.path));
    if (dict && !dict->values.empty()) return dictionary_value(*dict, cs, ctx);
  }

  // 3. Predicate-name heuristics.
  if (!ctx.constraints_only) {
    if (auto value = heuristic_value(cs, class_iri, persona, ctx)) {
      if (!value->is_literal() || within_length_bounds(cs, value->lexical())) return *value;
    }
  }

  // 4. Pattern synthesis, re-drawn until any length bounds fit.
  if (cs.pattern) {
    RegexProgram prog = RegexProgram::parse(*cs.pattern);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
      std::string value = synthesize_from_regex(prog, ctx);
      if (within_length_bounds(cs, value)) {
        if (cs.datatype && *cs.datatype != vocab::xsd_string) {
          return Term::literal(std::move(value), *cs.datatype);
        }
        return Term::literal(std::move(value));
      }
    }
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "no sample of pattern '" + *cs.pattern + "' fits the length bounds of <" +
                    cs.path + ">");
  }

  // 5./6. Datatype-driven or plain random string.
  return typed_random_value(cs, ctx);
}

Term resolve_pair_value(const ConstraintSet& cs, PairRelation relation, const Term& peer_value,
                        GenContext& ctx) {
  if (relation == PairRelation::Equals) return peer_value;

  if (relation == PairRelation::Disjoint) {
    PersonaState persona;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
      Term value = generate_object(cs, std::nullopt, persona, ctx);
      if (value != peer_value) return value;
    }
    throw Error(ErrorKind::UnsatisfiableConstraint,
                "cannot draw a value of <" + cs.path + "> disjoint from " +
                    peer_value.to_string());
  }

  long long margin = relation == PairRelation::LessThan ? 1 : 0;
  switch (shacl::value_space(peer_value)) {
    case ValueSpace::Date: {
      ResolvedBounds bounds = resolved_date_bounds(cs, ctx.today_days);
      long long peer = shacl::parse_date_days(peer_value).value();
      long long hi = std::min(bounds.hi, peer - margin);
      if (bounds.lo > hi) {
        throw Error(ErrorKind::UnsatisfiableConstraint,
                    "no date of <" + cs.path + "> lies below peer " + peer_value.to_string());
      }
      return Term::literal(shacl::format_date(ctx.rng.range(bounds.lo, hi)),
                           std::string(vocab::xsd_date));
    }
    case ValueSpace::Integer: {
      ResolvedBounds bounds = resolved_integer_bounds(cs);
      long long peer = shacl::parse_integer(peer_value).value();
      long long hi = std::min(bounds.hi, peer - margin);
      if (bounds.lo > hi) {
        throw Error(ErrorKind::UnsatisfiableConstraint,
                    "no integer of <" + cs.path + "> lies below peer " + peer_value.to_string());
      }
      return Term::literal(std::to_string(ctx.rng.range(bounds.lo, hi)),
                           std::string(vocab::xsd_integer));
    }
    default:
      throw Error(ErrorKind::UnsatisfiableConstraint,
                  "ordered pair constraint on <" + cs.path + "> needs a numeric or date peer, got " +
                      peer_value.to_string());
  }
}

}  // namespace rdfgen::gen
